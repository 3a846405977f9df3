#pragma once

// Decompositions of tensor operations on irreducibles: tensor products,
// symmetric and exterior powers over a simple root system, GL-plethysms in the
// length-stable range, and the two-step Cauchy expansion of an exterior power
// of a tensor product with a one-dimensional summand split off.

#include <vector>

#include "liesec/charspace.hpp"
#include "liesec/partitions.hpp"
#include "liesec/rootsys.hpp"

namespace liesec {

struct IrrepTerm {
  Weight hw;
  long long mult;
};

std::vector<IrrepTerm> decompose_tensor(const RootSystem& rs, const Weight& a,
                                        const Weight& b, const Caps& caps = {});
std::vector<IrrepTerm> sym_power_irrep(const RootSystem& rs, const Weight& a, long long d,
                                       const Caps& caps = {});
std::vector<IrrepTerm> ext_power_irrep(const RootSystem& rs, const Weight& a, long long d,
                                       const Caps& caps = {});

struct PartitionTerm {
  Partition p;
  long long mult;
};

// S^d(S_mu K^N) resp. Lambda^d(S_mu K^N) for N in the length-stable range
// (N = d * |mu|); the result lists partitions of d*|mu| with multiplicities.
std::vector<PartitionTerm> plethysm_sym_of_schur(const Partition& mu, long long d,
                                                 const Caps& caps = {});
std::vector<PartitionTerm> plethysm_ext_of_schur(const Partition& mu, long long d,
                                                 const Caps& caps = {});

// Keep only partitions with at most max_len rows (dim-of-space restriction).
std::vector<PartitionTerm> filter_by_length(std::vector<PartitionTerm> terms, int max_len);

// Lambda^d(A (x) (U + K)) for dim A = 2 and K a one-dimensional space:
// sum over pairs (a, b) with 2a+b = d of S_{(a+b,a)}A tensored with the
// two-step Peel of S_{(2^a 1^b)}(U + K) into S_nu U * K^e pieces.
struct CauchyTerm {
  long long a = 0, b = 0;     // column counts: partition (a+b, a) on the A side
  Partition a_side;           // (a+b, a)
  // (partition on U, exponent of the K line); at most four entries.
  std::vector<std::pair<Partition, int>> u_terms;
};
std::vector<CauchyTerm> cauchy_ext_two_step(long long d, int dim_u);

}  // namespace liesec
