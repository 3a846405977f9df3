#pragma once

// Cohomology of irreducible homogeneous bundles by the dotted Weyl action:
// add rho, sort/dominantize counting reflections, subtract rho. Singular
// (fixed by some reflection) means all cohomology vanishes; otherwise exactly
// one group H^{l(w)} survives. Callers feed the highest weight of the *dual*
// of the inducing Levi module and dualize the resulting module at the end.

#include <span>
#include <vector>

#include "liesec/charspace.hpp"
#include "liesec/rootsys.hpp"

namespace liesec {

struct BottResult {
  bool zero = false;
  long long degree = 0;               // cohomological degree l(w)
  std::vector<long long> module_hw;   // dominant output (before final dualization)
  std::vector<int> chain;             // reflection indices (simple) / permutation (GL)
};

// GL flavor: c is a full GL(n) weight, rho = (n-1, ..., 1, 0); repeated entries
// of c + rho mean zero; otherwise degree = inversion count of c + rho and the
// module is sort-desc(c + rho) - rho. chain holds the sorting permutation.
BottResult bott_gl(std::span<const long long> c);

// Fundamental-coordinate flavor over a simple root system. chain holds the
// 0-based simple reflection indices applied to lambda + rho, in order.
BottResult bott_simple(const RootSystem& rs, const Weight& lambda);

// Reconstruct the marked-slot fundamental coefficients of a full weight from
// the stored scaled grading values; throws DomainError if non-integral.
std::vector<long long> resolve_marked(const SimpleComponent& sc,
                                      std::span<const long long> slots);
// Inverse: replace marked-slot coefficients with scaled grading values.
std::vector<long long> encode_marked(const SimpleComponent& sc,
                                     std::span<const long long> full);

struct SpaceBott {
  bool zero = false;
  long long degree = 0;
  std::vector<long long> g_hw;  // per-component dominant weight (flat, full coords)
};

// Run Bott per component of the space on a Levi highest weight (marked slots of
// simple components hold scaled grading values and are resolved first).
SpaceBott bott_space(const Space& sp, std::span<const long long> levi_hw);

// Highest weight of the dual module, componentwise (GL: negate + reverse;
// simple: -w0).
std::vector<long long> space_dual_g_hw(const Space& sp, std::span<const long long> g_hw);

}  // namespace liesec
