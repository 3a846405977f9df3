#pragma once

// Integer partitions and symmetric-function combinatorics used throughout:
// conjugation, Littlewood-Richardson coefficients (lattice-word count),
// Pieri products, hook-content dimension of a Schur functor, and the
// dictionary between partitions and type-A fundamental weights.

#include <string>
#include <vector>

#include "liesec/rational.hpp"
#include "liesec/rootsys.hpp"

namespace liesec {

// Weakly decreasing, entries >= 0, no trailing zeros enforced by normalize().
using Partition = std::vector<long long>;

Partition normalized(Partition p);
long long partition_size(const Partition& p);
bool is_partition(const Partition& p);
Partition conjugate(const Partition& p);

// Littlewood-Richardson coefficient c^{nu}_{lambda, mu} (memoized).
long long lr_coefficient(const Partition& nu, const Partition& lambda, const Partition& mu);

// All nu with c^{nu}_{lambda,(k)} = 1 (row Pieri) or c^{nu}_{lambda,(1^k)} = 1
// (column Pieri); max_length < 0 means unbounded.
std::vector<Partition> pieri_row(const Partition& lambda, long long k, int max_length = -1);
std::vector<Partition> pieri_col(const Partition& lambda, long long k, int max_length = -1);

// dim S_pi(K^n) by hook content; zero if the partition is too long.
Int schur_dim(const Partition& p, int n);

// Partition (length <= n) -> dominant A_{n-1} weight of consecutive differences.
Weight partition_to_weight(const Partition& p, int n);
// Inverse: dominant A_{n-1} weight + total degree -> GL(n) partition-like vector
// (entries may be negative if degree forces it; throws if non-integral).
std::vector<long long> weight_to_gl(const Weight& w, long long degree);

// "3,1^6" style exponent notation; format produces "()" for the empty partition.
std::string format_partition(const Partition& p);
Partition parse_partition(const std::string& s);

// All partitions of n (optionally with at most max_len parts), reverse-lex order.
std::vector<Partition> partitions_of(long long n, int max_len = -1);

}  // namespace liesec
