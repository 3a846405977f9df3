#include "liesec/decompose.hpp"

#include <algorithm>

namespace liesec {

namespace {

Space single_space(const RootSystem& rs) {
  Space sp;
  sp.comps.push_back(Component::make_simple(SimpleComponent::make("", rs, {})));
  return sp;
}

std::vector<IrrepTerm> peel_to_terms(const Space& sp, WeightMultiset ch, const Caps& caps) {
  std::vector<IrrepTerm> out;
  for (auto& c : peel(sp, std::move(ch), caps)) out.push_back({Weight{c.hw}, c.mult});
  return out;
}

}  // namespace

std::vector<IrrepTerm> decompose_tensor(const RootSystem& rs, const Weight& a, const Weight& b,
                                        const Caps& caps) {
  Space sp = single_space(rs);
  WeightMultiset ca = space_weight_system(sp, a.fc, caps);
  WeightMultiset cb = space_weight_system(sp, b.fc, caps);
  return peel_to_terms(sp, char_tensor(ca, cb, caps), caps);
}

std::vector<IrrepTerm> sym_power_irrep(const RootSystem& rs, const Weight& a, long long d,
                                       const Caps& caps) {
  Space sp = single_space(rs);
  WeightMultiset ca = space_weight_system(sp, a.fc, caps);
  return peel_to_terms(sp, char_sym_power(ca, d, caps), caps);
}

std::vector<IrrepTerm> ext_power_irrep(const RootSystem& rs, const Weight& a, long long d,
                                       const Caps& caps) {
  Space sp = single_space(rs);
  WeightMultiset ca = space_weight_system(sp, a.fc, caps);
  return peel_to_terms(sp, char_ext_power(ca, d, caps), caps);
}

namespace {

std::vector<PartitionTerm> plethysm_generic(const Partition& mu, long long d, bool sym,
                                            const Caps& caps) {
  long long n = partition_size(mu) * d;
  if (n == 0) return {{Partition{}, 1}};
  int N = static_cast<int>(n);
  if (static_cast<long long>(mu.size()) > N)
    throw DomainError("plethysm: partition too long for stable range");
  Space sp;
  sp.comps.push_back(Component::make_gl("W", N));
  std::vector<long long> hw(static_cast<size_t>(N), 0);
  for (size_t i = 0; i < mu.size(); ++i) hw[i] = mu[i];
  WeightMultiset base = space_weight_system(sp, hw, caps);
  WeightMultiset pw = sym ? char_sym_power(base, d, caps) : char_ext_power(base, d, caps);
  std::vector<PartitionTerm> out;
  for (auto& c : peel(sp, std::move(pw), caps)) {
    Partition p(c.hw.begin(), c.hw.end());
    check(is_partition(p) && p.back() >= 0, "plethysm: non-partition output");
    out.push_back({normalized(p), c.mult});
  }
  return out;
}

}  // namespace

std::vector<PartitionTerm> plethysm_sym_of_schur(const Partition& mu, long long d,
                                                 const Caps& caps) {
  return plethysm_generic(mu, d, true, caps);
}

std::vector<PartitionTerm> plethysm_ext_of_schur(const Partition& mu, long long d,
                                                 const Caps& caps) {
  return plethysm_generic(mu, d, false, caps);
}

std::vector<PartitionTerm> filter_by_length(std::vector<PartitionTerm> terms, int max_len) {
  std::vector<PartitionTerm> out;
  for (auto& t : terms)
    if (static_cast<int>(t.p.size()) <= max_len) out.push_back(std::move(t));
  return out;
}

std::vector<CauchyTerm> cauchy_ext_two_step(long long d, int dim_u) {
  if (d < 0) throw DomainError("cauchy_ext_two_step: negative degree");
  std::vector<CauchyTerm> out;
  // Lambda^d(A (x) M) = sum over partitions pi of d with at most 2 rows of
  // S_pi A (x) S_{pi'} M; write pi = (a+b, a), so pi' = (2^a, 1^b).
  for (long long a = 0; 2 * a <= d; ++a) {
    long long b = d - 2 * a;
    CauchyTerm t;
    t.a = a;
    t.b = b;
    t.a_side = normalized(Partition{a + b, a});
    // Split M = U + K: remove a horizontal strip from (2^a, 1^b) for the K line.
    auto push = [&](long long twos, long long ones, int kdeg) {
      if (twos < 0 || ones < 0) return;
      Partition nu;
      for (long long i = 0; i < twos; ++i) nu.push_back(2);
      for (long long i = 0; i < ones; ++i) nu.push_back(1);
      if (static_cast<long long>(nu.size()) > dim_u) return;  // too long for U
      t.u_terms.push_back({std::move(nu), kdeg});
    };
    push(a, b, 0);  // full shape, K^0
    if (b >= 1) push(a, b - 1, 1);
    if (a >= 1) push(a - 1, b + 1, 1);
    if (a >= 1) push(a - 1, b, 2);
    if (!t.u_terms.empty()) out.push_back(std::move(t));
  }
  return out;
}

}  // namespace liesec
