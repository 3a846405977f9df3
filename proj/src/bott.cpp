#include "liesec/bott.hpp"

#include <algorithm>
#include <numeric>

namespace liesec {

BottResult bott_gl(std::span<const long long> c) {
  const int n = static_cast<int>(c.size());
  std::vector<long long> v(n);
  for (int i = 0; i < n; ++i) v[i] = c[i] + (n - 1 - i);
  BottResult r;
  // repeated entry <=> singular
  {
    std::vector<long long> s = v;
    std::sort(s.begin(), s.end());
    for (int i = 0; i + 1 < n; ++i)
      if (s[i] == s[i + 1]) {
        r.zero = true;
        return r;
      }
  }
  long long inv = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (v[i] < v[j]) ++inv;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) { return v[a] > v[b]; });
  r.degree = inv;
  r.module_hw.resize(n);
  for (int i = 0; i < n; ++i) r.module_hw[i] = v[perm[i]] - (n - 1 - i);
  r.chain = perm;
  return r;
}

BottResult bott_simple(const RootSystem& rs, const Weight& lambda) {
  const int n = rs.rank();
  Weight v = lambda;
  for (auto& x : v.fc) x += 1;  // + rho
  BottResult r;
  long long guard = 0;
  for (;;) {
    int neg = -1;
    for (int i = 0; i < n; ++i) {
      if (v.fc[i] == 0) {
        r.zero = true;
        return r;
      }
      if (neg < 0 && v.fc[i] < 0) neg = i;
    }
    if (neg < 0) break;
    v = rs.simple_reflection(neg, v);
    r.chain.push_back(neg);
    ++r.degree;
    if (++guard > 4096) throw InternalCheckError("bott_simple: did not terminate");
  }
  r.module_hw = v.fc;
  for (auto& x : r.module_hw) x -= 1;  // - rho
  return r;
}

std::vector<long long> resolve_marked(const SimpleComponent& sc,
                                      std::span<const long long> slots) {
  const RootSystem& rs = sc.full;
  const int n = rs.rank();
  const int t = static_cast<int>(sc.marked_labels.size());
  std::vector<long long> full(slots.begin(), slots.end());
  if (t == 0) return full;
  // z_k = sum_j full_j (Cinv)_{j,ik}; unknowns are the marked coefficients.
  QMatrix M(t, t);
  QVector rhs(t);
  for (int k = 0; k < t; ++k) {
    int ik = rs.index_of_label(sc.marked_labels[k]);
    Rational z = to_rat(slots[ik], sc.zscale[k]);
    z.canonicalize();
    Rational acc = z;
    for (int lbl : sc.levi.node_labels()) {
      int j = rs.index_of_label(lbl);
      acc -= to_rat(slots[j]) * rs.cartan_inverse()(j, ik);
    }
    rhs(k) = acc;
    for (int m = 0; m < t; ++m) {
      int im = rs.index_of_label(sc.marked_labels[m]);
      M(k, m) = rs.cartan_inverse()(im, ik);
    }
  }
  QMatrix Minv = invert(M);
  QVector x = Minv * rhs;
  for (int m = 0; m < t; ++m) {
    Rational xm = x(m);
    xm.canonicalize();
    if (xm.get_den() != 1)
      throw DomainError("non-integral grading twist: marked node " +
                        std::to_string(sc.marked_labels[m]) + " coefficient " + xm.get_str());
    full[static_cast<size_t>(rs.index_of_label(sc.marked_labels[m]))] = to_ll(xm.get_num());
  }
  // Consistency: recomputed grading values must match the stored slots.
  for (int k = 0; k < t; ++k) {
    int ik = rs.index_of_label(sc.marked_labels[k]);
    Rational z = rs.grading_element_eval(sc.marked_labels[k], Weight{full});
    check(z * to_rat(sc.zscale[k]) == to_rat(slots[ik]), "resolve_marked: roundtrip failed");
  }
  return full;
}

std::vector<long long> encode_marked(const SimpleComponent& sc,
                                     std::span<const long long> full) {
  std::vector<long long> slots(full.begin(), full.end());
  for (size_t k = 0; k < sc.marked_labels.size(); ++k) {
    int ik = sc.full.index_of_label(sc.marked_labels[k]);
    Rational z = sc.full.grading_element_eval(sc.marked_labels[k], Weight{std::vector<long long>(full.begin(), full.end())});
    z *= to_rat(sc.zscale[k]);
    z.canonicalize();
    slots[static_cast<size_t>(ik)] = rat_to_ll(z, "encode_marked: grading scale");
  }
  return slots;
}

SpaceBott bott_space(const Space& sp, std::span<const long long> levi_hw) {
  SpaceBott out;
  out.g_hw.resize(static_cast<size_t>(sp.flat_width()));
  int off = 0;
  for (const auto& c : sp.comps) {
    const int w = c.width();
    std::span<const long long> part(levi_hw.data() + off, static_cast<size_t>(w));
    BottResult r;
    if (c.kind == Component::Kind::GL) {
      r = bott_gl(part);
    } else {
      std::vector<long long> full = resolve_marked(c.sim, part);
      r = bott_simple(c.sim.full, Weight{full});
    }
    if (r.zero) {
      out.zero = true;
      return out;
    }
    out.degree += r.degree;
    std::copy(r.module_hw.begin(), r.module_hw.end(), out.g_hw.begin() + off);
    off += w;
  }
  return out;
}

std::vector<long long> space_dual_g_hw(const Space& sp, std::span<const long long> g_hw) {
  std::vector<long long> out(g_hw.size());
  int off = 0;
  for (const auto& c : sp.comps) {
    const int w = c.width();
    if (c.kind == Component::Kind::GL) {
      for (int i = 0; i < w; ++i) out[off + i] = -g_hw[off + w - 1 - i];
    } else {
      Weight d = c.sim.full.dual_weight(
          Weight{std::vector<long long>(g_hw.begin() + off, g_hw.begin() + off + w)});
      std::copy(d.fc.begin(), d.fc.end(), out.begin() + off);
    }
    off += w;
  }
  return out;
}

}  // namespace liesec
