#include "liesec/rootsys.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace liesec {

Family family_from_char(char c) {
  switch (c) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
    case 'E': return Family::E;
    default: throw DomainError(std::string("unknown family letter: ") + c);
  }
}

namespace {

IMatrix cartan_matrix(Family f, int n) {
  IMatrix C = IMatrix::Zero(n, n);
  auto path = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) {
      C(i, i + 1) = -1;
      C(i + 1, i) = -1;
    }
  };
  for (int i = 0; i < n; ++i) C(i, i) = 2;
  switch (f) {
    case Family::A:
      if (n < 1 || n > 9) throw DomainError("type A supported for rank 1..9");
      path(n);
      break;
    case Family::B:
      // B_n: nodes 1..n-1 long, node n short; <alpha_{n-1}, alpha_n^vee> = -2.
      if (n < 2 || n > 8) throw DomainError("type B supported for rank 2..8");
      path(n);
      C(n - 2, n - 1) = -2;
      break;
    case Family::C:
      // C_n: node n long; <alpha_n, alpha_{n-1}^vee> = -2.
      if (n < 2 || n > 8) throw DomainError("type C supported for rank 2..8");
      path(n);
      C(n - 1, n - 2) = -2;
      break;
    case Family::D:
      if (n < 3 || n > 8) throw DomainError("type D supported for rank 3..8");
      path(n - 1);
      C(n - 3, n - 1) = -1;
      C(n - 1, n - 3) = -1;
      break;
    case Family::E: {
      if (n != 6 && n != 7) throw DomainError("type E supported for rank 6 and 7");
      auto edge = [&](int a, int b) {
        C(a - 1, b - 1) = -1;
        C(b - 1, a - 1) = -1;
      };
      edge(1, 3);
      edge(3, 4);
      edge(4, 5);
      edge(5, 6);
      edge(2, 4);
      if (n == 7) edge(6, 7);
      break;
    }
  }
  return C;
}

std::vector<Rational> symmetrizer(Family f, int n) {
  // d_i with d_i C_ij = d_j C_ji; normalized so long roots have d = 1.
  std::vector<Rational> d(n, Rational(1));
  if (f == Family::B) d[n - 1] = Rational(1, 2);
  if (f == Family::C)
    for (int i = 0; i + 1 < n; ++i) d[i] = Rational(1, 2);
  return d;
}

}  // namespace

RootSystem RootSystem::from_cartan(std::string label, IMatrix cartan,
                                   std::vector<Rational> sym) {
  RootSystem rs;
  rs.label_ = std::move(label);
  rs.rank_ = static_cast<int>(cartan.rows());
  rs.cartan_ = std::move(cartan);
  rs.sym_ = std::move(sym);
  rs.node_labels_.resize(rs.rank_);
  for (int i = 0; i < rs.rank_; ++i) rs.node_labels_[i] = i + 1;
  rs.finish_build();
  return rs;
}

RootSystem RootSystem::build(Family f, int n) {
  std::string label;
  switch (f) {
    case Family::A: label = "A"; break;
    case Family::B: label = "B"; break;
    case Family::C: label = "C"; break;
    case Family::D: label = "D"; break;
    case Family::E: label = "E"; break;
  }
  label += std::to_string(n);
  return from_cartan(label, cartan_matrix(f, n), symmetrizer(f, n));
}

RootSystem RootSystem::build(const std::string& label) {
  if (label.size() < 2) throw DomainError("bad root system label: " + label);
  Family f = family_from_char(label[0]);
  int n = std::stoi(label.substr(1));
  return build(f, n);
}

RootSystem RootSystem::sub_system(const std::vector<int>& nodes) const {
  const int m = static_cast<int>(nodes.size());
  IMatrix C(m, m);
  std::vector<Rational> d(m);
  std::vector<int> labels(m);
  for (int a = 0; a < m; ++a) {
    int ia = index_of_label(nodes[a]);
    if (ia < 0) throw DomainError("sub_system: node label out of range");
    d[a] = sym_[ia];
    labels[a] = node_labels_[ia];
    for (int b = 0; b < m; ++b) {
      int ib = index_of_label(nodes[b]);
      C(a, b) = cartan_(ia, ib);
    }
  }
  RootSystem rs;
  rs.label_ = label_ + "|levi";
  rs.rank_ = m;
  rs.cartan_ = std::move(C);
  rs.sym_ = std::move(d);
  rs.node_labels_ = std::move(labels);
  rs.finish_build();
  return rs;
}

int RootSystem::index_of_label(int label) const {
  for (int i = 0; i < rank_; ++i)
    if (node_labels_[i] == label) return i;
  return -1;
}

void RootSystem::finish_build() {
  const int n = rank_;
  // Exact inverse Cartan.
  QMatrix CQ(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) CQ(i, j) = to_rat(cartan_(i, j));
  cartan_inv_ = invert(CQ);

  // Scaled integer form on fundamental weights: G_ij = (C^{-1})_ij d_j.
  QMatrix G(n, n);
  Int den = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      G(i, j) = cartan_inv_(i, j) * sym_[j];
      den = lcm(den, G(i, j).get_den());
    }
  form_scale_ = to_ll(den);
  form_int_.resize(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      form_int_(i, j) = rat_to_ll(G(i, j) * Rational(den), "form scaling");
  check(form_int_ == form_int_.transpose().eval(), "invariant form not symmetric");

  // Positive roots: reflection closure of the simple roots, tracked in
  // simple-root coordinates; keep those with all coordinates >= 0.
  std::set<std::vector<long long>> pos;
  std::vector<std::vector<long long>> queue;
  for (int i = 0; i < n; ++i) {
    std::vector<long long> e(n, 0);
    e[i] = 1;
    pos.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    auto a = queue.back();
    queue.pop_back();
    for (int i = 0; i < n; ++i) {
      // <alpha, alpha_i^vee> = sum_j a_j C_ji
      long long p = 0;
      for (int j = 0; j < n; ++j) p += a[j] * cartan_(j, i);
      auto b = a;
      b[i] -= p;
      bool positive = true;
      for (long long x : b)
        if (x < 0) positive = false;
      if (positive && pos.insert(b).second) queue.push_back(b);
    }
  }

  // B_ij = (alpha_i, alpha_j) = C_ij d_j for root lengths / coroots.
  positive_.clear();
  for (const auto& a : pos) {
    PositiveRoot r;
    r.simple.assign(a.begin(), a.end());
    Rational len2 = 0;  // (alpha, alpha)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        len2 += to_rat(a[i]) * to_rat(cartan_(i, j)) * sym_[j];
    r.covec.resize(n);
    for (int j = 0; j < n; ++j) {
      // alpha^vee = sum_j (a_j d_j / (len2/2)) alpha_j^vee
      Rational c = Rational(a[j]) * sym_[j] * Rational(2) / len2;
      r.covec[j] = rat_to_ll(c, "coroot coefficient");
    }
    r.fund.resize(n);
    for (int k = 0; k < n; ++k) {
      long long v = 0;
      for (int j = 0; j < n; ++j) v += a[j] * cartan_(j, k);
      r.fund[k] = v;
    }
    positive_.push_back(std::move(r));
  }
  // Deterministic order: by height (sum of simple coords), then lexicographic.
  std::sort(positive_.begin(), positive_.end(),
            [](const PositiveRoot& x, const PositiveRoot& y) {
              long long hx = 0, hy = 0;
              for (auto v : x.simple) hx += v;
              for (auto v : y.simple) hy += v;
              if (hx != hy) return hx < hy;
              return x.simple < y.simple;
            });

  // Height functional r = C^{-1} 1, scaled to integers.
  QVector ones(n);
  for (int i = 0; i < n; ++i) ones(i) = Rational(1);
  QVector r = cartan_inv_ * ones;
  Int hden = 1;
  for (int i = 0; i < n; ++i) hden = lcm(hden, r(i).get_den());
  height_scale_ = to_ll(hden);
  height_r_.resize(n);
  for (int i = 0; i < n; ++i)
    height_r_[i] = rat_to_ll(r(i) * Rational(hden), "height functional");
  for (int i = 0; i < n; ++i)
    check(height_r_[i] > 0, "height functional must be positive");
}

bool RootSystem::is_dominant(const Weight& w) const {
  check(w.rank() == rank_, "is_dominant: rank mismatch");
  for (auto c : w.fc)
    if (c < 0) return false;
  return true;
}

Weight RootSystem::simple_reflection(int i, const Weight& w) const {
  check(i >= 0 && i < rank_, "simple_reflection: bad index");
  Weight r = w;
  long long li = w.fc[i];
  for (int j = 0; j < rank_; ++j) r.fc[j] -= li * cartan_(i, j);
  return r;
}

long long RootSystem::pairing(const Weight& w, const PositiveRoot& a) const {
  long long s = 0;
  for (int j = 0; j < rank_; ++j) s += a.covec[j] * w.fc[j];
  return s;
}

Int RootSystem::weyl_dim(const Weight& highest) const {
  if (!is_dominant(highest)) throw DomainError("weyl_dim: weight not dominant");
  Rational prod(1);
  for (const auto& a : positive_) {
    long long num = 0, den = 0;
    for (int j = 0; j < rank_; ++j) {
      num += a.covec[j] * (highest.fc[j] + 1);
      den += a.covec[j];
    }
    prod *= to_rat(num, den);
  }
  prod.canonicalize();
  check(prod.get_den() == 1, "weyl_dim: non-integral result");
  return prod.get_num();
}

Rational RootSystem::grading_element_eval(int i0_label, const Weight& w) const {
  int i0 = index_of_label(i0_label);
  if (i0 < 0) throw DomainError("grading_element_eval: bad node label");
  Rational z(0);
  for (int j = 0; j < rank_; ++j) z += to_rat(w.fc[j]) * cartan_inv_(j, i0);
  z.canonicalize();
  return z;
}

Weight RootSystem::dominantize(const Weight& w) const {
  Weight v = w;
  bool changed = true;
  long long guard = 0;
  const long long max_steps = 4LL * static_cast<long long>(positive_.size()) + 8;
  while (changed) {
    changed = false;
    for (int i = 0; i < rank_; ++i) {
      if (v.fc[i] < 0) {
        v = simple_reflection(i, v);
        changed = true;
        if (++guard > max_steps * (1 + std::abs(height_num(w))))
          throw InternalCheckError("dominantize: did not terminate");
      }
    }
  }
  return v;
}

Weight RootSystem::dual_weight(const Weight& w) const {
  Weight neg = w;
  for (auto& c : neg.fc) c = -c;
  return dominantize(neg);
}

long long RootSystem::height_num(const Weight& w) const {
  long long h = 0;
  for (int j = 0; j < rank_; ++j) h += height_r_[j] * w.fc[j];
  return h;
}

std::vector<long long> RootSystem::root_coords(const Weight& lambda, const Weight& mu) const {
  // c = f C^{-1} with f = lambda - mu in fundamental coordinates.
  std::vector<long long> out(rank_);
  for (int i = 0; i < rank_; ++i) {
    Rational c(0);
    for (int j = 0; j < rank_; ++j)
      c += to_rat(lambda.fc[j] - mu.fc[j]) * cartan_inv_(j, i);
    c.canonicalize();
    if (c.get_den() != 1)
      throw DomainError("root_coords: difference not in the root lattice");
    out[i] = to_ll(c.get_num());
  }
  return out;
}

long long RootSystem::form_apply(const std::vector<long long>& v,
                                 const std::vector<long long>& u) const {
  long long s = 0;
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) s += v[i] * form_int_(i, j) * u[j];
  return s;
}

}  // namespace liesec
