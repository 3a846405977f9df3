#include "liesec/charspace.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <unordered_set>

#include "liesec/partitions.hpp"

namespace liesec {

// ---- components -------------------------------------------------------------

Component Component::make_gl(std::string name, int n, std::vector<int> blocks) {
  Component c;
  c.kind = Kind::GL;
  c.gl.name = std::move(name);
  c.gl.n = n;
  if (blocks.empty()) blocks = {n};
  int s = 0;
  for (int b : blocks) s += b;
  check(s == n, "GL component: block sizes must sum to n");
  c.gl.blocks = std::move(blocks);
  return c;
}

SimpleComponent SimpleComponent::make(std::string name, RootSystem rs, std::vector<int> marked) {
  SimpleComponent s;
  s.name = std::move(name);
  std::sort(marked.begin(), marked.end());
  s.marked_labels = marked;
  std::vector<int> unmarked;
  for (int lbl : rs.node_labels())
    if (std::find(marked.begin(), marked.end(), lbl) == marked.end()) unmarked.push_back(lbl);
  s.levi = rs.sub_system(unmarked);
  for (int lbl : marked) {
    int i0 = rs.index_of_label(lbl);
    check(i0 >= 0, "bad marked node label");
    Int den = 1;
    for (int j = 0; j < rs.rank(); ++j)
      den = lcm(den, rs.cartan_inverse()(j, i0).get_den());
    s.zscale.push_back(to_ll(den));
  }
  s.full = std::move(rs);
  return s;
}

Component Component::make_simple(SimpleComponent s) {
  Component c;
  c.kind = Kind::Simple;
  c.sim = std::move(s);
  return c;
}

int Space::flat_width() const {
  int w = 0;
  for (const auto& c : comps) w += c.width();
  return w;
}

int Space::offset(int c) const {
  int w = 0;
  for (int i = 0; i < c; ++i) w += comps[i].width();
  return w;
}

std::string Space::signature() const {
  std::ostringstream os;
  for (const auto& c : comps) {
    if (c.kind == Component::Kind::GL) {
      os << "gl:" << c.gl.name << ":" << c.gl.n << ":";
      for (int b : c.gl.blocks) os << b << ",";
    } else {
      os << "sim:" << c.sim.name << ":" << c.sim.full.label() << ":m";
      for (int m : c.sim.marked_labels) os << m << ",";
    }
    os << "|";
  }
  return os.str();
}

// ---- Freudenthal ------------------------------------------------------------

namespace {

struct FreudenthalCore {
  std::vector<FlatWeight> support;                         // full support
  std::unordered_map<FlatWeight, long long, FlatWeightHash> dom_mult;  // dominant weights only
};

FlatWeight flat_of(const Weight& w) {
  std::vector<long long> v = w.fc;
  return FlatWeight(std::span<const long long>(v));
}

FreudenthalCore freudenthal_core(const RootSystem& rs, const Weight& hw, const Caps& caps) {
  if (!rs.is_dominant(hw)) throw DomainError("weight system: highest weight not dominant");
  Int dim = rs.weyl_dim(hw);
  if (dim > caps.max_irrep_dim)
    throw ResourceError("irrep dimension " + dim.get_str() + " exceeds cap " +
                        std::to_string(caps.max_irrep_dim));
  const int n = rs.rank();
  FreudenthalCore out;

  // Support: string closure downward from hw.
  std::unordered_set<FlatWeight, FlatWeightHash> seen;
  std::vector<Weight> queue{hw};
  seen.insert(flat_of(hw));
  while (!queue.empty()) {
    Weight mu = std::move(queue.back());
    queue.pop_back();
    for (const auto& a : rs.positive_roots()) {
      long long t = rs.pairing(mu, a);
      Weight nu = mu;
      for (long long k = 1; k <= t; ++k) {
        for (int j = 0; j < n; ++j) nu.fc[j] -= a.fund[j];
        FlatWeight f = flat_of(nu);
        if (seen.insert(f).second) queue.push_back(nu);
      }
    }
    if (static_cast<long long>(seen.size()) > caps.max_support)
      throw ResourceError("weight support exceeds cap");
  }
  out.support.assign(seen.begin(), seen.end());

  // Dominant weights sorted by strictly decreasing height (hw first).
  std::vector<std::pair<long long, FlatWeight>> doms;
  for (const auto& f : out.support) {
    Weight w{f.to_vector()};
    if (rs.is_dominant(w)) doms.push_back({rs.height_num(w), f});
  }
  std::sort(doms.begin(), doms.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first > y.first;
    return y.second < x.second;
  });
  check(!doms.empty() && doms[0].second == flat_of(hw), "freudenthal: top weight mismatch");

  out.dom_mult[doms[0].second] = 1;
  for (size_t di = 1; di < doms.size(); ++di) {
    Weight mu{doms[di].second.to_vector()};
    long long num = 0;
    for (const auto& a : rs.positive_roots()) {
      Weight nu = mu;
      for (long long k = 1;; ++k) {
        for (int j = 0; j < n; ++j) nu.fc[j] += a.fund[j];
        FlatWeight f = flat_of(nu);
        if (!seen.count(f)) break;  // root strings are unbroken
        long long m = out.dom_mult.at(flat_of(rs.dominantize(nu)));
        num += m * rs.form_apply(nu.fc, std::vector<long long>(a.fund.begin(), a.fund.end()));
      }
    }
    // denominator: (hw + mu + 2 rho, hw - mu)
    std::vector<long long> s(n), d(n);
    for (int j = 0; j < n; ++j) {
      s[j] = hw.fc[j] + mu.fc[j] + 2;
      d[j] = hw.fc[j] - mu.fc[j];
    }
    long long den = rs.form_apply(s, d);
    check(den > 0, "freudenthal: nonpositive denominator");
    long long m2 = 2 * num;
    check(m2 % den == 0, "freudenthal: non-integral multiplicity");
    out.dom_mult[doms[di].second] = m2 / den;
  }
  return out;
}

}  // namespace

std::vector<std::pair<Weight, long long>> freudenthal_dominant(const RootSystem& rs,
                                                               const Weight& hw,
                                                               const Caps& caps) {
  FreudenthalCore core = freudenthal_core(rs, hw, caps);
  std::vector<std::pair<Weight, long long>> out;
  for (const auto& [f, m] : core.dom_mult) out.push_back({Weight{f.to_vector()}, m});
  std::sort(out.begin(), out.end(), [&](const auto& x, const auto& y) {
    long long hx = rs.height_num(x.first), hy = rs.height_num(y.first);
    if (hx != hy) return hx > hy;
    return y.first.fc < x.first.fc;
  });
  return out;
}

std::vector<std::pair<std::vector<long long>, long long>> full_weight_system(
    const RootSystem& rs, const Weight& hw, const Caps& caps) {
  FreudenthalCore core = freudenthal_core(rs, hw, caps);
  std::vector<std::pair<std::vector<long long>, long long>> out;
  out.reserve(core.support.size());
  Int total = 0;
  for (const auto& f : core.support) {
    Weight w{f.to_vector()};
    long long m = core.dom_mult.at(flat_of(rs.dominantize(w)));
    out.push_back({w.fc, m});
    total += m;
  }
  check(total == rs.weyl_dim(hw), "full_weight_system: dimension mismatch");
  return out;
}

// ---- GL content systems -----------------------------------------------------

namespace {

const RootSystem& a_type(int rank) {
  static std::map<int, RootSystem> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> g(mu);
  auto it = cache.find(rank);
  if (it == cache.end()) it = cache.emplace(rank, RootSystem::build(Family::A, rank)).first;
  return it->second;
}

// Weight system of the GL(m) irrep with weakly decreasing content c:
// list of (content vector, multiplicity).
std::vector<std::pair<std::vector<long long>, long long>> gl_content_system(
    std::vector<long long> c, const Caps& caps) {
  const int m = static_cast<int>(c.size());
  std::vector<std::pair<std::vector<long long>, long long>> out;
  if (m == 1) {
    out.push_back({c, 1});
    return out;
  }
  long long shift = c.back();
  Partition p(c.begin(), c.end());
  for (auto& x : p) x -= shift;
  p = normalized(p);
  long long size = partition_size(p);
  const RootSystem& rs = a_type(m - 1);
  Weight hw = partition_to_weight(p, m);
  for (auto& [w, mult] : full_weight_system(rs, hw, caps)) {
    std::vector<long long> content = weight_to_gl(Weight{w}, size);
    for (auto& x : content) x += shift;
    out.push_back({std::move(content), mult});
  }
  return out;
}

}  // namespace

// ---- space-level ops --------------------------------------------------------

bool space_dominant(const Space& sp, std::span<const long long> hw) {
  int off = 0;
  for (const auto& c : sp.comps) {
    if (c.kind == Component::Kind::GL) {
      int pos = off;
      for (int b : c.gl.blocks) {
        for (int i = 0; i + 1 < b; ++i)
          if (hw[pos + i] < hw[pos + i + 1]) return false;
        pos += b;
      }
    } else {
      for (int lbl : c.sim.levi.node_labels()) {
        int idx = c.sim.full.index_of_label(lbl);
        if (hw[off + idx] < 0) return false;
      }
    }
    off += c.width();
  }
  return true;
}

long long space_height(const Space& sp, std::span<const long long> w) {
  long long h = 0;
  int off = 0;
  for (const auto& c : sp.comps) {
    if (c.kind == Component::Kind::GL) {
      for (int i = 0; i < c.gl.n; ++i) h += static_cast<long long>(c.gl.n - 1 - i) * w[off + i];
    } else {
      const auto& levi = c.sim.levi;
      std::vector<long long> sub(levi.rank());
      for (int i = 0; i < levi.rank(); ++i)
        sub[i] = w[off + c.sim.full.index_of_label(levi.node_labels()[i])];
      h += levi.height_num(Weight{sub});
    }
    off += c.width();
  }
  return h;
}

Int space_irrep_dim(const Space& sp, std::span<const long long> hw) {
  Int dim = 1;
  int off = 0;
  for (const auto& c : sp.comps) {
    if (c.kind == Component::Kind::GL) {
      int pos = off;
      for (int b : c.gl.blocks) {
        std::vector<long long> blockc(hw.begin() + pos, hw.begin() + pos + b);
        long long shift = blockc.back();
        Partition p(blockc.begin(), blockc.end());
        for (auto& x : p) x -= shift;
        dim *= schur_dim(normalized(p), b);
        pos += b;
      }
    } else {
      const auto& levi = c.sim.levi;
      std::vector<long long> sub(levi.rank());
      for (int i = 0; i < levi.rank(); ++i)
        sub[i] = hw[off + c.sim.full.index_of_label(levi.node_labels()[i])];
      dim *= levi.weyl_dim(Weight{sub});
    }
    off += c.width();
  }
  return dim;
}

namespace {

std::map<std::string, std::shared_ptr<const WeightMultiset>>& ws_cache() {
  static std::map<std::string, std::shared_ptr<const WeightMultiset>> c;
  return c;
}
std::mutex ws_mutex;

}  // namespace

WeightMultiset space_weight_system(const Space& sp, std::span<const long long> hw,
                                   const Caps& caps) {
  if (!space_dominant(sp, hw))
    throw DomainError("space_weight_system: highest weight not Levi-dominant");
  std::ostringstream key;
  key << sp.signature() << "#";
  for (auto v : hw) key << v << ",";

  {
    std::lock_guard<std::mutex> g(ws_mutex);
    auto it = ws_cache().find(key.str());
    if (it != ws_cache().end()) return *it->second;
  }

  Int dim = space_irrep_dim(sp, hw);
  if (dim > caps.max_irrep_dim)
    throw ResourceError("irrep dimension " + dim.get_str() + " exceeds cap " +
                        std::to_string(caps.max_irrep_dim));

  // Per-component weight lists.
  std::vector<std::vector<std::pair<std::vector<long long>, long long>>> lists;
  int off = 0;
  for (const auto& c : sp.comps) {
    std::vector<std::pair<std::vector<long long>, long long>> lst;
    if (c.kind == Component::Kind::GL) {
      lst.push_back({{}, 1});
      int pos = off;
      for (int b : c.gl.blocks) {
        std::vector<long long> blockc(hw.begin() + pos, hw.begin() + pos + b);
        auto blocksys = gl_content_system(std::move(blockc), caps);
        std::vector<std::pair<std::vector<long long>, long long>> next;
        for (const auto& [prefix, mp] : lst)
          for (const auto& [w, mw] : blocksys) {
            std::vector<long long> cat = prefix;
            cat.insert(cat.end(), w.begin(), w.end());
            next.push_back({std::move(cat), mp * mw});
          }
        lst = std::move(next);
        pos += b;
      }
    } else {
      const auto& levi = c.sim.levi;
      std::vector<long long> sub(levi.rank());
      for (int i = 0; i < levi.rank(); ++i)
        sub[i] = hw[off + c.sim.full.index_of_label(levi.node_labels()[i])];
      auto sys = full_weight_system(levi, Weight{sub}, caps);
      for (auto& [w, m] : sys) {
        // Rebuild the full-width vector: unmarked slots from the Levi weight,
        // marked slots copied verbatim (constant scaled grading).
        std::vector<long long> fullv(c.sim.full.rank());
        for (size_t mi = 0; mi < c.sim.marked_labels.size(); ++mi) {
          int idx = c.sim.full.index_of_label(c.sim.marked_labels[mi]);
          fullv[idx] = hw[off + idx];
        }
        for (int i = 0; i < levi.rank(); ++i)
          fullv[c.sim.full.index_of_label(levi.node_labels()[i])] = w[i];
        lst.push_back({std::move(fullv), m});
      }
    }
    lists.push_back(std::move(lst));
    off += c.width();
  }

  WeightMultiset out;
  std::vector<long long> flat(sp.flat_width());
  // Cartesian product over component weight lists.
  std::function<void(size_t, int, long long)> rec = [&](size_t ci, int pos, long long mult) {
    if (ci == lists.size()) {
      out[FlatWeight(std::span<const long long>(flat))] += mult;
      return;
    }
    for (const auto& [w, m] : lists[ci]) {
      std::copy(w.begin(), w.end(), flat.begin() + pos);
      rec(ci + 1, pos + static_cast<int>(w.size()), mult * m);
    }
  };
  rec(0, 0, 1);

  Int total = 0;
  for (const auto& [w, m] : out) total += m;
  check(total == dim, "space_weight_system: dimension mismatch");

  if (out.size() <= 200000) {
    std::lock_guard<std::mutex> g(ws_mutex);
    ws_cache()[key.str()] = std::make_shared<const WeightMultiset>(out);
  }
  return out;
}

WeightMultiset char_add(WeightMultiset a, const WeightMultiset& b) {
  for (const auto& [w, m] : b) {
    auto it = a.find(w);
    if (it == a.end()) {
      if (m != 0) a.emplace(w, m);
    } else {
      it->second += m;
      if (it->second == 0) a.erase(it);
    }
  }
  return a;
}

WeightMultiset char_scale(WeightMultiset a, long long k) {
  if (k == 0) return {};
  for (auto& [w, m] : a) m *= k;
  return a;
}

WeightMultiset char_tensor(const WeightMultiset& a, const WeightMultiset& b, const Caps& caps) {
  if (a.empty() || b.empty()) return {};
  unsigned long long pairs = static_cast<unsigned long long>(a.size()) * b.size();
  if (pairs > 400'000'000ull) throw ResourceError("tensor convolution too large");
  WeightMultiset out;
  const uint8_t len = a.begin()->first.len;
  check(len == b.begin()->first.len, "char_tensor: width mismatch");
  for (const auto& [wa, ma] : a)
    for (const auto& [wb, mb] : b) {
      FlatWeight w = wa;
      for (int i = 0; i < len; ++i) {
        long long s = static_cast<long long>(wa.v[i]) + wb.v[i];
        check(s >= INT16_MIN && s <= INT16_MAX, "char_tensor: coordinate overflow");
        w.v[i] = static_cast<int16_t>(s);
      }
      out[w] += ma * mb;
    }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  if (static_cast<long long>(out.size()) > caps.max_support)
    throw ResourceError("tensor support exceeds cap");
  return out;
}

WeightMultiset char_adams(const WeightMultiset& a, long long k) {
  WeightMultiset out;
  for (const auto& [w, m] : a) {
    FlatWeight s = w;
    for (int i = 0; i < s.len; ++i) {
      long long v = static_cast<long long>(w.v[i]) * k;
      check(v >= INT16_MIN && v <= INT16_MAX, "char_adams: coordinate overflow");
      s.v[i] = static_cast<int16_t>(v);
    }
    out[s] += m;
  }
  return out;
}

long long char_total(const WeightMultiset& a) {
  long long t = 0;
  for (const auto& [w, m] : a) t += m;
  return t;
}

namespace {

WeightMultiset trivial_char(const WeightMultiset& like) {
  std::vector<long long> zero(like.empty() ? 0 : like.begin()->first.len, 0);
  WeightMultiset t;
  t[FlatWeight(std::span<const long long>(zero))] = 1;
  return t;
}

WeightMultiset char_div_exact(WeightMultiset a, long long d) {
  for (auto& [w, m] : a) {
    check(m % d == 0, "newton recursion: non-exact division");
    m /= d;
  }
  return a;
}

}  // namespace

WeightMultiset char_sym_power(const WeightMultiset& a, long long d, const Caps& caps) {
  if (d < 0) throw DomainError("char_sym_power: negative degree");
  std::vector<WeightMultiset> h(static_cast<size_t>(d) + 1);
  h[0] = trivial_char(a);
  std::vector<WeightMultiset> psi(static_cast<size_t>(d) + 1);
  for (long long i = 1; i <= d; ++i) psi[static_cast<size_t>(i)] = char_adams(a, i);
  for (long long k = 1; k <= d; ++k) {
    WeightMultiset acc;
    for (long long i = 1; i <= k; ++i)
      acc = char_add(std::move(acc),
                     char_tensor(psi[static_cast<size_t>(i)], h[static_cast<size_t>(k - i)], caps));
    h[static_cast<size_t>(k)] = char_div_exact(std::move(acc), k);
  }
  return h[static_cast<size_t>(d)];
}

WeightMultiset char_ext_power(const WeightMultiset& a, long long d, const Caps& caps) {
  if (d < 0) throw DomainError("char_ext_power: negative degree");
  std::vector<WeightMultiset> e(static_cast<size_t>(d) + 1);
  e[0] = trivial_char(a);
  std::vector<WeightMultiset> psi(static_cast<size_t>(d) + 1);
  for (long long i = 1; i <= d; ++i) psi[static_cast<size_t>(i)] = char_adams(a, i);
  for (long long k = 1; k <= d; ++k) {
    WeightMultiset acc;
    long long sign = 1;
    for (long long i = 1; i <= k; ++i) {
      acc = char_add(std::move(acc),
                     char_scale(char_tensor(psi[static_cast<size_t>(i)],
                                            e[static_cast<size_t>(k - i)], caps),
                                sign));
      sign = -sign;
    }
    e[static_cast<size_t>(k)] = char_div_exact(std::move(acc), k);
  }
  return e[static_cast<size_t>(d)];
}

std::vector<PeeledComponent> peel(const Space& sp, WeightMultiset ch, const Caps& caps) {
  std::vector<PeeledComponent> out;
  // Heights are fixed; entries only ever decrease, so one sorted pass suffices.
  std::vector<std::pair<long long, FlatWeight>> order;
  order.reserve(ch.size());
  for (const auto& [w, m] : ch) order.push_back({space_height(sp, w.to_vector()), w});
  std::sort(order.begin(), order.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first > y.first;
    return y.second < x.second;
  });
  size_t idx = 0;
  long long guard = 0;
  while (true) {
    while (idx < order.size() && !ch.count(order[idx].second)) ++idx;
    if (idx >= order.size()) break;
    const FlatWeight& top = order[idx].second;
    long long mult = ch.at(top);
    if (mult < 0)
      throw InternalCheckError("peel: negative multiplicity at top weight " +
                               format_flat_hw(sp, top.to_vector()));
    check(space_dominant(sp, top.to_vector()),
          "peel: height-maximal weight is not dominant");
    out.push_back({top.to_vector(), mult});
    const WeightMultiset& sys = space_weight_system(sp, top.to_vector(), caps);
    for (const auto& [w, m] : sys) {
      auto it = ch.find(w);
      if (it == ch.end())
        throw InternalCheckError("peel: irrep weight missing from character");
      it->second -= mult * m;
      if (it->second == 0)
        ch.erase(it);
      else if (it->second < 0)
        throw InternalCheckError("peel: negative multiplicity (not a genuine character)");
    }
    if (++guard > 2'000'000) throw ResourceError("peel: too many components");
  }
  return out;
}

std::string format_flat_hw(const Space& sp, std::span<const long long> hw) {
  std::ostringstream os;
  int off = 0;
  bool first = true;
  for (const auto& c : sp.comps) {
    if (!first) os << " (x) ";
    first = false;
    if (c.kind == Component::Kind::GL) {
      bool nonneg = true;
      for (int i = 0; i < c.gl.n; ++i)
        if (hw[off + i] < 0) nonneg = false;
      if (c.gl.blocks.size() == 1 && nonneg) {
        Partition p(hw.begin() + off, hw.begin() + off + c.gl.n);
        os << "S_" << format_partition(p) << c.gl.name;
      } else {
        os << "S_[";
        int pos = off;
        for (size_t b = 0; b < c.gl.blocks.size(); ++b) {
          if (b) os << "|";
          for (int i = 0; i < c.gl.blocks[b]; ++i) {
            if (i) os << ",";
            os << hw[pos + i];
          }
          pos += c.gl.blocks[b];
        }
        os << "]" << c.gl.name;
      }
    } else {
      os << "V[";
      for (int i = 0; i < c.sim.full.rank(); ++i) {
        if (i) os << ",";
        os << hw[off + i];
      }
      os << "]";
      if (!c.sim.name.empty()) os << "(" << c.sim.name << ")";
    }
    off += c.width();
  }
  return os.str();
}

}  // namespace liesec
