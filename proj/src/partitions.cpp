#include "liesec/partitions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>

namespace liesec {

Partition normalized(Partition p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

long long partition_size(const Partition& p) {
  long long s = 0;
  for (auto x : p) s += x;
  return s;
}

bool is_partition(const Partition& p) {
  for (size_t i = 0; i + 1 < p.size(); ++i)
    if (p[i] < p[i + 1]) return false;
  return p.empty() || p.back() >= 0;
}

Partition conjugate(const Partition& p) {
  Partition q = normalized(p);
  if (q.empty()) return {};
  Partition c(static_cast<size_t>(q[0]), 0);
  for (auto row : q)
    for (long long j = 0; j < row; ++j) c[static_cast<size_t>(j)]++;
  return c;
}

namespace {

// Count LR skew tableaux of shape nu/lambda and content mu: column-strict rows,
// strictly increasing columns, reverse reading word a lattice word. Backtracking
// row by row, cell by cell.
struct LRCounter {
  Partition nu, lambda, mu;
  std::vector<std::vector<long long>> fill;  // fill[r][c] for lambda[r] <= c < nu[r], 1-based values
  std::vector<long long> used;               // how many of each value placed so far (prefix counts)
  long long count = 0;

  bool lattice_ok(long long v) const {
    // placing value v keeps word a lattice word iff used[v-1] > used[v] before placement (v >= 2)
    return v == 1 || used[static_cast<size_t>(v - 2)] > used[static_cast<size_t>(v - 1)];
  }

  long long at(size_t r, long long c) const {
    long long lo = r < lambda.size() ? lambda[r] : 0;
    return fill[r][static_cast<size_t>(c - lo)];
  }

  void rec(size_t r, long long c) {
    if (r == nu.size()) {
      ++count;
      return;
    }
    long long lo = r < lambda.size() ? lambda[r] : 0;
    if (c >= nu[r]) {
      rec(r + 1, r + 1 < nu.size() ? (r + 1 < lambda.size() ? lambda[r + 1] : 0) : 0);
      return;
    }
    // Candidate values at cell (r, c): weakly increase along the row (left
    // neighbor), strictly increase down the column (upper neighbor).
    long long vmin = 1;
    long long lo_here = lo;
    if (c > lo_here) vmin = std::max(vmin, at(r, c - 1));
    if (r > 0) {
      long long up_lo = r - 1 < lambda.size() ? lambda[r - 1] : 0;
      if (c >= up_lo && c < nu[r - 1]) vmin = std::max(vmin, at(r - 1, c) + 1);
    }
    for (long long v = vmin; v <= static_cast<long long>(mu.size()); ++v) {
      size_t vi = static_cast<size_t>(v - 1);
      if (used[vi] >= mu[vi]) continue;
      if (!lattice_ok(v)) continue;
      fill[r][static_cast<size_t>(c - lo_here)] = v;
      ++used[vi];
      rec(r, c + 1);
      --used[vi];
    }
  }
};

std::map<std::tuple<Partition, Partition, Partition>, long long> lr_cache;
std::mutex lr_mutex;

}  // namespace

long long lr_coefficient(const Partition& nu_in, const Partition& lambda_in,
                         const Partition& mu_in) {
  Partition nu = normalized(nu_in), lambda = normalized(lambda_in), mu = normalized(mu_in);
  if (!is_partition(nu) || !is_partition(lambda) || !is_partition(mu))
    throw DomainError("lr_coefficient: arguments must be partitions");
  if (partition_size(nu) != partition_size(lambda) + partition_size(mu)) return 0;
  // lambda must fit inside nu.
  if (lambda.size() > nu.size()) return 0;
  for (size_t i = 0; i < lambda.size(); ++i)
    if (lambda[i] > nu[i]) return 0;
  {
    std::lock_guard<std::mutex> g(lr_mutex);
    auto it = lr_cache.find({nu, lambda, mu});
    if (it != lr_cache.end()) return it->second;
  }
  LRCounter ctr;
  ctr.nu = nu;
  ctr.lambda = lambda;
  ctr.mu = mu;
  ctr.fill.resize(nu.size());
  for (size_t r = 0; r < nu.size(); ++r) {
    long long lo = r < lambda.size() ? lambda[r] : 0;
    ctr.fill[r].assign(static_cast<size_t>(nu[r] - lo), 0);
  }
  ctr.used.assign(mu.size(), 0);
  if (!nu.empty()) {
    long long start = 0 < lambda.size() ? lambda[0] : 0;
    ctr.rec(0, start);
  } else {
    ctr.count = 1;
  }
  {
    std::lock_guard<std::mutex> g(lr_mutex);
    lr_cache[{nu, lambda, mu}] = ctr.count;
  }
  return ctr.count;
}

std::vector<Partition> pieri_row(const Partition& lambda_in, long long k, int max_length) {
  Partition lambda = normalized(lambda_in);
  std::vector<Partition> out;
  // Add k boxes, at most one per column: nu_i in [lambda_i, lambda_{i-1}].
  size_t n = lambda.size() + 1;
  Partition nu(n, 0);
  // Depth-first over rows.
  std::function<void(size_t, long long)> rec = [&](size_t r, long long left) {
    if (r == n) {
      if (left == 0) {
        Partition res = normalized(nu);
        if (max_length < 0 || static_cast<int>(res.size()) <= max_length)
          out.push_back(res);
      }
      return;
    }
    long long lo = r < lambda.size() ? lambda[r] : 0;
    long long hi = r == 0 ? lo + left : std::min(lambda[r - 1], lo + left);
    for (long long v = lo; v <= hi; ++v) {
      nu[r] = v;
      rec(r + 1, left - (v - lo));
    }
    nu[r] = lo;
  };
  rec(0, k);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> pieri_col(const Partition& lambda_in, long long k, int max_length) {
  Partition lambda = normalized(lambda_in);
  std::vector<Partition> out;
  // Add k boxes, at most one per row.
  size_t n = lambda.size() + static_cast<size_t>(k);
  std::vector<int> add(n, 0);
  std::function<void(size_t, long long)> rec = [&](size_t r, long long left) {
    if (left == 0) {
      Partition nu;
      for (size_t i = 0; i < n; ++i) {
        long long v = (i < lambda.size() ? lambda[i] : 0) + add[i];
        nu.push_back(v);
      }
      nu = normalized(nu);
      if (is_partition(nu) && (max_length < 0 || static_cast<int>(nu.size()) <= max_length))
        out.push_back(nu);
      return;
    }
    if (r == n) return;
    // skip
    rec(r + 1, left);
    // add one box in row r, if still a partition shape
    long long cur = (r < lambda.size() ? lambda[r] : 0);
    long long above = r == 0 ? cur + 2 : (r - 1 < lambda.size() ? lambda[r - 1] : 0) + add[r - 1];
    if (cur + 1 <= above) {
      add[r] = 1;
      rec(r + 1, left - 1);
      add[r] = 0;
    }
  };
  rec(0, k);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Int schur_dim(const Partition& p_in, int n) {
  Partition p = normalized(p_in);
  if (static_cast<int>(p.size()) > n) return 0;
  // Hook content formula: prod over cells (n + j - i) / hook(i,j).
  Partition conj = conjugate(p);
  Rational prod(1);
  for (size_t i = 0; i < p.size(); ++i) {
    for (long long j = 0; j < p[i]; ++j) {
      long long content = j - static_cast<long long>(i);
      long long hook = (p[i] - j) + (conj[static_cast<size_t>(j)] - static_cast<long long>(i)) - 1;
      prod *= to_rat(n + content, hook);
    }
  }
  prod.canonicalize();
  check(prod.get_den() == 1, "schur_dim: non-integral");
  return prod.get_num();
}

Weight partition_to_weight(const Partition& p_in, int n) {
  Partition p = normalized(p_in);
  if (static_cast<int>(p.size()) > n)
    throw DomainError("partition_to_weight: partition longer than rank allows");
  p.resize(static_cast<size_t>(n), 0);
  Weight w;
  w.fc.resize(static_cast<size_t>(n - 1));
  for (int i = 0; i + 1 < n; ++i) w.fc[static_cast<size_t>(i)] = p[static_cast<size_t>(i)] - p[static_cast<size_t>(i) + 1];
  return w;
}

std::vector<long long> weight_to_gl(const Weight& w, long long degree) {
  int n = w.rank() + 1;
  // c_i = t + sum_{j >= i} f_j with n t = degree - sum_j j f_j.
  long long weighted = 0;
  for (int j = 0; j < n - 1; ++j) weighted += static_cast<long long>(j + 1) * w.fc[static_cast<size_t>(j)];
  long long num = degree - weighted;
  if (num % n != 0)
    throw DomainError("weight_to_gl: degree incompatible with weight");
  long long t = num / n;
  std::vector<long long> c(static_cast<size_t>(n));
  long long suffix = 0;
  for (int i = n - 1; i >= 0; --i) {
    c[static_cast<size_t>(i)] = t + suffix;
    if (i > 0) suffix += w.fc[static_cast<size_t>(i - 1)];
  }
  return c;
}

std::string format_partition(const Partition& p_in) {
  Partition p = normalized(p_in);
  if (p.empty()) return "()";
  std::ostringstream os;
  os << "(";
  size_t i = 0;
  bool first = true;
  while (i < p.size()) {
    size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    if (!first) os << ",";
    first = false;
    os << p[i];
    if (j - i > 1) os << "^" << (j - i);
    i = j;
  }
  os << ")";
  return os.str();
}

Partition parse_partition(const std::string& s_in) {
  std::string s;
  for (char c : s_in)
    if (!isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')') s.push_back(c);
  Partition p;
  if (s.empty()) return p;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw UsageError("parse_partition: empty entry in '" + s_in + "'");
    size_t caret = tok.find('^');
    long long val, rep = 1;
    try {
      if (caret == std::string::npos) {
        val = std::stoll(tok);
      } else {
        val = std::stoll(tok.substr(0, caret));
        rep = std::stoll(tok.substr(caret + 1));
      }
    } catch (const std::exception&) {
      throw UsageError("parse_partition: bad entry '" + tok + "'");
    }
    if (rep < 0 || val < 0) throw UsageError("parse_partition: negative entry");
    for (long long r = 0; r < rep; ++r) p.push_back(val);
  }
  if (!is_partition(p)) throw UsageError("parse_partition: not weakly decreasing");
  return normalized(p);
}

std::vector<Partition> partitions_of(long long n, int max_len) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(long long, long long)> rec = [&](long long left, long long maxpart) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    if (max_len >= 0 && static_cast<int>(cur.size()) >= max_len) return;
    for (long long v = std::min(left, maxpart); v >= 1; --v) {
      cur.push_back(v);
      rec(left - v, v);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

}  // namespace liesec
