#pragma once

// Characters as weight multisets over a product space whose factors are
// GL-blocks (possibly carrying a flag decomposition) and simple root systems
// (possibly carrying marked nodes whose coordinate slots hold a scaled grading
// value instead of a fundamental coordinate). All decomposition, symmetric /
// exterior power, and highest-weight peeling machinery works on these flat
// integer vectors.

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "liesec/rational.hpp"
#include "liesec/rootsys.hpp"

namespace liesec {

inline constexpr int kMaxFlat = 24;

// Fixed-size weight key for hashing; coordinates must fit int16.
struct FlatWeight {
  std::array<int16_t, kMaxFlat> v{};
  uint8_t len = 0;

  FlatWeight() = default;
  explicit FlatWeight(std::span<const long long> coords) {
    check(coords.size() <= kMaxFlat, "flat weight too wide");
    len = static_cast<uint8_t>(coords.size());
    for (size_t i = 0; i < coords.size(); ++i) {
      check(coords[i] >= INT16_MIN && coords[i] <= INT16_MAX,
            "flat weight coordinate out of int16 range");
      v[i] = static_cast<int16_t>(coords[i]);
    }
  }
  std::vector<long long> to_vector() const {
    return std::vector<long long>(v.begin(), v.begin() + len);
  }
  bool operator==(const FlatWeight& o) const {
    return len == o.len && std::equal(v.begin(), v.begin() + len, o.v.begin());
  }
  bool operator<(const FlatWeight& o) const {
    return std::lexicographical_compare(v.begin(), v.begin() + len, o.v.begin(),
                                        o.v.begin() + o.len);
  }
};

struct FlatWeightHash {
  size_t operator()(const FlatWeight& w) const {
    uint64_t h = 1469598103934665603ull;
    for (int i = 0; i < w.len; ++i) {
      h ^= static_cast<uint16_t>(w.v[i]);
      h *= 1099511628211ull;
    }
    h ^= w.len;
    h *= 1099511628211ull;
    return static_cast<size_t>(h);
  }
};

using WeightMultiset = std::unordered_map<FlatWeight, long long, FlatWeightHash>;

// ---- Product space ----------------------------------------------------------

struct GLBlockComponent {
  std::string name;        // display name of the underlying vector space ("A", "B", ...)
  int n = 0;               // GL(n)
  std::vector<int> blocks;  // flag block sizes (sum n); {n} if no flag
};

struct SimpleComponent {
  std::string name;
  RootSystem full;
  std::vector<int> marked_labels;  // 1-based node labels of the ambient system
  RootSystem levi;                 // sub-system on the unmarked nodes
  // For each marked node: the stored coordinate in that slot is z * zscale.
  std::vector<long long> zscale;

  static SimpleComponent make(std::string name, RootSystem rs, std::vector<int> marked);
};

struct Component {
  enum class Kind { GL, Simple };
  Kind kind;
  GLBlockComponent gl;
  SimpleComponent sim;

  int width() const { return kind == Kind::GL ? gl.n : sim.full.rank(); }
  static Component make_gl(std::string name, int n, std::vector<int> blocks = {});
  static Component make_simple(SimpleComponent s);
};

struct Space {
  std::vector<Component> comps;

  int flat_width() const;
  // Offset of component c in the flat vector.
  int offset(int c) const;
  std::string signature() const;  // cache key describing the space shape
};

// Work-size guard: expanded irrep dimension and multiset sizes must stay below.
struct Caps {
  long long max_irrep_dim = 1'000'000;
  long long max_support = 8'000'000;
};

// ---- Per-root-system weight systems ----------------------------------------

// Dominant weights with multiplicities of the irrep with the given highest
// weight (Freudenthal's formula; support from string closure).
std::vector<std::pair<Weight, long long>> freudenthal_dominant(const RootSystem& rs,
                                                               const Weight& hw,
                                                               const Caps& caps = {});

// Full weight support with multiplicities (Weyl-orbit expansion of the above).
std::vector<std::pair<std::vector<long long>, long long>> full_weight_system(
    const RootSystem& rs, const Weight& hw, const Caps& caps = {});

// ---- Space-level character operations ---------------------------------------

// Dimension of the irreducible module over the space's Levi with flat highest weight hw.
Int space_irrep_dim(const Space& sp, std::span<const long long> hw);
bool space_dominant(const Space& sp, std::span<const long long> hw);
long long space_height(const Space& sp, std::span<const long long> w);

// Character (full weight multiset) of the irreducible with flat highest weight hw. Memoized.
WeightMultiset space_weight_system(const Space& sp, std::span<const long long> hw,
                                   const Caps& caps = {});

WeightMultiset char_add(WeightMultiset a, const WeightMultiset& b);
WeightMultiset char_scale(WeightMultiset a, long long k);
WeightMultiset char_tensor(const WeightMultiset& a, const WeightMultiset& b,
                           const Caps& caps = {});
// Adams operation: scale every weight by k (multiplicities unchanged).
WeightMultiset char_adams(const WeightMultiset& a, long long k);
long long char_total(const WeightMultiset& a);  // sum of multiplicities

// Symmetric / exterior power via the Newton recursions on characters.
WeightMultiset char_sym_power(const WeightMultiset& a, long long d, const Caps& caps = {});
WeightMultiset char_ext_power(const WeightMultiset& a, long long d, const Caps& caps = {});

struct PeeledComponent {
  std::vector<long long> hw;
  long long mult;
};

// Decompose a (genuine) character into irreducibles by repeatedly removing the
// height-maximal weight's irrep. Throws InternalCheckError on negative
// multiplicity (non-character input).
std::vector<PeeledComponent> peel(const Space& sp, WeightMultiset ch, const Caps& caps = {});

// Pretty-print a flat highest weight over the space, e.g.
// "S_(2,1)A (x) S_(2,1^4)B" or "V[0,0,0,1,0,0,0]".
std::string format_flat_hw(const Space& sp, std::span<const long long> hw);

}  // namespace liesec
