#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "liesec/charspace.hpp"
#include "liesec/partitions.hpp"

using namespace liesec;

namespace {

Space simple_space(const std::string& lbl) {
  Space sp;
  sp.comps.push_back(Component::make_simple(SimpleComponent::make("", RootSystem::build(lbl), {})));
  return sp;
}

Space gl_space(int n) {
  Space sp;
  sp.comps.push_back(Component::make_gl("W", n));
  return sp;
}

long long mult_of(const WeightMultiset& ch, std::vector<long long> w) {
  auto it = ch.find(FlatWeight(std::span<const long long>(w)));
  return it == ch.end() ? 0 : it->second;
}

}  // namespace

TEST_CASE("freudenthal: sl3 adjoint") {
  RootSystem rs = RootSystem::build("A2");
  auto dom = freudenthal_dominant(rs, Weight{{1, 1}});
  REQUIRE(dom.size() == 2);
  CHECK(dom[0].first == Weight{{1, 1}});
  CHECK(dom[0].second == 1);
  CHECK(dom[1].first == Weight{{0, 0}});
  CHECK(dom[1].second == 2);
  auto full = full_weight_system(rs, Weight{{1, 1}});
  CHECK(full.size() == 7);  // 6 roots + zero
}

TEST_CASE("freudenthal: sl3 V(2,2) has zero weight multiplicity 3") {
  RootSystem rs = RootSystem::build("A2");
  CHECK(rs.weyl_dim(Weight{{2, 2}}) == 27);
  auto dom = freudenthal_dominant(rs, Weight{{2, 2}});
  long long zero_mult = -1;
  for (auto& [w, m] : dom)
    if (w == Weight{{0, 0}}) zero_mult = m;
  CHECK(zero_mult == 3);
}

TEST_CASE("freudenthal: D6 half spin is multiplicity free with 32 weights") {
  RootSystem rs = RootSystem::build("D6");
  Weight hw{{0, 0, 0, 0, 0, 1}};
  auto full = full_weight_system(rs, hw);
  CHECK(full.size() == 32);
  for (auto& [w, m] : full) CHECK(m == 1);
}

TEST_CASE("weight system dimensions match weyl dim across types") {
  for (const auto& [lbl, fcs] : std::vector<std::pair<std::string, std::vector<long long>>>{
           {"A3", {1, 0, 2}}, {"B3", {1, 1, 0}}, {"C3", {0, 1, 1}}, {"D5", {0, 1, 0, 0, 1}},
           {"E6", {1, 0, 0, 0, 0, 1}}}) {
    RootSystem rs = RootSystem::build(lbl);
    Weight hw{fcs};
    auto full = full_weight_system(rs, hw);
    Int total = 0;
    for (auto& [w, m] : full) total += m;
    CHECK(total == rs.weyl_dim(hw));
  }
}

TEST_CASE("gl content system gives kostka numbers") {
  Space sp = gl_space(3);
  WeightMultiset ch = space_weight_system(sp, std::vector<long long>{2, 1, 0});
  CHECK(char_total(ch) == 8);
  CHECK(mult_of(ch, {2, 1, 0}) == 1);
  CHECK(mult_of(ch, {1, 1, 1}) == 2);  // K_{(2,1),(1,1,1)} = 2
  CHECK(mult_of(ch, {0, 1, 2}) == 1);
  CHECK(mult_of(ch, {3, 0, 0}) == 0);
}

TEST_CASE("space weight system with negative gl entries") {
  Space sp = gl_space(2);
  WeightMultiset ch = space_weight_system(sp, std::vector<long long>{0, -1});
  CHECK(char_total(ch) == 2);
  CHECK(mult_of(ch, {0, -1}) == 1);
  CHECK(mult_of(ch, {-1, 0}) == 1);
}

TEST_CASE("sym and ext powers of the binary quadric") {
  Space sp = gl_space(2);
  WeightMultiset q = space_weight_system(sp, std::vector<long long>{2, 0});
  auto s3 = peel(sp, char_sym_power(q, 3));
  REQUIRE(s3.size() == 2);
  CHECK(s3[0].hw == std::vector<long long>{6, 0});
  CHECK(s3[0].mult == 1);
  CHECK(s3[1].hw == std::vector<long long>{4, 2});
  CHECK(s3[1].mult == 1);
  auto e2 = peel(sp, char_ext_power(q, 2));
  REQUIRE(e2.size() == 1);
  CHECK(e2[0].hw == std::vector<long long>{3, 1});
}

TEST_CASE("tensor peel agrees with littlewood richardson") {
  const int n = 4;
  Space sp = gl_space(n);
  Partition la{2, 1}, mu{2, 2};
  std::vector<long long> fla{2, 1, 0, 0}, fmu{2, 2, 0, 0};
  WeightMultiset prod =
      char_tensor(space_weight_system(sp, fla), space_weight_system(sp, fmu));
  auto comps = peel(sp, std::move(prod));
  for (const auto& nu : partitions_of(partition_size(la) + partition_size(mu), n)) {
    long long expect = lr_coefficient(nu, la, mu);
    long long got = 0;
    for (const auto& c : comps) {
      Partition p(c.hw.begin(), c.hw.end());
      if (normalized(p) == nu) got = c.mult;
    }
    CHECK(got == expect);
  }
}

TEST_CASE("peel recovers a random positive combination of irreps") {
  RootSystem rs = RootSystem::build("A2");
  Space sp = simple_space("A2");
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<std::pair<std::vector<long long>, long long>> input;
    WeightMultiset ch;
    for (int k = 0; k < 4; ++k) {
      std::vector<long long> hw{static_cast<long long>(rng() % 4),
                                static_cast<long long>(rng() % 4)};
      long long mult = 1 + static_cast<long long>(rng() % 3);
      input.push_back({hw, mult});
      ch = char_add(std::move(ch), char_scale(space_weight_system(sp, hw), mult));
    }
    auto comps = peel(sp, std::move(ch));
    // aggregate expected multiplicities
    std::map<std::vector<long long>, long long> expect;
    for (auto& [hw, m] : input) expect[hw] += m;
    std::map<std::vector<long long>, long long> got;
    for (auto& c : comps) got[c.hw] += c.mult;
    CHECK(got == expect);
  }
}

TEST_CASE("peel rejects a non-character") {
  Space sp = gl_space(2);
  WeightMultiset bad;
  std::vector<long long> w{1, 0};
  bad[FlatWeight(std::span<const long long>(w))] = 1;  // weight (1,0) without (0,1): not a character
  CHECK_THROWS_AS(peel(sp, std::move(bad)), InternalCheckError);
}

TEST_CASE("product space: tensor of two gl factors") {
  Space sp;
  sp.comps.push_back(Component::make_gl("A", 2));
  sp.comps.push_back(Component::make_gl("B", 3));
  std::vector<long long> hw{1, 0, 1, 0, 0};
  WeightMultiset ch = space_weight_system(sp, hw);
  CHECK(char_total(ch) == 6);
  // Lambda^2(A (x) B) = S_(2)A (x) S_(1,1)B + S_(1,1)A (x) S_(2)B (Cauchy)
  auto e2 = peel(sp, char_ext_power(ch, 2));
  REQUIRE(e2.size() == 2);
  std::vector<std::vector<long long>> hws{e2[0].hw, e2[1].hw};
  std::sort(hws.begin(), hws.end());
  CHECK(hws[0] == std::vector<long long>{1, 1, 2, 0, 0});
  CHECK(hws[1] == std::vector<long long>{2, 0, 1, 1, 0});
}

TEST_CASE("flag component: blocks restrict dominance") {
  Space sp;
  sp.comps.push_back(Component::make_gl("W", 7, {1, 6}));
  // (-1 | 0,0,0,0,-1,-1): Levi-dominant though not GL(7)-dominant
  std::vector<long long> hw{-1, 0, 0, 0, 0, -1, -1};
  CHECK(space_dominant(sp, hw));
  WeightMultiset ch = space_weight_system(sp, hw);
  CHECK(char_total(ch) == 15);  // wedge^2 of the 6-dim block, times the line
  std::vector<long long> bad{0, 0, 0, 0, 0, -1, 0};
  CHECK_FALSE(space_dominant(sp, bad));
}

TEST_CASE("marked simple component keeps the grading slot constant") {
  RootSystem d7 = RootSystem::build("D7");
  SimpleComponent sc = SimpleComponent::make("V", d7, {1});
  Space sp;
  sp.comps.push_back(Component::make_simple(sc));
  // stored slot: full-weight label omega7 with slot value = z * zscale = 1
  // z(omega7) = 1/2, zscale = 2
  std::vector<long long> hw{1, 0, 0, 0, 0, 0, 1};
  WeightMultiset ch = space_weight_system(sp, hw);
  CHECK(char_total(ch) == 32);  // D6 half-spin fiber
  for (const auto& [w, m] : ch) {
    CHECK(w.v[0] == 1);  // grading slot untouched
    CHECK(m == 1);
  }
}

TEST_CASE("adams and scale behave on characters") {
  Space sp = gl_space(2);
  WeightMultiset v = space_weight_system(sp, std::vector<long long>{1, 0});
  WeightMultiset v2 = char_adams(v, 2);
  CHECK(mult_of(v2, {2, 0}) == 1);
  CHECK(mult_of(v2, {0, 2}) == 1);
  CHECK(char_total(char_scale(v, 3)) == 6);
}

TEST_CASE("sym power dimension formula") {
  Space sp = gl_space(4);
  WeightMultiset v = space_weight_system(sp, std::vector<long long>{1, 0, 0, 0});
  for (long long d = 0; d <= 5; ++d) {
    WeightMultiset s = char_sym_power(v, d);
    // C(4+d-1, d)
    long long expect = 1;
    for (long long i = 0; i < d; ++i) expect = expect * (4 + i) / (i + 1);
    CHECK(char_total(s) == expect);
  }
}

TEST_CASE("caps raise resource errors") {
  Caps tight;
  tight.max_irrep_dim = 10;
  RootSystem rs = RootSystem::build("D6");
  CHECK_THROWS_AS(full_weight_system(rs, Weight{{0, 0, 0, 0, 0, 1}}, tight), ResourceError);
}

TEST_CASE("format flat hw") {
  Space sp;
  sp.comps.push_back(Component::make_gl("A", 2));
  sp.comps.push_back(Component::make_gl("B", 6));
  std::vector<long long> hw{2, 1, 2, 1, 1, 1, 1, 0};
  CHECK(format_flat_hw(sp, hw) == "S_(2,1)A (x) S_(2,1^4)B");
}
