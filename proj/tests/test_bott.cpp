#include <doctest.h>

#include <algorithm>

#include "liesec/bott.hpp"

using namespace liesec;

TEST_CASE("gl bott: line bundles on P^1") {
  // O(-1): singular
  {
    auto r = bott_gl(std::vector<long long>{-1, 0});
    CHECK(r.zero);
  }
  // O(-2): H^1 = trivial-dual line
  {
    auto r = bott_gl(std::vector<long long>{-2, 0});
    REQUIRE_FALSE(r.zero);
    CHECK(r.degree == 1);
    CHECK(r.module_hw == std::vector<long long>{-1, -1});
  }
  // O(3) on the quotient side: H^0 = S^3
  {
    auto r = bott_gl(std::vector<long long>{0, -3});
    REQUIRE_FALSE(r.zero);
    CHECK(r.degree == 1);
  }
  {
    auto r = bott_gl(std::vector<long long>{3, 0});
    CHECK(r.degree == 0);
    CHECK(r.module_hw == std::vector<long long>{3, 0});
  }
}

TEST_CASE("gl bott: inversion count and permutation chain") {
  std::vector<long long> c{-3, 0, 0, -1, -2};
  auto r = bott_gl(c);
  REQUIRE_FALSE(r.zero);
  const int n = static_cast<int>(c.size());
  std::vector<long long> v(n);
  for (int i = 0; i < n; ++i) v[i] = c[i] + (n - 1 - i);
  // degree equals the inversion count of v
  long long inv = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (v[i] < v[j]) ++inv;
  CHECK(r.degree == inv);
  // chain is the sorting permutation: applying it to v yields a strictly
  // decreasing sequence, and its inverse recovers the input
  std::vector<long long> sorted(n);
  for (int i = 0; i < n; ++i) sorted[i] = v[r.chain[i]];
  CHECK(std::is_sorted(sorted.rbegin(), sorted.rend()));
  std::vector<long long> back(n);
  for (int i = 0; i < n; ++i) back[r.chain[i]] = r.module_hw[i] + (n - 1 - i);
  CHECK(back == v);
}

TEST_CASE("simple bott: line bundles on the D6 quadric") {
  RootSystem d6 = RootSystem::build("D6");
  // O(-k) for k = 1..9 has no cohomology; O(-10) = canonical has H^10 = C
  for (long long k = 1; k <= 9; ++k) {
    Weight la{{-k, 0, 0, 0, 0, 0}};
    auto r = bott_simple(d6, la);
    CHECK(r.zero);
  }
  auto r = bott_simple(d6, Weight{{-10, 0, 0, 0, 0, 0}});
  REQUIRE_FALSE(r.zero);
  CHECK(r.degree == 10);
  CHECK(r.module_hw == std::vector<long long>{0, 0, 0, 0, 0, 0});
}

TEST_CASE("simple bott: dominant input needs no reflections") {
  RootSystem e6 = RootSystem::build("E6");
  Weight la{{0, 1, 0, 0, 0, 2}};
  auto r = bott_simple(e6, la);
  CHECK_FALSE(r.zero);
  CHECK(r.degree == 0);
  CHECK(r.module_hw == la.fc);
  CHECK(r.chain.empty());
}

TEST_CASE("simple bott: chain replays to the dominant endpoint") {
  RootSystem d7 = RootSystem::build("D7");
  Weight la{{-4, 0, 1, 0, 0, 2, 0}};
  auto r = bott_simple(d7, la);
  if (!r.zero) {
    Weight v = la;
    for (auto& x : v.fc) x += 1;
    for (int i : r.chain) v = d7.simple_reflection(i, v);
    std::vector<long long> end = v.fc;
    for (auto& x : end) x -= 1;
    CHECK(end == r.module_hw);
    CHECK(static_cast<long long>(r.chain.size()) == r.degree);
  }
}

TEST_CASE("resolve marked grading slots") {
  RootSystem d7 = RootSystem::build("D7");
  SimpleComponent sc = SimpleComponent::make("V", d7, {1});
  REQUIRE(sc.zscale.size() == 1);
  CHECK(sc.zscale[0] == 2);
  // full label -omega1 + omega6 has z = -1/2, slot value -1
  std::vector<long long> full{-1, 0, 0, 0, 0, 1, 0};
  auto slots = encode_marked(sc, full);
  CHECK(slots == std::vector<long long>{-1, 0, 0, 0, 0, 1, 0});
  CHECK(resolve_marked(sc, slots) == full);
  // shifting z by one unit of the scale moves the coefficient by 2 = zscale/ (Cinv)_{11}
  std::vector<long long> slots2 = slots;
  slots2[0] += 2;  // z increased by 1
  auto full2 = resolve_marked(sc, slots2);
  CHECK(full2[0] == 1);
  // non-integral twist rejected: z shifted by half a unit
  std::vector<long long> slots3 = slots;
  slots3[0] += 1;
  CHECK_THROWS_AS(resolve_marked(sc, slots3), DomainError);
}

TEST_CASE("resolve marked on E6 node 6") {
  RootSystem e6 = RootSystem::build("E6");
  SimpleComponent sc = SimpleComponent::make("V", e6, {6});
  REQUIRE(sc.zscale.size() == 1);
  CHECK(sc.zscale[0] == 3);
  std::vector<long long> full{0, 1, 0, 0, 0, -1};  // z = -1/3
  auto slots = encode_marked(sc, full);
  CHECK(slots[5] == -1);
  CHECK(resolve_marked(sc, slots) == full);
  std::vector<long long> full2{0, 0, 0, 0, 0, -1};  // z = -4/3
  auto slots2 = encode_marked(sc, full2);
  CHECK(slots2[5] == -4);
  CHECK(resolve_marked(sc, slots2) == full2);
}

TEST_CASE("space bott composes degrees across factors") {
  // Levi weight of S_(2,1)A* (x) S_(2,1)(Q* (x) R*) over a point times the
  // flag (1,4) on a 5-dim space: A side needs no reflections, the flag side
  // needs two, and the dualized output is S_(2,1)A (x) S_(2,1^4)B.
  Space sp;
  sp.comps.push_back(Component::make_gl("A", 2));
  sp.comps.push_back(Component::make_gl("B", 5, {1, 4}));
  SpaceBott r = bott_space(sp, std::vector<long long>{-1, -2, -3, 0, 0, -1, -2});
  REQUIRE_FALSE(r.zero);
  CHECK(r.degree == 2);
  CHECK(r.g_hw == std::vector<long long>{-1, -2, -1, -1, -1, -1, -2});
  auto dual = space_dual_g_hw(sp, r.g_hw);
  CHECK(dual == std::vector<long long>{2, 1, 2, 1, 1, 1, 1});
}

TEST_CASE("space bott: singular factor kills everything") {
  Space sp;
  sp.comps.push_back(Component::make_gl("A", 2));
  sp.comps.push_back(Component::make_gl("B", 3));
  SpaceBott r = bott_space(sp, std::vector<long long>{0, 0, -1, 0, 0});
  CHECK(r.zero);
}

TEST_CASE("space dual on simple factors") {
  Space sp;
  RootSystem e6 = RootSystem::build("E6");
  sp.comps.push_back(Component::make_simple(SimpleComponent::make("V", e6, {})));
  std::vector<long long> hw{1, 0, 0, 0, 0, 0};
  auto dual = space_dual_g_hw(sp, hw);
  CHECK(dual == std::vector<long long>{0, 0, 0, 0, 0, 1});
}
