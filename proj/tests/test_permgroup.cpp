#include <set>

#include "doctest.h"
#include "schur/group.hpp"
#include "schur/permgroup.hpp"

using namespace schur;

namespace {

Perm cycle(int n, std::vector<int> pts) {
  Perm p = Perm::identity(n);
  for (size_t i = 0; i < pts.size(); ++i) p.img[pts[i]] = pts[(i + 1) % pts.size()];
  return p;
}

}  // namespace

TEST_CASE("symmetric and alternating orders") {
  for (int n : {3, 5, 8, 26}) {
    PermGroup s = PermGroup::from_generators(n, {cycle(n, {0, 1}), cycle(n, [n] {
                                                   std::vector<int> all;
                                                   for (int i = 0; i < n; ++i) all.push_back(i);
                                                   return all;
                                                 }())});
    BigInt want = 1;
    for (int i = 2; i <= n; ++i) want *= i;
    CHECK(s.order() == want);
    CHECK(s.point_stabilizer(0).order() == want / n);
  }
  PermGroup a4 = PermGroup::from_generators(4, {cycle(4, {0, 1, 2}), cycle(4, {1, 2, 3})});
  CHECK(a4.order() == 12);
  CHECK_FALSE(a4.contains(cycle(4, {0, 1})));
  CHECK(a4.contains(cycle(4, {0, 1, 2}) * cycle(4, {0, 1, 2})));
}

TEST_CASE("trivial group") {
  PermGroup t = PermGroup::trivial(7);
  CHECK(t.order() == 1);
  CHECK(t.is_trivial());
  CHECK(t.contains(Perm::identity(7)));
  CHECK_FALSE(t.contains(cycle(7, {0, 1})));
  CHECK(t.orbits().size() == 7);
}

TEST_CASE("orbits and intransitive groups") {
  // <(01), (234)> on 6 points: orbits {0,1}, {2,3,4}, {5}.
  PermGroup g = PermGroup::from_generators(6, {cycle(6, {0, 1}), cycle(6, {2, 3, 4})});
  CHECK(g.order() == 6);
  auto orb = g.orbits();
  REQUIRE(orb.size() == 3);
  CHECK(orb[0] == std::vector<int>{0, 1});
  CHECK(orb[1] == std::vector<int>{2, 3, 4});
  CHECK(orb[2] == std::vector<int>{5});
}

TEST_CASE("membership in a dihedral regular representation") {
  FiniteGroup d = FiniteGroup::dihedral(7);
  PermGroup r = right_regular_representation(d);
  CHECK(r.order() == 14);
  // Every right translation is a member; a transposition is not.
  for (int t = 0; t < 14; ++t) {
    Perm p = Perm::identity(14);
    for (int x = 0; x < 14; ++x) p.img[x] = d.mul(x, t);
    CHECK(r.contains(p));
  }
  CHECK_FALSE(r.contains(cycle(14, {0, 1})));
}

TEST_CASE("for_each_element enumerates exactly the group") {
  PermGroup s4 = PermGroup::from_generators(4, {cycle(4, {0, 1}), cycle(4, {0, 1, 2, 3})});
  std::set<std::vector<int>> seen;
  bool all = s4.for_each_element(1'000, [&](const Perm& p) {
    CHECK(p.is_valid());
    CHECK(s4.contains(p));
    seen.insert(p.img);
    return true;
  });
  CHECK(all);
  CHECK(seen.size() == 24);

  // Capped enumeration stops early and reports incompleteness.
  int count = 0;
  bool whole = s4.for_each_element(10, [&](const Perm&) {
    ++count;
    return true;
  });
  CHECK_FALSE(whole);
  CHECK(count == 10);

  // Visitor abort.
  count = 0;
  whole = s4.for_each_element(1'000, [&](const Perm&) {
    ++count;
    return count < 5;
  });
  CHECK_FALSE(whole);
  CHECK(count == 5);
}

TEST_CASE("regular cyclic element detection") {
  // C_6 regular representation: a 6-cycle exists.
  PermGroup c6 = right_regular_representation(FiniteGroup::cyclic(6));
  auto r = c6.contains_regular_cyclic(100);
  CHECK(r.verdict == Flag::True);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->is_n_cycle());
  CHECK(c6.contains(*r.witness));

  // Klein four group on 4 points: no 4-cycle, enumeration completes.
  std::vector<std::vector<int>> klein = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  PermGroup v4 = right_regular_representation(FiniteGroup::from_table(klein));
  auto rv = v4.contains_regular_cyclic(100);
  CHECK(rv.verdict == Flag::False);
  CHECK(rv.elements_seen == 4);

  // S_4 has 4-cycles.
  PermGroup s4 = PermGroup::from_generators(4, {cycle(4, {0, 1}), cycle(4, {0, 1, 2, 3})});
  CHECK(s4.contains_regular_cyclic(100).verdict == Flag::True);

  // Tiny cap: unknown.
  CHECK(v4.contains_regular_cyclic(2).verdict == Flag::Unknown);
}

TEST_CASE("preferred base is honored") {
  PermGroup s5 = PermGroup::from_generators(
      5, {cycle(5, {0, 1}), cycle(5, {0, 1, 2, 3, 4})}, {3, 1});
  REQUIRE(s5.base().size() >= 2);
  CHECK(s5.base()[0] == 3);
  CHECK(s5.base()[1] == 1);
  CHECK(s5.order() == 120);
}

TEST_CASE("orbits_of without a chain") {
  auto orb = orbits_of(5, {cycle(5, {0, 4})});
  REQUIRE(orb.size() == 4);
  CHECK(orb[0] == std::vector<int>{0, 4});
}
