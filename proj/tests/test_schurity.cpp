#include <algorithm>
#include <set>

#include "doctest.h"
#include "schur/enumerate.hpp"
#include "schur/schurity.hpp"

using namespace schur;

namespace {

SRing rank2(const FiniteGroup& g) {
  return SRing(g, {bit(0), g.universe() & ~bit(0)});
}

SRing zg(const FiniteGroup& g) {
  std::vector<Mask> classes;
  for (int x = 0; x < g.order(); ++x) classes.push_back(bit(x));
  return SRing(g, classes);
}

SRing cyc_power(const FiniteGroup& g, int mult) {
  std::vector<int> im(g.order());
  for (int i = 0; i < g.order(); ++i) im[i] = (mult * i) % g.order();
  return cyclotomic(g, PermGroup::from_generators(g.order(), {Perm(im)}));
}

bool preserves_colors(const ColorGraph& gamma, const Perm& f) {
  for (int x = 0; x < gamma.n(); ++x)
    for (int y = 0; y < gamma.n(); ++y)
      if (gamma.color(f(x), f(y)) != gamma.color(x, y)) return false;
  return true;
}

}  // namespace

TEST_CASE("color graph construction and validation") {
  SRing a = rank2(FiniteGroup::cyclic(5));
  ColorGraph gamma = ColorGraph::from_sring(a);
  CHECK(gamma.n() == 5);
  CHECK(gamma.colors() == 2);
  CHECK(gamma.diagonal_color() == 0);
  CHECK(gamma.color_degree(0) == 1);
  CHECK(gamma.color_degree(1) == 4);
  CHECK(gamma.inverse_color(1) == 1);
  auto classes = gamma.classes_of_base_vertex();
  REQUIRE(classes.size() == 2);
  CHECK(classes[0] == std::vector<int>{0});
  CHECK(classes[1].size() == 4);

  // Right translations preserve colors by construction.
  const FiniteGroup& g = a.group();
  for (int t = 0; t < g.order(); ++t) {
    Perm f = Perm::identity(g.order());
    for (int x = 0; x < g.order(); ++x) f.img[x] = g.mul(x, t);
    CHECK(preserves_colors(gamma, f));
  }

  // Malformed tables are rejected.
  CHECK_THROWS_AS(ColorGraph(2, 2, {0, 1, 1}), Error);            // size
  CHECK_THROWS_AS(ColorGraph(2, 2, {0, 1, 1, 2}), Error);         // color range
  CHECK_THROWS_AS(ColorGraph(2, 2, {0, 1, 1, 1}), Error);         // diagonal leaks
  CHECK_THROWS_AS(ColorGraph(3, 3, {0, 1, 2, 2, 0, 1, 1, 1, 0}), Error);  // irregular
  CHECK_THROWS_AS(ColorGraph(0, 1, {}), Error);
  // A valid 3-vertex directed triangle: color 1 one way, color 2 back.
  ColorGraph tri(3, 3, {0, 1, 2, 2, 0, 1, 1, 2, 0});
  CHECK(tri.inverse_color(1) == 2);
}

TEST_CASE("difference-set color graph agrees with the group-side coloring") {
  // Paley (11,5,2) and Singer (13,4,1).
  struct Case {
    int p;
    std::vector<int> d;
  } cases[] = {{11, {1, 3, 4, 5, 9}}, {13, {0, 1, 3, 9}}};
  for (const auto& c : cases) {
    CAPTURE(c.p);
    Mask dm = 0;
    for (int e : c.d) dm |= bit(e);
    SRing a = dihedral_sring_from_difference_set(FiniteGroup::dihedral(c.p), dm);
    ColorGraph via_ring = ColorGraph::from_sring(a);
    ColorGraph direct = ColorGraph::from_dihedral_difference_set(c.p, c.d);
    REQUIRE(via_ring.n() == direct.n());
    for (int x = 0; x < direct.n(); ++x)
      for (int y = 0; y < direct.n(); ++y) REQUIRE(via_ring.color(x, y) == direct.color(x, y));
  }
  CHECK_THROWS_AS(ColorGraph::from_dihedral_difference_set(13, {1}), Error);
  CHECK_THROWS_AS(ColorGraph::from_dihedral_difference_set(4, {1, 2}), Error);
  CHECK_THROWS_AS(ColorGraph::from_dihedral_difference_set(41, {1, 2, 3}), Error);  // 82 > 80
}

TEST_CASE("automorphism groups of known rings") {
  // Rank 2 over C_5: the whole symmetric group.
  CHECK(automorphism_group(rank2(FiniteGroup::cyclic(5))).order() == 120);
  // Full partition: only the right translations remain.
  CHECK(automorphism_group(zg(FiniteGroup::dihedral(13))).order() == 26);
  // cyc(<3>, C_13): |Aut| = 39, stabilizer orbits match the classes.
  SRing c3 = cyc_power(FiniteGroup::cyclic(13), 3);
  PermGroup aut = automorphism_group(c3);
  CHECK(aut.order() == 39);
  SchurityVerdict v = is_schurian(c3);
  CHECK(v.schurian == Flag::True);
  CHECK(v.stabilizer_orbit_sizes == std::vector<int>({1, 3, 3, 3, 3}));
  // Rank 2 over D_10: Sym(10).
  CHECK(automorphism_group(rank2(FiniteGroup::dihedral(5))).order() == BigInt(3628800));

  // Every generator returned actually preserves colors.
  ColorGraph gamma = ColorGraph::from_sring(c3);
  for (const Perm& f : aut.generators()) CHECK(preserves_colors(gamma, f));

  // The budget interrupts honestly.
  Budgets strangled;
  strangled.aut_nodes = 1;
  AutResult r = color_graph_automorphisms(ColorGraph::from_sring(zg(FiniteGroup::dihedral(13))),
                                          strangled);
  CHECK_FALSE(r.complete);
  CHECK_THROWS_AS(automorphism_group(zg(FiniteGroup::dihedral(13)), strangled), BudgetExceeded);
}

TEST_CASE("schurity verdicts across the paper boundary") {
  // A(Paley) over D_22: schurian, Aut = PGL(2,11) of order 1320.
  SRing paley11 = dihedral_sring_from_difference_set(
      FiniteGroup::dihedral(11), bit(1) | bit(3) | bit(4) | bit(5) | bit(9));
  SchurityVerdict v11 = is_schurian(paley11);
  CHECK(v11.schurian == Flag::True);
  CHECK(v11.aut_order == 1320);

  // A(Paley) over D_38: nonschurian (p = 19 > 11), |Aut| = 342 = 2*9*19.
  std::vector<int> qr19;
  for (int x = 1; x < 19; ++x)
    if ([](int a) {
          for (int s = 1; s < 19; ++s)
            if (s * s % 19 == a) return true;
          return false;
        }(x))
      qr19.push_back(x);
  SchurityVerdict v19 = schurity_from_graph(ColorGraph::from_dihedral_difference_set(19, qr19));
  CHECK(v19.schurian == Flag::False);
  CHECK(v19.aut_order == 342);
  std::vector<int> orbits19 = v19.stabilizer_orbit_sizes;
  CHECK(orbits19 == std::vector<int>({1, 1, 9, 9, 9, 9}));

  // The quartic-residue set at p = 37 over D_74: nonschurian, |Aut| = 666.
  std::vector<int> quartics37;
  for (int x = 1; x < 37; ++x)
    for (int s = 1; s < 37; ++s)
      if (s * s % 37 * s % 37 * s % 37 == x) {  // s^4 mod 37
        quartics37.push_back(x);
        break;
      }
  REQUIRE(quartics37.size() == 9);
  SchurityVerdict v37 =
      schurity_from_graph(ColorGraph::from_dihedral_difference_set(37, quartics37));
  CHECK(v37.schurian == Flag::False);
  CHECK(v37.aut_order == 666);

  // ZG and rank-2 are always schurian.
  CHECK(is_schurian(zg(FiniteGroup::dihedral(13))).schurian == Flag::True);
  CHECK(is_schurian(rank2(FiniteGroup::dihedral(13))).schurian == Flag::True);
}

TEST_CASE("combinatorial isomorphism") {
  FiniteGroup d13 = FiniteGroup::dihedral(13);
  Mask d = bit(0) | bit(1) | bit(3) | bit(9);
  Mask d2 = 0;  // 2D = {2d : d in D}
  for (int e = 0; e < 13; ++e)
    if (has_bit(d, e)) d2 |= bit(2 * e % 13);
  SRing ad = dihedral_sring_from_difference_set(d13, d);
  SRing ad2 = dihedral_sring_from_difference_set(d13, d2);
  REQUIRE_FALSE(ad == ad2);

  auto iso = are_isomorphic(ad, ad2);
  REQUIRE(iso.has_value());
  // The witness carries colors to colors bijectively.
  ColorGraph ga = ColorGraph::from_sring(ad), gb = ColorGraph::from_sring(ad2);
  std::vector<int> colormap(ga.colors(), -1);
  for (int x = 0; x < 26; ++x)
    for (int y = 0; y < 26; ++y) {
      int ca = ga.color(x, y), cb = gb.color((*iso)(x), (*iso)(y));
      if (colormap[ca] == -1) colormap[ca] = cb;
      REQUIRE(colormap[ca] == cb);
    }
  std::sort(colormap.begin(), colormap.end());
  for (int c = 0; c < ga.colors(); ++c) REQUIRE(colormap[c] == c);

  // Different ranks / different invariants: no isomorphism.
  CHECK_FALSE(are_isomorphic(ad, rank2(d13)).has_value());
  CHECK_FALSE(are_isomorphic(zg(d13), rank2(d13)).has_value());
  // Identity case.
  CHECK(are_isomorphic(ad, ad).has_value());
}

TEST_CASE("regular cycle detection") {
  // ZG over D_26 embeds no 26-cycle (the group itself is the full
  // automorphism group and is dihedral, not cyclic).
  SRing z = zg(FiniteGroup::dihedral(13));
  RegularCycleResult r = isomorphic_to_sring_over_cyclic(z);
  CHECK(r.found == Flag::False);

  // Rank 2 over D_10: Sym(10) certainly contains a 10-cycle.
  r = isomorphic_to_sring_over_cyclic(rank2(FiniteGroup::dihedral(5)));
  CHECK(r.found == Flag::True);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->is_n_cycle());
  CHECK(preserves_colors(ColorGraph::from_sring(rank2(FiniteGroup::dihedral(5))), *r.witness));

  // ZG over C_14 is its own regular cycle.
  r = isomorphic_to_sring_over_cyclic(zg(FiniteGroup::cyclic(14)));
  CHECK(r.found == Flag::True);
  CHECK(r.witness->is_n_cycle());

  // The D_74 quartic ring: exact "no" via the hybrid group-order route.
  std::vector<int> quartics37;
  for (int x = 1; x < 37; ++x)
    for (int s = 1; s < 37; ++s)
      if (s * s % 37 * s % 37 * s % 37 == x) {
        quartics37.push_back(x);
        break;
      }
  ColorGraph d74 = ColorGraph::from_dihedral_difference_set(37, quartics37);
  RegularCycleResult r74 = regular_cycle_decision(d74);
  CHECK(r74.found == Flag::False);

  // A strangled direct search alone reports unknown, never a wrong "no".
  Budgets tiny;
  tiny.cycle_nodes = 5;
  CHECK(find_regular_cycle(d74, tiny).found == Flag::Unknown);
}

TEST_CASE("schurity equals class-orbit coincidence") {
  // For a schurian ring, stabilizer orbit sizes equal class sizes; for the
  // nonschurian Paley D_38 ring they differ (checked above). Cross-check the
  // positive direction on the whole D_10 census.
  SRingCensus c = enumerate_srings(FiniteGroup::dihedral(5));
  for (const CensusEntry& e : c.entries) {
    SchurityVerdict v = is_schurian(e.ring);
    REQUIRE(v.schurian == Flag::True);  // D_10 is a Schur group
    std::multiset<int> classes, orbits(v.stabilizer_orbit_sizes.begin(),
                                       v.stabilizer_orbit_sizes.end());
    for (int i = 0; i < e.ring.rank(); ++i) classes.insert(e.ring.class_size(i));
    CHECK(classes == orbits);
  }
}
