#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"
#include "schur/diffset.hpp"

using namespace schur;

namespace {

std::vector<int> lex_least_translate(int v, std::vector<int> d) {
  std::sort(d.begin(), d.end());
  std::vector<int> best = d, cur(d.size());
  for (int t = 1; t < v; ++t) {
    for (size_t i = 0; i < d.size(); ++i) cur[i] = (d[i] + t) % v;
    std::sort(cur.begin(), cur.end());
    if (cur < best) best = cur;
  }
  return best;
}

}  // namespace

TEST_CASE("difference-set validation over Z/v") {
  // Singer (13,4,1).
  auto r = cyclic_difference_set(13, {0, 1, 3, 9});
  REQUIRE(r.has_value());
  CHECK(r->v == 13);
  CHECK(r->k == 4);
  CHECK(r->lambda == 1);
  CHECK(r->order_minus() == 3);
  CHECK_FALSE(r->trivial);
  CHECK(r->elements == std::vector<int>{0, 1, 3, 9});
  CHECK(r->mask() == (bit(0) | bit(1) | bit(3) | bit(9)));

  // Input is treated as a set: order is ignored, duplicates collapse.
  CHECK(cyclic_difference_set(13, {9, 0, 3, 1}).has_value());
  CHECK_FALSE(cyclic_difference_set(13, {0, 1, 3, 3}).has_value());  // = {0,1,3}
  auto dup = cyclic_difference_set(13, {0, 1, 3, 3, 9});
  REQUIRE(dup.has_value());
  CHECK(dup->k == 4);
  CHECK_THROWS_AS(cyclic_difference_set(13, {0, 1, 3, 13}), Error);
  CHECK_THROWS_AS(cyclic_difference_set(0, {}), Error);

  // Non-sets.
  CHECK_FALSE(cyclic_difference_set(13, {0, 1, 3, 8}).has_value());
  CHECK_FALSE(cyclic_difference_set(7, {1, 2, 3}).has_value());

  // Trivial shapes still validate, flagged.
  auto full = cyclic_difference_set(5, {0, 1, 2, 3, 4});
  REQUIRE(full.has_value());
  CHECK(full->trivial);
  auto single = cyclic_difference_set(5, {2});
  REQUIRE(single.has_value());
  CHECK(single->trivial);
  auto empty = cyclic_difference_set(4, {});
  REQUIRE(empty.has_value());
  CHECK(empty->trivial);

  // mask() refuses v > 64.
  std::vector<int> big(9);
  std::iota(big.begin(), big.end(), 0);
  DifferenceSetRecord fake;
  fake.v = 65;
  fake.elements = {0};
  CHECK_THROWS_AS(fake.mask(), Error);
}

TEST_CASE("group-side validation and complements") {
  FiniteGroup c13 = FiniteGroup::cyclic(13);
  Mask singer = bit(0) | bit(1) | bit(3) | bit(9);
  auto r = is_difference_set(c13, singer);
  REQUIRE(r.has_value());
  CHECK(r->k == 4);
  CHECK(r->lambda == 1);
  CHECK_FALSE(is_difference_set(c13, bit(0) | bit(1) | bit(3) | bit(8)).has_value());
  CHECK_THROWS_AS(is_difference_set(FiniteGroup::dihedral(7), bit(1) | bit(2)), Error);

  DifferenceSetRecord comp = complement(*r);
  CHECK(comp.v == 13);
  CHECK(comp.k == 9);
  CHECK(comp.lambda == 6);
  CHECK(comp.elements == std::vector<int>{2, 4, 5, 6, 7, 8, 10, 11, 12});
  // The complement really is one.
  CHECK(cyclic_difference_set(13, comp.elements).has_value());
  // Complementing twice returns the original.
  CHECK(complement(comp) == *r);
}

TEST_CASE("feasible parameter lists") {
  CHECK(feasible_parameters(17).empty());
  CHECK(feasible_parameters(13) ==
        std::vector<std::pair<int, int>>{{4, 1}, {9, 6}});
  CHECK(feasible_parameters(11) ==
        std::vector<std::pair<int, int>>{{5, 2}, {6, 3}});
  CHECK(feasible_parameters(29) ==
        std::vector<std::pair<int, int>>{{8, 2}, {21, 15}});
  CHECK(feasible_parameters(5).empty());
  // k and v-k always pair up.
  for (int v = 3; v <= 61; ++v) {
    auto fp = feasible_parameters(v);
    for (auto [k, lam] : fp) {
      CHECK(k * (k - 1) == (v - 1) * lam);
      CHECK(std::count(fp.begin(), fp.end(),
                       std::make_pair(v - k, v - 2 * k + lam)) == 1);
    }
  }
}

TEST_CASE("multipliers of the Singer set") {
  auto r = *cyclic_difference_set(13, {0, 1, 3, 9});
  // 3D = {0,3,9,27=1} = D itself: multiplier with translate witness 0.
  auto w = multiplier_test(r, 3);
  REQUIRE(w.has_value());
  CHECK(*w == 0);
  CHECK_FALSE(multiplier_test(r, 12).has_value());
  CHECK_FALSE(multiplier_test(r, 2).has_value());
  CHECK_THROWS_AS(multiplier_test(r, 0), Error);   // gcd(t, v) must be 1... 0 fails
  CHECK_THROWS_AS(multiplier_test(r, 13), Error);  // out of range

  MultiplierData m = multiplier_group(r);
  CHECK(m.v == 13);
  CHECK(m.multipliers == std::vector<int>{1, 3, 9});
  REQUIRE(m.witness.size() == 3);
  for (size_t i = 0; i < m.multipliers.size(); ++i) {
    // t*D = D + witness: recheck from the definition.
    std::set<int> lhs, rhs;
    for (int e : r.elements) {
      lhs.insert(e * m.multipliers[i] % 13);
      rhs.insert((e + m.witness[i]) % 13);
    }
    CHECK(lhs == rhs);
  }

  // The multiplier set is closed under multiplication mod v.
  for (int a : m.multipliers)
    for (int b : m.multipliers)
      CHECK(std::count(m.multipliers.begin(), m.multipliers.end(), a * b % 13) == 1);

  // A translate fixed by every multiplier; {0,1,3,9} is already fixed.
  DifferenceSetRecord inv = invariant_translate(r, m);
  CHECK(inv.elements == std::vector<int>{0, 1, 3, 9});
  // A shifted copy has the same multipliers and lands on the same invariant.
  auto shifted = *cyclic_difference_set(13, {5, 6, 8, 1});
  CHECK(multiplier_group(shifted).multipliers == m.multipliers);
  CHECK(invariant_translate(shifted, multiplier_group(shifted)).elements ==
        std::vector<int>{0, 1, 3, 9});

  // Paley (11,5,2): multipliers are exactly the quadratic residues.
  auto p11 = *cyclic_difference_set(11, {1, 3, 4, 5, 9});
  CHECK(multiplier_group(p11).multipliers == std::vector<int>{1, 3, 4, 5, 9});
}

TEST_CASE("exhaustive search over small primes") {
  CHECK(search_exhaustive(5, SearchMode::All).empty());
  CHECK(search_exhaustive(17, SearchMode::All).empty());
  CHECK(search_exhaustive(29, SearchMode::All).empty());

  // p = 13: exactly eight translation classes, four per parameter pair.
  auto t13 = search_exhaustive(13, SearchMode::UpToTranslation);
  std::vector<std::vector<int>> small_sets, large_sets;
  for (const auto& r : t13) {
    CHECK(r.v == 13);
    if (r.k == 4) {
      CHECK(r.lambda == 1);
      small_sets.push_back(r.elements);
    } else {
      CHECK(r.k == 9);
      CHECK(r.lambda == 6);
      large_sets.push_back(r.elements);
    }
    // Reported representatives are lexicographically least translates.
    CHECK(r.elements == lex_least_translate(13, r.elements));
  }
  CHECK(small_sets == std::vector<std::vector<int>>{{0, 1, 3, 9},
                                                    {0, 1, 4, 6},
                                                    {0, 1, 5, 11},
                                                    {0, 1, 8, 10}});
  CHECK(large_sets.size() == 4);
  // Complements of the k=4 classes are exactly the k=9 classes.
  std::set<std::vector<int>> large_as_set(large_sets.begin(), large_sets.end());
  for (const auto& s : small_sets) {
    DifferenceSetRecord r;
    r.v = 13;
    r.k = 4;
    r.lambda = 1;
    r.elements = s;
    CHECK(large_as_set.count(lex_least_translate(13, complement(r).elements)) == 1);
  }

  // All mode: every translate, 8 * 13 = 104 records, all distinct and valid.
  auto a13 = search_exhaustive(13, SearchMode::All);
  CHECK(a13.size() == 104);
  std::set<std::vector<int>> seen;
  for (const auto& r : a13) {
    CHECK(cyclic_difference_set(13, r.elements).has_value());
    seen.insert(r.elements);
  }
  CHECK(seen.size() == 104);

  // Paley primes: one class per parameter set and its complement... p = 7 has
  // {0,1,3} and {0,1,5} (mirror images), p = 11 and p = 23 likewise.
  CHECK(search_exhaustive(7, SearchMode::UpToTranslation).size() == 4);
  CHECK(search_exhaustive(11, SearchMode::UpToTranslation).size() == 4);
  CHECK(search_exhaustive(23, SearchMode::UpToTranslation).size() == 4);

  CHECK_THROWS_AS(search_exhaustive(9, SearchMode::All), Error);   // not prime
  CHECK_THROWS_AS(search_exhaustive(67, SearchMode::All), Error);  // > 61

  // Budget interruption.
  Budgets tiny;
  tiny.subset_nodes = 10;
  CHECK_THROWS_AS(search_exhaustive(31, SearchMode::All, tiny), BudgetExceeded);
}

TEST_CASE("multiplier-pruned search agrees with exhaustive") {
  // p = 13 = 4*3 + 1: q = 3 prime.
  auto pruned = search_multiplier_pruned(13);
  auto full = search_exhaustive(13, SearchMode::UpToTranslation);
  REQUIRE(pruned.size() == full.size());
  std::set<std::vector<int>> full_classes;
  for (const auto& r : full) full_classes.insert(r.elements);
  for (const auto& r : pruned)
    CHECK(full_classes.count(lex_least_translate(13, r.elements)) == 1);

  // p = 29 = 4*7 + 1: the pruned search also proves emptiness.
  CHECK(search_multiplier_pruned(29).empty());

  // Shape preconditions: 17 = 4*4 + 1 has q composite, 11 is not 1 mod 4.
  CHECK_THROWS_AS(search_multiplier_pruned(17), Error);
  CHECK_THROWS_AS(search_multiplier_pruned(11), Error);
  CHECK_THROWS_AS(search_multiplier_pruned(21), Error);
}

TEST_CASE("quartic cyclotomy") {
  // p = 13: f = 3, classes of the quartic residues; p = 13 = (-3)^2 + 4*1^2.
  QuarticCyclotomy c13 = quartic_cyclotomy(13);
  CHECK(c13.root == 2);
  CHECK(c13.f == 3);
  CHECK(c13.classes[0] == std::vector<int>{1, 3, 9});
  CHECK(c13.x == -3);
  CHECK(c13.x * c13.x + 4 * c13.y * c13.y == 13);
  CHECK((c13.x - 1) % 4 == 0);
  CHECK(c13.q == 3);
  CHECK(c13.table[1][0] == 1);

  // p = 29: x = 5, y = 1, q = 7, and the full 4x4 table.
  QuarticCyclotomy c29 = quartic_cyclotomy(29);
  CHECK(c29.root == 2);
  CHECK(c29.f == 7);
  CHECK(c29.x == 5);
  CHECK(c29.y == 1);
  CHECK(c29.q == 7);
  int want29[4][4] = {{2, 3, 0, 2}, {1, 1, 2, 3}, {2, 1, 2, 1}, {1, 2, 3, 1}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(c29.table[i][j] == want29[i][j]);
  CHECK(c29.table[1][0] == 1);

  // p = 53: x = -7, (1,0)_4 = 4, q = 13.
  QuarticCyclotomy c53 = quartic_cyclotomy(53);
  CHECK(c53.x == -7);
  CHECK(c53.q == 13);
  CHECK(c53.table[1][0] == 4);

  for (const QuarticCyclotomy* c : {&c13, &c29, &c53}) {
    // Row sums: sum_j (i,j)_4 = f - [(-1) in C_i].
    for (int i = 0; i < 4; ++i) {
      int row = 0;
      for (int j = 0; j < 4; ++j) row += c->table[i][j];
      bool minus_one = std::count(c->classes[i].begin(), c->classes[i].end(), c->p - 1) > 0;
      CHECK(row == c->f - (minus_one ? 1 : 0));
    }
    // Classes partition {1..p-1}.
    std::set<int> all;
    for (int i = 0; i < 4; ++i) all.insert(c->classes[i].begin(), c->classes[i].end());
    CHECK(static_cast<int>(all.size()) == c->p - 1);
    // Recount one cell from the definition.
    int count = 0;
    std::set<int> c1(c->classes[1].begin(), c->classes[1].end());
    for (int z : c1) {
      int zn = (z + 1) % c->p;
      if (std::count(c->classes[0].begin(), c->classes[0].end(), zn)) ++count;
    }
    CHECK(count == c->table[1][0]);
    // q regime: x = 2q - 1 - 8*(.,0)_4 for the cell flagged by the struct.
    if (c->q) {
      int cell = c->identity_uses_c10 ? c->table[1][0] : c->table[3][0];
      CHECK(c->x == 2 * c->q - 1 - 8 * cell);
    }
  }

  CHECK_THROWS_AS(quartic_cyclotomy(11), Error);  // not 1 mod 4
  CHECK_THROWS_AS(quartic_cyclotomy(9), Error);   // not prime
}

TEST_CASE("residue constructions") {
  // Paley sets for p = 3 mod 4.
  DifferenceSetRecord p7 = paley_set(7);
  CHECK(p7.v == 7);
  CHECK(p7.k == 3);
  CHECK(p7.lambda == 1);
  CHECK(p7.elements == std::vector<int>{1, 2, 4});
  CHECK(paley_set(11).elements == std::vector<int>{1, 3, 4, 5, 9});
  CHECK(paley_set(19).k == 9);
  CHECK(paley_set(19).lambda == 4);
  CHECK(paley_set(23).k == 11);
  CHECK_THROWS_AS(paley_set(13), Error);  // 1 mod 4
  CHECK_THROWS_AS(paley_set(15), Error);  // composite

  // Biquadratic sets: p = 4t^2 + 1 uses the quartic residues alone,
  // p = 4t^2 + 9 adjoins zero.
  DifferenceSetRecord b13 = biquadratic_set(13);  // 13 = 4*1 + 9, t = 1
  CHECK(b13.v == 13);
  CHECK(b13.k == 4);
  CHECK(b13.lambda == 1);
  CHECK(std::count(b13.elements.begin(), b13.elements.end(), 0) == 1);

  DifferenceSetRecord b37 = biquadratic_set(37);  // 37 = 4*9 + 1, t = 3
  CHECK(b37.v == 37);
  CHECK(b37.k == 9);
  CHECK(b37.lambda == 2);
  CHECK(std::count(b37.elements.begin(), b37.elements.end(), 0) == 0);
  CHECK(b37.elements == std::vector<int>{1, 7, 9, 10, 12, 16, 26, 33, 34});

  DifferenceSetRecord b101 = biquadratic_set(101);  // 101 = 4*25 + 1, t = 5
  CHECK(b101.k == 25);
  CHECK(b101.lambda == 6);
  CHECK(cyclic_difference_set(101, b101.elements).has_value());

  CHECK_THROWS_AS(biquadratic_set(29), Error);  // 29 = 4*5+9 but t^2 = 5
  CHECK_THROWS_AS(biquadratic_set(17), Error);  // t = 2 even
  CHECK_THROWS_AS(biquadratic_set(53), Error);  // neither form
}

TEST_CASE("number theory helpers") {
  CHECK(is_prime(2));
  CHECK(is_prime(13));
  CHECK(is_prime(3373));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(21));
  CHECK_FALSE(is_prime(3375));

  CHECK(smallest_primitive_root(7) == 3);
  CHECK(smallest_primitive_root(13) == 2);
  CHECK(smallest_primitive_root(29) == 2);
  CHECK(smallest_primitive_root(53) == 2);
  CHECK(smallest_primitive_root(2) == 1);
  CHECK_THROWS_AS(smallest_primitive_root(8), Error);
  // Definition check: the powers of the root cover all of (Z/p)*.
  for (int p : {5, 11, 17, 31, 41}) {
    int g = smallest_primitive_root(p);
    std::set<int> pow;
    long long acc = 1;
    for (int i = 0; i < p - 1; ++i) {
      pow.insert(static_cast<int>(acc));
      acc = acc * g % p;
    }
    CHECK(static_cast<int>(pow.size()) == p - 1);
  }
}
