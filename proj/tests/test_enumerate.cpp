#include <set>

#include "doctest.h"
#include "schur/enumerate.hpp"
#include "schur/io.hpp"
#include "schur/sring.hpp"

using namespace schur;

namespace {

bool same_census(const SRingCensus& a, const SRingCensus& b) {
  if (a.entries.size() != b.entries.size()) return false;
  for (size_t i = 0; i < a.entries.size(); ++i)
    if (!(a.entries[i].ring == b.entries[i].ring)) return false;
  return true;
}

}  // namespace

TEST_CASE("census counts over small groups") {
  const std::pair<const char*, size_t> want[] = {
      {"C:2", 1},  {"C:3", 2},  {"C:4", 3},  {"C:5", 3},  {"C:6", 7},   {"C:7", 4},
      {"C:8", 10}, {"C:9", 7},  {"C:10", 10}, {"C:11", 4}, {"C:12", 32}, {"C:13", 6},
      {"C:14", 13}, {"D:6", 10}, {"D:10", 25}, {"D:14", 55},
  };
  for (auto [spec, n] : want) {
    SRingCensus c = enumerate_srings(parse_group_spec(spec));
    CAPTURE(spec);
    CHECK(c.complete);
    CHECK(c.entries.size() == n);
  }
}

TEST_CASE("oracle equality at order <= 14") {
  for (const char* spec : {"C:2", "C:6", "C:9", "C:12", "C:13", "C:14", "D:6", "D:10", "D:14"}) {
    CAPTURE(spec);
    FiniteGroup g = parse_group_spec(spec);
    CHECK(same_census(enumerate_srings(g), naive_enumerate(g)));
  }
  // A generic group through the same paths: the Klein four group.
  std::vector<std::vector<int>> klein = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  FiniteGroup v4 = FiniteGroup::from_table(klein);
  SRingCensus cv = enumerate_srings(v4);
  CHECK(cv.entries.size() == 5);
  CHECK(same_census(cv, naive_enumerate(v4)));
}

TEST_CASE("census entries are canonical, distinct, verified") {
  SRingCensus c = enumerate_srings(FiniteGroup::dihedral(7));
  std::set<std::string> keys;
  int last_rank = 0;
  std::string last_key;
  for (const CensusEntry& e : c.entries) {
    std::string key = e.ring.partition_key();
    CHECK(keys.insert(key).second);
    // Sorted by (rank, key).
    bool ordered = e.ring.rank() > last_rank || (e.ring.rank() == last_rank && key > last_key);
    CHECK(ordered);
    last_rank = e.ring.rank();
    last_key = key;
    // Metadata is honest.
    CHECK(e.primitive == is_primitive(e.ring));
    CHECK(e.symmetric == e.ring.is_symmetric());
    // Re-verification from raw classes succeeds.
    CHECK(verify_sring(e.ring.group(), e.ring.classes()).ok());
  }
}

TEST_CASE("census is closed under group automorphisms") {
  for (const char* spec : {"D:10", "C:12"}) {
    CAPTURE(spec);
    FiniteGroup g = parse_group_spec(spec);
    SRingCensus c = enumerate_srings(g);
    std::set<std::string> keys;
    for (const CensusEntry& e : c.entries) keys.insert(e.ring.partition_key());

    PermGroup aut = automorphism_group(g);
    bool whole = aut.for_each_element(10'000, [&](const Perm& f) {
      for (const CensusEntry& e : c.entries) {
        std::vector<Mask> image;
        for (Mask m : e.ring.classes()) {
          Mask im = 0;
          for (int x = 0; x < g.order(); ++x)
            if (has_bit(m, x)) im |= bit(f(x));
          image.push_back(im);
        }
        SRing mapped(g, image);
        REQUIRE(keys.count(mapped.partition_key()) == 1);
      }
      return true;
    });
    CHECK(whole);
  }
}

TEST_CASE("node budget interrupts and checkpoints resume") {
  FiniteGroup g = FiniteGroup::dihedral(7);
  SRingCensus oneshot = enumerate_srings(g);

  Budgets tiny;
  tiny.enum_nodes = 200;
  std::vector<SRing> gathered;
  std::vector<std::uint32_t> resume;
  int rounds = 0;
  for (;;) {
    SRingCensus part = enumerate_srings(g, tiny, resume);
    for (const CensusEntry& e : part.entries) gathered.push_back(e.ring);
    ++rounds;
    REQUIRE(rounds < 1000);
    if (part.complete) break;
    REQUIRE_FALSE(part.checkpoint.empty());
    resume = part.checkpoint;
  }
  CHECK(rounds > 1);  // the budget actually bit
  SRingCensus merged = make_census(g, gathered);
  CHECK(merged.entries.size() == gathered.size());  // rounds were disjoint
  CHECK(same_census(merged, oneshot));
}

TEST_CASE("census and checkpoint files round-trip") {
  SRingCensus c = enumerate_srings(FiniteGroup::dihedral(5));
  std::string text = io::census_to_string(c);
  SRingCensus back = io::parse_census(text);
  CHECK(same_census(back, c));
  CHECK(io::census_to_string(back) == text);
  CHECK_THROWS_AS(io::checkpoint_to_string(c), Error);  // complete census

  // Tampering is rejected.
  CHECK_THROWS_AS(io::parse_census(""), Error);
  CHECK_THROWS_AS(io::parse_census("schur-census 2\n" + text.substr(15)), Error);
  CHECK_THROWS_AS(io::parse_census(text + "ring 0|1 2 3 4 5 6 7 8 9\n"), Error);
  {
    std::string t = text;
    auto p1 = t.find("ring ");
    auto p2 = t.find("ring ", p1 + 1);
    auto p3 = t.find('\n', p2);
    std::string l1 = t.substr(p1, p2 - p1), l2 = t.substr(p2, p3 + 1 - p2);
    // Swap two ring lines: canonical order violated.
    CHECK_THROWS_AS(io::parse_census(t.substr(0, p1) + l2 + l1 + t.substr(p3 + 1)), Error);
    // Overwrite the second with a copy of the first: duplicate entry.
    CHECK_THROWS_AS(io::parse_census(t.substr(0, p1) + l1 + l1 + t.substr(p3 + 1)), Error);
  }
  CHECK_THROWS_AS(
      io::parse_census("schur-census 1\ntool x\ngroup C:4\nentries 1\nring 0 1|2 3\n"), Error);
  CHECK_THROWS_AS(
      io::parse_census("schur-census 1\ntool x\ngroup G:4\nentries 1\nring 0|1 2 3\n"), Error);

  // An interrupted run round-trips through the checkpoint format, and the
  // resumed remainder merges back to the one-shot census.
  Budgets tiny;
  tiny.enum_nodes = 300;
  SRingCensus part = enumerate_srings(FiniteGroup::dihedral(7), tiny);
  REQUIRE_FALSE(part.complete);
  SRingCensus pback = io::parse_checkpoint(io::checkpoint_to_string(part));
  CHECK(pback.checkpoint == part.checkpoint);
  CHECK(same_census(pback, part));
  CHECK_THROWS_AS(io::census_to_string(part), Error);

  SRingCensus rest = enumerate_srings(FiniteGroup::dihedral(7), Budgets{}, pback.checkpoint);
  SRingCensus merged = io::merge_resumed(pback, rest);
  CHECK(same_census(merged, enumerate_srings(FiniteGroup::dihedral(7))));
  CHECK_THROWS_AS(io::merge_resumed(pback, pback), Error);  // overlap detected
}

TEST_CASE("golden census: D:26") {
  SRingCensus c = enumerate_srings(FiniteGroup::dihedral(13));
  CHECK(c.complete);
  CHECK(c.entries.size() == 177);
  CHECK(c.nodes == 1035436);

  // Spot membership: the rank-2 ring, ZG, and the Singer difference-set ring.
  std::set<std::string> keys;
  for (const CensusEntry& e : c.entries) keys.insert(e.ring.partition_key());
  FiniteGroup g = FiniteGroup::dihedral(13);
  std::vector<Mask> zg_classes;
  for (int x = 0; x < 26; ++x) zg_classes.push_back(bit(x));
  CHECK(keys.count(SRing(g, {bit(0), g.universe() & ~bit(0)}).partition_key()));
  CHECK(keys.count(SRing(g, zg_classes).partition_key()));
  CHECK(keys.count(dihedral_sring_from_difference_set(g, bit(0) | bit(1) | bit(3) | bit(9))
                       .partition_key()));
}

TEST_CASE("enumeration preconditions") {
  CHECK_THROWS_AS(enumerate_srings(FiniteGroup::cyclic(35)), Error);   // order > 34
  CHECK_THROWS_AS(naive_enumerate(FiniteGroup::cyclic(15)), Error);    // order > 14
}
