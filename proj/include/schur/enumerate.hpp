#pragma once

// Exhaustive enumeration of all S-rings over a small group.
//
// The main search is a depth-first class builder: classes are completed in
// ascending order of their smallest element, and elements join a class in
// ascending order, so every partition is constructed along exactly one path
// (no isomorph rejection -- the census is literal). After each completed
// class the partial partition is refined by factorization counts; branches
// where a completed (or inverse-forced) class would split are pruned, and
// future classes are confined to single refinement cells.
//
// naive_enumerate is the independent oracle: it walks every partition of
// G \ {e} via restricted growth strings and keeps the ones that verify.

#include <cstdint>
#include <string>
#include <vector>

#include "schur/common.hpp"
#include "schur/group.hpp"
#include "schur/sring.hpp"

namespace schur {

struct CensusEntry {
  SRing ring;
  bool symmetric = false;
  bool primitive = false;
};

struct SRingCensus {
  std::string group_spec;
  std::vector<CensusEntry> entries;  // sorted by (rank, partition key)
  std::uint64_t nodes = 0;           // search nodes visited
  double seconds = 0.0;              // wall time (not serialized)
  bool complete = true;              // false iff the node budget ran out
  // Decision path of the node where the budget ran out; feed back as
  // `resume` to continue the search where it stopped (same group, same
  // budgets). Entries found by both runs are disjoint.
  std::vector<std::uint32_t> checkpoint;
};

// All S-rings over G. Precondition |G| <= 34; `resume` restarts a search
// interrupted by the node budget.
SRingCensus enumerate_srings(const FiniteGroup& g, const Budgets& budgets = Budgets{},
                             const std::vector<std::uint32_t>& resume = {});

// Oracle: every partition of G \ {e} filtered through verify_sring.
// Precondition |G| <= 14 (Bell(13) ~ 2.8e7 partitions).
SRingCensus naive_enumerate(const FiniteGroup& g);

// Canonical census order and metadata for a list of rings (used by both
// enumerators and by census file parsing).
SRingCensus make_census(const FiniteGroup& g, std::vector<SRing> rings);

}  // namespace schur
