#pragma once

// Census/checkpoint files and theorem-report emission.
//
// Everything serialized here is byte-stable: file contents and tables are
// pure functions of the mathematical content. Wall time and node counts stay
// out of serialized forms (they go to stderr logging in the CLI instead).

#include <string>

#include "schur/enumerate.hpp"
#include "schur/verify.hpp"

namespace schur::io {

// Census file:
//
//   schur-census 1
//   tool schur 1.0.0
//   group D:26
//   entries 177
//   ring 0|1 12|2 11|...
//   ...
//
// Entries in canonical census order (rank, then partition key); files with
// out-of-order, duplicate, or axiom-violating rings are rejected. Only
// complete censuses are written in this form.
std::string census_to_string(const SRingCensus& census);
SRingCensus parse_census(const std::string& text);
void write_census_file(const std::string& path, const SRingCensus& census);
SRingCensus read_census_file(const std::string& path);

// Checkpoint file: an interrupted enumeration -- same shape plus the decision
// path of the node where the budget ran out. Feeding it back to
// enumerate_srings resumes the search; merged entries stay disjoint.
//
//   schur-checkpoint 1
//   tool schur 1.0.0
//   group D:34
//   path 3 0 2 5
//   entries 121
//   ring ...
std::string checkpoint_to_string(const SRingCensus& partial);
SRingCensus parse_checkpoint(const std::string& text);
void write_checkpoint_file(const std::string& path, const SRingCensus& partial);
SRingCensus read_checkpoint_file(const std::string& path);

// Merge a resumed run's findings into the carried-over entries (disjointness
// checked), keeping canonical order and the new run's completion state.
SRingCensus merge_resumed(const SRingCensus& carried, const SRingCensus& resumed);

// Theorem reports: an aligned plain-text table and a machine-readable JSON
// object. Both omit wall time.
std::string report_text(const TheoremReport& r);
std::string report_json(const TheoremReport& r);

// 0 full PASS, 2 refuted, 3 unknown/partial.
int report_exit_code(const TheoremReport& r);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace schur::io
