#include "schur/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace schur::io {

namespace {

constexpr const char* kCensusMagic = "schur-census 1";
constexpr const char* kCheckpointMagic = "schur-checkpoint 1";

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

// "0|1 12|2 11" -> class masks. Strict: every element exactly once.
std::vector<Mask> parse_partition_key(const std::string& key, int order) {
  std::vector<Mask> classes;
  Mask seen = 0;
  Mask cur = 0;
  int value = -1;
  auto push_value = [&]() {
    if (value < 0) throw Error("census ring line: empty element");
    if (value >= order) throw Error("census ring line: element out of range");
    if (has_bit(seen, value)) throw Error("census ring line: repeated element");
    seen |= bit(value);
    cur |= bit(value);
    value = -1;
  };
  for (char c : key) {
    if (c >= '0' && c <= '9') {
      value = (value < 0 ? 0 : value * 10) + (c - '0');
      if (value > 64) throw Error("census ring line: element out of range");
    } else if (c == ' ') {
      push_value();
    } else if (c == '|') {
      push_value();
      classes.push_back(cur);
      cur = 0;
    } else {
      throw Error(std::string("census ring line: unexpected character '") + c + "'");
    }
  }
  push_value();
  classes.push_back(cur);
  if (seen != all_mask(order)) throw Error("census ring line: not a partition of the group");
  return classes;
}

struct Header {
  FiniteGroup group;
  std::vector<std::uint32_t> path;  // checkpoint only
  size_t entries = 0;
  size_t body_at = 0;  // index of the first ring line
};

Header parse_header(const std::vector<std::string>& lines, bool checkpoint) {
  Header h;
  size_t i = 0;
  auto need = [&](const char* what) -> const std::string& {
    if (i >= lines.size()) throw Error(std::string("census file truncated before ") + what);
    return lines[i];
  };
  if (need("magic") != (checkpoint ? kCheckpointMagic : kCensusMagic))
    throw Error("not a " + std::string(checkpoint ? "checkpoint" : "census") + " file");
  ++i;
  if (need("tool line").rfind("tool ", 0) != 0) throw Error("census file: missing tool line");
  ++i;
  const std::string& gl = need("group line");
  if (gl.rfind("group ", 0) != 0) throw Error("census file: missing group line");
  h.group = parse_group_spec(gl.substr(6));
  ++i;
  if (checkpoint) {
    std::istringstream ps(need("path line"));
    std::string word;
    size_t n = 0;
    if (!(ps >> word >> n) || word != "path") throw Error("checkpoint file: missing path line");
    h.path.resize(n);
    for (size_t k = 0; k < n; ++k)
      if (!(ps >> h.path[k])) throw Error("checkpoint file: short path line");
    ++i;
  }
  std::istringstream es(need("entries line"));
  std::string word;
  if (!(es >> word >> h.entries) || word != "entries")
    throw Error("census file: missing entries line");
  ++i;
  h.body_at = i;
  return h;
}

std::vector<SRing> parse_rings(const std::vector<std::string>& lines, const Header& h) {
  if (lines.size() != h.body_at + h.entries)
    throw Error("census file: entry count does not match body");
  std::vector<SRing> rings;
  rings.reserve(h.entries);
  for (size_t i = h.body_at; i < lines.size(); ++i) {
    if (lines[i].rfind("ring ", 0) != 0) throw Error("census file: malformed ring line");
    rings.emplace_back(h.group, parse_partition_key(lines[i].substr(5), h.group.order()));
  }
  return rings;
}

// The file must list entries exactly in canonical census order, no
// duplicates -- the serialized form is unique per census.
void check_canonical(const SRingCensus& found, const std::vector<SRing>& as_read) {
  for (size_t i = 0; i < as_read.size(); ++i)
    if (!(found.entries[i].ring == as_read[i]))
      throw Error("census file: entries not in canonical order");
  for (size_t i = 1; i < found.entries.size(); ++i)
    if (found.entries[i].ring == found.entries[i - 1].ring)
      throw Error("census file: duplicate entries");
}

void emit_common(std::ostringstream& out, const SRingCensus& census) {
  out << "tool " << kToolVersion << "\n";
  out << "group " << census.group_spec << "\n";
}

void emit_body(std::ostringstream& out, const SRingCensus& census) {
  out << "entries " << census.entries.size() << "\n";
  for (const CensusEntry& e : census.entries) out << "ring " << e.ring.partition_key() << "\n";
}

}  // namespace

std::string census_to_string(const SRingCensus& census) {
  if (!census.complete) throw Error("refusing to serialize an incomplete census (checkpoint it)");
  std::ostringstream out;
  out << kCensusMagic << "\n";
  emit_common(out, census);
  emit_body(out, census);
  return out.str();
}

SRingCensus parse_census(const std::string& text) {
  std::vector<std::string> lines = split_lines(text);
  Header h = parse_header(lines, /*checkpoint=*/false);
  std::vector<SRing> rings = parse_rings(lines, h);
  SRingCensus census = make_census(h.group, rings);
  check_canonical(census, rings);
  return census;
}

std::string checkpoint_to_string(const SRingCensus& partial) {
  if (partial.complete) throw Error("refusing to checkpoint a complete census (serialize it)");
  std::ostringstream out;
  out << kCheckpointMagic << "\n";
  emit_common(out, partial);
  out << "path " << partial.checkpoint.size();
  for (std::uint32_t v : partial.checkpoint) out << ' ' << v;
  out << "\n";
  emit_body(out, partial);
  return out.str();
}

SRingCensus parse_checkpoint(const std::string& text) {
  std::vector<std::string> lines = split_lines(text);
  Header h = parse_header(lines, /*checkpoint=*/true);
  std::vector<SRing> rings = parse_rings(lines, h);
  SRingCensus census = make_census(h.group, rings);
  check_canonical(census, rings);
  census.complete = false;
  census.checkpoint = h.path;
  return census;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path);
  out << text;
  if (!out.flush()) throw Error("short write to " + path);
}

void write_census_file(const std::string& path, const SRingCensus& census) {
  write_text_file(path, census_to_string(census));
}

SRingCensus read_census_file(const std::string& path) {
  return parse_census(read_text_file(path));
}

void write_checkpoint_file(const std::string& path, const SRingCensus& partial) {
  write_text_file(path, checkpoint_to_string(partial));
}

SRingCensus read_checkpoint_file(const std::string& path) {
  return parse_checkpoint(read_text_file(path));
}

SRingCensus merge_resumed(const SRingCensus& carried, const SRingCensus& resumed) {
  if (carried.group_spec != resumed.group_spec)
    throw Error("resume merge: censuses over different groups");
  std::vector<SRing> rings;
  rings.reserve(carried.entries.size() + resumed.entries.size());
  for (const CensusEntry& e : carried.entries) rings.push_back(e.ring);
  for (const CensusEntry& e : resumed.entries) rings.push_back(e.ring);
  FiniteGroup g = parse_group_spec(carried.group_spec);
  SRingCensus merged = make_census(g, std::move(rings));
  // Sorting puts duplicates side by side, so overlap is an adjacent repeat.
  for (size_t i = 1; i < merged.entries.size(); ++i)
    if (merged.entries[i].ring == merged.entries[i - 1].ring)
      throw Error("resume merge: overlapping entries (stale checkpoint?)");
  merged.nodes = carried.nodes + resumed.nodes;
  merged.complete = resumed.complete;
  merged.checkpoint = resumed.checkpoint;
  return merged;
}

std::string report_text(const TheoremReport& r) {
  std::ostringstream out;
  const char* overall = r.overall == Flag::True    ? "PASS"
                        : r.overall == Flag::False ? "FAIL"
                                                   : "UNKNOWN";
  out << "theorem " << r.theorem;
  if (r.p) out << "  p=" << r.p;
  out << "  overall " << overall << "\n";

  size_t wstatus = 7, wname = 4;
  for (const CheckLine& l : r.lines) {
    wstatus = std::max(wstatus, std::string(to_string(l.status)).size() + (l.vacuous ? 8 : 0));
    wname = std::max(wname, l.name.size());
  }
  auto pad = [](const std::string& s, size_t w) {
    return s + std::string(w > s.size() ? w - s.size() : 0, ' ');
  };
  out << pad("status", wstatus) << "  " << pad("name", wname) << "  detail\n";
  for (const CheckLine& l : r.lines) {
    std::string status = to_string(l.status);
    if (l.vacuous) status += " vacuous";
    out << pad(status, wstatus) << "  " << pad(l.name, wname) << "  " << l.detail << "\n";
  }
  out << "passed " << r.passed << "  failed " << r.failed << "  unknown " << r.unknown
      << "  vacuous " << r.vacuous << "\n";
  return out.str();
}

std::string report_json(const TheoremReport& r) {
  nlohmann::json j;
  j["tool"] = kToolVersion;
  j["theorem"] = r.theorem;
  j["p"] = r.p;
  j["overall"] = to_string(r.overall);
  j["passed"] = r.passed;
  j["failed"] = r.failed;
  j["unknown"] = r.unknown;
  j["vacuous"] = r.vacuous;
  j["lines"] = nlohmann::json::array();
  for (const CheckLine& l : r.lines) {
    nlohmann::json line;
    line["name"] = l.name;
    line["status"] = to_string(l.status);
    line["vacuous"] = l.vacuous;
    line["detail"] = l.detail;
    j["lines"].push_back(line);
  }
  return j.dump(2) + "\n";
}

int report_exit_code(const TheoremReport& r) {
  if (r.overall == Flag::True) return 0;
  return r.overall == Flag::False ? 2 : 3;
}

}  // namespace schur::io
