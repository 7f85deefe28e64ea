// Command-line front end: enumerate | classify | schurity | diffset |
// verify | cyclotomy. Everything on stdout is deterministic for fixed inputs
// and budgets; wall-clock timing goes to stderr.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "schur/io.hpp"
#include "schur/kernels.hpp"

namespace {

using namespace schur;

// 0 ok/pass, 1 usage or input error, 2 refuted/violation, 3 unknown/budget.
enum ExitCode { kOk = 0, kError = 1, kFail = 2, kUnknown = 3 };

void print_run_header(const Budgets& b) {
  std::cout << "# " << kToolVersion << "\n";
  std::cout << "# budgets enum=" << b.enum_nodes << " aut=" << b.aut_nodes
            << " cap=" << b.element_cap << " cycle=" << b.cycle_nodes
            << " subset=" << b.subset_nodes << " workers=" << b.workers << "\n";
}

std::string set_text(const std::vector<int>& v) {
  std::ostringstream out;
  out << '{';
  for (size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << '}';
  return out.str();
}

SRingCensus load_census(const std::string& in_path, const std::string& group_spec,
                        const Budgets& b) {
  if (!in_path.empty()) return io::read_census_file(in_path);
  SRingCensus census = enumerate_srings(parse_group_spec(group_spec), b);
  if (!census.complete) throw BudgetExceeded("enumeration budget exhausted; use enumerate --checkpoint-out to resume");
  return census;
}

int cmd_enumerate(const std::string& group_spec, const std::string& out_path,
                  const std::string& resume_path, const std::string& checkpoint_out,
                  const Budgets& b) {
  FiniteGroup g = parse_group_spec(group_spec);
  print_run_header(b);

  SRingCensus census;
  if (!resume_path.empty()) {
    SRingCensus carried = io::read_checkpoint_file(resume_path);
    if (carried.group_spec != g.spec())
      throw Error("checkpoint is for " + carried.group_spec + ", not " + g.spec());
    SRingCensus rest = enumerate_srings(g, b, carried.checkpoint);
    census = io::merge_resumed(carried, rest);
  } else {
    census = enumerate_srings(g, b);
  }
  std::fprintf(stderr, "# %.2fs %llu nodes\n", census.seconds,
               static_cast<unsigned long long>(census.nodes));

  std::cout << "group " << census.group_spec << ": " << census.entries.size() << " S-rings, "
            << census.nodes << " nodes, " << (census.complete ? "complete" : "INCOMPLETE")
            << "\n";
  if (census.complete) {
    if (!out_path.empty())
      io::write_census_file(out_path, census);
    else
      std::cout << io::census_to_string(census);
    return kOk;
  }
  std::string ck = checkpoint_out;
  if (ck.empty() && !out_path.empty()) ck = out_path + ".checkpoint";
  if (ck.empty()) throw Error("incomplete run and nowhere to write the checkpoint");
  io::write_checkpoint_file(ck, census);
  std::cout << "checkpoint written to " << ck << "\n";
  return kUnknown;
}

int cmd_classify(const std::string& in_path, const std::string& group_spec, const Budgets& b) {
  print_run_header(b);
  SRingCensus census = load_census(in_path, group_spec, b);
  std::cout << "group " << census.group_spec << ": " << census.entries.size() << " entries\n";
  int bad = 0, unknown = 0;
  for (size_t i = 0; i < census.entries.size(); ++i) {
    const SRing& a = census.entries[i].ring;
    ClassificationVerdict v = classify_sring(a, b);
    std::cout << "entry " << i << " rank " << a.rank() << ": rank2=" << to_string(v.rank2)
              << " cyclotomic=" << to_string(v.cyclotomic)
              << " cyclic=" << to_string(v.cyclic_iso) << " wreath=" << to_string(v.wreath)
              << " diffset=" << to_string(v.diffset) << " m=" << v.m;
    if (v.diffset_witness)
      std::cout << " D=" << set_text(v.diffset_witness->elements) << " ("
                << v.diffset_witness->v << "," << v.diffset_witness->k << ","
                << v.diffset_witness->lambda << ")";
    Flag s = v.satisfied();
    std::cout << " -> " << to_string(s) << "\n";
    if (s == Flag::False) ++bad;
    if (s == Flag::Unknown) ++unknown;
  }
  std::cout << "classified " << census.entries.size() << ": " << bad << " unexplained, "
            << unknown << " unknown\n";
  return bad ? kFail : unknown ? kUnknown : kOk;
}

int cmd_schurity(const std::string& in_path, const std::string& group_spec, const Budgets& b) {
  print_run_header(b);
  SRingCensus census = load_census(in_path, group_spec, b);
  std::cout << "group " << census.group_spec << ": " << census.entries.size() << " entries\n";
  int yes = 0, no = 0, unknown = 0;
  for (size_t i = 0; i < census.entries.size(); ++i) {
    const SRing& a = census.entries[i].ring;
    SchurityVerdict v = is_schurian(a, b);
    std::cout << "entry " << i << " rank " << a.rank()
              << ": schurian=" << to_string(v.schurian);
    if (v.schurian != Flag::Unknown) {
      std::cout << " |Aut|=" << v.aut_order.str() << " stab_orbits=(";
      for (size_t k = 0; k < v.stabilizer_orbit_sizes.size(); ++k)
        std::cout << (k ? "," : "") << v.stabilizer_orbit_sizes[k];
      std::cout << ")";
    }
    std::cout << "\n";
    (v.schurian == Flag::True ? yes : v.schurian == Flag::False ? no : unknown)++;
  }
  std::cout << "schurian " << yes << ", nonschurian " << no << ", unknown " << unknown << "\n";
  return unknown ? kUnknown : kOk;
}

int cmd_diffset(int p, const std::string& mode, const Budgets& b) {
  print_run_header(b);
  std::vector<DifferenceSetRecord> found;
  if (mode == "multiplier_pruned") {
    found = search_multiplier_pruned(p, b);
  } else {
    SearchMode m = (mode == "all") ? SearchMode::All : SearchMode::UpToTranslation;
    found = search_exhaustive(p, m, b);
  }
  for (const DifferenceSetRecord& d : found) {
    std::cout << "(" << d.v << "," << d.k << "," << d.lambda << ") " << set_text(d.elements);
    MultiplierData m = multiplier_group(d);
    std::cout << " multipliers " << set_text(m.multipliers) << "\n";
  }
  std::cout << "found " << found.size()
            << (mode == "all" ? " difference sets" : " translation classes") << " at p=" << p
            << "\n";
  return kOk;
}

int cmd_verify(const std::string& theorem, int p, int t, const std::string& json_path,
               const Budgets& b) {
  print_run_header(b);
  TheoremReport r;
  if (theorem == "classification") r = verify_classification(p, b);
  else if (theorem == "main1") r = verify_main1(p, b);
  else if (theorem == "main2") r = verify_main2(p, b);
  else if (theorem == "section4") r = verify_section4_lemmas(p, b);
  else if (theorem == "nonschur") r = verify_nonschur_family(t, b);
  else throw Error("unknown theorem '" + theorem +
                   "' (expected classification|main1|main2|section4|nonschur)");
  std::fprintf(stderr, "# %.2fs\n", r.seconds);
  std::cout << io::report_text(r);
  if (!json_path.empty()) io::write_text_file(json_path, io::report_json(r));
  return io::report_exit_code(r);
}

int cmd_cyclotomy(int p) {
  QuarticCyclotomy c = quartic_cyclotomy(p);
  std::cout << "p=" << c.p << " root=" << c.root << " f=" << c.f << "\n";
  std::cout << "p = x^2 + 4y^2 with x=" << c.x << " y=" << c.y << "\n";
  for (int i = 0; i < 4; ++i) {
    std::cout << "(" << i << ",j)_4:";
    for (int j = 0; j < 4; ++j) std::cout << " " << c.table[i][j];
    std::cout << "\n";
  }
  if (c.q) {
    int c10 = c.identity_uses_c10 ? c.table[1][0] : c.table[3][0];
    std::cout << "q=" << c.q << " identity x = 2q-1-8*(1,0)_4: " << c.x << " = "
              << 2 * c.q - 1 << " - 8*" << c10 << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"S-rings over small dihedral and cyclic groups: enumeration, "
               "schurity, difference sets, theorem sweeps"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string version = std::string(schur::kToolVersion) + " (kernels: " +
                        schur::kern::active().name + ")";
  app.set_version_flag("--version", version);

  schur::Budgets budgets;
  app.add_option("--enum-nodes", budgets.enum_nodes, "enumeration DFS node budget")
      ->envname("SCHUR_ENUM_NODES");
  app.add_option("--aut-nodes", budgets.aut_nodes, "automorphism search node budget")
      ->envname("SCHUR_AUT_NODES");
  app.add_option("--element-cap", budgets.element_cap, "group element enumeration cap")
      ->envname("SCHUR_ELEMENT_CAP");
  app.add_option("--cycle-nodes", budgets.cycle_nodes, "regular-cycle search node budget")
      ->envname("SCHUR_CYCLE_NODES");
  app.add_option("--subset-nodes", budgets.subset_nodes, "difference-set DFS node budget")
      ->envname("SCHUR_SUBSET_NODES");
  app.add_option("--workers", budgets.workers, "parallel width (output-invariant)")
      ->envname("SCHUR_WORKERS");

  std::string group_spec, in_path, out_path, resume_path, checkpoint_out, json_path;
  std::string mode = "up_to_translation", theorem;
  int p = 0, t = 0;

  CLI::App* enumerate = app.add_subcommand("enumerate", "all S-rings over a group");
  enumerate->add_option("--group", group_spec, "group spec (C:n or D:2p)")->required();
  enumerate->add_option("--out", out_path, "census file to write");
  enumerate->add_option("--resume", resume_path, "checkpoint file to resume from");
  enumerate->add_option("--checkpoint-out", checkpoint_out, "where to write a checkpoint");

  CLI::App* classify = app.add_subcommand("classify", "classification statements per entry");
  classify->add_option("--in", in_path, "census file");
  classify->add_option("--group", group_spec, "group spec (enumerated on the fly)");

  CLI::App* schurity = app.add_subcommand("schurity", "schurity verdict per entry");
  schurity->add_option("--in", in_path, "census file");
  schurity->add_option("--group", group_spec, "group spec (enumerated on the fly)");

  CLI::App* diffset = app.add_subcommand("diffset", "difference-set search in Z_p");
  diffset->add_option("--p", p, "prime modulus")->required();
  diffset->add_option("--mode", mode, "all | up_to_translation | multiplier_pruned")
      ->check(CLI::IsMember({"all", "up_to_translation", "multiplier_pruned"}));

  CLI::App* verify = app.add_subcommand("verify", "run a theorem sweep");
  verify->add_option("theorem", theorem,
                     "classification | main1 | main2 | section4 | nonschur")
      ->required();
  verify->add_option("--p", p, "prime p for the dihedral group D_2p");
  verify->add_option("--t", t, "odd t >= 3 for the biquadratic family");
  verify->add_option("--json", json_path, "also write the report as JSON");

  CLI::App* cyclotomy = app.add_subcommand("cyclotomy", "quartic cyclotomic numbers mod p");
  cyclotomy->add_option("--p", p, "prime p = 1 (mod 4)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Collapse CLI11's exit-code zoo: help/version stay 0, usage errors are 1.
    return app.exit(e) == 0 ? kOk : kError;
  }

  try {
    if (enumerate->parsed())
      return cmd_enumerate(group_spec, out_path, resume_path, checkpoint_out, budgets);
    if (classify->parsed()) {
      if (in_path.empty() == group_spec.empty())
        throw schur::Error("classify needs exactly one of --in or --group");
      return cmd_classify(in_path, group_spec, budgets);
    }
    if (schurity->parsed()) {
      if (in_path.empty() == group_spec.empty())
        throw schur::Error("schurity needs exactly one of --in or --group");
      return cmd_schurity(in_path, group_spec, budgets);
    }
    if (diffset->parsed()) return cmd_diffset(p, mode, budgets);
    if (verify->parsed()) return cmd_verify(theorem, p, t, json_path, budgets);
    if (cyclotomy->parsed()) return cmd_cyclotomy(p);
  } catch (const schur::BudgetExceeded& e) {
    std::fprintf(stderr, "budget: %s\n", e.what());
    return kUnknown;
  } catch (const schur::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kError;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kError;
  }
  return kError;
}
