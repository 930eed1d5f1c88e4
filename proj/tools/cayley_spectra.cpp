#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cayspec/corpus.hpp"
#include "cayspec/errors.hpp"
#include "cayspec/io.hpp"
#include "cayspec/prng.hpp"
#include "cayspec/report.hpp"
#include "cayspec/set_algebra.hpp"

namespace {

using namespace cayspec;

FiniteGroup load_group(const std::string& family, const std::string& group_file) {
  if (family.empty() == group_file.empty())
    throw ParseError("need exactly one of --family / --group-file");
  if (!family.empty()) return parse_family_spec(family);
  return read_group_table_file(group_file);
}

ElementSet load_set(const std::string& set_csv, const std::string& set_file) {
  if (set_csv.empty() == set_file.empty())
    throw ParseError("need exactly one of --set / --set-file");
  if (!set_csv.empty()) return parse_element_set_csv(set_csv);
  return read_element_set_file(set_file);
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw ParseError("cannot open output file '" + out_path + "'");
  f << text;
}

struct AnalyzeArgs {
  std::string family, group_file, set_csv, set_file;
  std::string kind = "cayley";
  std::string out_path, format = "json";
  AnalyzeOptions opt;
};

int run_analyze(const AnalyzeArgs& a) {
  const FiniteGroup grp = load_group(a.family, a.group_file);
  const ElementSet s = load_set(a.set_csv, a.set_file);
  const GraphKind kind = parse_kind(a.kind);
  if (kind == GraphKind::pair_multigraph)
    throw ParseError("--kind must be cayley or cayley_sum");
  if (a.format != "json" && a.format != "csv")
    throw ParseError("--format must be json or csv");

  const AnalysisReport rep = analyze_instance(grp, s, kind, a.opt);
  if (a.format == "csv")
    emit(a.out_path, csv_header() + "\n" + csv_row(rep) + "\n");
  else
    emit(a.out_path, to_json(rep).dump(2) + "\n");
  return rep.any_check_failed() ? 1 : 0;
}

struct ScanArgs {
  std::vector<std::string> families;  // specs or name:A..B ranges; empty = built-ins
  std::uint64_t seed = 0;
  int random_sets = 5;
  std::string out_path;
  AnalyzeOptions opt;
};

int run_scan(const ScanArgs& a) {
  std::vector<std::string> families;
  if (a.families.empty()) {
    families = default_families();
  } else {
    for (const std::string& arg : a.families) {
      const auto expanded = expand_family_range(arg);
      families.insert(families.end(), expanded.begin(), expanded.end());
    }
  }
  std::vector<CorpusInstance> instances;
  for (const std::string& family : families) {
    auto batch = family_instances(family, a.seed, a.random_sets);
    instances.insert(instances.end(), std::make_move_iterator(batch.begin()),
                     std::make_move_iterator(batch.end()));
  }
  emit(a.out_path, scan_csv(instances, a.opt));
  return 0;
}

struct GenArgs {
  std::string family, group_file;
  int d_target = 0;
  std::uint64_t seed = 0;
  int attempts = 64;
  bool require_conjugation_closed = false;
  bool require_nonbipartite_sum = false;  // implies conjugation closure
  bool require_minimal = false;
  std::string out_path;
};

int run_gen(const GenArgs& a) {
  const FiniteGroup grp = load_group(a.family, a.group_file);
  if (a.d_target < 1) throw ParseError("--d-target must be >= 1");
  if (a.attempts < 1) throw ParseError("--attempts must be >= 1");
  const int n = grp.order();
  const bool close_conj = a.require_conjugation_closed || a.require_nonbipartite_sum;

  SplitMix64 rng(a.seed);
  for (int attempt = 0; attempt < a.attempts; ++attempt) {
    ElementSet cur;
    for (int draws = 0; draws < 16 * a.d_target; ++draws) {
      if (static_cast<int>(cur.size()) == a.d_target) break;
      const Element x = static_cast<Element>(rng.below(static_cast<std::uint64_t>(n)));
      if (x == grp.identity()) continue;
      ElementSet atom{x, grp.inv(x)};
      std::sort(atom.begin(), atom.end());
      atom.erase(std::unique(atom.begin(), atom.end()), atom.end());
      if (close_conj) atom = conjugation_closure(grp, atom);
      ElementSet merged;
      std::set_union(cur.begin(), cur.end(), atom.begin(), atom.end(),
                     std::back_inserter(merged));
      if (static_cast<int>(merged.size()) > a.d_target) continue;  // skip, keep drawing
      cur = std::move(merged);
    }
    if (static_cast<int>(cur.size()) != a.d_target) continue;
    if (!generates(grp, cur)) continue;
    if (a.require_minimal && !minimal_generating_check(grp, cur)) continue;
    if (a.require_nonbipartite_sum) {
      const GeneratingSet gs = validate_generating_set(grp, cur, true);
      if (bfs_bipartite(build_cayley_sum(grp, gs))) continue;
    }
    std::string text;
    for (size_t i = 0; i < cur.size(); ++i) {
      if (i) text += ',';
      text += std::to_string(cur[i]);
    }
    emit(a.out_path, text + "\n");
    return 0;
  }
  throw NoValidSetError("no set with |S| = " + std::to_string(a.d_target) +
                        " satisfying the requested flags after " +
                        std::to_string(a.attempts) + " attempts");
}

struct VerifyArgs {
  std::string manifest;  // empty = built-in corpus
  std::uint64_t seed = 0;
  std::string out_path;
  AnalyzeOptions opt;
};

int run_verify_cmd(const VerifyArgs& a) {
  const std::vector<CorpusInstance> instances =
      a.manifest.empty() ? default_corpus(a.seed) : load_manifest(a.manifest);
  if (instances.empty()) std::cerr << "warning: no instances to verify\n";
  const VerifySummary sum = run_verify(instances, a.opt);
  emit(a.out_path, sum.text);
  return sum.ok() ? 0 : 1;
}

void add_analysis_options(CLI::App* cmd, AnalyzeOptions& opt) {
  cmd->add_option("--max-exact-n", opt.max_exact_n,
                  "largest n for exact Cheeger enumeration (spectral sweep above)")
      ->capture_default_str();
  cmd->add_option("--tol", opt.tol, "spectral tolerance")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cayley and Cayley sum graph spectral toolkit"};
  app.require_subcommand(1);

  AnalyzeArgs aa;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "full report for one (group, generating set, kind) instance");
  analyze->add_option("--family", aa.family,
                      "group family spec: cyclic:N, dihedral:N, symmetric:K, quaternion8, z2xz:N");
  analyze->add_option("--group-file", aa.group_file, "multiplication-table file");
  analyze->add_option("--set", aa.set_csv, "generating set, comma-separated element indices");
  analyze->add_option("--set-file", aa.set_file, "file of whitespace-separated element indices");
  analyze->add_option("--kind", aa.kind, "cayley | cayley_sum")->capture_default_str();
  add_analysis_options(analyze, aa.opt);
  analyze->add_option("--out", aa.out_path, "write to file instead of stdout");
  analyze->add_option("--format", aa.format, "json | csv")->capture_default_str();

  ScanArgs sa;
  CLI::App* scan = app.add_subcommand(
      "scan", "CSV sweep over families (enumerated + seeded random generating sets)");
  scan->add_option("--family", sa.families,
                   "family spec or range (cyclic:3..15); repeatable; default: built-in corpus "
                   "families");
  scan->add_option("--seed", sa.seed, "random-set sampling seed")->capture_default_str();
  scan->add_option("--random-sets", sa.random_sets, "random sets per family")
      ->capture_default_str();
  add_analysis_options(scan, sa.opt);
  scan->add_option("--out", sa.out_path, "write to file instead of stdout");

  GenArgs ga;
  CLI::App* gen = app.add_subcommand(
      "gen", "sample a symmetric generating set of a requested size");
  gen->add_option("--family", ga.family, "group family spec");
  gen->add_option("--group-file", ga.group_file, "multiplication-table file");
  gen->add_option("--d-target", ga.d_target, "required set size")->required();
  gen->add_option("--seed", ga.seed, "sampling seed")->capture_default_str();
  gen->add_option("--attempts", ga.attempts, "sampling attempts before giving up")
      ->capture_default_str();
  gen->add_flag("--require-conjugation-closed", ga.require_conjugation_closed,
                "close each draw under conjugation");
  gen->add_flag("--require-nonbipartite-sum", ga.require_nonbipartite_sum,
                "sum graph must be non-bipartite (implies conjugation closure)");
  gen->add_flag("--require-minimal", ga.require_minimal,
                "no proper symmetric subset may generate");
  gen->add_option("--out", ga.out_path, "write to file instead of stdout");

  VerifyArgs va;
  CLI::App* verify = app.add_subcommand(
      "verify", "run every check and invariant suite over a corpus");
  verify->add_option("--manifest", va.manifest,
                     "JSON instance manifest; default: built-in corpus");
  verify->add_option("--seed", va.seed, "built-in corpus sampling seed")
      ->capture_default_str();
  add_analysis_options(verify, va.opt);
  verify->add_option("--out", va.out_path, "write to file instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) return run_analyze(aa);
    if (scan->parsed()) return run_scan(sa);
    if (gen->parsed()) return run_gen(ga);
    if (verify->parsed()) return run_verify_cmd(va);
  } catch (const NoValidSetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const SetValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const TooLargeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const OrderCapExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const ManifestError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
