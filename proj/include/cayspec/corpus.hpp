#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cayspec/report.hpp"

namespace cayspec {

// One corpus entry: a group source (family spec or table file), a generating set,
// and a graph kind. `expect` optionally pins values (h, edge_h, tn, t2, bipartite,
// connected, minimal) that the verifier compares against recomputed results.
struct CorpusInstance {
  std::string family;                     // e.g. "cyclic:5"; empty when group_file set
  std::optional<std::string> group_file;  // table file path
  ElementSet set;
  GraphKind kind = GraphKind::cayley;
  nlohmann::json expect = nlohmann::json::object();
};

// Family specs the built-in corpus covers, in order.
std::vector<std::string> default_families();

// Instances for one family: every symmetric conjugation-closed generating set with
// d <= 4 (enumerated as unions of closure atoms), plus up to `random_sets` seeded
// random atom-union sets with d <= 8, deduplicated; each set contributes one cayley
// and one cayley_sum instance. Depends only on (family, seed, random_sets).
std::vector<CorpusInstance> family_instances(const std::string& family,
                                             std::uint64_t seed = 0, int random_sets = 5);

// Deterministic built-in corpus: family_instances over default_families.
std::vector<CorpusInstance> default_corpus(std::uint64_t seed = 0);

// All symmetric conjugation-closed generating subsets of size <= max_d, sorted.
std::vector<ElementSet> enumerate_conjugation_closed_sets(const FiniteGroup& grp, int max_d);

// JSON manifest {schema_version, instances:[...]}. Throws ManifestError.
std::vector<CorpusInstance> load_manifest(const std::string& path);

struct VerifySummary {
  int instances = 0;
  int pass = 0;
  int fail = 0;
  int vacuous = 0;
  std::map<std::string, std::array<int, 3>> per_check;  // name -> {pass, fail, vacuous}
  std::vector<CheckReport> failures;
  std::vector<std::string> errors;  // instance construction/build errors
  std::string text;                 // deterministic printable summary

  bool ok() const { return fail == 0 && errors.empty(); }
};

// Full battery per instance: the statement checks plus the invariant suites
// (graph shape, Cheeger sandwich, Buser, trace/Frobenius, reconstruction,
// spectral-vs-BFS agreement, witness self-consistency, sweep upper bounds, and for
// sum instances the pair-multigraph identities) and any expected-value fixtures.
std::vector<CheckReport> run_instance_battery(const CorpusInstance& inst,
                                              const AnalyzeOptions& opt = {});

// Runs batteries across a worker pool (instance-parallel); aggregation is in
// instance order, so output is identical for any worker count.
VerifySummary run_verify(const std::vector<CorpusInstance>& instances,
                         const AnalyzeOptions& opt = {}, int threads = 0);

// One CSV block (header + one row per instance, frozen column layout) in instance
// order; a failing instance becomes a row with the error column set. Worker-pool
// parallel, byte-deterministic for a fixed instance list.
std::string scan_csv(const std::vector<CorpusInstance>& instances,
                     const AnalyzeOptions& opt = {}, int threads = 0);

// CAYLEY_SPECTRA_THREADS override, else hardware concurrency, else 1
int default_thread_count();

}  // namespace cayspec
