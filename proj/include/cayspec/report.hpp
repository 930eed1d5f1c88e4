#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cayspec/checks.hpp"
#include "cayspec/cheeger.hpp"
#include "cayspec/generating_set.hpp"
#include "cayspec/graph.hpp"
#include "cayspec/group.hpp"
#include "cayspec/spectrum.hpp"

namespace cayspec {

struct AnalyzeOptions {
  int max_exact_n = kDefaultExactCap;
  double tol = kDefaultTol;
};

// Everything the pipeline derives for one (group, set, kind) instance, sectioned by
// the module that produced each field. Serializes to versioned JSON and to the
// frozen CSV row layout; both round-trip losslessly.
struct AnalysisReport {
  static constexpr int kSchemaVersion = 1;

  std::string group_name;
  ElementSet set;
  GraphKind kind = GraphKind::cayley;
  std::string instance_id;

  int n = 0;
  int d = 0;
  GeneratingSet flags;
  bool connected = false;
  bool bipartite = false;

  double tol = kDefaultTol;
  double t1 = 0.0;
  double tn = 0.0;
  double lambdan = 0.0;
  double residual = 0.0;
  std::optional<double> t2;
  std::optional<double> lambda2;

  bool exact_cheeger = false;  // exact minima below the cap, spectral sweep above it
  std::optional<CutWitness> vertex_cut;
  std::optional<CutWitness> edge_cut;

  std::optional<double> main_lower;  // -1 + h^4/(2^9 d^8)
  std::optional<double> upper_gap;   // 1 - h^2/(2 d^2)
  std::optional<double> sharp_lower;
  std::optional<int> kappa;

  std::vector<CheckReport> checks;

  bool any_check_failed() const;
  // exact vertex Cheeger value when available
  std::optional<Rational> exact_h() const;
};

// "group|S=a-b-c|kind"; comma-free so rows need no CSV quoting
std::string make_instance_id(const std::string& group_name, const ElementSet& s,
                             GraphKind kind);

// Full pipeline: validate set, build graph, eigendecompose, Cheeger constants,
// bound values, statement checks (kind-appropriate subset, vacuous when a needed
// exact h is unavailable). kind must be cayley or cayley_sum.
AnalysisReport analyze_instance(const FiniteGroup& grp, const ElementSet& s, GraphKind kind,
                                const AnalyzeOptions& opt = {});

// analyze_instance plus the intermediate objects, for callers that run extra
// suites on the same graph without recomputing the expensive parts.
struct AnalyzedInstance {
  AnalysisReport report;
  CountGraph graph;
  std::optional<Spectrum> spectrum;
};

AnalyzedInstance analyze_instance_full(const FiniteGroup& grp, const ElementSet& s,
                                       GraphKind kind, const AnalyzeOptions& opt = {});

nlohmann::json to_json(const AnalysisReport& r);
AnalysisReport analysis_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CutWitness& w);
CutWitness cut_witness_from_json(const nlohmann::json& j);
CheckReport check_report_from_json(const nlohmann::json& j);

// frozen column order: family,n,d,h,t_n,main_bound,margin,tightness_ratio,verdicts,error
std::string csv_header();
std::string csv_row(const AnalysisReport& r);
std::string csv_error_row(const std::string& instance_id, const std::string& message);

// fixed 12-significant-digit formatting shared by CSV and summaries
std::string format_double(double x);

}  // namespace cayspec
