#include "cayspec/report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "cayspec/bounds.hpp"
#include "cayspec/errors.hpp"
#include "cayspec/set_algebra.hpp"

namespace cayspec {

bool AnalysisReport::any_check_failed() const {
  return std::any_of(checks.begin(), checks.end(),
                     [](const CheckReport& c) { return c.verdict == Verdict::fail; });
}

std::optional<Rational> AnalysisReport::exact_h() const {
  if (exact_cheeger && vertex_cut) return vertex_cut->value;
  return std::nullopt;
}

std::string make_instance_id(const std::string& group_name, const ElementSet& s,
                             GraphKind kind) {
  std::string id = group_name + "|S=";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) id += '-';
    id += std::to_string(s[i]);
  }
  id += '|';
  id += kind_name(kind);
  return id;
}

namespace {

CheckReport vacuous_no_exact_h(const char* name) {
  CheckReport c;
  c.check = name;
  c.verdict = Verdict::vacuous;
  c.hypotheses_held = false;
  c.witness = {{"h_exact", false}};
  return c;
}

}  // namespace

AnalyzedInstance analyze_instance_full(const FiniteGroup& grp, const ElementSet& s,
                                       GraphKind kind, const AnalyzeOptions& opt) {
  if (kind != GraphKind::cayley && kind != GraphKind::cayley_sum)
    throw std::invalid_argument("analyze handles cayley and cayley_sum kinds");

  AnalyzedInstance out;
  AnalysisReport& r = out.report;
  r.group_name = grp.name();
  r.kind = kind;
  r.tol = opt.tol;

  const GeneratingSet gs =
      validate_generating_set(grp, s, /*require_conjugation_closed=*/kind == GraphKind::cayley_sum);
  r.set = gs.elements;
  r.flags = gs;
  r.instance_id = make_instance_id(grp.name(), gs.elements, kind);

  out.graph = kind == GraphKind::cayley ? build_cayley(grp, gs) : build_cayley_sum(grp, gs);
  const CountGraph& g = out.graph;
  r.n = g.n;
  r.d = g.d;
  r.connected = bfs_connected(g);
  r.bipartite = bfs_bipartite(g);

  out.spectrum.emplace(eig_normalized(g, opt.tol));
  const Spectrum& spec = *out.spectrum;
  r.t1 = spec.t(0);
  r.tn = spec.smallest();
  r.lambdan = spec.laplacian_largest();
  if (g.n >= 2) {
    r.t2 = spec.second_largest();
    r.lambda2 = spec.laplacian_second();
  }
  r.residual = spec.max_reconstruction_residual(normalized(g));

  if (g.n >= 2) {
    if (g.n <= opt.max_exact_n) {
      try {
        const CheegerPair pair = cheeger_exact(g, opt.max_exact_n);
        r.exact_cheeger = true;
        r.vertex_cut = pair.vertex;
        r.edge_cut = pair.edge;
      } catch (const DisconnectedError&) {
        // fall through to the sweep bounds
      }
    }
    if (!r.exact_cheeger) {
      const Eigen::VectorXd fiedler = spec.fiedler_vector();
      r.vertex_cut = sweep_upper_bound(g, fiedler, CutKind::vertex);
      r.edge_cut = sweep_upper_bound(g, fiedler, CutKind::edge);
    }
  }

  const std::optional<Rational> h = r.exact_h();
  if (h) {
    r.main_lower = main_lower_bound(*h, g.d);
    r.upper_gap = upper_gap_bound(*h, g.d);
    r.sharp_lower = sharp_lower_bound(*h, g.d);
    if (const auto row = sharp_row_for_degree(g.d)) r.kappa = row->kappa;
  }

  // statement checks; stamped with the instance id at the end
  if (kind == GraphKind::cayley_sum) {
    r.checks.push_back(h ? check_theorem_main(g, spec, *h) : vacuous_no_exact_h("theorem_main"));
  }
  r.checks.push_back(h ? check_upper_gap(g, spec, *h) : vacuous_no_exact_h("upper_gap"));
  if (kind == GraphKind::cayley) {
    r.checks.push_back(h ? check_bis19(g, spec, *h) : vacuous_no_exact_h("bis19"));
  }
  r.checks.push_back(h ? check_sharp(g, spec, *h, gs.minimal) : vacuous_no_exact_h("sharp"));
  r.checks.push_back(h ? check_epsilon_bounds(g, *h, gs.minimal)
                       : vacuous_no_exact_h("epsilon_bounds"));

  if (kind == GraphKind::cayley_sum) {
    r.checks.push_back(check_bipartite_lemma(grp, gs.elements, g));

    if (h) {
      r.checks.push_back(
          check_vertex_expansion_complement(g, set_complement(grp, r.vertex_cut->subset), *h));

      const int d = g.d;
      const double eps_val = h->value();
      const double zeta = eps_val * eps_val / (4.0 * std::pow(static_cast<double>(d), 4));
      AExistsSearch search = find_aexists_witness(grp, gs.elements, spec, zeta, *h,
                                                  opt.max_exact_n);
      r.checks.push_back(search.report);

      if (search.witness) {
        const BoundParams p = BoundParams::make(*h, d, zeta);
        CheckReport agg = check_dichotomy(grp, gs.elements, *search.witness, 0, p.beta, *h);
        if (agg.verdict != Verdict::vacuous) {
          nlohmann::json failing = nlohmann::json::array();
          for (Element x = 0; x < grp.order(); ++x) {
            const CheckReport one =
                check_dichotomy(grp, gs.elements, *search.witness, x, p.beta, *h);
            if (one.verdict == Verdict::fail) failing.push_back(x);
          }
          agg.verdict = failing.empty() ? Verdict::pass : Verdict::fail;
          agg.witness["failing_g"] = failing;
          agg.witness["all_g"] = true;
        }
        r.checks.push_back(agg);
      } else {
        CheckReport agg;
        agg.check = "dichotomy";
        agg.verdict = Verdict::vacuous;
        agg.hypotheses_held = false;
        agg.witness = {{"no_subset_witness", true}};
        r.checks.push_back(agg);
      }
    } else {
      r.checks.push_back(vacuous_no_exact_h("vertex_expansion_complement"));
      r.checks.push_back(vacuous_no_exact_h("aexists"));
      r.checks.push_back(vacuous_no_exact_h("dichotomy"));
    }
  }

  for (CheckReport& c : r.checks) c.instance_id = r.instance_id;
  return out;
}

AnalysisReport analyze_instance(const FiniteGroup& grp, const ElementSet& s, GraphKind kind,
                                const AnalyzeOptions& opt) {
  return analyze_instance_full(grp, s, kind, opt).report;
}

nlohmann::json to_json(const CutWitness& w) {
  return nlohmann::json{{"value", w.value.str()},
                        {"subset", w.subset},
                        {"kind", cut_kind_name(w.kind)},
                        {"method", cut_method_name(w.method)}};
}

CutWitness cut_witness_from_json(const nlohmann::json& j) {
  CutWitness w;
  w.value = Rational::parse(j.at("value").get<std::string>());
  w.subset = j.at("subset").get<ElementSet>();
  w.kind = j.at("kind").get<std::string>() == "vertex" ? CutKind::vertex : CutKind::edge;
  w.method = j.at("method").get<std::string>() == "exact" ? CutMethod::exact : CutMethod::sweep;
  return w;
}

CheckReport check_report_from_json(const nlohmann::json& j) {
  CheckReport c;
  c.check = j.at("check").get<std::string>();
  c.instance_id = j.at("instance_id").get<std::string>();
  const std::string v = j.at("verdict").get<std::string>();
  c.verdict = v == "pass" ? Verdict::pass : v == "fail" ? Verdict::fail : Verdict::vacuous;
  c.hypotheses_held = j.at("hypotheses_held").get<bool>();
  c.lhs = j.at("lhs").get<double>();
  c.rhs = j.at("rhs").get<double>();
  c.margin = j.at("margin").get<double>();
  c.witness = j.at("witness");
  return c;
}

namespace {

nlohmann::json opt_json(const std::optional<double>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json();
}

std::optional<double> opt_from_json(const nlohmann::json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

}  // namespace

nlohmann::json to_json(const AnalysisReport& r) {
  nlohmann::json j;
  j["schema_version"] = AnalysisReport::kSchemaVersion;
  j["instance"] = {{"group", r.group_name},
                   {"set", r.set},
                   {"kind", kind_name(r.kind)},
                   {"id", r.instance_id}};
  j["group"] = {{"name", r.group_name}, {"order", r.n}};
  j["graph"] = {{"n", r.n},
                {"d", r.d},
                {"connected", r.connected},
                {"bipartite", r.bipartite},
                {"symmetric_set", r.flags.symmetric},
                {"identity_free", r.flags.identity_free},
                {"conjugation_closed", r.flags.conjugation_closed},
                {"generates", r.flags.generates},
                {"minimal", r.flags.minimal}};
  j["spectra"] = {{"tol", r.tol},
                  {"t1", r.t1},
                  {"t2", opt_json(r.t2)},
                  {"tn", r.tn},
                  {"lambda2", opt_json(r.lambda2)},
                  {"lambdan", r.lambdan},
                  {"reconstruction_residual", r.residual}};
  j["cheeger"] = {{"exact", r.exact_cheeger},
                  {"vertex", r.vertex_cut ? to_json(*r.vertex_cut) : nlohmann::json()},
                  {"edge", r.edge_cut ? to_json(*r.edge_cut) : nlohmann::json()}};
  j["bounds"] = {{"main_lower", opt_json(r.main_lower)},
                 {"upper_gap", opt_json(r.upper_gap)},
                 {"sharp_lower", opt_json(r.sharp_lower)},
                 {"kappa", r.kappa ? nlohmann::json(*r.kappa) : nlohmann::json()}};
  j["checks"] = nlohmann::json::array();
  for (const CheckReport& c : r.checks) j["checks"].push_back(to_json(c));
  return j;
}

AnalysisReport analysis_from_json(const nlohmann::json& j) {
  if (j.at("schema_version").get<int>() != AnalysisReport::kSchemaVersion)
    throw ParseError("unsupported schema_version");
  AnalysisReport r;
  const auto& inst = j.at("instance");
  r.group_name = inst.at("group").get<std::string>();
  r.set = inst.at("set").get<ElementSet>();
  r.kind = parse_kind(inst.at("kind").get<std::string>());
  r.instance_id = inst.at("id").get<std::string>();

  const auto& g = j.at("graph");
  r.n = g.at("n").get<int>();
  r.d = g.at("d").get<int>();
  r.connected = g.at("connected").get<bool>();
  r.bipartite = g.at("bipartite").get<bool>();
  r.flags.elements = r.set;
  r.flags.degree = r.d;
  r.flags.symmetric = g.at("symmetric_set").get<bool>();
  r.flags.identity_free = g.at("identity_free").get<bool>();
  r.flags.conjugation_closed = g.at("conjugation_closed").get<bool>();
  r.flags.generates = g.at("generates").get<bool>();
  r.flags.minimal = g.at("minimal").get<bool>();

  const auto& s = j.at("spectra");
  r.tol = s.at("tol").get<double>();
  r.t1 = s.at("t1").get<double>();
  r.t2 = opt_from_json(s.at("t2"));
  r.tn = s.at("tn").get<double>();
  r.lambda2 = opt_from_json(s.at("lambda2"));
  r.lambdan = s.at("lambdan").get<double>();
  r.residual = s.at("reconstruction_residual").get<double>();

  const auto& c = j.at("cheeger");
  r.exact_cheeger = c.at("exact").get<bool>();
  if (!c.at("vertex").is_null()) r.vertex_cut = cut_witness_from_json(c.at("vertex"));
  if (!c.at("edge").is_null()) r.edge_cut = cut_witness_from_json(c.at("edge"));

  const auto& b = j.at("bounds");
  r.main_lower = opt_from_json(b.at("main_lower"));
  r.upper_gap = opt_from_json(b.at("upper_gap"));
  r.sharp_lower = opt_from_json(b.at("sharp_lower"));
  if (!b.at("kappa").is_null()) r.kappa = b.at("kappa").get<int>();

  for (const auto& cj : j.at("checks")) r.checks.push_back(check_report_from_json(cj));
  return r;
}

std::string format_double(double x) {
  std::ostringstream out;
  out.precision(12);
  out << x;
  return out.str();
}

std::string csv_header() {
  return "family,n,d,h,t_n,main_bound,margin,tightness_ratio,verdicts,error";
}

std::string csv_row(const AnalysisReport& r) {
  std::ostringstream out;
  out << r.instance_id << ',' << r.n << ',' << r.d << ',';
  const auto h = r.exact_h();
  if (h) out << h->str();
  out << ',' << format_double(r.tn) << ',';
  if (r.main_lower) out << format_double(*r.main_lower);
  out << ',';
  if (r.main_lower) out << format_double(r.tn - *r.main_lower);
  out << ',';
  if (r.main_lower) out << format_double((r.tn + 1.0) / (*r.main_lower + 1.0));
  out << ',';
  for (size_t i = 0; i < r.checks.size(); ++i) {
    if (i) out << ';';
    out << r.checks[i].check << '=' << verdict_name(r.checks[i].verdict);
  }
  out << ',';
  return out.str();
}

std::string csv_error_row(const std::string& instance_id, const std::string& message) {
  std::string sanitized = message;
  for (char& ch : sanitized)
    if (ch == ',' || ch == '\n') ch = ';';
  return instance_id + ",,,,,,,,," + sanitized;
}

}  // namespace cayspec
