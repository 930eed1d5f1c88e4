#include "cayspec/checks.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "cayspec/errors.hpp"
#include "cayspec/set_algebra.hpp"

namespace cayspec {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    default: return "vacuous";
  }
}

nlohmann::json to_json(const CheckReport& r) {
  return nlohmann::json{{"check", r.check},
                        {"instance_id", r.instance_id},
                        {"verdict", verdict_name(r.verdict)},
                        {"hypotheses_held", r.hypotheses_held},
                        {"lhs", r.lhs},
                        {"rhs", r.rhs},
                        {"margin", r.margin},
                        {"witness", r.witness}};
}

namespace {

CheckReport vacuous_report(std::string name, nlohmann::json why) {
  CheckReport r;
  r.check = std::move(name);
  r.verdict = Verdict::vacuous;
  r.hypotheses_held = false;
  r.witness = std::move(why);
  return r;
}

}  // namespace

CheckReport check_theorem_main(const CountGraph& g, const Spectrum& s, const Rational& h) {
  if (g.kind != GraphKind::cayley_sum)
    throw std::invalid_argument("check_theorem_main expects a cayley_sum graph");
  const bool connected = bfs_connected(g);
  const bool bipartite = bfs_bipartite(g);
  if (!connected || bipartite)
    return vacuous_report("theorem_main",
                          {{"connected", connected}, {"bipartite", bipartite}});

  CheckReport r;
  r.check = "theorem_main";
  r.hypotheses_held = true;
  r.lhs = s.smallest();
  r.rhs = main_lower_bound(h, g.d);
  r.margin = r.lhs - r.rhs;
  r.verdict = r.lhs > r.rhs - kCheckMargin ? Verdict::pass : Verdict::fail;
  r.witness = {{"h", h.str()}, {"d", g.d}};
  return r;
}

CheckReport check_upper_gap(const CountGraph& g, const Spectrum& s, const Rational& h) {
  const bool connected = bfs_connected(g);
  if (!connected || g.n < 2)
    return vacuous_report("upper_gap", {{"connected", connected}, {"n", g.n}});

  CheckReport r;
  r.check = "upper_gap";
  r.hypotheses_held = true;
  r.lhs = s.second_largest();
  r.rhs = upper_gap_bound(h, g.d);
  r.margin = r.rhs - r.lhs;
  r.verdict = r.lhs <= r.rhs + kCheckMargin ? Verdict::pass : Verdict::fail;
  r.witness = {{"h", h.str()}, {"d", g.d}};
  return r;
}

CheckReport check_bis19(const CountGraph& g, const Spectrum& s, const Rational& h) {
  if (g.kind != GraphKind::cayley)
    throw std::invalid_argument("check_bis19 expects a cayley graph");
  const bool connected = bfs_connected(g);
  const bool bipartite = bfs_bipartite(g);
  if (!connected || bipartite || g.n == 3)
    return vacuous_report(
        "bis19", {{"connected", connected}, {"bipartite", bipartite}, {"n", g.n}});

  CheckReport r;
  r.check = "bis19";
  r.hypotheses_held = true;
  r.lhs = s.laplacian_largest();
  r.rhs = 2.0 - (main_lower_bound(h, g.d) + 1.0);  // 2 - h^4/(2^9 d^8)
  r.margin = r.rhs - r.lhs;
  r.verdict = r.lhs < r.rhs + kCheckMargin ? Verdict::pass : Verdict::fail;
  r.witness = {{"h", h.str()}, {"d", g.d}};
  return r;
}

CheckReport check_sharp(const CountGraph& g, const Spectrum& s, const Rational& h,
                        bool minimal) {
  const bool connected = bfs_connected(g);
  const bool bipartite = bfs_bipartite(g);
  const auto row = sharp_row_for_degree(g.d);
  if (!connected || bipartite || !minimal || !row)
    return vacuous_report("sharp", {{"connected", connected},
                                    {"bipartite", bipartite},
                                    {"minimal", minimal},
                                    {"d", g.d}});

  CheckReport r;
  r.check = "sharp";
  r.hypotheses_held = true;
  r.lhs = s.smallest();
  r.rhs = *sharp_lower_bound(h, g.d);
  r.margin = r.lhs - r.rhs;
  r.verdict = r.lhs > r.rhs - kCheckMargin ? Verdict::pass : Verdict::fail;
  r.witness = {{"h", h.str()}, {"kappa", row->kappa}, {"d0", row->d0}, {"d", g.d}};
  return r;
}

CheckReport check_epsilon_bounds(const CountGraph& g, const Rational& h, bool minimal) {
  const bool bipartite = bfs_bipartite(g);
  const Rational d_minus_1(g.d - 1);
  const Rational two(2);

  struct Sub {
    const char* name;
    bool applicable;
    Rational bound;
  };
  const Sub subs[] = {
      {"sum_nonbipartite_le_d_minus_1",
       g.kind == GraphKind::cayley_sum && !bipartite, d_minus_1},
      {"cayley_ge4_le_d_minus_1", g.kind == GraphKind::cayley && g.n >= 4, d_minus_1},
      {"sum_nonbipartite_minimal_le_2",
       g.kind == GraphKind::cayley_sum && !bipartite && minimal, two},
  };

  bool any = false;
  bool all_ok = true;
  std::optional<Rational> tightest;
  nlohmann::json detail = nlohmann::json::array();
  for (const Sub& sub : subs) {
    const bool ok = !sub.applicable || h <= sub.bound;
    any = any || sub.applicable;
    all_ok = all_ok && ok;
    if (sub.applicable && (!tightest || sub.bound < *tightest)) tightest = sub.bound;
    detail.push_back({{"sub_check", sub.name},
                      {"applicable", sub.applicable},
                      {"bound", sub.bound.str()},
                      {"holds", ok}});
  }

  if (!any)
    return vacuous_report("epsilon_bounds",
                          {{"kind", kind_name(g.kind)}, {"bipartite", bipartite}});

  CheckReport r;
  r.check = "epsilon_bounds";
  r.hypotheses_held = true;
  r.lhs = h.value();
  r.rhs = tightest->value();
  r.margin = r.rhs - r.lhs;
  r.verdict = all_ok ? Verdict::pass : Verdict::fail;
  r.witness = {{"h", h.str()}, {"sub_checks", detail}};
  return r;
}

CheckReport check_bipartite_lemma(const FiniteGroup& grp, const ElementSet& s,
                                  const CountGraph& sum_graph) {
  const bool bipartite = bfs_bipartite(sum_graph);
  std::optional<ElementSet> avoiding;
  for (const ElementSet& sub : index_two_subgroups(grp)) {
    if (set_intersection(sub, s).empty()) {
      avoiding = sub;
      break;
    }
  }

  CheckReport r;
  r.check = "bipartite_lemma";
  r.hypotheses_held = true;
  r.lhs = bipartite ? 1.0 : 0.0;
  r.rhs = avoiding ? 1.0 : 0.0;
  r.margin = 0.0;
  r.verdict = bipartite == avoiding.has_value() ? Verdict::pass : Verdict::fail;
  r.witness = {{"bipartite", bipartite}, {"index_two_subgroup_avoiding_s", false}};
  if (avoiding) r.witness["index_two_subgroup_avoiding_s"] = *avoiding;
  return r;
}

CheckReport check_vertex_expansion_complement(const CountGraph& g, const ElementSet& a,
                                              const Rational& eps) {
  if (g.kind != GraphKind::cayley_sum)
    throw std::invalid_argument("check_vertex_expansion_complement expects a cayley_sum graph");
  const int n = g.n;
  if (2 * static_cast<int>(a.size()) < n)
    return vacuous_report("vertex_expansion_complement",
                          {{"size", a.size()}, {"n", n}});

  const std::int64_t boundary = static_cast<std::int64_t>(vertex_boundary(g, a).size());
  const std::int64_t outside = n - static_cast<std::int64_t>(a.size());

  CheckReport r;
  r.check = "vertex_expansion_complement";
  r.hypotheses_held = true;
  r.lhs = static_cast<double>(boundary);
  r.rhs = eps.value() / g.d * static_cast<double>(outside);
  r.margin = r.lhs - r.rhs;
  // boundary >= (eps/d) * outside, cross-multiplied in integers
  const bool ok = boundary * eps.den() * g.d >= eps.num() * outside;
  r.verdict = ok ? Verdict::pass : Verdict::fail;
  r.witness = {{"subset_size", a.size()}, {"boundary_size", boundary}, {"eps", eps.str()}};
  return r;
}

int max_translate_overlap(const FiniteGroup& grp, const ElementSet& s, const ElementSet& a) {
  int best = 0;
  for (Element g = 0; g < grp.order(); ++g) {
    const ElementSet ag = set_right_translate(grp, a, g);
    const ElementSet reach = set_product(grp, set_inverse(grp, ag), s);
    best = std::max(best, static_cast<int>(set_intersection(ag, reach).size()));
  }
  return best;
}

int max_translate_symdiff(const FiniteGroup& grp, const ElementSet& s, const ElementSet& a) {
  int best = 0;
  for (Element g = 0; g < grp.order(); ++g) {
    const ElementSet ag = set_right_translate(grp, a, g);
    const ElementSet ag_inv = set_inverse(grp, ag);
    const ElementSet outside = set_complement(grp, ag);
    for (Element x : s) {
      const ElementSet shifted = set_right_translate(grp, ag_inv, x);
      best = std::max(best,
                      static_cast<int>(set_symmetric_difference(shifted, outside).size()));
    }
  }
  return best;
}

SubsetConditionEval evaluate_subset_conditions(const FiniteGroup& grp, const ElementSet& s,
                                               const ElementSet& a, const BoundParams& p) {
  const int n = grp.order();
  const double eps = p.epsilon.value();
  const double size = static_cast<double>(a.size());

  SubsetConditionEval e;
  e.size_ok = !a.empty() && 2 * static_cast<int>(a.size()) <= n &&
              size * (2.0 + p.beta + p.d * p.beta / eps) >= static_cast<double>(n);
  e.overlap_limit = p.beta / eps * size;
  e.symdiff_limit = p.beta / eps * (eps + p.d + 2.0) * size;
  e.overlap = max_translate_overlap(grp, s, a);
  e.symdiff = max_translate_symdiff(grp, s, a);
  const ElementSet a_inv = set_inverse(grp, a);
  e.inv_overlap = max_translate_overlap(grp, s, a_inv);
  e.inv_symdiff = max_translate_symdiff(grp, s, a_inv);
  return e;
}

AExistsSearch find_aexists_witness(const FiniteGroup& grp, const ElementSet& s,
                                   const Spectrum& spectrum, double zeta,
                                   const Rational& eps, int max_exact_n) {
  const int n = grp.order();
  const int d = static_cast<int>(s.size());
  if (d < 1) throw std::invalid_argument("empty generating set");
  const double eps_val = eps.value();
  const double zeta_max = eps_val * eps_val / (4.0 * std::pow(static_cast<double>(d), 4));
  if (!(zeta > 0.0) || zeta > zeta_max)
    throw std::invalid_argument("zeta outside (0, eps^2/(4 d^4)]");

  // values within tol of -1 count as -1 itself, which the open interval excludes
  bool in_interval = false;
  for (int i = 0; i < spectrum.size(); ++i) {
    const double t = spectrum.t(i);
    if (t > -1.0 + spectrum.tol() && t <= -1.0 + zeta) in_interval = true;
  }
  if (!in_interval) {
    AExistsSearch out;
    out.report = vacuous_report(
        "aexists", {{"zeta", zeta}, {"smallest_eigenvalue", spectrum.smallest()}});
    return out;
  }
  if (n > max_exact_n) throw TooLargeError(n, max_exact_n);

  const BoundParams p = BoundParams::make(eps, d, zeta);
  const double lower_real = n / (2.0 + p.beta + d * p.beta / eps_val);
  const int min_size = std::max<int>(1, static_cast<int>(std::ceil(lower_real - 1e-12)));

  std::optional<ElementSet> found;
  ElementSet cur;
  const std::function<bool(int)> dfs = [&](int next) -> bool {
    if (2 * (static_cast<int>(cur.size()) + 1) > n) return false;
    if (static_cast<int>(cur.size()) + (n - next) < min_size) return false;
    for (Element e = next; e < n; ++e) {
      cur.push_back(e);
      if (static_cast<int>(cur.size()) >= min_size &&
          evaluate_subset_conditions(grp, s, cur, p).holds()) {
        found = cur;
        return true;
      }
      if (dfs(e + 1)) return true;
      cur.pop_back();
    }
    return false;
  };
  dfs(0);

  AExistsSearch out;
  out.report.check = "aexists";
  out.report.hypotheses_held = true;
  out.report.lhs = spectrum.smallest();
  out.report.rhs = -1.0 + zeta;
  out.report.margin = out.report.rhs - out.report.lhs;
  out.report.verdict = found ? Verdict::pass : Verdict::fail;
  out.report.witness = {{"zeta", zeta}, {"beta", p.beta}, {"subset_found", found.has_value()}};
  if (found) {
    out.report.witness["subset"] = *found;
    out.witness = found;
  }
  return out;
}

CheckReport check_dichotomy(const FiniteGroup& grp, const ElementSet& s, const ElementSet& a,
                            Element g, double beta, const Rational& eps) {
  const int d = static_cast<int>(s.size());
  const double eps_val = eps.value();
  const double beta_max = eps_val * eps_val / (4.0 * d * (d + 1));
  if (!(beta < beta_max))
    return vacuous_report("dichotomy", {{"beta", beta}, {"beta_max", beta_max}});

  const double coeff = d * beta / (eps_val * eps_val) * (eps_val + d + 2.0);
  const double size = static_cast<double>(a.size());
  const double small_cap = coeff * size;
  const double large_floor = (1.0 - coeff) * size;

  const auto overlap = [&](const ElementSet& base) {
    return static_cast<int>(set_intersection(a, set_right_translate(grp, base, g)).size());
  };
  const int with_a = overlap(a);
  const int with_inv = overlap(set_inverse(grp, a));

  const auto exactly_one_branch = [&](int m) {
    const bool small = m <= small_cap;
    const bool large = m >= large_floor;
    return small != large;
  };

  CheckReport r;
  r.check = "dichotomy";
  r.hypotheses_held = true;
  r.lhs = with_a;
  r.rhs = with_inv;
  r.margin = 0.0;
  r.verdict = exactly_one_branch(with_a) && exactly_one_branch(with_inv) ? Verdict::pass
                                                                         : Verdict::fail;
  r.witness = {{"g", g},
               {"overlap_with_translate", with_a},
               {"overlap_with_inverse_translate", with_inv},
               {"small_cap", small_cap},
               {"large_floor", large_floor}};
  return r;
}

}  // namespace cayspec
