#include "cayspec/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include "cayspec/bounds.hpp"
#include "cayspec/errors.hpp"
#include "cayspec/io.hpp"
#include "cayspec/prng.hpp"
#include "cayspec/set_algebra.hpp"

namespace cayspec {

namespace {

std::uint64_t fnv1a64(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

ElementSet merge_sorted(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// minimal symmetric conjugation-closed sets, one per {class(x) ∪ class(x^-1)} orbit
std::vector<ElementSet> closure_atoms(const FiniteGroup& grp) {
  std::vector<ElementSet> atoms;
  std::vector<char> seen(grp.order(), 0);
  for (Element x = 0; x < grp.order(); ++x) {
    if (x == grp.identity() || seen[x]) continue;
    ElementSet atom = conjugation_closure(grp, ElementSet{x, grp.inv(x)});
    for (Element y : atom) seen[y] = 1;
    atoms.push_back(std::move(atom));
  }
  std::sort(atoms.begin(), atoms.end());
  return atoms;
}

}  // namespace

std::vector<ElementSet> enumerate_conjugation_closed_sets(const FiniteGroup& grp, int max_d) {
  const auto atoms = closure_atoms(grp);
  std::vector<ElementSet> out;
  ElementSet cur;
  const std::function<void(size_t)> rec = [&](size_t i) {
    if (i == atoms.size()) {
      if (!cur.empty() && generates(grp, cur)) out.push_back(cur);
      return;
    }
    rec(i + 1);
    if (cur.size() + atoms[i].size() <= static_cast<size_t>(max_d)) {
      const ElementSet saved = cur;
      cur = merge_sorted(cur, atoms[i]);
      rec(i + 1);
      cur = saved;
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<ElementSet> sample_random_sets(const FiniteGroup& grp, const std::string& family,
                                           std::uint64_t seed, int want, int max_d,
                                           const std::vector<ElementSet>& existing) {
  const int n = grp.order();
  const auto atoms = closure_atoms(grp);
  std::vector<ElementSet> atom_of(n);  // element -> its atom
  for (const ElementSet& atom : atoms)
    for (Element x : atom) atom_of[x] = atom;

  SplitMix64 rng(seed ^ fnv1a64(family));
  std::vector<ElementSet> picked;
  const auto known = [&](const ElementSet& s) {
    return std::find(existing.begin(), existing.end(), s) != existing.end() ||
           std::find(picked.begin(), picked.end(), s) != picked.end();
  };

  for (int attempt = 0; attempt < 200 && static_cast<int>(picked.size()) < want; ++attempt) {
    const int target = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_d)));
    ElementSet cur;
    bool overflow = false;
    for (int draws = 0; draws < 64 && static_cast<int>(cur.size()) < target; ++draws) {
      const Element x = static_cast<Element>(rng.below(static_cast<std::uint64_t>(n)));
      if (x == grp.identity()) continue;
      ElementSet merged = merge_sorted(cur, atom_of[x]);
      if (static_cast<int>(merged.size()) > max_d) {
        overflow = true;
        break;
      }
      cur = std::move(merged);
    }
    if (overflow || cur.empty()) continue;
    if (!generates(grp, cur)) continue;
    if (known(cur)) continue;
    picked.push_back(cur);
  }
  return picked;
}

}  // namespace

std::vector<std::string> default_families() {
  std::vector<std::string> families;
  for (int k = 3; k <= 16; ++k) families.push_back("cyclic:" + std::to_string(k));
  for (int k = 3; k <= 8; ++k) families.push_back("dihedral:" + std::to_string(k));
  families.push_back("symmetric:3");
  families.push_back("symmetric:4");
  families.push_back("quaternion8");
  for (int k = 2; k <= 8; ++k) families.push_back("z2xz:" + std::to_string(k));
  return families;
}

std::vector<CorpusInstance> family_instances(const std::string& family, std::uint64_t seed,
                                             int random_sets) {
  const FiniteGroup grp = parse_family_spec(family);
  std::vector<ElementSet> sets = enumerate_conjugation_closed_sets(grp, 4);
  const auto sampled = sample_random_sets(grp, family, seed, random_sets, 8, sets);
  sets.insert(sets.end(), sampled.begin(), sampled.end());

  std::vector<CorpusInstance> out;
  for (const ElementSet& s : sets) {
    for (const GraphKind kind : {GraphKind::cayley, GraphKind::cayley_sum}) {
      CorpusInstance inst;
      inst.family = family;
      inst.set = s;
      inst.kind = kind;
      out.push_back(std::move(inst));
    }
  }
  return out;
}

std::vector<CorpusInstance> default_corpus(std::uint64_t seed) {
  std::vector<CorpusInstance> out;
  for (const std::string& family : default_families()) {
    auto batch = family_instances(family, seed, 5);
    out.insert(out.end(), std::make_move_iterator(batch.begin()),
               std::make_move_iterator(batch.end()));
  }
  return out;
}

std::vector<CorpusInstance> load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ManifestError("cannot open manifest '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ManifestError(std::string("manifest parse: ") + e.what());
  }

  try {
    if (j.at("schema_version").get<int>() != 1)
      throw ManifestError("unsupported manifest schema_version");
    std::vector<CorpusInstance> out;
    for (const auto& ij : j.at("instances")) {
      CorpusInstance inst;
      const bool has_family = ij.contains("family");
      const bool has_file = ij.contains("group_file");
      if (has_family == has_file)
        throw ManifestError("instance needs exactly one of family/group_file");
      if (has_family) inst.family = ij.at("family").get<std::string>();
      if (has_file) inst.group_file = ij.at("group_file").get<std::string>();
      inst.set = ij.at("set").get<ElementSet>();
      inst.kind = parse_kind(ij.at("kind").get<std::string>());
      if (inst.kind == GraphKind::pair_multigraph)
        throw ManifestError("manifest kind must be cayley or cayley_sum");
      if (ij.contains("expect")) {
        inst.expect = ij.at("expect");
        if (!inst.expect.is_object()) throw ManifestError("expect must be an object");
      }
      out.push_back(std::move(inst));
    }
    return out;
  } catch (const ManifestError&) {
    throw;
  } catch (const std::exception& e) {
    throw ManifestError(std::string("manifest shape: ") + e.what());
  }
}

namespace {

CheckReport suite_report(const char* name, bool ok, nlohmann::json detail) {
  CheckReport c;
  c.check = name;
  c.hypotheses_held = true;
  c.verdict = ok ? Verdict::pass : Verdict::fail;
  c.witness = std::move(detail);
  return c;
}

bool counts_shape_ok(const CountGraph& g) {
  for (int r = 0; r < g.n; ++r) {
    std::int64_t row = 0;
    for (int c = 0; c < g.n; ++c) {
      if (g.counts(r, c) != g.counts(c, r)) return false;
      if (g.counts(r, c) < 0) return false;
      row += g.counts(r, c);
    }
    if (row != g.d) return false;
  }
  return true;
}

// exact recomputation of a witness's own ratio
bool witness_consistent(const CountGraph& g, const CutWitness& w) {
  if (w.subset.empty()) return false;
  const std::int64_t size = static_cast<std::int64_t>(w.subset.size());
  const Rational again =
      w.kind == CutKind::vertex
          ? Rational(static_cast<std::int64_t>(vertex_boundary(g, w.subset).size()), size)
          : Rational(edge_boundary_count(g, w.subset), static_cast<std::int64_t>(g.d) * size);
  return again == w.value;
}

void append_suites(std::vector<CheckReport>& out, const FiniteGroup& grp,
                   const CorpusInstance& inst, const AnalyzedInstance& ai,
                   const AnalyzeOptions& opt) {
  const CountGraph& g = ai.graph;
  const Spectrum& spec = *ai.spectrum;
  const AnalysisReport& rep = ai.report;

  out.push_back(suite_report("suite_graph_shape", counts_shape_ok(g),
                             {{"n", g.n}, {"d", g.d}}));

  // trace and Frobenius identities against the eigenvalue list
  {
    const Eigen::MatrixXd t = normalized(g);
    double trace_gap = t.trace();
    double frob_gap = t.squaredNorm();
    for (int i = 0; i < spec.size(); ++i) {
      trace_gap -= spec.t(i);
      frob_gap -= spec.t(i) * spec.t(i);
    }
    const bool ok = std::abs(trace_gap) < 10.0 * opt.tol && std::abs(frob_gap) < 10.0 * opt.tol;
    out.push_back(suite_report("suite_trace_frobenius", ok,
                               {{"trace_gap", trace_gap}, {"frobenius_gap", frob_gap}}));
  }

  out.push_back(suite_report("suite_reconstruction", rep.residual < 10.0 * opt.tol,
                             {{"residual", rep.residual}}));

  // spectral predicates agree with BFS truth
  {
    const bool conn_ok = is_connected_spectral(spec, opt.tol) == rep.connected;
    bool bip_ok = true;
    if (rep.connected) bip_ok = is_bipartite_spectral(spec, opt.tol) == rep.bipartite;
    out.push_back(suite_report("suite_spectral_structure", conn_ok && bip_ok,
                               {{"connected", rep.connected}, {"bipartite", rep.bipartite}}));
  }

  const auto h = rep.exact_h();
  if (h && rep.edge_cut) {
    const Rational eh = rep.edge_cut->value;

    // h/d <= edge constant <= h, exact
    const bool sandwich = *h / Rational(g.d) <= eh && eh <= *h;
    out.push_back(suite_report("suite_sandwich", sandwich,
                               {{"h", h->str()}, {"edge_h", eh.str()}, {"d", g.d}}));

    // edge^2/2 <= lambda2 <= 2*edge, float slack
    if (rep.lambda2) {
      const double ehv = eh.value();
      const bool buser = ehv * ehv / 2.0 <= *rep.lambda2 + kCheckMargin &&
                         *rep.lambda2 <= 2.0 * ehv + kCheckMargin;
      out.push_back(suite_report(
          "suite_buser", buser, {{"edge_h", eh.str()}, {"lambda2", *rep.lambda2}}));
    }

    const bool wit_ok =
        witness_consistent(g, *rep.vertex_cut) && witness_consistent(g, *rep.edge_cut);
    out.push_back(suite_report("suite_witness_consistency", wit_ok,
                               {{"vertex", to_json(*rep.vertex_cut)},
                                {"edge", to_json(*rep.edge_cut)}}));

    // sweep stays an upper bound for both kinds
    {
      const Eigen::VectorXd fiedler = spec.fiedler_vector();
      const CutWitness sv = sweep_upper_bound(g, fiedler, CutKind::vertex);
      const CutWitness se = sweep_upper_bound(g, fiedler, CutKind::edge);
      const bool ok = sv.value >= *h && se.value >= eh && witness_consistent(g, sv) &&
                      witness_consistent(g, se);
      out.push_back(suite_report("suite_sweep_upper", ok,
                                 {{"sweep_vertex", sv.value.str()},
                                  {"sweep_edge", se.value.str()}}));
    }
  }

  if (inst.kind == GraphKind::cayley_sum) {
    const GeneratingSet gs = validate_generating_set(grp, inst.set, true);
    const CountGraph m = build_pair_multigraph(grp, gs);

    out.push_back(suite_report("suite_pair_shape", counts_shape_ok(m),
                               {{"n", m.n}, {"d", m.d}}));

    // integer identity: counts(M) = counts(C)^2
    {
      const Eigen::MatrixXi square = g.counts * g.counts;
      bool same = true;
      for (int r = 0; r < m.n && same; ++r)
        for (int c = 0; c < m.n; ++c)
          if (m.counts(r, c) != square(r, c)) {
            same = false;
            break;
          }
      out.push_back(suite_report("suite_pair_square", same, {{"d", m.d}}));
    }

    // exactly d loop units per vertex
    {
      bool loops_ok = true;
      for (int v = 0; v < m.n; ++v)
        if (m.counts(v, v) != g.d) loops_ok = false;
      out.push_back(suite_report("suite_pair_loops", loops_ok, {{"expected", g.d}}));
    }

    const Spectrum mspec = eig_normalized(m, opt.tol);

    // spectrum of M is the multiset of squares
    {
      std::vector<double> squares;
      for (int i = 0; i < spec.size(); ++i) squares.push_back(spec.t(i) * spec.t(i));
      std::sort(squares.begin(), squares.end(), std::greater<>());
      double worst = 0.0;
      for (int i = 0; i < mspec.size(); ++i)
        worst = std::max(worst, std::abs(mspec.t(i) - squares[i]));
      out.push_back(
          suite_report("suite_pair_spectrum", worst < 100.0 * opt.tol, {{"max_gap", worst}}));
    }

    // Buser and the vertex/edge sandwich on M; a disconnected M (bipartite or
    // disconnected base) has edge constant 0 and lambda2 = 0
    if (m.n >= 2) {
      Rational m_h(0);
      Rational m_eh(0);
      bool m_sandwich = true;
      if (bfs_connected(m)) {
        const CheegerPair mpair = cheeger_exact(m, opt.max_exact_n);
        m_h = mpair.vertex.value;
        m_eh = mpair.edge.value;
        m_sandwich = m_h / Rational(m.d) <= m_eh && m_eh <= m_h;
      }
      const double m_lambda2 = 1.0 - mspec.second_largest();
      const double ehv = m_eh.value();
      const bool buser = ehv * ehv / 2.0 <= m_lambda2 + kCheckMargin &&
                         m_lambda2 <= 2.0 * ehv + kCheckMargin;
      out.push_back(suite_report("suite_pair_buser", buser && m_sandwich,
                                 {{"edge_h", m_eh.str()},
                                  {"h", m_h.str()},
                                  {"lambda2", m_lambda2},
                                  {"connected", bfs_connected(m)}}));
    }
  }

  // manifest-pinned expected values
  if (!inst.expect.empty()) {
    nlohmann::json mismatches = nlohmann::json::array();
    const auto want_bool = [&](const char* key, bool got) {
      if (inst.expect.contains(key) && inst.expect.at(key).get<bool>() != got)
        mismatches.push_back({{"field", key}, {"got", got}});
    };
    want_bool("bipartite", rep.bipartite);
    want_bool("connected", rep.connected);
    want_bool("minimal", rep.flags.minimal);
    const auto want_rational = [&](const char* key, const std::optional<Rational>& got) {
      if (!inst.expect.contains(key)) return;
      const Rational want = Rational::parse(inst.expect.at(key).get<std::string>());
      if (!got || !(*got == want))
        mismatches.push_back({{"field", key}, {"got", got ? got->str() : "none"}});
    };
    want_rational("h", rep.exact_h());
    want_rational("edge_h",
                  rep.exact_cheeger && rep.edge_cut ? std::optional<Rational>(rep.edge_cut->value)
                                                    : std::nullopt);
    const auto want_close = [&](const char* key, double got) {
      if (inst.expect.contains(key) &&
          std::abs(inst.expect.at(key).get<double>() - got) > 1e-8)
        mismatches.push_back({{"field", key}, {"got", got}});
    };
    want_close("tn", rep.tn);
    if (rep.t2) want_close("t2", *rep.t2);
    out.push_back(
        suite_report("expected_values", mismatches.empty(), {{"mismatches", mismatches}}));
  }
}

FiniteGroup build_group(const CorpusInstance& inst) {
  if (inst.group_file) return read_group_table_file(*inst.group_file);
  return parse_family_spec(inst.family);
}

}  // namespace

std::vector<CheckReport> run_instance_battery(const CorpusInstance& inst,
                                              const AnalyzeOptions& opt) {
  const FiniteGroup grp = build_group(inst);
  const AnalyzedInstance ai = analyze_instance_full(grp, inst.set, inst.kind, opt);
  std::vector<CheckReport> out = ai.report.checks;
  append_suites(out, grp, inst, ai, opt);
  for (CheckReport& c : out) c.instance_id = ai.report.instance_id;
  return out;
}

int default_thread_count() {
  if (const char* env = std::getenv("CAYLEY_SPECTRA_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

VerifySummary run_verify(const std::vector<CorpusInstance>& instances,
                         const AnalyzeOptions& opt, int threads) {
  if (threads <= 0) threads = default_thread_count();

  struct Slot {
    std::vector<CheckReport> checks;
    std::string error;
    std::string id;
  };
  std::vector<Slot> slots(instances.size());
  std::atomic<size_t> cursor{0};

  const auto worker = [&]() {
    for (;;) {
      const size_t i = cursor.fetch_add(1);
      if (i >= instances.size()) return;
      const CorpusInstance& inst = instances[i];
      slots[i].id = make_instance_id(
          inst.group_file ? "table:" + *inst.group_file : inst.family, inst.set, inst.kind);
      try {
        slots[i].checks = run_instance_battery(inst, opt);
      } catch (const std::exception& e) {
        slots[i].error = e.what();
      }
    }
  };

  if (threads == 1 || instances.size() <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    const int count = std::min<int>(threads, static_cast<int>(instances.size()));
    pool.reserve(count);
    for (int t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  VerifySummary sum;
  sum.instances = static_cast<int>(instances.size());
  for (const Slot& slot : slots) {
    if (!slot.error.empty()) {
      sum.errors.push_back(slot.id + ": " + slot.error);
      continue;
    }
    for (const CheckReport& c : slot.checks) {
      auto& bucket = sum.per_check[c.check];
      switch (c.verdict) {
        case Verdict::pass:
          ++sum.pass;
          ++bucket[0];
          break;
        case Verdict::fail:
          ++sum.fail;
          ++bucket[1];
          sum.failures.push_back(c);
          break;
        case Verdict::vacuous:
          ++sum.vacuous;
          ++bucket[2];
          break;
      }
    }
  }

  std::ostringstream text;
  text << "instances: " << sum.instances << "\n";
  text << "checks: " << sum.pass << " pass, " << sum.fail << " fail, " << sum.vacuous
       << " vacuous\n";
  text << "per-check:\n";
  for (const auto& [name, bucket] : sum.per_check)
    text << "  " << name << ": pass=" << bucket[0] << " fail=" << bucket[1]
         << " vacuous=" << bucket[2] << "\n";
  if (!sum.failures.empty()) {
    text << "failures:\n";
    for (const CheckReport& c : sum.failures)
      text << "  " << c.instance_id << " " << c.check << ": lhs=" << format_double(c.lhs)
           << " rhs=" << format_double(c.rhs) << "\n";
  }
  if (!sum.errors.empty()) {
    text << "errors:\n";
    for (const std::string& e : sum.errors) text << "  " << e << "\n";
  }
  text << (sum.ok() ? "result: ok" : "result: FAIL") << "\n";
  sum.text = text.str();
  return sum;
}

std::string scan_csv(const std::vector<CorpusInstance>& instances, const AnalyzeOptions& opt,
                     int threads) {
  if (threads <= 0) threads = default_thread_count();
  std::vector<std::string> rows(instances.size());
  std::atomic<size_t> cursor{0};

  const auto worker = [&]() {
    for (;;) {
      const size_t i = cursor.fetch_add(1);
      if (i >= instances.size()) return;
      const CorpusInstance& inst = instances[i];
      const std::string source =
          inst.group_file ? "table:" + *inst.group_file : inst.family;
      try {
        const FiniteGroup grp = build_group(inst);
        rows[i] = csv_row(analyze_instance(grp, inst.set, inst.kind, opt));
      } catch (const std::exception& e) {
        rows[i] = csv_error_row(make_instance_id(source, inst.set, inst.kind), e.what());
      }
    }
  };

  if (threads == 1 || instances.size() <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    const int count = std::min<int>(threads, static_cast<int>(instances.size()));
    pool.reserve(count);
    for (int t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::ostringstream out;
  out << csv_header() << "\n";
  for (const std::string& row : rows) out << row << "\n";
  return out.str();
}

}  // namespace cayspec
