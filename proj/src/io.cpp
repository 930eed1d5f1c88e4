#include "cayspec/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "cayspec/errors.hpp"

namespace cayspec {

namespace {

// all whitespace-separated tokens, with '#'-to-end-of-line comments removed
std::vector<std::string> tokens_without_comments(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) out.push_back(tok);
  }
  return out;
}

int parse_int(const std::string& tok, const char* what) {
  try {
    size_t used = 0;
    const int value = std::stoi(tok, &used);
    if (used != tok.size()) throw ParseError(std::string(what) + ": bad integer '" + tok + "'");
    return value;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError(std::string(what) + ": bad integer '" + tok + "'");
  }
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return in;
}

}  // namespace

FiniteGroup read_group_table(std::istream& in, int order_cap) {
  const auto toks = tokens_without_comments(in);
  if (toks.empty()) throw ParseError("group table: empty input");
  const int n = parse_int(toks[0], "group table");
  if (n < 1) throw ParseError("group table: order must be positive");
  if (static_cast<std::int64_t>(toks.size()) != 1 + static_cast<std::int64_t>(n) * n)
    throw ParseError("group table: expected " + std::to_string(static_cast<std::int64_t>(n) * n) +
                     " entries, found " + std::to_string(toks.size() - 1));
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  size_t at = 1;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) table[r][c] = parse_int(toks[at++], "group table");
  if (n > order_cap) throw OrderCapExceededError(n, order_cap);
  return FiniteGroup::from_mul_table(table);
}

FiniteGroup read_group_table_file(const std::string& path, int order_cap) {
  auto in = open_or_throw(path);
  FiniteGroup g = read_group_table(in, order_cap);
  g.set_name("table:" + path);
  return g;
}

ElementSet read_element_set(std::istream& in) {
  ElementSet out;
  for (const auto& tok : tokens_without_comments(in)) out.push_back(parse_int(tok, "element set"));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ElementSet read_element_set_file(const std::string& path) {
  auto in = open_or_throw(path);
  return read_element_set(in);
}

ElementSet parse_element_set_csv(const std::string& text) {
  ElementSet out;
  std::string tok;
  std::istringstream in(text);
  while (std::getline(in, tok, ',')) {
    // trim surrounding spaces
    const auto b = tok.find_first_not_of(" \t");
    const auto e = tok.find_last_not_of(" \t");
    if (b == std::string::npos) throw ParseError("element set: empty entry");
    out.push_back(parse_int(tok.substr(b, e - b + 1), "element set"));
  }
  if (out.empty()) throw ParseError("element set: no entries");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void write_count_graph(std::ostream& out, const CountGraph& g) {
  out << g.n << ' ' << g.d << ' ' << kind_name(g.kind) << '\n';
  for (int r = 0; r < g.n; ++r) {
    for (int c = 0; c < g.n; ++c) {
      if (c) out << ' ';
      out << g.counts(r, c);
    }
    out << '\n';
  }
}

CountGraph read_count_graph(std::istream& in) {
  const auto toks = tokens_without_comments(in);
  if (toks.size() < 3) throw ParseError("count graph: missing header");
  CountGraph g;
  g.n = parse_int(toks[0], "count graph");
  g.d = parse_int(toks[1], "count graph");
  g.kind = parse_kind(toks[2]);
  if (g.n < 1) throw ParseError("count graph: order must be positive");
  if (static_cast<std::int64_t>(toks.size()) != 3 + static_cast<std::int64_t>(g.n) * g.n)
    throw ParseError("count graph: expected " + std::to_string(static_cast<std::int64_t>(g.n) * g.n) +
                     " entries, found " + std::to_string(toks.size() - 3));
  g.counts = Eigen::MatrixXi::Zero(g.n, g.n);
  size_t at = 3;
  for (int r = 0; r < g.n; ++r)
    for (int c = 0; c < g.n; ++c) g.counts(r, c) = parse_int(toks[at++], "count graph");
  return g;
}

FiniteGroup parse_family_spec(const std::string& spec, int order_cap) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  std::string param = colon == std::string::npos ? "" : spec.substr(colon + 1);

  const auto need_param = [&]() -> int {
    if (param.empty()) throw ParseError("family '" + name + "' needs a parameter");
    return parse_int(param, "family parameter");
  };

  if (name == "cyclic") {
    FiniteGroup g = FiniteGroup::cyclic(need_param(), order_cap);
    return g;
  }
  if (name == "dihedral") {
    return FiniteGroup::dihedral(need_param(), order_cap);
  }
  if (name == "symmetric") {
    return FiniteGroup::symmetric(need_param(), order_cap);
  }
  if (name == "quaternion8") {
    if (!param.empty()) throw ParseError("quaternion8 takes no parameter");
    return FiniteGroup::quaternion8();
  }
  if (name == "z2xz") {
    FiniteGroup g =
        FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(need_param()),
                                    order_cap);
    g.set_name("z2xz:" + param);
    return g;
  }
  throw ParseError("unknown family '" + name + "'");
}

std::vector<std::string> expand_family_range(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) return {spec};
  const std::string name = spec.substr(0, colon);
  const std::string param = spec.substr(colon + 1);
  const auto dots = param.find("..");
  if (dots == std::string::npos) return {spec};
  const int lo = parse_int(param.substr(0, dots), "family range");
  const int hi = parse_int(param.substr(dots + 2), "family range");
  if (lo > hi) throw ParseError("family range: empty range " + param);
  std::vector<std::string> out;
  for (int k = lo; k <= hi; ++k) out.push_back(name + ":" + std::to_string(k));
  return out;
}

}  // namespace cayspec
