#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cayspec/graph.hpp"
#include "cayspec/group.hpp"

namespace cayspec {

// Group-table text: line 1 = n, then n lines of n space-separated indices
// (row g lists g*0 .. g*(n-1)). '#' starts a comment anywhere. The table is
// validated through the regular group-axiom checks.
FiniteGroup read_group_table(std::istream& in, int order_cap = FiniteGroup::kDefaultOrderCap);
FiniteGroup read_group_table_file(const std::string& path,
                                  int order_cap = FiniteGroup::kDefaultOrderCap);

// Whitespace-separated element indices, '#' comments. Sorted + deduplicated.
ElementSet read_element_set(std::istream& in);
ElementSet read_element_set_file(const std::string& path);

// Comma-separated indices as used by --set on the command line.
ElementSet parse_element_set_csv(const std::string& text);

// "n d kind" header + n rows of counts.
void write_count_graph(std::ostream& out, const CountGraph& g);
CountGraph read_count_graph(std::istream& in);

// Family specs: cyclic:N, dihedral:N, symmetric:K, quaternion8, z2xz:N.
FiniteGroup parse_family_spec(const std::string& spec,
                              int order_cap = FiniteGroup::kDefaultOrderCap);

// Expands "name:A..B" into one spec per parameter; a plain spec expands to itself.
std::vector<std::string> expand_family_range(const std::string& spec);

}  // namespace cayspec
