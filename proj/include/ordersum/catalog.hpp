#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "ordersum/permgrp.hpp"

namespace ordersum {

// A named group recipe with frozen expectations used by tests and the
// verification suite.
struct CatalogEntry {
  std::string id;
  std::function<FiniteGroup(std::size_t max_order)> builder;
  // invariant name -> exact expected value; keys: order, psi, solvable,
  // center_order.
  std::map<std::string, std::int64_t> expected;
  // Named normal subgroups resolvable via resolve_marked_subgroup.
  std::vector<std::string> normal_marks;
  // Non-empty when the entry is a direct product of two catalog ids.
  std::vector<std::string> product_factors;
};

// Builds a group from a catalog id.  Grammar: C<n>, D<n> (n >= 3), S<k> and
// A<k> (k <= 7), SL2(<p>) (p <= 7 prime), PSL2(7), and 'x'-joined direct
// products of those.  Registered manifest entries (e.g. Q8) also resolve.
FiniteGroup build(const std::string& id, std::size_t max_order = kDefaultMaxOrder);

// GroupSpec files: {"name": string, "degree": int, "generators": [[int,...]]}
// with 0-based image arrays.
FiniteGroup load_group_spec(const std::filesystem::path& path,
                            std::size_t max_order = kDefaultMaxOrder);
FiniteGroup parse_group_spec(std::string_view text,
                             std::size_t max_order = kDefaultMaxOrder);
void write_group_spec(std::ostream& out, const FiniteGroup& g);

const std::vector<CatalogEntry>& default_manifest();
const CatalogEntry* find_entry(const std::string& id);

// Resolves a normal_marks name ("V4" in S4) to the actual subgroup.
Subgroup resolve_marked_subgroup(const FiniteGroup& g, const std::string& mark);

}  // namespace ordersum
