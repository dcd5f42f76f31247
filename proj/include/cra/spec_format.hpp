#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cra/pair.hpp"

namespace cra {

// Parsed form of the triple-specification file format (see README for the
// grammar). parse_spec only checks syntax; resolve_spec builds the actual
// triple and reports semantic problems.
struct GroupExpr {
  enum class Kind { Cyclic, Table, Product };
  Kind kind = Kind::Cyclic;
  int n = 0;                                // Cyclic
  std::vector<std::vector<int>> table;      // Table
  std::vector<GroupExpr> factors;           // Product
};

struct IsoSpec {
  int x = 0;
  int y = 0;
  bool identity_shorthand = false;
  std::vector<int> h_gens;
  std::vector<std::pair<int, int>> rep_map;
  int line = 0;
};

struct ShiftSpec {
  int x = 0;
  int y = 0;
  int z = 0;
  int rep = 0;
  int line = 0;
};

struct TripleSpec {
  std::map<int, GroupExpr> groups;
  bool closure = false;  // when true, E is the equivalence closure of `pairs`
  std::vector<std::pair<int, int>> pairs;
  std::vector<IsoSpec> isos;
  std::vector<ShiftSpec> shifts;
};

// Throws ParseError with a line number on malformed input.
TripleSpec parse_spec(const std::string& text);

// Parses a single group constructor token ("cyclic:4", "table:[[0]]",
// "product:[cyclic:2,cyclic:2]"); used for command-line arguments.
GroupExpr parse_group_constructor(const std::string& text);

// Size guards applied when resolving a spec (they live at the tool boundary,
// not in the library).
struct ResolveLimits {
  int max_group_order = 64;
  int max_atoms = 4096;
};

// Builds the group triple: constructs groups, closes or validates E, derives
// missing isos (diagonals default to the identity automorphism, reverse
// orientations to the inverse iso), fills unlisted shifts with the identity
// coset, and canonicalizes. Throws ResolutionError on dangling references,
// out-of-range elements or guard violations; group/iso construction errors
// propagate as their own types.
GroupTriple resolve_spec(const TripleSpec& spec, const ResolveLimits& limits = {});

FiniteGroup build_group_expr(const GroupExpr& e);

}  // namespace cra
