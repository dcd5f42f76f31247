#include "cra/spec_format.hpp"

#include <algorithm>
#include <sstream>

namespace cra {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

int parse_int(const std::string& s, int line) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, got '" + s + "'");
  }
}

// "{1,2,3}" or "{}" -> list of ints.
std::vector<int> parse_int_set(const std::string& s, int line) {
  if (s.size() < 2 || s.front() != '{' || s.back() != '}')
    throw ParseError(line, "expected a set like {0,2}, got '" + s + "'");
  std::vector<int> out;
  const std::string body = s.substr(1, s.size() - 2);
  if (body.empty()) return out;
  std::istringstream is(body);
  std::string item;
  while (std::getline(is, item, ',')) out.push_back(parse_int(item, line));
  return out;
}

// "{0->1,2->3}" -> list of pairs.
std::vector<std::pair<int, int>> parse_int_map(const std::string& s, int line) {
  if (s.size() < 2 || s.front() != '{' || s.back() != '}')
    throw ParseError(line, "expected a map like {0->1}, got '" + s + "'");
  std::vector<std::pair<int, int>> out;
  const std::string body = s.substr(1, s.size() - 2);
  if (body.empty()) return out;
  std::istringstream is(body);
  std::string item;
  while (std::getline(is, item, ',')) {
    const auto arrow = item.find("->");
    if (arrow == std::string::npos)
      throw ParseError(line, "map entry '" + item + "' is missing '->'");
    out.emplace_back(parse_int(item.substr(0, arrow), line),
                     parse_int(item.substr(arrow + 2), line));
  }
  return out;
}

std::string expect_prefix(const std::string& s, const std::string& prefix, int line) {
  if (s.rfind(prefix, 0) != 0)
    throw ParseError(line, "expected '" + prefix + "...', got '" + s + "'");
  return s.substr(prefix.size());
}

// Splits "a,b,c" at top-level commas (bracket depth 0).
std::vector<std::string> split_top_level(const std::string& s, int line) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if (depth < 0) throw ParseError(line, "unbalanced ']'");
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (depth != 0) throw ParseError(line, "unbalanced '['");
  out.push_back(cur);
  return out;
}

GroupExpr parse_group_expr(const std::string& s, int line) {
  GroupExpr e;
  if (s.rfind("cyclic:", 0) == 0) {
    e.kind = GroupExpr::Kind::Cyclic;
    e.n = parse_int(s.substr(7), line);
    return e;
  }
  if (s.rfind("table:", 0) == 0) {
    e.kind = GroupExpr::Kind::Table;
    const std::string body = s.substr(6);
    if (body.size() < 2 || body.front() != '[' || body.back() != ']')
      throw ParseError(line, "table must look like [[0,1],[1,0]]");
    for (const std::string& row : split_top_level(body.substr(1, body.size() - 2), line)) {
      if (row.size() < 2 || row.front() != '[' || row.back() != ']')
        throw ParseError(line, "table row must look like [0,1]");
      std::vector<int> r;
      for (const std::string& cell : split_top_level(row.substr(1, row.size() - 2), line))
        r.push_back(parse_int(cell, line));
      e.table.push_back(std::move(r));
    }
    return e;
  }
  if (s.rfind("product:", 0) == 0) {
    e.kind = GroupExpr::Kind::Product;
    const std::string body = s.substr(8);
    if (body.size() < 2 || body.front() != '[' || body.back() != ']')
      throw ParseError(line, "product must look like [cyclic:2,cyclic:4]");
    for (const std::string& f : split_top_level(body.substr(1, body.size() - 2), line))
      e.factors.push_back(parse_group_expr(f, line));
    if (e.factors.size() < 2) throw ParseError(line, "product needs at least two factors");
    return e;
  }
  throw ParseError(line, "unknown group constructor '" + s + "'");
}

}  // namespace

GroupExpr parse_group_constructor(const std::string& text) { return parse_group_expr(text, 0); }

TripleSpec parse_spec(const std::string& text) {
  TripleSpec spec;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  bool saw_header = false;
  while (std::getline(is, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto toks = tokenize(line);
    if (toks.empty()) continue;
    if (!saw_header) {
      if (toks.size() != 2 || toks[0] != "cra-spec" || toks[1] != "1")
        throw ParseError(lineno, "file must start with 'cra-spec 1'");
      saw_header = true;
      continue;
    }
    const std::string& kw = toks[0];
    if (kw == "group") {
      if (toks.size() != 3) throw ParseError(lineno, "usage: group <index> <constructor>");
      const int idx = parse_int(toks[1], lineno);
      if (spec.groups.count(idx)) throw ParseError(lineno, "duplicate group index");
      spec.groups[idx] = parse_group_expr(toks[2], lineno);
    } else if (kw == "pairs") {
      if (toks.size() != 2 || (toks[1] != "closure" && toks[1] != "explicit"))
        throw ParseError(lineno, "usage: pairs closure|explicit");
      spec.closure = toks[1] == "closure";
    } else if (kw == "pair") {
      if (toks.size() != 3) throw ParseError(lineno, "usage: pair <x> <y>");
      spec.pairs.emplace_back(parse_int(toks[1], lineno), parse_int(toks[2], lineno));
    } else if (kw == "iso") {
      if (toks.size() < 4) throw ParseError(lineno, "usage: iso <x> <y> identity | H={..} map={..}");
      IsoSpec iso;
      iso.x = parse_int(toks[1], lineno);
      iso.y = parse_int(toks[2], lineno);
      iso.line = lineno;
      if (toks[3] == "identity") {
        if (toks.size() != 4) throw ParseError(lineno, "nothing may follow 'identity'");
        iso.identity_shorthand = true;
      } else {
        if (toks.size() != 5) throw ParseError(lineno, "usage: iso <x> <y> H={..} map={..}");
        iso.h_gens = parse_int_set(expect_prefix(toks[3], "H=", lineno), lineno);
        iso.rep_map = parse_int_map(expect_prefix(toks[4], "map=", lineno), lineno);
      }
      spec.isos.push_back(std::move(iso));
    } else if (kw == "shift") {
      if (toks.size() != 5) throw ParseError(lineno, "usage: shift <x> <y> <z> rep=<g>");
      ShiftSpec sh;
      sh.x = parse_int(toks[1], lineno);
      sh.y = parse_int(toks[2], lineno);
      sh.z = parse_int(toks[3], lineno);
      sh.rep = parse_int(expect_prefix(toks[4], "rep=", lineno), lineno);
      sh.line = lineno;
      spec.shifts.push_back(sh);
    } else {
      throw ParseError(lineno, "unknown keyword '" + kw + "'");
    }
  }
  if (!saw_header) throw ParseError(lineno, "file must start with 'cra-spec 1'");
  return spec;
}

FiniteGroup build_group_expr(const GroupExpr& e) {
  switch (e.kind) {
    case GroupExpr::Kind::Cyclic:
      return cyclic(e.n);
    case GroupExpr::Kind::Table:
      return make_group(e.table);
    case GroupExpr::Kind::Product: {
      FiniteGroup g = build_group_expr(e.factors[0]);
      for (std::size_t i = 1; i < e.factors.size(); ++i)
        g = direct_product(g, build_group_expr(e.factors[i]));
      return g;
    }
  }
  throw ResolutionError("unreachable group constructor");
}

GroupTriple resolve_spec(const TripleSpec& spec, const ResolveLimits& limits) {
  const int m = static_cast<int>(spec.groups.size());
  std::vector<FiniteGroup> groups;
  for (int i = 0; i < m; ++i) {
    auto it = spec.groups.find(i);
    if (it == spec.groups.end())
      throw ResolutionError("group indices must be dense: " + std::to_string(i) + " missing");
    groups.push_back(build_group_expr(it->second));
    if (groups.back().order > limits.max_group_order)
      throw ResolutionError("group " + std::to_string(i) + " has order " +
                            std::to_string(groups.back().order) + " > limit " +
                            std::to_string(limits.max_group_order));
  }

  std::set<std::pair<int, int>> edges;
  for (auto& [x, y] : spec.pairs) {
    if (x < 0 || x >= m || y < 0 || y >= m)
      throw ResolutionError("pair " + pair_key(x, y) + " references an unknown group");
    edges.insert({x, y});
  }
  if (spec.closure) {
    for (int i = 0; i < m; ++i) edges.insert({i, i});
    bool changed = true;
    while (changed) {
      changed = false;
      const auto snapshot = edges;
      for (auto& [x, y] : snapshot) {
        changed |= edges.insert({y, x}).second;
        for (auto& [y2, z] : snapshot)
          if (y2 == y) changed |= edges.insert({x, z}).second;
      }
    }
  }

  std::map<std::pair<int, int>, QuotientIso> isos;
  for (const IsoSpec& is : spec.isos) {
    if (is.x < 0 || is.x >= m || is.y < 0 || is.y >= m)
      throw ResolutionError("iso at line " + std::to_string(is.line) +
                            " references an unknown group");
    if (!edges.count({is.x, is.y}))
      throw ResolutionError("iso for " + pair_key(is.x, is.y) + " but that pair is not in E");
    if (isos.count({is.x, is.y}))
      throw ResolutionError("duplicate iso for " + pair_key(is.x, is.y));
    if (is.identity_shorthand) {
      if (is.x != is.y)
        throw ResolutionError("iso " + pair_key(is.x, is.y) +
                              ": 'identity' is only valid on a diagonal pair");
      isos.emplace(std::make_pair(is.x, is.y), identity_iso(groups[is.x], is.x));
      continue;
    }
    Bits gens(groups[is.x].order);
    for (int g : is.h_gens) {
      if (g < 0 || g >= groups[is.x].order)
        throw ResolutionError("iso " + pair_key(is.x, is.y) + ": generator " + std::to_string(g) +
                              " is not in group " + std::to_string(is.x));
      gens.set(g);
    }
    for (auto& [a, b] : is.rep_map) {
      if (a < 0 || a >= groups[is.x].order)
        throw ResolutionError("iso " + pair_key(is.x, is.y) + ": representative " +
                              std::to_string(a) + " is not in group " + std::to_string(is.x));
      if (b < 0 || b >= groups[is.y].order)
        throw ResolutionError("iso " + pair_key(is.x, is.y) + ": representative " +
                              std::to_string(b) + " is not in group " + std::to_string(is.y));
    }
    isos.emplace(std::make_pair(is.x, is.y),
                 make_quotient_iso(groups[is.x], groups[is.y], is.x, is.y, gens, is.rep_map));
  }
  // Derived isos: identity on diagonals, inverses on reverse orientations.
  for (auto& [x, y] : edges)
    if (x == y && !isos.count({x, x}))
      isos.emplace(std::make_pair(x, x), identity_iso(groups[x], x));
  for (auto& [x, y] : edges) {
    if (isos.count({x, y}) || !isos.count({y, x})) continue;
    isos.emplace(std::make_pair(x, y), inverse_iso(isos.at({y, x})));
  }
  for (auto& [x, y] : edges)
    if (!isos.count({x, y}))
      throw ResolutionError("no isomorphism given or derivable for pair " + pair_key(x, y));

  std::vector<QuotientIso> iso_list;
  for (auto& [key, iso] : isos) iso_list.push_back(iso);
  GroupPair p = canonicalize(
      make_group_pair(std::move(groups), std::move(edges), iso_list));

  std::size_t atom_count = 0;
  for (auto& [key, sys] : p.systems) atom_count += sys.kappa();
  if (atom_count > static_cast<std::size_t>(limits.max_atoms))
    throw ResolutionError("the algebra would have " + std::to_string(atom_count) +
                          " atoms > limit " + std::to_string(limits.max_atoms));

  GroupTriple t = with_identity_shifts(std::move(p));
  std::set<std::array<int, 3>> overridden;
  for (const ShiftSpec& sh : spec.shifts) {
    const std::array<int, 3> key = {sh.x, sh.y, sh.z};
    if (!t.shifts.count(key))
      throw ResolutionError("shift " + triple_key(sh.x, sh.y, sh.z) +
                            " is not a composable triple");
    if (!overridden.insert(key).second)
      throw ResolutionError("duplicate shift for " + triple_key(sh.x, sh.y, sh.z));
    if (sh.rep < 0 || sh.rep >= t.pair.group(sh.x).order)
      throw ResolutionError("shift " + triple_key(sh.x, sh.y, sh.z) + ": representative " +
                            std::to_string(sh.rep) + " is not in group " + std::to_string(sh.x));
    const Bits hh = complex_product(t.pair.group(sh.x), t.pair.system(sh.x, sh.y).H,
                                    t.pair.system(sh.x, sh.z).H);
    t.shifts[key] = left_coset(t.pair.group(sh.x), sh.rep, hh);
  }
  return t;
}

}  // namespace cra
