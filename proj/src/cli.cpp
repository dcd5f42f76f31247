#include "cra/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "cra/algebra.hpp"
#include "cra/analysis.hpp"
#include "cra/lyndon.hpp"
#include "cra/spec_format.hpp"

namespace cra {

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ResolutionError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

GroupTriple load_triple(const std::string& path) {
  return resolve_spec(parse_spec(read_file(path)));
}

// Algebra arguments: "lyndon:N", "complex:<group constructor>", or the path
// of a triple specification file.
struct LoadedAlgebra {
  FiniteRelationAlgebra algebra;
  std::optional<GroupTriple> triple;  // set when loaded from a file
};

LoadedAlgebra load_algebra(const std::string& arg) {
  LoadedAlgebra out;
  if (arg.rfind("lyndon:", 0) == 0) {
    int n = 0;
    try {
      n = std::stoi(arg.substr(7));
    } catch (const std::exception&) {
      throw ResolutionError("bad point count in '" + arg + "'");
    }
    out.algebra = lyndon_algebra(n);
    return out;
  }
  if (arg.rfind("complex:", 0) == 0) {
    out.algebra = complex_algebra(build_group_expr(parse_group_constructor(arg.substr(8))));
    return out;
  }
  out.triple = load_triple(arg);
  out.algebra = build_full_algebra(*out.triple);
  return out;
}

void print_check(std::ostream& out, const std::string& name, const Report& r) {
  out << "check " << name << " " << (r.ok() ? "ok" : "fail") << "\n";
  out << r.to_string();
}

void print_header(std::ostream& out, const std::string& command, const std::string& input) {
  out << "cra-report 1\n";
  out << "command " << command << "\n";
  out << "input " << input << "\n";
}

int finish(std::ostream& out, bool pass) {
  out << "verdict " << (pass ? "pass" : "fail") << "\n";
  return pass ? kExitPass : kExitCheckFailed;
}

int cmd_validate(const std::string& path, std::uint64_t seed, std::ostream& out) {
  const GroupTriple t = load_triple(path);
  print_header(out, "validate", path);
  bool ok = true;

  const Report eq = check_equivalence(t.pair);
  print_check(out, "equivalence", eq);
  ok = ok && eq.ok();

  GroupTriple canon = t;
  try {
    canon.pair = canonicalize(t.pair);
    Report r;
    print_check(out, "convention", r);
  } catch (const ConventionUnsatisfiable& e) {
    Report r;
    r.fail("converse", "-", e.what());
    print_check(out, "convention", r);
    return finish(out, false);
  }

  const Report ident = check_identity_condition(canon.pair);
  print_check(out, "identity", ident);
  ok = ok && ident.ok();

  const Report conv = check_converse_condition(canon.pair);
  print_check(out, "converse", conv);
  ok = ok && conv.ok();

  const Report comp = check_composition_condition(canon.pair);
  print_check(out, "composition", comp);
  ok = ok && comp.ok();

  if (ok) {
    const Report img = check_image_equations(canon.pair);
    print_check(out, "image", img);
    ok = ok && img.ok();
  } else {
    out << "check image skipped\n";
  }

  const Report shifts = validate_shifts(canon);
  print_check(out, "shifts", shifts);
  ok = ok && shifts.ok();

  if (ok) {
    CoherenceOptions opt;
    opt.seed = seed;
    const Report part = check_block_partitions(canon.pair);
    print_check(out, "partition", part);
    Report coh = check_converse_coherence(canon.pair, opt);
    coh.merge(check_composition_coherence(canon.pair, opt));
    print_check(out, "coherence", coh);
    ok = ok && part.ok() && coh.ok();
  }
  return finish(out, ok);
}

int cmd_build(const std::string& path, std::ostream& out) {
  const GroupTriple t = load_triple(path);
  const Report v = validate_triple(t);
  if (!v.ok()) {
    print_header(out, "build", path);
    print_check(out, "validate", v);
    return finish(out, false);
  }
  out << dump_atom_structure(build_full_algebra(t));
  return kExitPass;
}

int cmd_axioms(const std::string& arg, std::ostream& out) {
  const LoadedAlgebra la = load_algebra(arg);
  print_header(out, "axioms", arg);
  out << "atoms " << la.algebra.n() << "\n";
  const Report r = check_ra_axioms(la.algebra);
  print_check(out, "axioms", r);
  return finish(out, r.ok());
}

int cmd_measure(const std::string& arg, std::ostream& out) {
  const LoadedAlgebra la = load_algebra(arg);
  print_header(out, "measure", arg);
  const MeasurabilityReport rep = measurability(la.algebra);
  out << "measurable " << (rep.measurable ? "true" : "false") << "\n";
  for (const AtomMeasure& m : rep.per_atom)
    out << "measure " << m.atom << " " << la.algebra.s.label(m.atom)
        << " measurable=" << (m.measurable ? "true" : "false") << " measure=" << m.measure
        << " exact=" << (m.exact ? "true" : "false") << "\n";
  return finish(out, rep.measurable);
}

int cmd_simple(const std::string& arg, std::ostream& out) {
  const LoadedAlgebra la = load_algebra(arg);
  print_header(out, "simple", arg);
  const bool alg = is_simple_ra(la.algebra);
  out << "simple-algebra " << (alg ? "true" : "false") << "\n";
  bool pass = alg;
  if (la.triple) {
    const bool tri = is_simple_triple(*la.triple);
    out << "simple-triple " << (tri ? "true" : "false") << "\n";
    out << "agreement " << (tri == alg ? "true" : "false") << "\n";
    pass = alg && tri == alg;
  }
  return finish(out, pass);
}

int cmd_lyndon(int n, std::ostream& out) {
  out << dump_atom_structure(lyndon_algebra(n));
  return kExitPass;
}

int cmd_embed(const std::string& src_arg, const std::string& tgt_arg, std::uint64_t budget,
              std::ostream& out) {
  const LoadedAlgebra src = load_algebra(src_arg);
  const LoadedAlgebra tgt = load_algebra(tgt_arg);
  print_header(out, "embed", src_arg + " -> " + tgt_arg);
  const EmbeddingResult res = find_embedding(src.algebra, tgt.algebra, budget);
  switch (res.status) {
    case EmbedStatus::Found:
      out << "status found\n";
      break;
    case EmbedStatus::NoEmbedding:
      out << "status no-embedding\n";
      break;
    case EmbedStatus::NotFoundWithinBudget:
      out << "status budget-exhausted\n";
      break;
  }
  out << "nodes " << res.nodes << "\n";
  if (res.embedding) {
    for (int i = 0; i < src.algebra.n(); ++i)
      out << "map " << i << " " << src.algebra.s.label(i) << " -> "
          << set_to_string(res.embedding->map[i]) << "\n";
    const Report sound = verify_embedding_exhaustive(*res.embedding);
    print_check(out, "soundness", sound);
    return finish(out, sound.ok());
  }
  return finish(out, false);
}

int cmd_compare_comp(const std::string& path, std::ostream& out) {
  const GroupTriple t = load_triple(path);
  const Report v = validate_triple(t);
  print_header(out, "compare-comp", path);
  if (!v.ok()) {
    print_check(out, "validate", v);
    return finish(out, false);
  }
  const auto diffs = compare_compositions(t);
  out << "differences " << diffs.size() << "\n";
  for (auto& [a, b] : diffs) out << "diff " << atom_label(a) << " " << atom_label(b) << "\n";
  return finish(out, true);
}

int cmd_search_shifts(const std::string& path, std::uint64_t budget, std::ostream& out) {
  const GroupTriple t = load_triple(path);
  print_header(out, "search-shifts", path);
  GroupTriple canon = t;
  canon.pair = canonicalize(t.pair);
  Report pre;
  pre.merge(check_identity_condition(canon.pair));
  pre.merge(check_converse_condition(canon.pair));
  pre.merge(check_composition_condition(canon.pair));
  if (!pre.ok()) {
    print_check(out, "preconditions", pre);
    return finish(out, false);
  }
  const ShiftSearchResult res = search_shift_systems(canon.pair, budget);
  out << "tested " << res.tested << "\n";
  out << "budget-exceeded " << (res.budget_exceeded ? "true" : "false") << "\n";
  out << "passing " << res.passing.size() << "\n";
  int idx = 0;
  for (const ShiftAssignment& a : res.passing) {
    out << "assignment " << idx++ << " trivial=" << (a.trivial ? "true" : "false");
    for (auto& [key, c] : a.shifts)
      out << " C" << triple_key(key[0], key[1], key[2]) << "=" << set_to_string(c);
    out << "\n";
  }
  return finish(out, !res.passing.empty());
}

int cmd_analyze(const std::string& path, std::ostream& out) {
  const GroupTriple t = load_triple(path);
  print_header(out, "analyze", path);
  const Report v = validate_triple(t);
  if (!v.ok()) {
    print_check(out, "validate", v);
    return finish(out, false);
  }
  const FiniteRelationAlgebra a = build_full_algebra(t);
  const Report ax = check_ra_axioms(a);
  print_check(out, "axioms", ax);
  if (!ax.ok()) return finish(out, false);

  const TrivialityReport tr = triviality_analysis(t);
  out << "all-h-trivial " << (tr.all_h_trivial ? "true" : "false") << "\n";
  out << "all-atoms-functional " << (tr.all_atoms_functional ? "true" : "false") << "\n";
  out << "all-shifts-trivial " << (tr.all_shifts_trivial ? "true" : "false") << "\n";
  for (auto& [x, y] : tr.nontrivial_h) out << "nontrivial-h " << pair_key(x, y) << "\n";
  print_check(out, "triviality-invariant", tr.invariant);

  const Report cc = verify_coset_consequences(t);
  print_check(out, "coset-consequences", cc);

  const MeasurabilityReport mr = measurability(a);
  out << "measurable " << (mr.measurable ? "true" : "false") << "\n";
  out << "simple-algebra " << (is_simple_ra(a) ? "true" : "false") << "\n";
  out << "simple-triple " << (is_simple_triple(t) ? "true" : "false") << "\n";
  return finish(out, tr.invariant.ok() && cc.ok());
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite relation algebras from systems of groups and quotient isomorphisms"};
  app.require_subcommand(1);
  std::uint64_t seed = 1;
  app.add_option("--seed", seed, "seed for sampled coherence checks");

  std::string path, src, tgt, target;
  int lyndon_n = 0;
  std::uint64_t embed_budget = 1000000;
  std::uint64_t shift_budget = 100000;

  auto* validate = app.add_subcommand("validate", "run all closure and shift checks on a spec");
  validate->add_option("spec", path, "triple specification file")->required();
  auto* build = app.add_subcommand("build", "validate and dump the atom structure");
  build->add_option("spec", path, "triple specification file")->required();
  auto* axioms = app.add_subcommand("axioms", "check the relation-algebra laws");
  axioms->add_option("algebra", target, "spec file, lyndon:N or complex:GROUP")->required();
  auto* measure = app.add_subcommand("measure", "measurability report");
  measure->add_option("algebra", target, "spec file, lyndon:N or complex:GROUP")->required();
  auto* simple = app.add_subcommand("simple", "simplicity of the algebra (and triple)");
  simple->add_option("algebra", target, "spec file, lyndon:N or complex:GROUP")->required();
  auto* lyndon = app.add_subcommand("lyndon", "dump the Lyndon algebra of an n-point line");
  lyndon->add_option("n", lyndon_n, "number of points")->required();
  auto* embed = app.add_subcommand("embed", "search for an embedding of one algebra in another");
  embed->add_option("source", src, "spec file, lyndon:N or complex:GROUP")->required();
  embed->add_option("target", tgt, "spec file, lyndon:N or complex:GROUP")->required();
  embed->add_option("--budget", embed_budget, "search node budget");
  auto* compare = app.add_subcommand("compare-comp", "diff shifted against ordinary composition");
  compare->add_option("spec", path, "triple specification file")->required();
  auto* search = app.add_subcommand("search-shifts", "enumerate axiom-passing shift systems");
  search->add_option("spec", path, "triple specification file")->required();
  search->add_option("--budget", shift_budget, "assignment budget");
  auto* analyze = app.add_subcommand("analyze", "triviality, coset consequences, measure, simplicity");
  analyze->add_option("spec", path, "triple specification file")->required();

  std::vector<std::string> argv = args;
  std::reverse(argv.begin(), argv.end());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitPass;
    }
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(path, seed, out);
    if (build->parsed()) return cmd_build(path, out);
    if (axioms->parsed()) return cmd_axioms(target, out);
    if (measure->parsed()) return cmd_measure(target, out);
    if (simple->parsed()) return cmd_simple(target, out);
    if (lyndon->parsed()) return cmd_lyndon(lyndon_n, out);
    if (embed->parsed()) return cmd_embed(src, tgt, embed_budget, out);
    if (compare->parsed()) return cmd_compare_comp(path, out);
    if (search->parsed()) return cmd_search_shifts(path, shift_budget, out);
    if (analyze->parsed()) return cmd_analyze(path, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << "error: no subcommand\n";
  return kExitUsage;
}

}  // namespace cra
