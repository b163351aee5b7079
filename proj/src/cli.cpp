#include "hodgelef/cli.hpp"

#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hodgelef/hodge_riemann.hpp"
#include "hodgelef/instance_io.hpp"
#include "hodgelef/instances.hpp"
#include "hodgelef/lefschetz.hpp"
#include "hodgelef/morphic.hpp"

namespace hodgelef {

namespace {

struct Report {
  Json json;
  std::string text;
  int code = kExitOk;
};

Json sigma_json(const SignatureTriple& s) {
  return {{"plus", s.n_plus}, {"minus", s.n_minus}, {"zero", s.n_zero}, {"net", s.net()}};
}

std::string sigma_text(const SignatureTriple& s) {
  return "sigma = " + std::to_string(s.net()) + " (plus " + std::to_string(s.n_plus) + ", minus " +
         std::to_string(s.n_minus) + ", zero " + std::to_string(s.n_zero) + ")";
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

Json hodge_json(const HodgeTable& t) {
  Json out = Json::object();
  for (const auto& [b, dim] : t) out[bigrade_key(b)] = dim;
  return out;
}

Json index_json(const IndexReport& rep) {
  Json blocks = Json::array();
  for (const auto& b : rep.e_blocks)
    blocks.push_back({{"p", b.p},
                      {"q", b.q},
                      {"k", b.k},
                      {"real_dim", b.real_dim},
                      {"expected_dim", b.expected_dim},
                      {"sign", b.sign},
                      {"definite", b.definite}});
  return {{"sigma_direct", sigma_json(rep.sigma_direct)},
          {"sigma_formula", rep.sigma_formula},
          {"match", rep.match},
          {"e_blocks", blocks},
          {"blocks_orthogonal", rep.blocks_orthogonal},
          {"blocks_definite", rep.blocks_definite},
          {"block_dims_match", rep.block_dims_match},
          {"total_dim_match", rep.total_dim_match}};
}

std::string index_text(const IndexReport& rep) {
  std::ostringstream s;
  s << "direct: " << sigma_text(rep.sigma_direct) << "\n";
  s << "formula: " << rep.sigma_formula << "\n";
  s << "match: " << yes_no(rep.match) << "\n";
  for (const auto& b : rep.e_blocks)
    s << "  E(" << b.p << "," << b.q << ")_" << b.k << ": dim " << b.real_dim << " (expected " << b.expected_dim
      << "), sign " << (b.sign > 0 ? "+" : "-") << ", definite " << yes_no(b.definite) << "\n";
  s << "blocks orthogonal: " << yes_no(rep.blocks_orthogonal) << ", definite: " << yes_no(rep.blocks_definite)
    << ", dims: " << yes_no(rep.block_dims_match && rep.total_dim_match);
  return s.str();
}

bool index_ok(const IndexReport& rep) {
  return rep.match && rep.blocks_orthogonal && rep.blocks_definite && rep.block_dims_match && rep.total_dim_match;
}

Json failures_json(const ValidationReport& rep) {
  Json out = Json::array();
  for (const auto& c : rep.checks)
    if (!c.passed) out.push_back(c.name);
  return out;
}

std::string failures_text(const std::string& title, const ValidationReport& rep) {
  std::ostringstream s;
  s << title << ": " << (rep.passed() ? "passed" : "FAILED") << " (" << rep.checks.size() << " checks)";
  for (const auto& c : rep.checks)
    if (!c.passed) s << "\n  failed " << c.name << (c.detail.empty() ? "" : ": " + c.detail);
  return s.str();
}

GVector parse_vector_arg(const std::string& text, std::size_t expected) {
  GVector v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(parse_gauss(item));
  if (v.size() != expected)
    throw StructuralError("vector has " + std::to_string(v.size()) + " entries, expected " + std::to_string(expected));
  return v;
}

FamilyKind parse_kind(const std::string& s) {
  if (s == "EH") return FamilyKind::EH;
  if (s == "OH") return FamilyKind::OH;
  if (s == "LH") return FamilyKind::LH;
  throw StructuralError("unknown family kind '" + s + "' (EH, OH or LH)");
}

void require_valid_filtration(const Instance& inst) {
  auto rep = validate_filtration(inst.algebra, inst.filtration);
  if (!rep.passed()) {
    std::string first;
    for (const auto& c : rep.checks)
      if (!c.passed) {
        first = c.name;
        break;
      }
    throw PreconditionError("filtration is not valid (" + first + ")");
  }
}

struct Args {
  std::string file;
  int degree = 0;
  std::string vector;
  int t = 0;
  std::string kind = "EH";
  int a = 0;
  int b = 0;
  bool definite = false;
  std::string output;
  std::string name;
  std::map<std::string, long> ints;
  std::vector<std::string> prim;
  std::uint64_t seed = 0;
  RandomBounds bounds;
  std::string mode = "conjecture_holds";
  bool no_scramble = false;
};

Report cmd_validate(const Args& args) {
  Instance inst = load_instance(args.file);
  auto lrep = validate_lefschetz(inst.algebra, args.definite);
  ValidationReport frep;
  if (lrep.passed()) frep = validate_filtration(inst.algebra, inst.filtration);
  Report r;
  bool ok = lrep.passed() && frep.passed();
  r.json = {{"lefschetz", {{"passed", lrep.passed()}, {"checks", lrep.checks.size()}, {"failures", failures_json(lrep)}}},
            {"filtration", {{"passed", frep.passed()}, {"checks", frep.checks.size()}, {"failures", failures_json(frep)}}},
            {"passed", ok}};
  r.text = failures_text("lefschetz axioms", lrep) + "\n" + failures_text("filtration", frep);
  r.code = ok ? kExitOk : kExitPropertyFailed;
  return r;
}

Report cmd_decompose(const Args& args) {
  Instance inst = load_instance(args.file);
  const auto& a = inst.algebra;
  if (args.degree < 0 || args.degree > a.frame().top_degree()) throw StructuralError("degree out of range");
  BigradedVector v{args.degree, parse_vector_arg(args.vector, a.betti(args.degree))};
  auto dec = lefschetz_decompose(a, v);
  Report r;
  Json comps = Json::array();
  std::ostringstream s;
  s << "degree " << dec.degree << ": " << dec.components.size() << " component(s)";
  for (const auto& c : dec.components) {
    comps.push_back({{"j", c.j}, {"degree", c.alpha.degree}, {"alpha", vector_json(c.alpha.coords)}});
    s << "\n  L^" << c.j << " of degree-" << c.alpha.degree << " primitive " << vector_json(c.alpha.coords).dump();
  }
  r.json = {{"degree", dec.degree}, {"components", comps}};
  r.text = s.str();
  return r;
}

Report cmd_star(const Args& args) {
  Instance inst = load_instance(args.file);
  const auto& a = inst.algebra;
  if (args.degree < 0 || args.degree > a.frame().top_degree()) throw StructuralError("degree out of range");
  BigradedVector v{args.degree, parse_vector_arg(args.vector, a.betti(args.degree))};
  BigradedVector w = star(a, v);
  Report r;
  r.json = {{"degree", w.degree}, {"vector", vector_json(w.coords)}};
  r.text = "star in degree " + std::to_string(w.degree) + ": " + vector_json(w.coords).dump();
  return r;
}

Report cmd_signature(const Args& args) {
  Instance inst = load_instance(args.file);
  auto sig = middle_signature(inst.algebra);
  Report r;
  r.json = {{"sigma", sigma_json(sig)}};
  r.text = sigma_text(sig);
  return r;
}

Report cmd_hodge_riemann(const Args& args) {
  Instance inst = load_instance(args.file);
  auto rep = verify_hodge_riemann(inst.algebra);
  Report r;
  Json orth = Json::array(), sign = Json::array();
  std::ostringstream s;
  s << "Hodge-Riemann relations: " << (rep.passed ? "passed" : "FAILED");
  for (const auto& [x, y] : rep.orthogonality_failures) {
    orth.push_back({bigrade_key(x), bigrade_key(y)});
    s << "\n  Q(B^{" << bigrade_key(x) << "}, B^{" << bigrade_key(y) << "}) != 0";
  }
  for (const auto& f : rep.sign_failures) {
    sign.push_back({{"bigrade", bigrade_key(f.bigrade)}, {"witness", vector_json(f.witness)}});
    s << "\n  sign condition fails on B^{" << bigrade_key(f.bigrade) << "}, witness " << vector_json(f.witness).dump();
  }
  r.json = {{"passed", rep.passed}, {"orthogonality_failures", orth}, {"sign_failures", sign}};
  r.text = s.str();
  r.code = rep.passed ? kExitOk : kExitPropertyFailed;
  return r;
}

Report cmd_index(const Args& args) {
  Instance inst = load_instance(args.file);
  auto rep = verify_index_theorem(inst.algebra);
  Report r;
  r.json = index_json(rep);
  r.text = index_text(rep);
  r.code = index_ok(rep) ? kExitOk : kExitPropertyFailed;
  return r;
}

Report cmd_morphic_sig(const Args& args) {
  Instance inst = load_instance(args.file);
  require_valid_filtration(inst);
  auto sig = morphic_signature(inst.algebra, inst.filtration, args.t);
  auto h = morphic_hodge_numbers(inst.algebra, inst.filtration, args.t);
  Report r;
  r.json = {{"t", args.t}, {"sigma", sigma_json(sig)}, {"hodge_numbers", hodge_json(h)}};
  r.text = "t = " + std::to_string(args.t) + ": " + sigma_text(sig);
  return r;
}

Report cmd_conjecture(const Args& args) {
  Instance inst = load_instance(args.file);
  require_valid_filtration(inst);
  FamilyKind kind = parse_kind(args.kind);
  auto rep = conjecture_report(inst.algebra, inst.filtration, kind, args.a, args.b);
  Report r;
  r.json = {{"kind", to_string(kind)},
            {"a", args.a},
            {"b", args.b},
            {"stmt2_dims", rep.stmt2_dims},
            {"stmt3_decomp", rep.stmt3_decomp},
            {"stmt4_star", rep.stmt4_star},
            {"stmt5_lambda", rep.stmt5_lambda},
            {"stmt6_adjoint", rep.stmt6_adjoint},
            {"pairing_nondeg", rep.pairing_nondeg},
            {"all_agree", rep.all_agree},
            {"pairing_implies_dims", rep.pairing_implies_dims},
            {"failures", rep.failures}};
  std::ostringstream s;
  s << to_string(kind) << "(a=" << args.a << ", b=" << args.b << ")\n"
    << "  stmt2 dims: " << yes_no(rep.stmt2_dims) << "\n"
    << "  stmt3 decomposition: " << yes_no(rep.stmt3_decomp) << "\n"
    << "  stmt4 star: " << yes_no(rep.stmt4_star) << "\n"
    << "  stmt5 Lambda: " << yes_no(rep.stmt5_lambda) << "\n"
    << "  stmt6 adjoint: " << yes_no(rep.stmt6_adjoint) << "\n"
    << "  pairing nondegenerate: " << yes_no(rep.pairing_nondeg) << "\n"
    << "  all agree: " << yes_no(rep.all_agree);
  r.text = s.str();
  r.code = rep.all_agree && rep.pairing_implies_dims ? kExitOk : kExitPropertyFailed;
  return r;
}

Report cmd_morphic_index(const Args& args) {
  Instance inst = load_instance(args.file);
  require_valid_filtration(inst);
  auto rep = morphic_hodge_index(inst.algebra, inst.filtration, args.a);
  Report r;
  r.json = index_json(rep.index);
  r.json["a"] = args.a;
  r.json["level"] = rep.level;
  r.json["sub_decomposition"] = rep.sub_decomposition;
  r.json["sub_hard_lefschetz"] = rep.sub_hard_lefschetz;
  r.json["sub_hodge_riemann"] = rep.sub_hodge_riemann;
  r.text = "level t = " + std::to_string(rep.level) + "\n" + index_text(rep.index) + "\nsub-Lefschetz: decomposition " +
           yes_no(rep.sub_decomposition) + ", hard Lefschetz " + yes_no(rep.sub_hard_lefschetz) +
           ", Hodge-Riemann " + yes_no(rep.sub_hodge_riemann);
  bool ok = index_ok(rep.index) && rep.sub_decomposition && rep.sub_hard_lefschetz && rep.sub_hodge_riemann;
  r.code = ok ? kExitOk : kExitPropertyFailed;
  return r;
}

Report write_instance(const Instance& inst, const Args& args, const std::string& what, std::ostream& out) {
  Report r;
  if (args.output.empty()) {
    out << emit_instance(inst).dump(2) << "\n";
    r.code = -1;  // already printed
    return r;
  }
  save_instance(inst, args.output);
  r.json = {{"written", args.output}, {"instance", what}};
  r.text = "wrote " + what + " to " + args.output;
  return r;
}

Report cmd_example(const Args& args, std::ostream& out) {
  BuiltinParams params;
  params.ints = args.ints;
  for (const auto& item : args.prim) {
    auto colon = item.find(':');
    if (colon == std::string::npos) throw StructuralError("--prim entries look like p,q:dim");
    Bigrade b = parse_bigrade_key(item.substr(0, colon));
    try {
      params.primitive[b] = std::stoi(item.substr(colon + 1));
    } catch (const std::exception&) {
      throw StructuralError("malformed --prim dimension in '" + item + "'");
    }
  }
  return write_instance(builtin(args.name, params), args, args.name, out);
}

Report cmd_random(const Args& args, std::ostream& out) {
  RandomMode mode;
  if (args.mode == "conjecture_holds")
    mode = RandomMode::ConjectureHolds;
  else if (args.mode == "arbitrary")
    mode = RandomMode::Arbitrary;
  else
    throw StructuralError("unknown mode '" + args.mode + "' (conjecture_holds or arbitrary)");
  RandomBounds bounds = args.bounds;
  bounds.scramble = !args.no_scramble;
  return write_instance(random_instance(args.seed, bounds, mode), args,
                        "random instance (seed " + std::to_string(args.seed) + ")", out);
}

}  // namespace

int run_cli(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Hodge-Lefschetz algebra toolkit", "hodgelef"};
  app.fallthrough();
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Machine-readable JSON report");

  Args args;
  std::function<Report(std::ostream&)> handler;
  auto file_cmd = [&](const char* name, const char* help, auto fn) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", args.file, "Instance file")->required();
    sub->callback([&handler, fn, &args] { handler = [fn, &args](std::ostream&) { return fn(args); }; });
    return sub;
  };

  file_cmd("validate", "Check the Lefschetz axioms and the filtration", cmd_validate)
      ->add_flag("--definite", args.definite, "Also report positive definiteness of the Gram form");
  auto* dec = file_cmd("decompose", "Lefschetz decomposition of a vector", cmd_decompose);
  dec->add_option("--degree", args.degree, "Degree k")->required();
  dec->add_option("--vector", args.vector, "Comma-separated coordinates in H^k")->required();
  auto* st = file_cmd("star", "Apply the star operator", cmd_star);
  st->add_option("--degree", args.degree, "Degree k")->required();
  st->add_option("--vector", args.vector, "Comma-separated coordinates in H^k")->required();
  file_cmd("signature", "Signature of the middle intersection pairing", cmd_signature);
  file_cmd("hodge-riemann", "Check the Hodge-Riemann bilinear relations", cmd_hodge_riemann);
  file_cmd("index", "Verify the Hodge index theorem with the block table", cmd_index);
  file_cmd("morphic-sig", "Morphic signature at level t", cmd_morphic_sig)
      ->add_option("--t", args.t, "Level t")
      ->required();
  auto* conj = file_cmd("conjecture", "Check the equivalent forms of the morphic conjecture", cmd_conjecture);
  conj->add_option("--kind", args.kind, "EH, OH or LH");
  conj->add_option("--a", args.a, "Index a of EH(a)");
  conj->add_option("--b", args.b, "Index b of OH(b)");
  file_cmd("morphic-index", "Morphic Hodge index theorem on EH(a)", cmd_morphic_index)
      ->add_option("--a", args.a, "Index a")
      ->required();

  auto* ex = app.add_subcommand("example", "Write a named model instance");
  ex->add_option("name", args.name, "projective_space, surface, abelian_surface, k3 or hypersurface")->required();
  for (const char* key : {"m", "q", "pg", "h11", "rho", "n", "r"}) {
    ex->add_option_function<long>(std::string("--") + key, [&args, key](const long& v) { args.ints[key] = v; },
                                  std::string("Parameter ") + key);
  }
  ex->add_option("--prim", args.prim, "Middle primitive dimensions as p,q:dim (hypersurface)");
  ex->add_option("-o,--output", args.output, "Output file (stdout when omitted)");
  ex->callback([&] { handler = [&args](std::ostream& o) { return cmd_example(args, o); }; });

  auto* rnd = app.add_subcommand("random", "Write a seeded random instance");
  rnd->add_option("--seed", args.seed, "Seed")->required();
  rnd->add_option("--min-m", args.bounds.min_m, "Smallest middle degree");
  rnd->add_option("--max-m", args.bounds.max_m, "Largest middle degree");
  rnd->add_option("--max-dim", args.bounds.max_dim, "Largest primitive block dimension");
  rnd->add_option("--zero-percent", args.bounds.zero_percent, "Chance in percent of an empty primitive block");
  rnd->add_flag("--no-scramble", args.no_scramble, "Keep the free coordinates");
  rnd->add_option("--mode", args.mode, "conjecture_holds or arbitrary");
  rnd->add_option("-o,--output", args.output, "Output file (stdout when omitted)");
  rnd->callback([&] { handler = [&args](std::ostream& o) { return cmd_random(args, o); }; });

  std::vector<std::string> reversed(argv.rbegin(), argv.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitStructural;
  }

  try {
    Report r = handler(out);
    if (r.code == -1) return kExitOk;
    if (json)
      out << r.json.dump(2) << "\n";
    else
      out << r.text << "\n";
    return r.code;
  } catch (const StructuralError& e) {
    err << "error: " << e.what() << "\n";
    return kExitStructural;
  } catch (const NotHermitianError& e) {
    err << "error: " << e.what() << "\n";
    return kExitStructural;
  } catch (const PreconditionError& e) {
    err << "precondition: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitStructural;
  }
}

}  // namespace hodgelef
