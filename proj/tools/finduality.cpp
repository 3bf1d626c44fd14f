// Command-line front end: validate, check, apply, roundtrip, char-report,
// enumerate, suite, dot. Exit codes: 0 pass, 1 law failure, 2 input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "finduality/finduality.hpp"

using namespace finduality;

namespace {

constexpr int kPass = 0;
constexpr int kLawFailure = 1;
constexpr int kInputError = 2;

struct Options {
  std::string file;
  std::string name;  // property, functor or duality
  std::string kind;
  std::string out;
  std::string format = "json";
  int bound = 4;
  int max_points = 4;
  int max_family = 8;
  int max_lattice = 8;
  int parallelism = 1;
  bool negative_control = false;
  bool pp = false;
};

void write(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw Error(ErrorCode::SchemaError, "cannot write " + o.out);
  f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json priestley_json(const PriestleySpace& Y) {
  json opens = json::array();
  for (Mask m : Y.topology.members) {
    json a = json::array();
    for (int i : mask_indices(m)) a.push_back(i);
    opens.push_back(a);
  }
  json order = json::array();
  for (auto [a, b] : Y.order.covers()) order.push_back({a, b});
  return {{"kind", "priestley"}, {"ground", Y.ground}, {"opens", opens}, {"order", order}};
}

template <class T>
const T& expect(const Instance& x, const char* what) {
  if (!std::holds_alternative<T>(x))
    throw Error(ErrorCode::SchemaError, std::string("expected ") + what + ", got " + kind_of(x));
  return std::get<T>(x);
}

int cmd_validate(const Options& o) {
  Instance x = parse_file(o.file);
  write(o, dump({{"valid", true}, {"kind", kind_of(x)}}));
  return kPass;
}

int cmd_check(const Options& o) {
  Instance x = parse_file(o.file);
  const std::string& p = o.name;
  std::optional<bool> v;
  if (auto* P = std::get_if<PervinSpace>(&x)) {
    if (p == "t0") v = is_T0(*P);
    else if (p == "td") v = is_TD(*P);
    else if (p == "complete") v = is_cauchy_complete(*P);
    else if (p == "symmetric") v = is_symmetric(*P);
    else if (p == "strongly-exact") v = is_strongly_exact(*P);
    else if (p == "spectral") v = is_spectral(P->family);
    else if (p == "perv-prime") v = in_perv_prime(*P);
    else if (p == "zero-dimensional") v = is_zero_dimensional_topology(omega_topology(*P));
  } else if (auto* F = std::get_if<FrithPair>(&x)) {
    if (p == "frith") v = F->is_frith();
    else if (p == "complete") v = is_complete(*F).value();
    else if (p == "symmetric") v = is_symmetric(*F);
    else if (p == "strongly-exact") v = is_strongly_exact(*F);
    else if (p == "locale-based") v = is_locale_based(*F);
    else if (p == "ffrm-prime") v = in_ffrm_prime(*F);
  } else if (auto* L = std::get_if<FinLattice>(&x)) {
    if (p == "distributive") v = L->is_distributive();
    else if (p == "boolean") v = is_boolean(*L);
    else if (p == "zero-dimensional") v = is_zero_dimensional_frame(*L);
  } else if (auto* X = std::get_if<BiSpace>(&x)) {
    if (p == "pairwise-stone") v = is_pairwise_stone(*X);
    else if (p == "zero-dimensional") v = is_zero_dimensional(*X);
    else if (p == "compact") v = is_compact(*X);
    else if (p == "t0") v = is_T0(*X);
  } else if (auto* B = std::get_if<BiFrame>(&x)) {
    if (p == "zero-dimensional") v = is_zero_dimensional(*B);
    else if (p == "compact") v = is_compact(*B);
  }
  if (!v) throw Error(ErrorCode::SchemaError, "property '" + p + "' does not apply to " + kind_of(x));
  write(o, dump({{"property", p}, {"kind", kind_of(x)}, {"value", *v}}));
  return kPass;
}

int cmd_apply(const Options& o) {
  Instance x = parse_file(o.file);
  const std::string& f = o.name;
  std::optional<Instance> y;
  std::optional<json> raw;
  if (auto* P = std::get_if<PervinSpace>(&x)) {
    if (f == "omega") y = omega_functor(*P);
    else if (f == "psym") y = symmetrize(*P);
    else if (f == "sk") y = skula_space(*P);
    else if (f == "lperv") y = lperv(*P);
    else if (f == "u") y = PervinSpace::make(P->ground, u(*P).members);
    else if (f == "ko") y = ko(P->ground, P->family);
    else if (f == "pp") raw = priestley_json(pp(*P));
    else if (f == "cup") y = cup(pp(*P));
  } else if (auto* F = std::get_if<FrithPair>(&x)) {
    if (f == "pt") y = pt_functor(*F).space;
    else if (f == "fsym") y = fsym(*F).pair;
    else if (f == "skf") y = skula_biframe(*F).frame;
    else if (f == "lfrith") y = lfrith(*F);
    else if (f == "completion") y = completion(*F).pair;
  } else if (auto* L = std::get_if<FinLattice>(&x)) {
    if (f == "pff") y = pf_space(*L);
    else if (f == "idlf") y = idlf(*L);
    else if (f == "bb") y = bb_frame(*L).pair;
  } else if (auto* X = std::get_if<BiSpace>(&x)) {
    if (f == "clplus") y = clplus(*X);
    else if (f == "omega-b") y = omega_b(*X);
  } else if (auto* B = std::get_if<BiFrame>(&x)) {
    if (f == "bbplus") y = bbplus(*B).pair;
    else if (f == "pt-b") y = pt_b(*B).space;
  } else if (auto* h = std::get_if<PervinMap>(&x)) {
    if (f == "omega") y = omega_functor(*h);
    else if (f == "psym") y = symmetrize(*h);
    else if (f == "sk") y = skula_space(*h);
    else if (f == "lperv") y = lperv(*h);
  } else if (auto* h = std::get_if<FrithHom>(&x)) {
    if (f == "pt") y = pt_functor(*h);
    else if (f == "fsym") y = fsym(*h);
    else if (f == "skf") y = skula_biframe(*h);
    else if (f == "lfrith") y = lfrith(*h);
  } else if (auto* h = std::get_if<LatticeHom>(&x)) {
    if (f == "pff") y = pf_space(*h);
    else if (f == "idlf") y = idlf(*h);
  } else if (auto* h = std::get_if<BiMap>(&x)) {
    if (f == "clplus") y = clplus(*h);
    else if (f == "omega-b") y = omega_b(*h);
  } else if (auto* h = std::get_if<BiFrameHom>(&x)) {
    if (f == "bbplus") y = bbplus(*h);
    else if (f == "pt-b") y = pt_b(*h);
  }
  if (raw) {
    write(o, dump(*raw));
    return kPass;
  }
  if (!y) throw Error(ErrorCode::SchemaError, "functor '" + f + "' does not apply to " + kind_of(x));
  write(o, emit(*y));
  return kPass;
}

int cmd_roundtrip(const Options& o) {
  const std::string text = read_file(o.file);
  Instance x = parse(text);
  const std::string& d = o.name;
  bool ok = false;
  std::string detail;
  if (d == "io") {
    const std::string once = emit(x);
    ok = emit(parse(once)) == once;
    detail = "emit . parse is the identity on the canonical form";
  } else if (auto* P = std::get_if<PervinSpace>(&x)) {
    if (d == "stone") {
      ok = ko(P->ground, u(*P)).family == P->family;
      detail = "ko . u";
    } else if (d == "priestley") {
      ok = cup(pp(*P)).family == P->family;
      detail = "cup . pp";
    } else if (d == "omega-pt") {
      ok = classify_map(omega_pt_unit(*P)).iso;
      detail = "unit P -> pt(Omega P)";
    } else if (d == "skula") {
      ok = clplus(skula_space(*P)) == *P;
      detail = "cl+ . Sk";
    } else {
      throw Error(ErrorCode::SchemaError, "unknown duality '" + d + "' for pervin");
    }
  } else if (auto* F = std::get_if<FrithPair>(&x)) {
    if (d == "omega-pt") {
      ok = classify_hom(omega_pt_counit(*F)).iso;
      detail = "counit F -> Omega(pt F)";
    } else if (d == "skula") {
      ok = classify_hom(fsk_unit(*F)).iso;
      detail = "unit F -> bb+(Sk_f F)";
    } else {
      throw Error(ErrorCode::SchemaError, "unknown duality '" + d + "' for frith");
    }
  } else {
    throw Error(ErrorCode::SchemaError, std::string("roundtrip '") + d + "' does not apply to " + kind_of(x));
  }
  write(o, dump({{"roundtrip", d}, {"composite", detail}, {"pass", ok}}));
  return ok ? kPass : kLawFailure;
}

json map_json(const std::optional<PervinMap>& f) { return f ? json(f->map) : json(nullptr); }

int cmd_char_report(const Options& o) {
  PervinSpace P = expect<PervinSpace>(parse_file(o.file), "a pervin instance");
  CharReport r = theorem_char_report(P, o.bound);
  json j = {{"cauchy_complete", r.cauchy_complete},
            {"complete", r.complete},
            {"extremal_dense", r.extremal_dense},
            {"iso_pff", r.iso_pff},
            {"iso_pt_idl", r.iso_pt_idl},
            {"iso_pt_idl_some", r.iso_pt_idl_some},
            {"iso_pff_some", r.iso_pff_some},
            {"witness_pff", map_json(r.w_pff)},
            {"witness_pt_idl", map_json(r.w_pt_idl)},
            {"witness_pt_idl_some", map_json(r.w_pt_idl_some)},
            {"witness_pff_some", map_json(r.w_pff_some)},
            {"counterexample", map_json(r.counterexample)},
            {"searched_points", r.searched},
            {"all_agree", r.all_agree()}};
  if (o.format == "md") {
    std::string s = "| condition | value |\n|---|---|\n";
    for (auto& [k, v] : j.items())
      if (v.is_boolean()) s += "| " + k + " | " + (v.get<bool>() ? "true" : "false") + " |\n";
    write(o, s);
  } else {
    write(o, dump(j));
  }
  return r.all_agree() ? kPass : kLawFailure;
}

int cmd_enumerate(const Options& o) {
  json arr = json::array();
  if (o.kind == "pervin" || o.kind == "t0") {
    for (const auto& P : enumerate_pervin_upto(o.max_points, o.kind == "t0")) arr.push_back(to_json(P));
  } else if (o.kind == "lattice" || o.kind == "distributive") {
    for (const auto& L : enumerate_distributive_lattices(o.bound)) arr.push_back(to_json(L));
  } else if (o.kind == "frith") {
    for (const auto& F : pre_frith_pairs(enumerate_distributive_lattices(o.bound))) arr.push_back(to_json(F));
  } else {
    throw Error(ErrorCode::SchemaError, "unknown kind '" + o.kind + "' (pervin, t0, lattice, frith)");
  }
  write(o, dump(arr));
  return kPass;
}

int cmd_suite(const Options& o) {
  SuiteConfig c;
  c.max_points = o.max_points;
  c.max_family = o.max_family;
  c.max_lattice = o.max_lattice;
  c.search_bound = o.bound;
  c.parallelism = o.parallelism;
  c.inject_corruption = o.negative_control;
  SuiteReport r = run_suite(c);
  write(o, o.format == "md" ? report_markdown(r) : dump(to_json(r)));
  return r.pass() ? kPass : kLawFailure;
}

int cmd_dot(const Options& o) {
  Instance x = parse_file(o.file);
  if (auto* P = std::get_if<PervinSpace>(&x)) write(o, o.pp ? emit_dot(pp(*P)) : emit_dot(*P));
  else if (auto* L = std::get_if<FinLattice>(&x)) write(o, emit_dot(*L));
  else if (auto* F = std::get_if<FrithPair>(&x)) write(o, emit_dot(F->lattice));
  else throw Error(ErrorCode::SchemaError, std::string("dot does not apply to ") + kind_of(x));
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite Pervin spaces, Frith frames and their dualities"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* s) {
    s->add_option("--out", o.out, "Write output to this file");
    s->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "md"}));
  };

  auto* validate = app.add_subcommand("validate", "Parse and validate an instance file");
  validate->add_option("file", o.file)->required();
  common(validate);

  auto* check = app.add_subcommand("check", "Evaluate a property of an instance");
  check->add_option("property", o.name)->required();
  check->add_option("file", o.file)->required();
  common(check);

  auto* apply = app.add_subcommand("apply", "Apply a functor to an instance");
  apply->add_option("functor", o.name)->required();
  apply->add_option("file", o.file)->required();
  common(apply);

  auto* roundtrip = app.add_subcommand("roundtrip", "Check a duality round trip on an instance");
  roundtrip->add_option("duality", o.name)->required();
  roundtrip->add_option("file", o.file)->required();
  common(roundtrip);

  auto* charrep = app.add_subcommand("char-report", "Completeness characterization of a T0 Pervin space");
  charrep->add_option("file", o.file)->required();
  charrep->add_option("--bound", o.bound, "Search bound in points");
  common(charrep);

  auto* enumerate = app.add_subcommand("enumerate", "List instances up to isomorphism");
  enumerate->add_option("kind", o.kind)->required();
  enumerate->add_option("--max-points", o.max_points, "Largest Pervin space");
  enumerate->add_option("--bound", o.bound, "Largest lattice");
  common(enumerate);

  auto* suite = app.add_subcommand("suite", "Run the acceptance battery");
  suite->add_option("--max-points", o.max_points, "Largest Pervin space");
  suite->add_option("--max-family", o.max_family, "Largest family in the characterization sweep");
  suite->add_option("--max-lattice", o.max_lattice, "Largest distributive lattice");
  suite->add_option("--bound", o.bound, "Search bound for categorical conditions");
  suite->add_option("--parallelism", o.parallelism, "Criteria evaluated concurrently");
  suite->add_flag("--negative-control", o.negative_control, "Inject a corrupted counit into the battery");
  common(suite);

  auto* dot = app.add_subcommand("dot", "Hasse diagram in DOT");
  dot->add_option("file", o.file)->required();
  dot->add_flag("--pp", o.pp, "Draw the Priestley order of a Pervin space");
  common(dot);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (*validate) return cmd_validate(o);
    if (*check) return cmd_check(o);
    if (*apply) return cmd_apply(o);
    if (*roundtrip) return cmd_roundtrip(o);
    if (*charrep) return cmd_char_report(o);
    if (*enumerate) return cmd_enumerate(o);
    if (*suite) return cmd_suite(o);
    if (*dot) return cmd_dot(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
