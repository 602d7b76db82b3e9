#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "nilmix/classical_orbit.hpp"
#include "nilmix/errors.hpp"
#include "nilmix/exceptional_data.hpp"
#include "nilmix/json_io.hpp"
#include "nilmix/matrix_oracle.hpp"
#include "nilmix/mixed_grading.hpp"
#include "nilmix/render.hpp"
#include "nilmix/verification.hpp"

using namespace nilmix;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct Options {
  bool json = false;
  int max_rank = 8;
};

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

// "sl6", "so9", "sp8" or a classical Cartan type such as "B4".
std::pair<Ambient, int> parse_ambient(const std::string& text) {
  if (text.size() > 2) {
    const std::string prefix = text.substr(0, 2);
    const std::string rest = text.substr(2);
    if ((prefix == "sl" || prefix == "so" || prefix == "sp") &&
        rest.find_first_not_of("0123456789") == std::string::npos && !rest.empty()) {
      const int n = std::stoi(rest);
      if (prefix == "sl") return {Ambient::SL, n};
      if (prefix == "so") return {Ambient::SO, n};
      if (n % 2) throw InvalidInput("sp needs an even matrix size, got " + text);
      return {Ambient::SP, n};
    }
  }
  const SimpleType t = SimpleType::parse(text);
  if (t.is_exceptional()) throw InvalidInput(text + " is not classical");
  return natural_ambient(t);
}

std::vector<Partition> parse_factor_partitions(const std::string& text) {
  std::vector<Partition> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t plus = text.find('+', start);
    out.push_back(Partition::parse(text.substr(start, plus == std::string::npos ? std::string::npos : plus - start)));
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  return out;
}

Json orbit_json(const ClassicalOrbit& o) {
  Json j;
  j["ambient"] = o.ambient_name();
  j["partition"] = to_json(o.lambda);
  if (auto t = ambient_simple_type(o.ambient, o.n())) j["wdd"] = to_json(wdd_from_partition(o));
  j["centralizer"] = to_json(centralizer_dims(o));
  j["red"] = reductive_type(o).to_string();
  j["even"] = is_even(o);
  j["distinguished"] = is_distinguished(o);
  j["almost_distinguished"] = is_almost_distinguished(o);
  j["divisible"] = is_divisible(o);
  if (is_divisible(o) && o.ambient != Ambient::SP) j["half_orbit"] = to_json(half_orbit(o).lambda);
  return j;
}

void print_orbit(const ClassicalOrbit& o) {
  fmt::print("{} {}\n", o.ambient_name(), o.lambda.to_string());
  if (ambient_simple_type(o.ambient, o.n())) fmt::print("{}", render_wdd(wdd_from_partition(o)));
  const CentralizerDims c = centralizer_dims(o);
  fmt::print("dim g^e      {}\n", c.total);
  fmt::print("g^e_red      {}\n", reductive_type(o).to_string());
  fmt::print("dim g^e_nil  {}\n", c.nil);
  fmt::print("even {}, distinguished {}, almost distinguished {}, divisible {}\n", yes_no(is_even(o)),
             yes_no(is_distinguished(o)), yes_no(is_almost_distinguished(o)), yes_no(is_divisible(o)));
  if (is_divisible(o) && o.ambient != Ambient::SP) fmt::print("half orbit   {}\n", half_orbit(o).lambda.to_string());
}

void print_exceptional(const ExceptionalOrbit& o) {
  fmt::print("{} {}\n{}", o.type.name(), o.label, render_wdd(o.wdd));
  fmt::print("dim g^e      {}\n", o.dim_centralizer);
  fmt::print("g^e_red      {}\n", o.red.to_string());
  fmt::print("dim g^e_nil  {}\n", o.dim_nil);
  if (o.divisible) fmt::print("divisible    {}\n", yes_no(*o.divisible));
}

int cmd_wdd(const Options& opt, const std::string& type, const std::string& orbit) {
  const SimpleType t = SimpleType::parse(type);
  if (t.is_exceptional()) {
    const auto& o = exceptional_lookup(t, orbit);
    opt.json ? emit(to_json(o)) : print_exceptional(o);
    return kOk;
  }
  const auto [a, n] = natural_ambient(t);
  const Partition lambda = Partition::parse(orbit);
  if (lambda.total() != n)
    throw InvalidInput(fmt::format("{} acts on dimension {}, partition {} has size {}", t.name(), n,
                                   lambda.to_string(), lambda.total()));
  const ClassicalOrbit o = ClassicalOrbit::make(a, lambda);
  opt.json ? emit(orbit_json(o)) : print_orbit(o);
  return kOk;
}

int cmd_orbit(const Options& opt, const std::string& ambient, const std::string& orbit) {
  const bool exceptional = ambient.size() == 2 && std::string("EeFfGg").find(ambient[0]) != std::string::npos;
  if (exceptional) {
    const SimpleType t = SimpleType::parse(ambient);
    if (!orbit.empty()) return cmd_wdd(opt, ambient, orbit);
    Json all = Json::array();
    for (const auto& o : exceptional_orbits()) {
      if (o.type != t) continue;
      if (opt.json)
        all.push_back(to_json(o));
      else
        fmt::print("{:<10} {:<18} {:>4} {:>10} {:>4}\n", o.label, o.wdd.label_string(), o.dim_centralizer,
                   o.red.to_string(), o.dim_nil);
    }
    if (opt.json) emit(all);
    return kOk;
  }
  const auto [a, n] = parse_ambient(ambient);
  if (!orbit.empty()) {
    const ClassicalOrbit o = ClassicalOrbit::make(a, Partition::parse(orbit));
    if (o.n() != n) throw InvalidInput(fmt::format("partition {} does not have size {}", o.lambda.to_string(), n));
    opt.json ? emit(orbit_json(o)) : print_orbit(o);
    return kOk;
  }
  Json all = Json::array();
  for (const auto& o : orbits_of(a, n)) {
    if (opt.json) {
      all.push_back(orbit_json(o));
      continue;
    }
    const CentralizerDims c = centralizer_dims(o);
    const std::string w = ambient_simple_type(a, n) ? wdd_from_partition(o).label_string() : "";
    fmt::print("{:<20} {:<20} {:>4} {:>10} {:>4}\n", o.lambda.to_string(), w, c.total, reductive_type(o).to_string(),
               c.nil);
  }
  if (opt.json) emit(all);
  return kOk;
}

PairDecomposition decompose_input(const SymmetricPair& p, const std::string& arg) {
  if (arg.empty()) return decompose_regular(p);
  if (!p.is_classical()) return decompose_exceptional(p, arg);
  std::vector<SL2Module> v;
  for (const auto& x : parse_factor_partitions(arg)) v.push_back(module_of_partition(x));
  return decompose_classical(p, v);
}

int cmd_grade(const Options& opt, const std::string& pair, const std::string& arg) {
  const SymmetricPair p = find_pair(pair);
  const PairDecomposition pd = decompose_input(p, arg);
  const MixedGrading g = grading_grid(pd);
  if (opt.json) {
    Json j = to_json(pd);
    j["grid"] = to_json(g);
    j["check_02"] = check_02(g);
    j["check_04"] = check_04(g);
    j["check_4k2"] = check_4k2(g);
    j["failing_4k2"] = failing_4k2(g);
    emit(j);
    return kOk;
  }
  fmt::print("{}  g0 = {}, {}\n", p.descriptor(), p.g0.to_string(), p.inner ? "inner" : "outer");
  if (pd.ambient_partition) fmt::print("e: {} on the natural module\n", pd.ambient_partition->to_string());
  if (!pd.orbit_label.empty()) fmt::print("e: {}\n", pd.orbit_label);
  fmt::print("M0 = {}\nM1 = {}\n\n{}\n", pd.m0.to_string(), pd.m1.to_string(), render_grid(g));
  fmt::print("d0(0)=d1(2) {}   d0(0)=d1(4) {}   d0(4k+2)=d1(4k+2) {}", yes_no(check_02(g)), yes_no(check_04(g)),
             yes_no(check_4k2(g)));
  const auto bad = failing_4k2(g);
  if (!bad.empty()) fmt::print(" (fails at k = {})", fmt::join(bad, ", "));
  fmt::print("\n");
  return kOk;
}

int cmd_upsilon(const Options& opt, const std::string& pair, const std::string& arg) {
  const SymmetricPair p = find_pair(pair);
  const UpsilonReport u = upsilon(decompose_input(p, arg));
  if (opt.json) {
    emit(to_json(u));
    return kOk;
  }
  fmt::print("sigma              {}  g0 = {}\n", u.sigma.descriptor(), u.sigma.g0.to_string());
  fmt::print("e                  {}\n", u.e_wdd.label_string());
  fmt::print("sigma-check        {}  g0 = {}  (dim g0 - dim g1 = {})\n", u.sigma_check.descriptor(),
             u.sigma_check.g0.to_string(), u.diff_check);
  fmt::print("sigma sigma-check  {}  g0 = {}  (dim g0 - dim g1 = {})\n", u.sigma_sigma_check.descriptor(),
             u.sigma_sigma_check.g0.to_string(), u.diff_cross);
  fmt::print("sigma-check ~ sigma: {}   sigma sigma-check ~ sigma: {}\n", yes_no(same_class(u.sigma_check, p)),
             yes_no(same_class(u.sigma_sigma_check, p)));
  return kOk;
}

int cmd_catalog(const Options& opt, const std::string& type) {
  const SimpleType t = SimpleType::parse(type);
  const auto pairs = catalog(t);
  if (opt.json) {
    Json all = Json::array();
    for (const auto& p : pairs) all.push_back(to_json(p));
    emit(all);
    return kOk;
  }
  for (const auto& p : pairs) {
    fmt::print("{:<24} {:<6} dim g0 {:>4}  dim g1 {:>4}  signature {:>4}  IBN {}\n", p.descriptor(),
               p.inner ? "inner" : "outer", p.dim_g0, p.dim_g1, p.signature(), yes_no(p.satake.has_ibn()));
    fmt::print("{}", render_satake(p.satake));
  }
  return kOk;
}

int cmd_oracle(const Options& opt, const std::string& target, const std::string& arg) {
  if (target.find('/') != std::string::npos) {
    const SymmetricPair p = find_pair(target);
    const std::vector<Partition> fp = arg.empty() ? regular_factor_partitions(p) : parse_factor_partitions(arg);
    std::vector<SL2Module> v;
    for (const auto& x : fp) v.push_back(module_of_partition(x));
    const MixedGrading formula = grading_grid(decompose_classical(p, v));
    const MixedGrading matrices = oracle_grid(p, fp);
    if (opt.json) {
      emit({{"pair", p.descriptor()}, {"modules", to_json(formula)}, {"matrices", to_json(matrices)},
            {"agree", formula == matrices}});
    } else {
      fmt::print("modules\n{}\nmatrices\n{}\nagree: {}\n", render_grid(formula), render_grid(matrices),
                 yes_no(formula == matrices));
    }
    return formula == matrices ? kOk : kVerifyFailed;
  }
  const auto [a, n] = parse_ambient(target);
  const ClassicalOrbit o = ClassicalOrbit::make(a, Partition::parse(arg));
  if (o.n() != n) throw InvalidInput(fmt::format("partition {} does not have size {}", o.lambda.to_string(), n));
  const long formula = centralizer_dims(o).total;
  const long matrices = oracle_centralizer_dim(a, o.lambda);
  Json j = {{"orbit", orbit_json(o)}, {"dim_centralizer_formula", formula}, {"dim_centralizer_matrices", matrices}};
  bool agree = formula == matrices;
  std::string half_text;
  if (is_divisible(o)) {
    const long ker2 = oracle_ker_ad_squared(a, o.lambda);
    const Partition half = a == Ambient::SP ? sp_half_orbit(o.lambda) : half_orbit(o).lambda;
    const long half_dim = oracle_centralizer_dim(a, half);
    j["ker_ad_squared"] = ker2;
    j["half_orbit"] = to_json(half);
    half_text = half.to_string();
    j["dim_centralizer_half"] = half_dim;
    agree = agree && ker2 == half_dim;
  }
  j["agree"] = agree;
  if (opt.json) {
    emit(j);
  } else {
    fmt::print("{} {}\ndim g^e: formula {}, matrices {}\n", o.ambient_name(), o.lambda.to_string(), formula, matrices);
    if (j.contains("ker_ad_squared"))
      fmt::print("half orbit {}: dim Ker(ad e)^2 = {}, dim g^(e/2) = {}\n", half_text,
                 j["ker_ad_squared"].get<long>(), j["dim_centralizer_half"].get<long>());
    fmt::print("agree: {}\n", yes_no(agree));
  }
  return agree ? kOk : kVerifyFailed;
}

int cmd_verify(const Options& opt, const std::string& suite) {
  SweepOptions so;
  so.max_rank = opt.max_rank;
  std::vector<std::string> names = suite.empty() ? suite_names() : std::vector<std::string>{suite};
  bool ok = true;
  Json all = Json::array();
  for (const auto& name : names) {
    const VerificationReport r = run_suite(name, so);
    ok = ok && r.ok();
    if (opt.json) {
      all.push_back(to_json(r));
      continue;
    }
    for (const auto& c : r.cases)
      if (!c.pass)
        fmt::print("  FAIL {} [{}]: expected {}, computed {}\n", c.id, c.claim, c.expected, c.computed);
    fmt::print("{:<10} {} ({} passed, {} failed)\n", r.suite, r.ok() ? "PASS" : "FAIL", r.passed(), r.failed());
  }
  if (opt.json) emit(suite.empty() ? all : all.front());
  return ok ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nilpotent orbits, involutions and mixed gradings of simple Lie algebras"};
  app.require_subcommand(1);
  app.footer(
      "Pair descriptors: <type>/<g0>[-diagram], e.g. E6/C4, B6/so7+so6, so10/gl5, sl6/s(gl3+gl3), A5/C3-diagram.\n"
      "Partitions: (5,3,1), 5,3,1 or (3^2,1); several g0 factors are joined with '+', e.g. (3,1)+(2,2).");
  Options opt;
  app.add_flag("--json", opt.json, "Machine-readable output");
  app.add_option("--max-rank", opt.max_rank, "Largest classical rank in sweeps")->check(CLI::Range(2, 12));

  std::string a1, a2, suite;
  auto* wdd = app.add_subcommand("wdd", "Weighted Dynkin diagram and centraliser of an orbit");
  wdd->add_option("type", a1, "Cartan type, e.g. C4 or E8")->required();
  wdd->add_option("orbit", a2, "Partition (classical) or label (exceptional)")->required();

  auto* orbit = app.add_subcommand("orbit", "Orbit facts, or all orbits of an ambient algebra");
  orbit->add_option("ambient", a1, "sl6, so9, sp8, a classical type or an exceptional type")->required();
  orbit->add_option("orbit", a2, "Partition or label; omit to list all orbits");

  auto* grade = app.add_subcommand("grade", "Mixed grading grid of a pair");
  grade->add_option("pair", a1, "Pair descriptor")->required();
  grade->add_option("e", a2, "Jordan types of e in the g0 factors (default: regular in g0)");

  auto* ups = app.add_subcommand("upsilon", "Identify sigma-check and sigma sigma-check");
  ups->add_option("pair", a1, "Pair descriptor")->required();
  ups->add_option("e", a2, "Jordan types of e in the g0 factors (default: regular in g0)");

  auto* cat = app.add_subcommand("catalog", "Involution classes of a simple type");
  cat->add_option("type", a1, "Cartan type")->required();

  auto* orc = app.add_subcommand("oracle", "Matrix cross-check of an orbit or a pair grid");
  orc->add_option("target", a1, "sl6/so9/sp8 with a partition, or a classical pair descriptor")->required();
  orc->add_option("e", a2, "Partition, or Jordan types in the g0 factors");

  auto* ver = app.add_subcommand("verify", "Run verification suites");
  ver->add_option("--suite", suite, "One suite (default: all)")->check(CLI::IsMember(suite_names()));
  ver->add_option("name", suite, "Same as --suite")->check(CLI::IsMember(suite_names()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*wdd) return cmd_wdd(opt, a1, a2);
    if (*orbit) return cmd_orbit(opt, a1, a2);
    if (*grade) return cmd_grade(opt, a1, a2);
    if (*ups) return cmd_upsilon(opt, a1, a2);
    if (*cat) return cmd_catalog(opt, a1);
    if (*orc) {
      if (a2.empty() && a1.find('/') == std::string::npos) throw InvalidInput("oracle on an orbit needs a partition");
      return cmd_oracle(opt, a1, a2);
    }
    if (*ver) return cmd_verify(opt, suite);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kUsage;
  }
  return kUsage;
}
