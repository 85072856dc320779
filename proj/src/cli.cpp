#include "liestar/cli.hpp"

#include <CLI11.hpp>

#include "liestar/estimates.hpp"
#include "liestar/io.hpp"
#include "liestar/observable.hpp"

namespace liestar {

namespace {

const Json& field_or(const Json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

struct Options {
  std::vector<std::string> inputs;
  std::string algebra, fun, request, out, op = "std", suite = "all";
  std::string hbar, kappa = "1/2";
  double R = 0, Rp = 1, c = 1, cp = 1;
  int trials = 1000, threads = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> x, eta;
};

// a validation failure that still produces a report
struct Outcome {
  Json report;
  bool pass = true;
};

bool is_algebra(const Json& j) { return j.is_object() && j.contains("dim") && j.contains("c"); }
bool is_function(const Json& j) { return j.is_object() && j.contains("generators"); }
bool is_element(const Json& j) {
  if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array()) return false;
  for (const auto& t : j.at("terms"))
    if (!t.is_object() || !t.contains("coef")) return false;
  return true;
}

LieAlgebra load_algebra(const Options& o) {
  if (o.algebra.empty()) throw ParseError("--algebra is required");
  LieAlgebra g = algebra_from_json(read_json_file(o.algebra));
  ValidationReport v = validate(g);
  if (!v.ok) throw std::domain_error("algebra: " + v.message);
  return g;
}

void check_modules(const Observable& f, const LieAlgebra& g, const std::string& what) {
  if (f.terms().empty()) return;
  ValidationReport v = validate_module(*f.module(), g);
  if (!v.ok) throw std::domain_error(what + ": " + v.message);
}

Observable load_observable(const std::string& path, const LieAlgebra& g) {
  Json j = read_json_file(path);
  Observable f = is_function(j) ? Observable::function(g, function_from_json(j, g.dim())) : observable_from_json(j, g);
  check_modules(f, g, path);
  return f;
}

Json check_entry(const std::string& name, bool pass, const std::string& message = "") {
  Json e{{"name", name}, {"pass", pass}};
  if (!message.empty()) e["message"] = message;
  return e;
}

Outcome cmd_check(const Options& o) {
  if (o.inputs.size() != 1) throw ParseError("check takes one file");
  Json j = read_json_file(o.inputs[0]);
  Json checks = Json::array();
  bool pass = true;
  auto record = [&](const std::string& name, bool ok, const std::string& msg = "") {
    checks.push_back(check_entry(name, ok, msg));
    pass &= ok;
  };
  LieAlgebra g;
  if (is_algebra(j)) {
    g = algebra_from_json(j);
    ValidationReport v = validate(g);
    record("algebra", v.ok, v.message);
    record("algebra_round_trip", algebra_from_json(to_json(g)) == g);
    if (!v.ok) return {Json{{"command", "check"}, {"pass", false}, {"checks", checks}}, false};
  } else {
    g = load_algebra(o);
  }
  auto check_function = [&](const Json& fj, const std::string& label) {
    RepFunction phi = function_from_json(fj, g.dim());
    ValidationReport v = validate_module(*phi.module, g);
    record(label, v.ok, v.message);
    record(label + "_round_trip", same_function(function_from_json(to_json(phi), g.dim()), phi));
  };
  auto check_element = [&](const Json& ej, const std::string& label) {
    SymPoly p = sympoly_from_json(ej, g.dim());
    record(label + "_round_trip", sympoly_from_json(to_json(p), g.dim()) == p);
  };
  auto check_observable = [&](const Json& oj, const std::string& label) {
    Observable f = observable_from_json(oj, g);
    bool ok = f.terms().empty() || validate_module(*f.module(), g).ok;
    record(label, ok);
    record(label + "_round_trip", observable_from_json(to_json(f), g) == f);
  };
  if (is_algebra(j)) {
    auto each = [&](const char* key, auto&& fn) {
      if (!j.contains(key)) return;
      int i = 0;
      for (const auto& item : j.at(key)) fn(item, std::string(key) + "[" + std::to_string(i++) + "]");
    };
    each("functions", check_function);
    each("elements", check_element);
    each("observables", check_observable);
  } else if (is_function(j)) {
    check_function(j, "function");
  } else if (is_element(j)) {
    check_element(j, "element");
  } else {
    check_observable(j, "observable");
  }
  return {Json{{"command", "check"}, {"pass", pass}, {"checks", checks}}, pass};
}

Json evaluated(const Observable& f) {
  // the same terms with decimal values of each coefficient vector
  Json out = to_json(f);
  for (auto& t : out["terms"]) {
    Json dec = Json::array();
    for (const auto& z : t["fun"]["v"]) {
      GaussRational w = gauss_from_json(z);
      dec.push_back(Json::array({decimal(to_double(w.re)), decimal(to_double(w.im))}));
    }
    t["v_decimal"] = dec;
  }
  return out;
}

Outcome cmd_star(const Options& o) {
  if (o.inputs.size() != 2) throw ParseError("star takes two files");
  LieAlgebra g = load_algebra(o);
  Json a = read_json_file(o.inputs[0]), b = read_json_file(o.inputs[1]);
  Rational kappa = o.op == "weyl" ? Rational(1, 2) : o.op == "kappa" ? rational_from_json(o.kappa) : Rational(0);
  Json report{{"command", "star"}, {"op", o.op}, {"pass", true}};
  if (o.op == "kappa") report["kappa"] = to_string(kappa);
  std::optional<GaussRational> h;
  if (!o.hbar.empty()) {
    h = GaussRational(rational_from_json(o.hbar));
    report["hbar"] = o.hbar;
  }
  if (is_element(a) && is_element(b)) {
    // the ordering operators act trivially on pure momenta
    SymPoly p = gutt_star(g, sympoly_from_json(a, g.dim()), sympoly_from_json(b, g.dim()));
    report["result"] = to_json(p);
    if (h) {
      Json vals = Json::array();
      for (const auto& [m, s] : p.terms()) {
        std::complex<double> z = to_complex(s.at(*h));
        (void)m;
        vals.push_back(Json::array({decimal(z.real()), decimal(z.imag())}));
      }
      report["values"] = vals;
    }
    return {report, true};
  }
  auto load = [&](const Json& j, const std::string& path) {
    Observable f = is_function(j) ? Observable::function(g, function_from_json(j, g.dim())) : observable_from_json(j, g);
    check_modules(f, g, path);
    return f;
  };
  Observable f = load(a, o.inputs[0]), q = load(b, o.inputs[1]);
  Observable r = o.op == "std" ? star_std(f, q) : star_kappa(f, q, kappa);
  report["result"] = to_json(r);
  if (h) report["at_hbar"] = evaluated(r.at_hbar(*h));
  return {report, true};
}

Outcome cmd_seminorm(const Options& o) {
  if (o.inputs.size() != 1) throw ParseError("seminorm takes one file");
  if (o.c < 0 || o.cp < 0) throw ParseError("radii must be nonnegative");
  LieAlgebra g = load_algebra(o);
  Json j = read_json_file(o.inputs[0]);
  GaussRational h(o.hbar.empty() ? Rational(1) : rational_from_json(o.hbar));
  Json report{{"command", "seminorm"}, {"R", decimal(o.R)}, {"Rp", decimal(o.Rp)}, {"c", decimal(o.c)},
              {"cp", decimal(o.cp)}, {"hbar", to_string(h.re)}};
  if (is_function(j)) {
    RepFunction phi = function_from_json(j, g.dim());
    if (!validate_module(*phi.module, g).ok) throw std::domain_error("module does not represent the algebra");
    report["kind"] = "q";
    report["value"] = to_json(seminorm_q(phi, o.R, o.c));
  } else if (is_element(j)) {
    Interval v = seminorm_p_interval(sympoly_from_json(j, g.dim()), o.Rp, o.cp, h);
    report["kind"] = "p";
    report["value"] = Json{{"lower", decimal(v.lo)}, {"upper", decimal(v.hi)}, {"certified", true}, {"degree", 0}};
  } else {
    Observable f = observable_from_json(j, g);
    check_modules(f, g, o.inputs[0]);
    report["kind"] = "q_tensor_p";
    report["value"] = to_json(seminorm_cross(f, o.R, o.c, o.Rp, o.cp, h));
  }
  report["pass"] = report["value"]["certified"];
  return {report, report["pass"].get<bool>()};
}

Outcome cmd_quantize(const Options& o) {
  if (o.inputs.size() != 1) throw ParseError("quantize takes one file");
  if (o.fun.empty()) throw ParseError("--fun is required");
  LieAlgebra g = load_algebra(o);
  Observable f = load_observable(o.inputs[0], g);
  RepFunction phi = function_from_json(read_json_file(o.fun), g.dim());
  if (!validate_module(*phi.module, g).ok) throw std::domain_error("module does not represent the algebra");
  Observable a = std_quantize(f, phi);
  bool agree = a == std_quantize_explicit(f, phi);
  return {Json{{"command", "quantize"}, {"result", to_json(a)}, {"explicit_agrees", agree}, {"pass", agree}}, agree};
}

std::vector<double> decimals(const Json& j, int n, const char* what) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw ParseError(std::string(what) + " must have length " + std::to_string(n));
  std::vector<double> out;
  for (const auto& x : j) out.push_back(to_double(rational_from_json(x)));
  return out;
}

Outcome cmd_evaluate(const Options& o) {
  if (o.inputs.size() != 1) throw ParseError("evaluate takes one file");
  LieAlgebra g = load_algebra(o);
  Observable f = load_observable(o.inputs[0], g);
  int n = g.dim();
  Json req;
  if (!o.request.empty()) {
    req = read_json_file(o.request);
  } else {
    req["g"] = Json{{"exp", o.x}};
    req["eta"] = o.eta;
    if (!o.hbar.empty()) req["hbar"] = o.hbar;
  }
  std::vector<double> x(n, 0.0), eta(n, 0.0);
  if (req.contains("g")) {
    const Json& gj = req.at("g");
    const Json& coords = gj.is_object() ? field_or(gj, "exp") : gj;
    if (!coords.empty()) x = decimals(coords, n, "exponential coordinates");
  }
  if (req.contains("eta") && !req.at("eta").empty()) eta = decimals(req.at("eta"), n, "eta");
  Rational h = req.contains("hbar") ? rational_from_json(req.at("hbar")) : Rational(1);
  std::complex<double> v = evaluate(f, x, eta, std::complex<double>(to_double(h), 0));
  Json report{{"command", "evaluate"}, {"hbar", to_string(h)}, {"pass", true}};
  report["value"] = Json::array({decimal(v.real()), decimal(v.imag())});
  return {report, true};
}

Outcome cmd_verify(const Options& o) {
  if (o.trials < 1) throw ParseError("--trials must be positive");
  Json specs = Json::array();
  bool pass = true;
  int total = 0, counter = 0;
  if (o.suite == "holomorphy") {
    InstanceProfile prof;
    int ok = 0;
    Json failures = Json::array();
    for (int i = 0; i < o.trials; ++i) {
      Instance inst = random_instance(prof, o.seed * 1000003ULL + i);
      HolomorphyReport r = holomorphy_check(inst.observables[0], inst.observables[1], {Rational(1, 10), 1, 2});
      if (r.ok())
        ++ok;
      else if (failures.size() < 5)
        failures.push_back(Json{{"instance", inst.description}, {"report", to_json(r)}});
    }
    pass = ok == o.trials;
    Json report{{"command", "verify"}, {"suite", "holomorphy"}, {"trials", o.trials}, {"passed", ok}, {"pass", pass}};
    report["seed"] = std::to_string(o.seed);
    report["failures"] = failures;
    return {report, pass};
  }
  bool matched = false;
  for (const auto& s : estimate_suite()) {
    if (o.suite != "all" && kind_name(s.kind) != o.suite) continue;
    matched = true;
    SpecReport r = verify_estimate(s, o.trials, o.seed, o.threads);
    specs.push_back(to_json(r));
    pass &= r.pass();
    total += r.trials;
    counter += r.counterexamples;
  }
  if (!matched) throw ParseError("unknown suite: " + o.suite);
  Json report{{"command", "verify"}, {"suite", o.suite}, {"specs", specs}, {"pass", pass}};
  report["seed"] = std::to_string(o.seed);
  report["total_trials"] = total;
  report["counterexamples"] = counter;
  return {report, pass};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact star products and seminorm estimates on cotangent bundles of Lie groups", "liestar"};
  app.require_subcommand(1);
  Options o;
  auto add_common = [&](CLI::App* s) {
    s->add_option("-o,--out", o.out, "write the report here instead of stdout");
  };
  auto add_radii = [&](CLI::App* s) {
    s->add_option("--R", o.R, "function-side order");
    s->add_option("--Rp", o.Rp, "momentum-side order");
    s->add_option("--c", o.c, "function-side radius");
    s->add_option("--cp", o.cp, "momentum-side radius");
  };

  auto* check = app.add_subcommand("check", "validate an algebra, function, element or observable file");
  check->add_option("file", o.inputs)->required();
  check->add_option("--algebra", o.algebra);
  add_common(check);

  auto* star = app.add_subcommand("star", "star product of two elements or observables");
  star->add_option("files", o.inputs)->required()->expected(2);
  star->add_option("--algebra", o.algebra)->required();
  star->add_option("--op", o.op)->check(CLI::IsMember({"std", "kappa", "weyl"}));
  star->add_option("--kappa", o.kappa);
  star->add_option("--hbar", o.hbar);
  add_common(star);

  auto* seminorm = app.add_subcommand("seminorm", "certified seminorm enclosure");
  seminorm->add_option("file", o.inputs)->required();
  seminorm->add_option("--algebra", o.algebra)->required();
  seminorm->add_option("--hbar", o.hbar);
  add_radii(seminorm);
  add_common(seminorm);

  auto* quantize = app.add_subcommand("quantize", "standard-ordered quantization applied to a function");
  quantize->add_option("file", o.inputs)->required();
  quantize->add_option("--fun", o.fun)->required();
  quantize->add_option("--algebra", o.algebra)->required();
  add_common(quantize);

  auto* eval = app.add_subcommand("evaluate", "evaluate an observable at a point of the cotangent bundle");
  eval->add_option("file", o.inputs)->required();
  eval->add_option("--algebra", o.algebra)->required();
  eval->add_option("--request", o.request);
  eval->add_option("--x", o.x, "exponential coordinates of the group point");
  eval->add_option("--eta", o.eta);
  eval->add_option("--hbar", o.hbar);
  add_common(eval);

  auto* verify = app.add_subcommand("verify", "randomized verification of the continuity estimates");
  verify->add_option("--suite", o.suite);
  verify->add_option("--trials", o.trials);
  verify->add_option("--seed", o.seed);
  verify->add_option("--threads", o.threads);
  add_common(verify);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitParse;
  }

  Outcome res;
  try {
    if (check->parsed()) res = cmd_check(o);
    if (star->parsed()) res = cmd_star(o);
    if (seminorm->parsed()) res = cmd_seminorm(o);
    if (quantize->parsed()) res = cmd_quantize(o);
    if (eval->parsed()) res = cmd_evaluate(o);
    if (verify->parsed()) res = cmd_verify(o);
    if (o.out.empty())
      out << dump(res.report);
    else
      write_json_file(o.out, res.report);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    err << "invalid: " << e.what() << "\n";
    out << dump(Json{{"pass", false}, {"error", e.what()}});
    return kExitValidation;
  }
  return res.pass ? kExitOk : kExitValidation;
}

}  // namespace liestar
