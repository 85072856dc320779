#include "liestar/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "liestar/realization.hpp"

namespace liestar {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int index_from_json(const Json& j, int n) {
  if (!j.is_number_integer()) throw ParseError("index must be an integer");
  int i = j.get<int>();
  if (i < 1 || i > n) throw ParseError("index " + std::to_string(i) + " out of range 1.." + std::to_string(n));
  return i - 1;
}

Monomial mono_from_json(const Json& j, int n) {
  if (!j.is_array()) throw ParseError("\"mono\" must be an array");
  Monomial m;
  for (const auto& x : j) m.push_back(index_from_json(x, n));
  std::sort(m.begin(), m.end());
  return m;
}

Json mono_to_json(const Monomial& m) {
  Json a = Json::array();
  for (int i : m) a.push_back(i + 1);
  return a;
}

CVec vec_from_json(const Json& j, int dim, const char* what) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    throw ParseError(std::string("\"") + what + "\" must have length " + std::to_string(dim));
  CVec v;
  for (const auto& x : j) v.push_back(gauss_from_json(x));
  return v;
}

Json vec_to_json(const CVec& v) {
  Json a = Json::array();
  for (const auto& z : v) a.push_back(to_json(z));
  return a;
}

CMatrix matrix_from_json(const Json& j, int dim) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim) throw ParseError("generator must have " + std::to_string(dim) + " rows");
  CMatrix a(dim, dim);
  for (int r = 0; r < dim; ++r) {
    CVec row = vec_from_json(j[r], dim, "generator row");
    for (int c = 0; c < dim; ++c) a(r, c) = row[c];
  }
  return a;
}

Json matrix_to_json(const CMatrix& a) {
  Json rows = Json::array();
  for (size_t r = 0; r < a.rows(); ++r) {
    Json row = Json::array();
    for (size_t c = 0; c < a.cols(); ++c) row.push_back(to_json(a(r, c)));
    rows.push_back(row);
  }
  return rows;
}

Json module_json(const OrbitModule& m, const CVec& v, const CVec& delta) {
  Json j;
  j["dim"] = m.dim;
  Json gens = Json::array();
  for (const auto& a : m.generators) gens.push_back(matrix_to_json(a));
  j["generators"] = gens;
  j["v"] = vec_to_json(v);
  j["delta"] = vec_to_json(delta);
  if (m.matrix_exp) j["evaluator"] = Json{{"type", "matrix_exp"}};
  return j;
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << dump(j);
  if (!out) throw ParseError("write failed: " + path);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Rational rational_from_json(const Json& j) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("bad rational: ") + e.what());
  }
  throw ParseError("rationals must be strings, got " + j.dump());
}

Json to_json(const Rational& q) { return to_string(q); }

GaussRational gauss_from_json(const Json& j) {
  if (j.is_array()) {
    if (j.size() != 2) throw ParseError("complex entries are [re, im]");
    return GaussRational(rational_from_json(j[0]), rational_from_json(j[1]));
  }
  return GaussRational(rational_from_json(j));
}

Json to_json(const GaussRational& z) { return Json::array({to_string(z.re), to_string(z.im)}); }

Json to_json(const Scalar& s) {
  Json a = Json::array();
  for (const auto& c : s.coeffs()) a.push_back(to_json(c));
  return a;
}

Scalar scalar_from_json(const Json& j) {
  if (!j.is_array()) return Scalar(gauss_from_json(j));
  // a bare pair of strings is one complex number
  if (j.size() == 2 && j[0].is_string() && j[1].is_string()) return Scalar(gauss_from_json(j));
  std::vector<GaussRational> c;
  for (const auto& x : j) c.push_back(gauss_from_json(x));
  return Scalar(std::move(c));
}

std::string decimal(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Json to_json(const LieAlgebra& g) {
  Json j;
  j["dim"] = g.dim();
  if (!g.name.empty()) j["name"] = g.name;
  Json c = Json::array();
  int n = g.dim();
  for (int i = 0; i < n; ++i)
    for (int k = i + 1; k < n; ++k)
      for (int l = 0; l < n; ++l)
        if (sgn(g.c(i, k, l)) != 0) c.push_back(Json::array({i + 1, k + 1, l + 1, to_string(g.c(i, k, l))}));
  j["c"] = c;
  return j;
}

LieAlgebra algebra_from_json(const Json& j) {
  const Json& d = field(j, "dim");
  if (!d.is_number_integer() || d.get<int>() < 0) throw ParseError("\"dim\" must be a nonnegative integer");
  int n = d.get<int>();
  LieAlgebra g(n);
  if (j.contains("name")) g.name = j.at("name").get<std::string>();
  const Json& c = field(j, "c");
  if (!c.is_array()) throw ParseError("\"c\" must be an array");
  for (const auto& e : c) {
    if (!e.is_array() || e.size() != 4) throw ParseError("structure constants are [i, j, k, \"p/q\"]");
    int a = index_from_json(e[0], n), b = index_from_json(e[1], n), k = index_from_json(e[2], n);
    Rational v = rational_from_json(e[3]);
    if (a == b) {
      if (sgn(v) != 0) throw ParseError("c^k_ii must vanish");
      continue;
    }
    if (sgn(g.c(a, b, k)) != 0 && g.c(a, b, k) != v) throw ParseError("conflicting structure constants");
    g.set_bracket(a, b, k, v);
  }
  return g;
}

Json to_json(const RepFunction& phi) { return module_json(*phi.module, phi.v, phi.delta); }

RepFunction function_from_json(const Json& j, int algebra_dim) {
  const Json& d = field(j, "dim");
  if (!d.is_number_integer() || d.get<int>() < 1) throw ParseError("\"dim\" must be a positive integer");
  int m = d.get<int>();
  const Json& gens = field(j, "generators");
  if (!gens.is_array() || static_cast<int>(gens.size()) != algebra_dim)
    throw ParseError("expected " + std::to_string(algebra_dim) + " generators");
  std::vector<CMatrix> as;
  for (const auto& a : gens) as.push_back(matrix_from_json(a, m));
  if (j.contains("evaluator")) {
    const Json& e = j.at("evaluator");
    if (!e.is_object() || !e.contains("type") || e.at("type") != "matrix_exp")
      throw ParseError("unsupported evaluator");
  }
  ModulePtr mod = make_module_sized(std::move(as), m, algebra_dim);
  return make_function(mod, vec_from_json(field(j, "v"), m, "v"), vec_from_json(field(j, "delta"), m, "delta"));
}

Json to_json(const SymPoly& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) terms.push_back(Json{{"mono", mono_to_json(m)}, {"coef", to_json(c)}});
  return Json{{"terms", terms}};
}

SymPoly sympoly_from_json(const Json& j, int algebra_dim) {
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) throw ParseError("\"terms\" must be an array");
  SymPoly p(algebra_dim);
  for (const auto& t : terms) p.add_term(mono_from_json(field(t, "mono"), algebra_dim), scalar_from_json(field(t, "coef")));
  return p;
}

Json to_json(const Observable& f) {
  Json terms = Json::array();
  Observable c = f.canonical();
  for (const auto& [m, v] : c.terms()) {
    int top = 0;
    for (const auto& s : v) top = std::max(top, s.degree());
    for (int r = 0; r <= top; ++r) {
      CVec part;
      for (const auto& s : v) part.push_back(s.coeff(r));
      if (is_zero(part)) continue;
      Json t{{"mono", mono_to_json(m)}, {"fun", module_json(*c.module(), part, c.delta())}};
      if (r > 0) t["hbar"] = r;
      terms.push_back(t);
    }
  }
  return Json{{"terms", terms}};
}

Observable observable_from_json(const Json& j, const LieAlgebra& g) {
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) throw ParseError("\"terms\" must be an array");
  int n = g.dim();
  Observable out(g);
  for (const auto& t : terms) {
    Monomial m = mono_from_json(field(t, "mono"), n);
    if (t.contains("coef")) {
      out += Observable::momentum(g, SymPoly(n, m, scalar_from_json(t.at("coef"))));
      continue;
    }
    RepFunction phi = function_from_json(field(t, "fun"), n);
    unsigned r = 0;
    if (t.contains("hbar")) {
      const Json& hj = t.at("hbar");
      if (!hj.is_number_integer() || hj.get<long>() < 0) throw ParseError("\"hbar\" must be a nonnegative integer");
      r = hj.get<unsigned>();
    }
    out += Observable::tensor(g, phi, SymPoly(n, m, Scalar::monomial(1, r)));
  }
  return out.canonical();
}

Json to_json(const SeminormInterval& s) {
  return Json{{"lower", decimal(s.lower)}, {"upper", decimal(s.upper)}, {"certified", s.certified}, {"degree", s.K}};
}

Json to_json(const EstimateSpec& s) {
  return Json{{"kind", kind_name(s.kind)}, {"R", decimal(s.R)}, {"Rp", decimal(s.Rp)}, {"c", decimal(s.c)},
              {"cp", decimal(s.cp)}, {"hbar", to_string(s.hbar)}};
}

Json to_json(const TrialReport& t) {
  return Json{{"seed", std::to_string(t.seed)},
              {"instance", t.instance},
              {"lhs", Json::array({decimal(t.lhs.lo), decimal(t.lhs.hi)})},
              {"rhs", Json::array({decimal(t.rhs.lo), decimal(t.rhs.hi)})},
              {"verdict", verdict_name(t.verdict)},
              {"margin", decimal(t.margin)}};
}

Json to_json(const SpecReport& r) {
  return Json{{"name", r.spec.name()},
              {"parameters", to_json(r.spec)},
              {"pass", r.pass()},
              {"trials", r.trials},
              {"certified", r.certified},
              {"tight", r.tight},
              {"inconclusive", r.inconclusive},
              {"counterexamples", r.counterexamples},
              {"worst_margin", decimal(r.worst_margin)},
              {"median_ratio", decimal(r.median_ratio)},
              {"witness", to_json(r.witness)}};
}

Json to_json(const HolomorphyReport& r) {
  return Json{{"pass", r.ok()},
              {"polynomial", r.polynomial},
              {"degree_drop", r.degree_drop},
              {"coefficients", r.coefficients},
              {"classical_limit", r.classical_limit},
              {"evaluations", r.evaluations},
              {"hbar_degree", r.hbar_degree},
              {"message", r.message}};
}

}  // namespace liestar
