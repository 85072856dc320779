#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "liestar/estimates.hpp"
#include "liestar/fixtures.hpp"
#include "liestar/gutt.hpp"
#include "liestar/leibniz.hpp"
#include "liestar/observable.hpp"
#include "liestar/taylor.hpp"

using namespace liestar;
using testing::Rng;

namespace {

// pinned thresholds
constexpr int kAssocTriples = 120;
constexpr double kAssocSeconds = 120;
constexpr int kWeylPairs = 120;
constexpr double kExpWidth = 1e-9;
constexpr int kSuiteTrials = 1000;
constexpr std::uint64_t kSuiteSeed = 7;
constexpr double kSuiteSeconds = 600;
constexpr int kTaylorDegree = 30;
constexpr double kTaylorTol = 1e-6;
constexpr int kLeibnizMax = 5;
constexpr int kInversionMax = 8;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Result {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int id, const char* name, const std::function<Result()>& body) {
  auto t0 = Clock::now();
  Result r;
  try {
    r = body();
  } catch (const std::exception& e) {
    r = {false, std::string("exception: ") + e.what()};
  }
  if (!r.pass) ++failures;
  std::printf("[%s] %2d %s: %s (%.1fs)\n", r.pass ? "PASS" : "FAIL", id, name, r.detail.c_str(), seconds_since(t0));
  std::fflush(stdout);
}

std::string counts(int ok, int total) { return std::to_string(ok) + "/" + std::to_string(total); }

std::vector<Monomial> monomials_up_to(int n, int deg) {
  std::vector<Monomial> out = {{}}, layer = {{}};
  for (int k = 1; k <= deg; ++k) {
    std::vector<Monomial> next;
    for (const auto& m : layer)
      for (int i = m.empty() ? 0 : m.back(); i < n; ++i) {
        Monomial u = m;
        u.push_back(i);
        next.push_back(u);
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = next;
  }
  return out;
}

// one random function per fixture module of dimension <= 3
std::vector<RepFunction> fixture_functions(const LieAlgebra& g, Rng& r) {
  std::vector<RepFunction> out;
  for (const auto& m : testing::small_modules(g, 3)) {
    RepFunction phi;
    do phi = make_function(m, r.vec(m->dim), r.vec(m->dim));
    while (is_zero_function(phi));
    out.push_back(phi);
  }
  return out;
}

Result associativity() {
  auto t0 = Clock::now();
  std::vector<LieAlgebra> algs = {algebras::heisenberg(), algebras::so3(), algebras::aff1(), algebras::sl2(),
                                  algebras::heisenberg_plus_line(), algebras::abelian(2)};
  Rng r(2024);
  int ok = 0, total = 0, max_deg = 0;
  for (int t = 0; t < kAssocTriples; ++t) {
    const LieAlgebra& g = algs[t % algs.size()];
    // one factor of degree up to 4, the others up to 2
    int d = 4;
    Observable a = testing::random_observable(r, g, t % 3 == 0 ? d : 2, 2);
    Observable b = testing::random_observable(r, g, t % 3 == 1 ? d : 2, 2);
    Observable c = testing::random_observable(r, g, t % 3 == 2 ? d : 2, 2);
    max_deg = std::max({max_deg, a.degree(), b.degree(), c.degree()});
    ++total;
    if (star_std(star_std(a, b), c) == star_std(a, star_std(b, c))) ++ok;
  }
  double s = seconds_since(t0);
  return {ok == total && total >= 100 && s < kAssocSeconds,
          counts(ok, total) + " triples exact, max Sym-degree " + std::to_string(max_deg)};
}

Result abelian_degeneration() {
  int ok = 0, total = 0;
  Rng r(5);
  for (int n = 1; n <= 4; ++n) {
    LieAlgebra g = algebras::abelian(n);
    for (int t = 0; t < 20; ++t) {
      SymPoly p = r.sympoly(n, 4, 3, 1), q = r.sympoly(n, 4, 3, 1);
      ++total;
      if (gutt_star(g, p, q) == sym_multiply(p, q)) ++ok;
      // any function factor on the left, pure momenta on the right
      Observable f = testing::random_observable(r, g, 3);
      Observable prod = star_std(f, Observable::momentum(g, q));
      Observable pointwise(g);
      for (const auto& [m, v] : f.terms()) {
        for (const auto& [mq, s] : q.terms()) {
          SVec w = v;
          for (auto& x : w) x *= s;
          pointwise += Observable(g, f.module(), f.delta(), {{mono_multiply(m, mq), w}});
        }
      }
      ++total;
      if (prod == pointwise) ++ok;
      ++total;
      if (star_std(Observable::momentum(g, p), Observable::momentum(g, q)) == Observable::momentum(g, sym_multiply(p, q)))
        ++ok;
    }
  }
  return {ok == total, counts(ok, total) + " abelian identities exact"};
}

Result heisenberg_commutator() {
  LieAlgebra h = algebras::heisenberg();
  SymPoly e1 = SymPoly::generator(3, 0), e2 = SymPoly::generator(3, 1), e3 = SymPoly::generator(3, 2);
  SymPoly comm = gutt_star(h, e1, e2) - gutt_star(h, e2, e1);
  bool conv = comm == e3 * Scalar::monomial(GaussRational(0, -1), 1);
  // brute force: e1 e2 - e2 e1 normal ordered
  auto w12 = testing::brute_normal_order(h, {0, 1}), w21 = testing::brute_normal_order(h, {1, 0});
  SymPoly oracle(3);
  for (const auto& [w, c] : w12) oracle += unsymmetrize(h, PBWElement{{w, c}});
  for (const auto& [w, c] : w21) oracle -= unsymmetrize(h, PBWElement{{w, c}});
  bool brute = oracle == comm;
  return {conv && brute, std::string("-i hbar e3 ") + (conv ? "exact" : "MISMATCH") + ", brute-force PBW " +
                             (brute ? "agrees" : "DISAGREES")};
}

Result neumaier_identities() {
  int ok = 0, total = 0;
  Rng r(9);
  for (const auto& g : testing::test_algebras()) {
    auto monos = monomials_up_to(g.dim(), 4);
    for (const auto& phi : fixture_functions(g, r)) {
      Observable lifted = Observable::function(g, phi);
      for (const auto& m : monos) {
        Observable f = Observable::tensor(g, phi, SymPoly(g.dim(), m));
        ++total;
        if (neumaier(f, 1) == star_std(Observable::momentum(g, SymPoly(g.dim(), m)), lifted)) ++ok;
      }
      for (Rational k : {Rational(1, 2), Rational(1), Rational(-2)}) {
        Observable f = testing::random_observable(r, g, 4, 3);
        ++total;
        if (neumaier(neumaier(f, k), -k) == f) ++ok;
      }
    }
  }
  return {ok == total, counts(ok, total) + " identities exact"};
}

Result weyl_involution() {
  int ok = 0;
  Rng r(11);
  auto algs = testing::test_algebras();
  for (int t = 0; t < kWeylPairs; ++t) {
    const LieAlgebra& g = algs[t % algs.size()];
    Observable f = testing::random_observable(r, g, 3), h = testing::random_observable(r, g, 3);
    if (star_weyl(f, h).conj() == star_weyl(h.conj(), f.conj())) ++ok;
  }
  return {ok == kWeylPairs, counts(ok, kWeylPairs) + " pairs exact"};
}

Result quantization() {
  int paths = 0, reps = 0, total_paths = 0, total_reps = 0;
  Rng r(13);
  for (const auto& g : testing::test_algebras()) {
    auto fns = fixture_functions(g, r);
    for (const auto& phi : fns) {
      for (int t = 0; t < 2; ++t) {
        Observable f = testing::random_observable(r, g, 3), h = testing::random_observable(r, g, 2);
        ++total_paths;
        if (std_quantize(f, phi) == std_quantize_explicit(f, phi)) ++paths;
        ++total_reps;
        if (std_quantize(star_std(f, h), phi) == std_apply(f, std_quantize(h, phi))) ++reps;
      }
    }
  }
  return {paths == total_paths && reps == total_reps,
          "two paths " + counts(paths, total_paths) + ", representation " + counts(reps, total_reps)};
}

Result exp_seminorm() {
  SeminormInterval q = seminorm_q(functions::exp_line(), 0, 1);
  const double e = std::exp(1.0);
  bool ok = q.certified && q.lower <= e && e <= q.upper && q.upper - q.lower < kExpWidth;
  char buf[160];
  std::snprintf(buf, sizeof buf, "[%.17g, %.17g] width %.2e, K=%d", q.lower, q.upper, q.upper - q.lower, q.K);
  return {ok, buf};
}

Result estimate_suite_result() {
  auto t0 = Clock::now();
  int specs = 0, passed = 0, counter = 0, inconclusive = 0;
  std::string first_bad;
  for (const auto& s : estimate_suite()) {
    SpecReport r = verify_estimate(s, kSuiteTrials, kSuiteSeed);
    ++specs;
    if (r.pass() && r.trials == kSuiteTrials) ++passed;
    else if (first_bad.empty()) first_bad = s.name();
    counter += r.counterexamples;
    inconclusive += r.inconclusive;
  }
  double t = seconds_since(t0);
  std::string d = counts(passed, specs) + " specs x " + std::to_string(kSuiteTrials) + " trials, " +
                  std::to_string(counter) + " counterexamples, " + std::to_string(inconclusive) + " inconclusive";
  if (!first_bad.empty()) d += ", first failure " + first_bad;
  return {passed == specs && counter == 0 && t < kSuiteSeconds, d};
}

Result holomorphy() {
  int ok = 0, total = 0;
  std::vector<GaussRational> hbars = {Rational(1, 10), 1, 2};
  for (const auto& g : testing::test_algebras()) {
    Rng r(17 + g.dim());
    for (int t = 0; t < 8; ++t) {
      Observable f = testing::random_observable(r, g, 3), h = testing::random_observable(r, g, 3);
      HolomorphyReport rep = holomorphy_check(f, h, hbars);
      ++total;
      if (rep.ok() && rep.hbar_degree <= f.degree() + h.degree()) ++ok;
    }
  }
  return {ok == total, counts(ok, total) + " products"};
}

using Mat = Eigen::MatrixXcd;

// exp of -(i/2) x.sigma
Mat su2_exp(const std::vector<double>& x) {
  using C = std::complex<double>;
  double t = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
  Mat s(2, 2);
  s << C(x[2], 0), C(x[0], -x[1]), C(x[0], x[1]), C(-x[2], 0);
  Mat out = Mat::Identity(2, 2) * std::cos(t / 2);
  if (t > 0) out += s * C(0, -std::sin(t / 2) / t);
  return out;
}

// Rodrigues
Mat so3_exp(const Mat& k, double t) {
  Mat out = Mat::Identity(3, 3);
  if (t == 0) return out;
  return out + k * (std::sin(t) / t) + k * k * ((1 - std::cos(t)) / (t * t));
}

Result lie_taylor() {
  double worst = 0;
  int evals = 0;
  Rng r(19);
  std::vector<std::vector<double>> points;
  for (int j = 0; j < 3; ++j)
    for (double s : {-1.0, -0.5, 0.5, 1.0}) {
      std::vector<double> x(3, 0.0);
      x[j] = s;
      points.push_back(x);
    }
  for (int t = 0; t < 10; ++t) points.push_back(r.reals(3, 1.0));
  for (const auto& x : points) {
    Mat u = su2_exp(x);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        auto v = lie_taylor_partial_sum(functions::su2_coefficient(i, j), x, kTaylorDegree);
        worst = std::max(worst, std::abs(v - u(i, j)));
        ++evals;
      }
    LieAlgebra so = algebras::so3();
    RVec xr(x.begin(), x.end());
    Mat k = to_eigen(ad_matrix(so, xr));
    Mat rot = so3_exp(k, std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        auto v = lie_taylor_partial_sum(functions::so3_coefficient(i, j), x, kTaylorDegree);
        worst = std::max(worst, std::abs(v - rot(i, j)));
        ++evals;
      }
  }
  char buf[120];
  std::snprintf(buf, sizeof buf, "%d coefficients, K=%d, max error %.2e", evals, kTaylorDegree, worst);
  return {worst < kTaylorTol, buf};
}

Result higher_leibniz() {
  int ok = 0, total = 0;
  Rng r(23);
  auto poly = [&](int vars, int deg) {
    TestPoly p(vars);
    for (int t = 0; t < 3; ++t) {
      TestPoly::Exponent e(vars);
      int left = r.range(0, deg);
      for (auto& x : e) {
        x = r.range(0, left);
        left -= x;
      }
      p.add_term(e, r.rational());
    }
    return p;
  };
  for (int k = 1; k <= kLeibnizMax; ++k)
    for (int vars : {2, 3})
      for (int t = 0; t < 4; ++t) {
        std::vector<Derivation> ds;
        for (int i = 0; i < k; ++i) {
          Derivation d;
          for (int v = 0; v < vars; ++v) d.coeffs.push_back(poly(vars, 1));
          ds.push_back(d);
        }
        auto rep = higher_leibniz_check(ds, poly(vars, 3), poly(vars, 3));
        ++total;
        if (rep.shuffle_ok && rep.symmetrized_ok) ++ok;
      }
  return {ok == total, counts(ok, total) + " derivation chains, k <= " + std::to_string(kLeibnizMax)};
}

Result inversion() {
  int ok = 0, total = 0;
  Rng r(29);
  for (const auto& g : testing::test_algebras())
    for (const auto& phi : fixture_functions(g, r)) {
      ++total;
      if (exact_abs_sums(inversion_pullback(phi), kInversionMax) == exact_abs_sums(phi, kInversionMax)) ++ok;
    }
  return {ok == total, counts(ok, total) + " fixtures, k <= " + std::to_string(kInversionMax)};
}

}  // namespace

int main() {
  report(1, "star_std associativity", associativity);
  report(2, "abelian degeneration", abelian_degeneration);
  report(3, "heisenberg commutator", heisenberg_commutator);
  report(4, "neumaier identities", neumaier_identities);
  report(5, "weyl involution", weyl_involution);
  report(6, "standard ordered quantization", quantization);
  report(7, "q_{0,1}(exp)", exp_seminorm);
  report(8, "continuity estimate suite", estimate_suite_result);
  report(9, "holomorphy in hbar", holomorphy);
  report(10, "lie-taylor evaluation", lie_taylor);
  report(11, "higher leibniz", higher_leibniz);
  report(12, "inversion invariance", inversion);
  std::printf("%d of 12 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
