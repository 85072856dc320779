#include <doctest.h>

#include <cmath>
#include <complex>
#include <limits>

#include "helpers.hpp"
#include "liestar/fixtures.hpp"
#include "liestar/leibniz.hpp"
#include "liestar/rep_function.hpp"
#include "liestar/taylor.hpp"

using namespace liestar;
using testing::Rng;

namespace {

const double kE = std::exp(1.0);

std::complex<double> value(const GaussRational& z) { return to_complex(z); }

double sup_abs(const std::vector<GaussRational>& x) {
  double s = 0;
  for (const auto& z : x) s = std::max(s, std::abs(value(z)));
  return s;
}

double l1(const CVec& v) {
  double s = 0;
  for (const auto& z : v) s += std::abs(value(z));
  return s;
}

// induced l1 operator norm, max column sum
double op_norm(const CMatrix& a) {
  double best = 0;
  for (size_t j = 0; j < a.cols(); ++j) {
    double s = 0;
    for (size_t i = 0; i < a.rows(); ++i) s += std::abs(value(a(i, j)));
    best = std::max(best, s);
  }
  return best;
}

std::vector<GaussRational> rvec(Rng& r, int n) {
  std::vector<GaussRational> x(n);
  for (auto& z : x) z = GaussRational(r.rational(2));
  return x;
}

}  // namespace

TEST_CASE("module validation") {
  auto ex = functions::exp_line();
  CHECK(validate_module(*ex.module, algebras::abelian(1)).ok);
  CHECK(validate_module(*functions::circle(1).module, algebras::abelian(1)).ok);
  LieAlgebra so = algebras::so3();
  auto adj = adjoint_module(so);
  CHECK(validate_module(*adj, so).ok);
  auto gens = adj->generators;
  gens[1] = gens[1] * GaussRational(-1);
  auto rep = validate_module(*make_module(gens), so);
  CHECK_FALSE(rep.ok);
  CHECK(rep.witness.size() == 2);
  for (const auto& g : testing::test_algebras())
    for (const auto& f : module_library(g)) CHECK(validate_module(*f.module, g).ok);
}

TEST_CASE("lie derivatives") {
  auto ex = functions::exp_line();
  CHECK(same_function(lie_derive(ex, 0), ex));
  for (long k : {-2L, 1L, 3L}) {
    auto c = functions::circle(k);
    CHECK(same_function(lie_derive(c, 0), scale(c, GaussRational(0, k))));
  }
  Rng r(1);
  auto phi = testing::random_function(r, algebras::so3());
  CHECK(is_zero_function(lie_derive(phi, std::vector<GaussRational>(3))));
  CHECK_THROWS(lie_derive(phi, std::vector<GaussRational>(2)));
}

TEST_CASE("multiplication") {
  auto ex = functions::exp_line();
  auto sq = multiply(ex, ex);
  for (int k = 0; k <= 10; ++k) {
    AbsSum expect;
    expect.rational = Rational(Integer(1) << k) / factorial(k);
    CHECK(taylor_coeff_exact(sq, k) == expect);
  }
  CHECK(std::abs(evaluate_point(sq, {0.7}) - std::exp(1.4)) < 1e-12);

  Rng r(6);
  for (const auto& g : testing::test_algebras()) {
    for (int t = 0; t < 5; ++t) {
      auto phi = testing::random_function(r, g), psi = testing::random_function(r, g);
      auto one = constant_function(g.dim(), 1);
      auto x = r.reals(g.dim(), 0.8);
      CHECK(std::abs(evaluate_point(multiply(phi, one), x) - evaluate_point(phi, x)) < 1e-9);
      auto a = multiply(phi, psi), b = multiply(psi, phi);
      CHECK(std::abs(evaluate_point(a, x) - evaluate_point(b, x)) < 1e-9);
      CHECK(std::abs(evaluate_point(a, x) - evaluate_point(phi, x) * evaluate_point(psi, x)) < 1e-9);
      CHECK(exact_abs_sums(a, 5) == exact_abs_sums(b, 5));
      // Leibniz for the majorants at z = 1
      SeminormInterval qa = seminorm_q(a, 0, 1), qphi = seminorm_q(phi, 0, 1), qpsi = seminorm_q(psi, 0, 1);
      CHECK(qa.lower <= qphi.upper * qpsi.upper);
    }
  }
}

TEST_CASE("seminorm_q examples") {
  auto ex = functions::exp_line();
  SeminormInterval q = seminorm_q(ex, 0, 1);
  CHECK(q.certified);
  CHECK(q.lower <= kE);
  CHECK(kE <= q.upper);
  CHECK(q.upper - q.lower < 1e-9);

  Rng r(12);
  for (const auto& g : testing::test_algebras()) {
    auto phi = testing::random_function(r, g);
    SeminormInterval z = seminorm_q(phi, 0.5, 0);
    double at_e = std::abs(value(phi.at_unit()));
    CHECK(z.lower <= at_e * (1 + 1e-12));
    CHECK(z.upper >= at_e * (1 - 1e-12));
  }
  for (double c : {0.5, 1.0, 2.0, 5.0}) {
    SeminormInterval s = seminorm_q(functions::circle(1), 0, c);
    CHECK(s.lower <= std::exp(c) * (1 + 1e-12));
    CHECK(s.upper >= std::exp(c) * (1 - 1e-12));
    CHECK(s.upper - s.lower < 1e-9 * std::exp(c));
  }
  // q_{R,c}(exp) = sum k!^{R-1} c^k
  for (double R : {0.25, 0.5}) {
    double c = 2, expect = 0;
    for (int k = 0; k < 200; ++k) expect += std::exp((R - 1) * std::lgamma(k + 1.0) + k * std::log(c));
    SeminormInterval s = seminorm_q(ex, R, c);
    CHECK(s.lower <= expect * (1 + 1e-12));
    CHECK(s.upper >= expect * (1 - 1e-12));
  }
  CHECK_THROWS(seminorm_q(ex, 0, -1));
}

TEST_CASE("seminorm_q is finite for R < 1") {
  Rng r(30);
  for (const auto& g : testing::test_algebras()) {
    for (int t = 0; t < 4; ++t) {
      auto phi = testing::random_function(r, g);
      for (double R : {0.0, 0.5, 0.75}) {
        SeminormInterval s = seminorm_q(phi, R, 1.5);
        CHECK(s.certified);
        CHECK(std::isfinite(s.upper));
        CHECK(s.lower <= s.upper);
      }
      // past double range the upper end is left open
      SeminormInterval s = seminorm_q(phi, 0.9, 1.5);
      CHECK(s.lower <= s.upper);
      CHECK(s.certified == std::isfinite(s.upper));
    }
  }
}

TEST_CASE("finite order norms") {
  auto one = constant_function(1, 1);
  SeminormInterval n1 = norm_finite_order(one, 0.5, 1);
  CHECK(n1.lower <= 1);
  CHECK(n1.upper >= 1);
  CHECK(n1.upper - n1.lower < 1e-6);

  auto ex = functions::exp_line();
  for (double eps : {0.5, 1.0, 2.0}) {
    double R = 0.5;
    SeminormInterval n = norm_finite_order(ex, R, eps);
    CHECK(std::isfinite(n.upper));
    // sup_z e^z exp(-eps z^2) at z = 1/(2 eps)
    double closed = std::exp(1 / (4 * eps));
    CHECK(n.lower <= closed * (1 + 1e-9));
    CHECK(n.upper >= closed * (1 - 1e-9));
    SeminormInterval q = seminorm_q(ex, R, std::pow(R / eps, R));
    CHECK(n.lower <= q.upper);
  }
  {
    double R = 0.5, c = 0.1, eps = 1;
    double f = c * std::pow(kE * eps / R, R);
    REQUIRE(f < 1);
    SeminormInterval q = seminorm_q(ex, R, c), n = norm_finite_order(ex, R, eps);
    CHECK(q.lower <= n.upper / (1 - f));
  }
}

TEST_CASE("translation and inversion") {
  Rng r(14);
  for (const auto& g : testing::test_algebras()) {
    auto phi = testing::random_function(r, g);
    Translated id = right_translate(phi, std::vector<GaussRational>(g.dim()));
    CHECK(id.exact);
    CHECK(same_function(id.f, phi));
  }
  auto ex = functions::exp_line();
  for (Rational t : {Rational(1, 2), Rational(-1), Rational(3, 2)}) {
    Translated tr = right_translate(ex, {GaussRational(t)});
    double et = std::exp(t.get_d());
    for (int k = 0; k <= 6; ++k) {
      Interval ck = taylor_coeff(tr.f, k);
      double expect = et / std::tgamma(k + 1.0);
      CHECK(std::abs(ck.mid() - expect) <= tr.l1_error + 1e-12);
    }
    // Maj_{phi o r}(c) <= Maj_phi(c + |t|)
    for (double c : {0.5, 1.0, 2.0}) {
      SeminormInterval lhs = seminorm_q(tr.f, 0, c), rhs = seminorm_q(ex, 0, c + std::abs(t.get_d()));
      CHECK(lhs.upper - tr.l1_error * std::exp(c) <= rhs.lower * (1 + 1e-12));
    }
  }
  LieAlgebra so = algebras::so3();
  for (int t = 0; t < 10; ++t) {
    auto mods = testing::small_modules(so);
    auto m = mods[r.below(static_cast<int>(mods.size()))];
    RepFunction phi = make_function(m, r.vec(m->dim), r.vec(m->dim));
    CHECK(exact_abs_sums(inversion_pullback(phi), 8) == exact_abs_sums(phi, 8));
    auto x = r.reals(3, 0.7);
    std::vector<double> mx(x);
    for (auto& s : mx) s = -s;
    CHECK(std::abs(evaluate_point(inversion_pullback(phi), x) - evaluate_point(phi, mx)) < 1e-9);
  }
}

TEST_CASE("morphism pullback") {
  Rng r(15);
  for (const auto& g : testing::test_algebras()) {
    auto phi = testing::random_function(r, g);
    CMatrix id = CMatrix::identity(g.dim());
    CHECK(check_morphism(id, g, g).ok);
    CHECK(same_function(morphism_pullback(phi, id), phi));
    CMatrix zero(g.dim(), 1);
    CHECK(check_morphism(zero, algebras::abelian(1), g).ok);
    auto c = morphism_pullback(phi, zero);
    auto sums = exact_abs_sums(c, 4);
    for (int k = 1; k <= 4; ++k) CHECK(sums[k] == AbsSum());
    CHECK(std::abs(evaluate_point(c, {0.9}) - value(phi.at_unit())) < 1e-12);
  }
  CMatrix two(1, 1);
  two(0, 0) = 2;
  auto ex = functions::exp_line();
  auto pb = morphism_pullback(ex, two);
  for (int k = 0; k <= 8; ++k) {
    AbsSum expect;
    expect.rational = Rational(Integer(1) << k) / factorial(k);
    CHECK(taylor_coeff_exact(pb, k) == expect);
  }
  // heisenberg -> heisenberg, (x, y, z) -> (2x, y, 2z), not a morphism if z kept
  LieAlgebra h = algebras::heisenberg();
  CMatrix s(3, 3);
  s(0, 0) = 2;
  s(1, 1) = 1;
  s(2, 2) = 2;
  CHECK(check_morphism(s, h, h).ok);
  s(2, 2) = 1;
  CHECK_FALSE(check_morphism(s, h, h).ok);
}

TEST_CASE("coefficient estimates") {
  Rng r(16);
  for (const auto& g : testing::test_algebras()) {
    for (int t = 0; t < 3; ++t) {
      auto phi = testing::random_function(r, g);
      auto xi = rvec(r, g.dim());
      auto d = lie_derive(phi, xi);
      double s = sup_abs(xi);
      for (int k = 0; k <= 6; ++k) {
        Interval lhs = taylor_coeff(d, k), rhs = taylor_coeff(phi, k + 1);
        CHECK(lhs.lo <= s * (k + 1) * rhs.hi * (1 + 1e-12));
      }
      for (double c : {1.0, 2.0}) {
        SeminormInterval lhs = seminorm_q(d, 0.5, c), rhs = seminorm_q(phi, 0.5, c + 1);
        CHECK(lhs.upper <= s * rhs.lower * (1 + 1e-9));
      }
      // every |delta A_alpha v| <= |delta|_inf Psi^k |v|_1
      double psi = 0;
      for (const auto& a : phi.module->generators) psi = std::max(psi, op_norm(a));
      double dsup = 0;
      for (const auto& z : phi.delta) dsup = std::max(dsup, std::abs(value(z)));
      std::vector<std::vector<int>> words = {{}};
      for (int k = 1; k <= 4; ++k) {
        std::vector<std::vector<int>> next;
        for (const auto& w : words)
          for (int i = 0; i < g.dim(); ++i) {
            auto u = w;
            u.push_back(i);
            next.push_back(u);
          }
        words = next;
        for (const auto& w : words) {
          double val = std::abs(value(lie_derive_word(phi, w).at_unit()));
          CHECK(val <= dsup * std::pow(psi, k) * l1(phi.v) * (1 + 1e-12));
        }
      }
    }
  }
}

TEST_CASE("majorant bounds enclose exact sums") {
  Rng r(17);
  for (const auto& g : testing::test_algebras()) {
    for (int t = 0; t < 3; ++t) {
      auto prod = multiply(testing::random_function(r, g), testing::random_function(r, g));
      auto exact = exact_abs_sums(prod, 9);
      double prev = std::numeric_limits<double>::infinity();
      for (size_t budget : {size_t{16}, size_t{256}, size_t{8192}}) {
        ScopedExactBudget scope(budget);
        TaylorProfile p(prod);
        p.limit_exact(1);
        for (int k = 0; k <= 9; ++k) {
          Interval e = exact[k].to_interval();
          Interval m = p.log_abs_sum(k);
          if (e.hi > 0) CHECK(std::log(e.lo) <= m.hi + 1e-12);
        }
        // wider blocks never loosen the bound
        double hi = p.log_abs_sum(9).hi;
        CHECK(hi <= prev + 1e-9);
        prev = hi;
      }
    }
  }
}

TEST_CASE("point evaluation") {
  Rng r(18);
  for (const auto& g : testing::test_algebras()) {
    auto phi = testing::random_function(r, g);
    CHECK(std::abs(evaluate_point(phi, std::vector<double>(g.dim())) - value(phi.at_unit())) < 1e-14);
  }
  CHECK(std::abs(evaluate_point(functions::exp_line(), {1.0}) - kE) < 1e-14);
  // spin one half: exp(t A_3) = diag(e^{-it/2}, e^{it/2}),
  // exp(t A_1) = cos(t/2) - i sin(t/2) sigma_1
  using C = std::complex<double>;
  for (double t : {-1.0, -0.3, 0.5, 1.0}) {
    C i(0, 1);
    CHECK(std::abs(lie_taylor_partial_sum(functions::su2_coefficient(0, 0), {0, 0, t}, 30) - std::exp(-i * t / 2.0)) < 1e-6);
    CHECK(std::abs(lie_taylor_partial_sum(functions::su2_coefficient(1, 1), {0, 0, t}, 30) - std::exp(i * t / 2.0)) < 1e-6);
    CHECK(std::abs(lie_taylor_partial_sum(functions::su2_coefficient(0, 1), {t, 0, 0}, 30) + i * std::sin(t / 2)) < 1e-6);
    CHECK(std::abs(evaluate_point(functions::su2_coefficient(0, 0), {t, 0, 0}) - std::cos(t / 2)) < 1e-12);
  }
}

TEST_CASE("higher Leibniz") {
  TestPoly x = TestPoly::variable(2, 0), y = TestPoly::variable(2, 1);
  TestPoly a = x * x * y + TestPoly::constant(2, 3), b = x + y * y * Rational(1, 2);
  Derivation d1{{TestPoly::constant(2, 1), x}}, d2{{y * y, TestPoly::constant(2, 2)}};
  CHECK(d1(a * b) == d1(a) * b + a * d1(b));
  CHECK(d2(d1(a * b)) == d2(d1(a)) * b + d1(a) * d2(b) + d2(a) * d1(b) + a * d2(d1(b)));
  CHECK(apply_chain({d1, d2}, {0, 1}, a) == d2(d1(a)));

  Rng r(19);
  auto poly = [&](int deg) {
    TestPoly p(2);
    for (int t = 0; t < 3; ++t) {
      int i = r.range(0, deg), j = r.range(0, deg - i);
      p.add_term({i, j}, r.rational());
    }
    return p;
  };
  for (int k = 1; k <= 4; ++k) {
    for (int t = 0; t < 5; ++t) {
      std::vector<Derivation> ds;
      for (int i = 0; i < k; ++i) ds.push_back(Derivation{{poly(1), poly(1)}});
      auto rep = higher_leibniz_check(ds, poly(3), poly(3));
      CHECK(rep.shuffle_ok);
      CHECK(rep.symmetrized_ok);
    }
  }
}
