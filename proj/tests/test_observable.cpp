#include <doctest.h>

#include <cmath>
#include <utility>

#include "helpers.hpp"
#include "liestar/gutt.hpp"
#include "liestar/observable.hpp"

using namespace liestar;
using testing::Rng;

namespace {

using Parts = std::vector<std::pair<RepFunction, SymPoly>>;

Parts random_parts(Rng& r, const LieAlgebra& g, int max_deg, int terms = 2) {
  Parts out;
  for (int t = 0; t < terms; ++t)
    out.push_back({testing::random_function(r, g), SymPoly(g.dim(), r.monomial(g.dim(), max_deg), r.scalar(2, 0))});
  return out;
}

Observable assemble(const LieAlgebra& g, const Parts& ps) {
  Observable f(g);
  for (const auto& [phi, p] : ps) f += Observable::tensor(g, phi, p);
  return f;
}

// (phi (x) P)(psi (x) Q) = phi psi (x) P Q
Observable pointwise(const LieAlgebra& g, const Parts& a, const Parts& b) {
  Observable f(g);
  for (const auto& [phi, p] : a)
    for (const auto& [psi, q] : b) f += Observable::tensor(g, multiply(phi, psi), sym_multiply(p, q));
  return f;
}

Observable one_tensor(const LieAlgebra& g, const SymPoly& p) { return Observable::momentum(g, p); }

const Scalar kHbarOverI = Scalar::hbar_over_i();

}  // namespace

TEST_CASE("construction and canonical form") {
  Rng r(1);
  LieAlgebra g = algebras::heisenberg();
  auto phi = testing::random_function(r, g);
  SymPoly e1 = SymPoly::generator(3, 0);
  Observable a = Observable::tensor(g, phi, e1);
  Observable twice = (a + a).canonical();
  CHECK(twice == a * Scalar(2));
  CHECK(twice.terms().size() == 1);
  CHECK((a - a).canonical().is_zero());
  CHECK((a - a).canonical().terms().empty());
  CHECK(a.degree() == 1);
  CHECK(Observable::tensor(g, phi, SymPoly(3, {0, 1}, Scalar::hbar())).hbar_degree() == 1);
  CHECK_THROWS(Observable::tensor(g, phi, SymPoly::unit(2)));
}

TEST_CASE("standard ordered product examples") {
  Rng r(2);
  for (const auto& g : testing::test_algebras()) {
    int n = g.dim();
    auto phi = testing::random_function(r, g), psi = testing::random_function(r, g);
    SymPoly xi = r.sympoly(n, 3), eta = r.sympoly(n, 3);
    CHECK(star_std(Observable::function(g, phi), Observable::tensor(g, psi, xi)) ==
          Observable::tensor(g, multiply(phi, psi), xi));
    CHECK(star_std(one_tensor(g, SymPoly::generator(n, 0)), Observable::function(g, phi)) ==
          Observable::tensor(g, phi, SymPoly::generator(n, 0)) +
              Observable::function(g, lie_derive(phi, 0)) * kHbarOverI);
    CHECK(star_std(one_tensor(g, xi), one_tensor(g, eta)) == one_tensor(g, gutt_star(g, xi, eta)));
  }
  CHECK_THROWS(star_std(Observable::momentum(algebras::so3(), SymPoly::unit(3)),
                        Observable::momentum(algebras::heisenberg(), SymPoly::unit(3))));
}

TEST_CASE("multiset formula equals the permutation sum") {
  for (const auto& g : testing::test_algebras()) {
    Rng r(10 + g.dim());
    for (int t = 0; t < 4; ++t) {
      Observable f = testing::random_observable(r, g, 4), h = testing::random_observable(r, g, 3);
      CHECK(star_std(f, h) == star_std_literal(f, h));
    }
  }
}

TEST_CASE("associativity and homogeneity") {
  for (const auto& g : {algebras::heisenberg(), algebras::so3(), algebras::aff1(), algebras::heisenberg_plus_line()}) {
    Rng r(20 + g.dim());
    for (int t = 0; t < 4; ++t) {
      Observable a = testing::random_observable(r, g, 2), b = testing::random_observable(r, g, 2),
                 c = testing::random_observable(r, g, 2);
      CHECK(star_std(star_std(a, b), c) == star_std(a, star_std(b, c)));
    }
    for (int t = 0; t < 4; ++t) {
      Observable a = testing::random_observable(r, g, 3).homogeneous_part(2);
      Observable b = testing::random_observable(r, g, 3).homogeneous_part(1);
      if (a.is_zero() || b.is_zero()) continue;
      Observable ab = star_std(a, b);
      for (int s = 0; s <= ab.hbar_degree(); ++s) CHECK(ab.hbar_coeff(s) == ab.hbar_coeff(s).homogeneous_part(3 - s));
    }
  }
}

TEST_CASE("laplacian") {
  Rng r(3);
  for (const auto& g : testing::test_algebras()) {
    int n = g.dim();
    auto phi = testing::random_function(r, g);
    CHECK(laplace(Observable::function(g, phi)).is_zero());
    CHECK(laplace(Observable::tensor(g, phi, SymPoly::generator(n, 0))) == Observable::function(g, lie_derive(phi, 0)));
    // e1 e2 -> L1 phi (x) e2 + L2 phi (x) e1
    if (n >= 2)
      CHECK(laplace(Observable::tensor(g, phi, SymPoly(n, {0, 1}))) ==
            Observable::tensor(g, lie_derive(phi, 0), SymPoly::generator(n, 1)) +
                Observable::tensor(g, lie_derive(phi, 1), SymPoly::generator(n, 0)));
    Observable f = testing::random_observable(r, g, 4, 3);
    Observable iter = f;
    for (int l = 1; l <= 5; ++l) {
      iter = laplace(iter);
      CHECK(laplace_power(f, l) == iter);
      CHECK(laplace_power_closed(f, l) == iter);
    }
    CHECK(laplace_power(f, f.degree() + 1).is_zero());
  }
}

TEST_CASE("vertical modular derivative") {
  Rng r(4);
  for (const auto& g : testing::test_algebras()) {
    if (!modular_form(g).unimodular) continue;
    Observable f = testing::random_observable(r, g, 3);
    CHECK(vertical_modular_derivative(f, Scalar(1)) == f);
  }
  LieAlgebra a = algebras::aff1();
  auto phi = testing::random_function(r, a);
  Rational alpha1 = modular_form(a).alpha[0];
  CHECK(vertical_modular_derivative(Observable::tensor(a, phi, SymPoly::generator(2, 0)), Scalar(1)) ==
        Observable::tensor(a, phi, SymPoly::generator(2, 0)) + Observable::function(a, phi) * Scalar(alpha1));
  // degree two: e1^2 -> e1^2 + 2 a e1 + a^2
  CHECK(vertical_modular_derivative(Observable::tensor(a, phi, SymPoly(2, {0, 0})), Scalar(1)) ==
        Observable::tensor(a, phi, SymPoly(2, {0, 0}) + SymPoly(2, {0}, Scalar(2 * alpha1)) +
                                       SymPoly(2, {}, Scalar(alpha1 * alpha1))));
  for (int t = 0; t < 6; ++t) {
    Observable f = testing::random_observable(r, a, 2), h = testing::random_observable(r, a, 2);
    Scalar s = t % 2 ? Scalar(Rational(1, 3)) : Scalar::monomial(GaussRational(0, -2), 1);
    CHECK(vertical_modular_derivative(star_std(f, h), s) ==
          star_std(vertical_modular_derivative(f, s), vertical_modular_derivative(h, s)));
  }
}

TEST_CASE("neumaier operators") {
  Rng r(5);
  for (const auto& g : testing::test_algebras()) {
    int n = g.dim();
    auto phi = testing::random_function(r, g);
    for (Rational k : {Rational(1, 2), Rational(1), Rational(-2)}) {
      Observable f = Observable::tensor(g, phi, SymPoly::generator(n, 1 % n));
      CHECK(neumaier(f, k) == f + Observable::function(g, lie_derive(phi, 1 % n)) *
                                      Scalar::monomial(GaussRational(0, -k), 1));
      CHECK(neumaier(Observable::function(g, phi), k) == Observable::function(g, phi));
      Observable h = testing::random_observable(r, g, 4, 3);
      CHECK(neumaier(neumaier(h, k), -k) == h);
    }
    for (int t = 0; t < 3; ++t) {
      Monomial m = r.monomial(n, 4);
      auto psi = testing::random_function(r, g);
      CHECK(neumaier(Observable::tensor(g, psi, SymPoly(n, m)), 1) ==
            star_std(one_tensor(g, SymPoly(n, m)), Observable::function(g, psi)));
      CHECK(neumaier(neumaier(Observable::tensor(g, psi, SymPoly(n, m)), Rational(1, 2)), Rational(1, 2)) ==
            neumaier(Observable::tensor(g, psi, SymPoly(n, m)), 1));
    }
  }
}

TEST_CASE("kappa ordered products") {
  for (const auto& g : {algebras::heisenberg(), algebras::so3(), algebras::aff1()}) {
    Rng r(6 + g.dim());
    Observable a = testing::random_observable(r, g, 2), b = testing::random_observable(r, g, 2),
               c = testing::random_observable(r, g, 2);
    CHECK(star_kappa(a, b, 0) == star_std(a, b));
    for (Rational k : {Rational(1, 2), Rational(1), Rational(-2)})
      CHECK(star_kappa(star_kappa(a, b, k), c, k) == star_kappa(a, star_kappa(b, c, k), k));
    for (int t = 0; t < 5; ++t) {
      Observable f = testing::random_observable(r, g, 3), h = testing::random_observable(r, g, 3);
      CHECK(star_weyl(f, h).conj() == star_weyl(h.conj(), f.conj()));
    }
  }
  LieAlgebra h = algebras::heisenberg();
  Observable e1 = one_tensor(h, SymPoly::generator(3, 0)), e2 = one_tensor(h, SymPoly::generator(3, 1));
  Observable comm = star_weyl(e1, e2) - star_weyl(e2, e1);
  CHECK(comm == one_tensor(h, gutt_star(h, SymPoly::generator(3, 0), SymPoly::generator(3, 1)) -
                                  gutt_star(h, SymPoly::generator(3, 1), SymPoly::generator(3, 0))));
  CHECK(comm == one_tensor(h, SymPoly::generator(3, 2) * Scalar::monomial(GaussRational(0, -1), 1)));
  // Weyl product of linear momenta is symmetric in the classical part
  CHECK((star_weyl(e1, e2) + star_weyl(e2, e1)) == one_tensor(h, SymPoly(3, {0, 1}, Scalar(2))));
}

TEST_CASE("bidifferential coefficients and the bracket") {
  Rng r(7);
  for (const auto& g : testing::test_algebras()) {
    int n = g.dim();
    Parts pa = random_parts(r, g, 3), pb = random_parts(r, g, 3);
    Observable f = assemble(g, pa), h = assemble(g, pb);
    CHECK(extract_Cr(f, h, 0) == pointwise(g, pa, pb));
    Observable sum(g);
    Observable prod = star_std(f, h);
    for (int s = 0; s <= prod.hbar_degree(); ++s) sum += extract_Cr(f, h, s) * Scalar::monomial(1, s);
    CHECK(sum == prod);

    auto phi = testing::random_function(r, g);
    SymPoly xi = SymPoly::generator(n, r.below(n));
    int i = xi.terms().begin()->first[0];
    CHECK(poisson_bracket(one_tensor(g, xi), Observable::function(g, phi)) == Observable::function(g, lie_derive(phi, i)));
    CHECK(poisson_bracket(f, f).is_zero());
    CHECK(poisson_bracket(f, h) == poisson_bracket(h, f) * Scalar(-1));

    // linear momenta reproduce the Lie bracket
    if (n >= 2) {
      RVec b = bracket(g, basis_vector(n, 0), basis_vector(n, 1));
      SymPoly bp(n);
      for (int k = 0; k < n; ++k)
        if (sgn(b[k]) != 0) bp.add_term({k}, Scalar(b[k]));
      CHECK(poisson_bracket(one_tensor(g, SymPoly::generator(n, 0)), one_tensor(g, SymPoly::generator(n, 1))) ==
            one_tensor(g, bp));
    }
  }
}

TEST_CASE("bracket is a Poisson structure") {
  for (const auto& g : {algebras::heisenberg(), algebras::so3(), algebras::aff1(), algebras::sl2()}) {
    Rng r(8 + g.dim());
    for (int t = 0; t < 3; ++t) {
      Parts pa = random_parts(r, g, 2, 1), pb = random_parts(r, g, 2, 1), pc = random_parts(r, g, 2, 1);
      Observable a = assemble(g, pa), b = assemble(g, pb), c = assemble(g, pc);
      Observable jac = poisson_bracket(a, poisson_bracket(b, c)) + poisson_bracket(b, poisson_bracket(c, a)) +
                       poisson_bracket(c, poisson_bracket(a, b));
      CHECK(jac.canonical().is_zero());
      Observable bc = pointwise(g, pb, pc);
      CHECK(poisson_bracket(a, bc) == extract_Cr(poisson_bracket(a, b), c, 0) + extract_Cr(b, poisson_bracket(a, c), 0));
    }
  }
}

TEST_CASE("standard ordered quantization") {
  Rng r(9);
  for (const auto& g : testing::test_algebras()) {
    int n = g.dim();
    auto phi = testing::random_function(r, g), psi = testing::random_function(r, g);
    for (int i = 0; i < n; ++i)
      CHECK(std_quantize(one_tensor(g, SymPoly::generator(n, i)), phi) ==
            Observable::function(g, lie_derive(phi, i)) * kHbarOverI);
    CHECK(std_quantize(Observable::function(g, psi), phi) == Observable::function(g, multiply(psi, phi)));
    if (n >= 2) {
      RepFunction sym = add(lie_derive_word(phi, {0, 1}), lie_derive_word(phi, {1, 0}));
      CHECK(std_quantize(one_tensor(g, SymPoly(n, {0, 1})), phi) ==
            Observable::function(g, sym) * (kHbarOverI * kHbarOverI * Scalar(Rational(1, 2))));
    }
    for (int t = 0; t < 3; ++t) {
      Observable f = testing::random_observable(r, g, 3), h = testing::random_observable(r, g, 2);
      CHECK(std_quantize(f, phi) == std_quantize_explicit(f, phi));
      CHECK(std_quantize(star_std(f, h), phi) == std_apply(f, std_quantize(h, phi)));
    }
  }
}

TEST_CASE("restriction and lift") {
  Rng r(10);
  LieAlgebra g = algebras::so3();
  auto phi = testing::random_function(r, g);
  CHECK(iota_restrict(Observable::function(g, phi)) == Observable::function(g, phi));
  CHECK(iota_restrict(Observable::tensor(g, phi, SymPoly::generator(3, 0))).is_zero());
  CHECK(iota_restrict(pi_lift(g, phi)) == Observable::function(g, phi));
  CHECK(pi_lift(g, phi) == Observable::tensor(g, phi, SymPoly::unit(3)));
}

TEST_CASE("point transformations") {
  Rng r(11);
  LieAlgebra h = algebras::heisenberg();
  Observable f = testing::random_observable(r, h, 3);
  CHECK(point_transform(f, CMatrix::identity(3), h) == f);

  LieAlgebra ab = algebras::abelian(2);
  CMatrix swap(2, 2);
  swap(0, 1) = 1;
  swap(1, 0) = 1;
  auto phi = testing::random_function(r, ab);
  CHECK(point_transform(Observable::tensor(ab, phi, SymPoly(2, {0, 0, 1})), swap, ab) ==
        Observable::tensor(ab, morphism_pullback(phi, swap), SymPoly(2, {0, 1, 1})));

  CMatrix s(3, 3);
  s(0, 0) = 2;
  s(1, 1) = Rational(1, 3);
  s(2, 2) = Rational(2, 3);
  s(2, 0) = 1;
  REQUIRE(check_morphism(s, h, h).ok);
  for (int t = 0; t < 4; ++t) {
    Observable a = testing::random_observable(r, h, 3), b = testing::random_observable(r, h, 3);
    CHECK(point_transform(star_std(a, b), s, h) == star_std(point_transform(a, s, h), point_transform(b, s, h)));
  }
  CHECK_THROWS(point_transform(f, CMatrix(3, 3), h));
}

TEST_CASE("cross seminorms") {
  LieAlgebra line = algebras::abelian(1);
  auto ex = functions::exp_line();
  SeminormInterval q = seminorm_cross(Observable::tensor(line, ex, SymPoly::generator(1, 0)), 0, 1, 1, 1, 1);
  CHECK(q.lower <= std::exp(1.0));
  CHECK(q.upper >= std::exp(1.0));
  CHECK(q.upper - q.lower < 1e-9);

  Rng r(12);
  for (const auto& g : testing::test_algebras()) {
    auto phi = testing::random_function(r, g);
    SeminormInterval a = seminorm_cross(Observable::function(g, phi), 0.5, 2, 1, 3, 1), b = seminorm_q(phi, 0.5, 2);
    CHECK(a.lower <= b.upper * (1 + 1e-12));
    CHECK(b.lower <= a.upper * (1 + 1e-12));

    Observable f = testing::random_observable(r, g, 3);
    SeminormInterval base = seminorm_cross(f, 0, 1, 1, 1, 1);
    CHECK(base.certified);
    CHECK(seminorm_cross(f, 0.5, 1, 1, 1, 1).upper >= base.lower);
    CHECK(seminorm_cross(f, 0, 2, 1, 1, 1).upper >= base.lower);
    CHECK(seminorm_cross(f, 0, 1, 2, 1, 1).upper >= base.lower);
    CHECK(seminorm_cross(f, 0, 1, 1, 2, 1).upper >= base.lower);
  }
}

TEST_CASE("evaluation") {
  Rng r(13);
  for (const auto& g : testing::test_algebras()) {
    int n = g.dim();
    auto phi = testing::random_function(r, g);
    auto x = r.reals(n, 0.7);
    std::vector<double> eta(n, 0.0);
    eta[0] = 3;
    CHECK(std::abs(evaluate(Observable::function(g, phi), x, eta, 1.0) - evaluate_point(phi, x)) < 1e-12);
    CHECK(std::abs(evaluate(one_tensor(g, SymPoly::generator(n, 0)), x, eta, 1.0) - 3.0) < 1e-12);
    Parts pa = random_parts(r, g, 2), pb = random_parts(r, g, 2);
    auto e = r.reals(n, 1.5);
    auto lhs = evaluate(extract_Cr(assemble(g, pa), assemble(g, pb), 0), x, e, 0.5);
    auto rhs = evaluate(assemble(g, pa), x, e, 0.5) * evaluate(assemble(g, pb), x, e, 0.5);
    CHECK(std::abs(lhs - rhs) < 1e-9 * (1 + std::abs(rhs)));
  }
}
