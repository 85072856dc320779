#include "liestar/rep_function.hpp"

#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

#include "liestar/interval.hpp"
#include "liestar/realization.hpp"

namespace liestar {

CMatrix OrbitModule::combination(const std::vector<GaussRational>& xi) const {
  if (xi.size() != generators.size()) throw std::invalid_argument("combination: length mismatch");
  CMatrix x(dim, dim);
  for (size_t i = 0; i < xi.size(); ++i)
    if (!xi[i].is_zero()) x += generators[i] * xi[i];
  return x;
}

ModulePtr make_module(std::vector<CMatrix> generators) {
  auto m = std::make_shared<OrbitModule>();
  m->dim = generators.empty() ? 0 : static_cast<int>(generators[0].rows());
  for (const auto& a : generators)
    if (static_cast<int>(a.rows()) != m->dim || static_cast<int>(a.cols()) != m->dim)
      throw std::invalid_argument("generators must be square of equal size");
  m->generators = std::move(generators);
  return m;
}

ValidationReport validate_module(const OrbitModule& m, const LieAlgebra& g) {
  int n = g.dim();
  if (m.algebra_dim() != n) return {false, "generator count does not match algebra dimension", {}};
  for (const auto& a : m.generators)
    if (static_cast<int>(a.rows()) != m.dim || static_cast<int>(a.cols()) != m.dim)
      return {false, "generator shape", {}};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      CMatrix lhs = commutator(m.generators[i], m.generators[j]);
      for (int k = 0; k < n; ++k)
        if (sgn(g.c(i, j, k)) != 0) lhs -= m.generators[k] * GaussRational(g.c(i, j, k));
      if (!lhs.is_zero()) return {false, "commutation relation", {i + 1, j + 1}};
    }
  return {};
}

RepFunction make_function(ModulePtr m, CVec v, CVec delta) {
  if (static_cast<int>(v.size()) != m->dim || static_cast<int>(delta.size()) != m->dim)
    throw std::invalid_argument("vector length does not match module dimension");
  return RepFunction{std::move(m), std::move(v), std::move(delta)};
}

RepFunction constant_function(int n, const GaussRational& value) {
  std::vector<CMatrix> gens(n, CMatrix(1, 1));
  return make_function(make_module(std::move(gens)), CVec{value}, CVec{1});
}

RepFunction lie_derive(const RepFunction& phi, const std::vector<GaussRational>& xi) {
  if (static_cast<int>(xi.size()) != phi.algebra_dim()) throw std::invalid_argument("lie_derive: length mismatch");
  CVec w(phi.dim());
  for (size_t i = 0; i < xi.size(); ++i)
    if (!xi[i].is_zero()) axpy(w, xi[i], phi.module->generators[i] * phi.v);
  return RepFunction{phi.module, std::move(w), phi.delta};
}

RepFunction lie_derive(const RepFunction& phi, int i) {
  return RepFunction{phi.module, phi.module->generators.at(i) * phi.v, phi.delta};
}

RepFunction lie_derive_word(const RepFunction& phi, const std::vector<int>& word) {
  CVec w = phi.v;
  for (auto it = word.rbegin(); it != word.rend(); ++it) w = phi.module->generators.at(*it) * w;
  return RepFunction{phi.module, std::move(w), phi.delta};
}

RepFunction scale(const RepFunction& phi, const GaussRational& s) {
  return RepFunction{phi.module, scaled(phi.v, s), phi.delta};
}

RepFunction conj(const RepFunction& phi) {
  std::vector<CMatrix> gens;
  for (const auto& a : phi.module->generators) gens.push_back(a.conj());
  return make_function(make_module(std::move(gens)), conj(phi.v), conj(phi.delta));
}

RepFunction multiply(const RepFunction& phi, const RepFunction& psi, bool reduce_result) {
  int n = phi.algebra_dim();
  if (psi.algebra_dim() != n) throw std::invalid_argument("multiply: algebra mismatch");
  CMatrix ia = CMatrix::identity(phi.dim()), ib = CMatrix::identity(psi.dim());
  std::vector<CMatrix> gens;
  for (int i = 0; i < n; ++i)
    gens.push_back(kron(phi.module->generators[i], ib) + kron(ia, psi.module->generators[i]));
  RepFunction r = make_function(make_module(std::move(gens)), kron(phi.v, psi.v), kron(phi.delta, psi.delta));
  return reduce_result ? reduce(r) : r;
}

RepFunction add(const RepFunction& phi, const RepFunction& psi, bool reduce_result) {
  int n = phi.algebra_dim();
  if (psi.algebra_dim() != n) throw std::invalid_argument("add: algebra mismatch");
  RepFunction r;
  if (phi.module == psi.module || *phi.module == *psi.module) {
    CVec v = phi.v;
    CVec d = phi.delta;
    if (d == psi.delta) {
      for (size_t k = 0; k < v.size(); ++k) v[k] += psi.v[k];
      r = RepFunction{phi.module, std::move(v), std::move(d)};
      return reduce_result ? reduce(r) : r;
    }
  }
  std::vector<CMatrix> gens;
  for (int i = 0; i < n; ++i) gens.push_back(direct_sum(phi.module->generators[i], psi.module->generators[i]));
  CVec v = phi.v, d = phi.delta;
  v.insert(v.end(), psi.v.begin(), psi.v.end());
  d.insert(d.end(), psi.delta.begin(), psi.delta.end());
  r = make_function(make_module(std::move(gens)), std::move(v), std::move(d));
  return reduce_result ? reduce(r) : r;
}

RepFunction reduce(const RepFunction& phi) {
  Realization z{phi.module->generators, {phi.v}, phi.delta, phi.dim()};
  z = minimal_realization(z);
  return make_function(make_module_sized(std::move(z.generators), z.dim, phi.algebra_dim()), std::move(z.vectors[0]),
                       std::move(z.delta));
}

bool is_zero_function(const RepFunction& phi) { return reduce(phi).dim() == 0; }

bool same_function(const RepFunction& phi, const RepFunction& psi) {
  return is_zero_function(add(phi, scale(psi, -1), false));
}

RepFunction inversion_pullback(const RepFunction& phi) {
  std::vector<CMatrix> gens;
  for (const auto& a : phi.module->generators) gens.push_back(a.transpose() * GaussRational(-1));
  return make_function(make_module_sized(std::move(gens), phi.dim(), phi.algebra_dim()), phi.delta, phi.v);
}

ValidationReport check_morphism(const CMatrix& T, const LieAlgebra& g, const LieAlgebra& h) {
  if (static_cast<int>(T.rows()) != h.dim() || static_cast<int>(T.cols()) != g.dim())
    return {false, "tangent map shape", {}};
  int ng = g.dim(), nh = h.dim();
  for (int i = 0; i < ng; ++i)
    for (int j = i + 1; j < ng; ++j)
      for (int l = 0; l < nh; ++l) {
        // T[e_i, e_j] vs [T e_i, T e_j]
        GaussRational lhs, rhs;
        for (int k = 0; k < ng; ++k)
          if (sgn(g.c(i, j, k)) != 0) lhs += GaussRational(g.c(i, j, k)) * T(l, k);
        for (int a = 0; a < nh; ++a)
          for (int b = 0; b < nh; ++b)
            if (sgn(h.c(a, b, l)) != 0) rhs += T(a, i) * T(b, j) * GaussRational(h.c(a, b, l));
        if (lhs != rhs) return {false, "bracket not preserved", {i + 1, j + 1, l + 1}};
      }
  return {};
}

RepFunction morphism_pullback(const RepFunction& phi, const CMatrix& T) {
  int nh = phi.algebra_dim();
  if (static_cast<int>(T.rows()) != nh) throw std::invalid_argument("morphism_pullback: shape mismatch");
  int ng = static_cast<int>(T.cols());
  std::vector<CMatrix> gens;
  for (int i = 0; i < ng; ++i) {
    CMatrix a(phi.dim(), phi.dim());
    for (int j = 0; j < nh; ++j)
      if (!T(j, i).is_zero()) a += phi.module->generators[j] * T(j, i);
    gens.push_back(std::move(a));
  }
  return make_function(make_module_sized(std::move(gens), phi.dim(), ng), phi.v, phi.delta);
}

namespace {

Rational l1_norm(const CVec& v) {
  // upper bound of sum |z| using |z| <= |re| + |im|
  Rational s = 0;
  for (const auto& z : v) s += abs(z.re) + abs(z.im);
  return s;
}

Rational op_norm_l1(const CMatrix& a) {
  Rational best = 0;
  for (size_t j = 0; j < a.cols(); ++j) {
    Rational s = 0;
    for (size_t i = 0; i < a.rows(); ++i) s += abs(a(i, j).re) + abs(a(i, j).im);
    if (s > best) best = s;
  }
  return best;
}

Rational round_to_grid(const Rational& q, long bits) {
  Integer scale = 1;
  scale <<= static_cast<mp_bitcnt_t>(bits);
  Rational x = q * Rational(scale);
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  Rational f(fl, scale);
  f.canonicalize();
  if (x - Rational(fl) >= Rational(1, 2)) f += Rational(1, scale);
  return f;
}

}  // namespace

Translated right_translate(const RepFunction& phi, const std::vector<GaussRational>& xi) {
  CMatrix x = phi.module->combination(xi);
  CVec term = phi.v, sum = phi.v;
  Rational xnorm = op_norm_l1(x);
  const Rational target(1, Integer("1000000000000000000000000"));
  for (int j = 1; j < 400; ++j) {
    term = x * term;
    if (is_zero(term)) return {RepFunction{phi.module, sum, phi.delta}, 0.0, true};
    term = scaled(term, GaussRational(Rational(1, j)));
    for (size_t k = 0; k < sum.size(); ++k) sum[k] += term[k];
    Rational q = xnorm / (j + 1);
    if (q < Rational(1, 2)) {
      Rational tail = l1_norm(term) * q / (1 - q);
      if (tail < target) {
        // round to a coarse dyadic grid so coefficients stay small
        Rational err = tail;
        CVec rounded(sum.size());
        for (size_t k = 0; k < sum.size(); ++k) {
          rounded[k] = GaussRational(round_to_grid(sum[k].re, 40), round_to_grid(sum[k].im, 40));
          err += abs(rounded[k].re - sum[k].re) + abs(rounded[k].im - sum[k].im);
        }
        double e = from_rational(err).hi;
        return {RepFunction{phi.module, std::move(rounded), phi.delta}, e, false};
      }
    }
  }
  throw std::runtime_error("right_translate: series did not converge");
}

CMatrixD to_eigen(const CMatrix& a) {
  CMatrixD m(a.rows(), a.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) m(i, j) = to_complex(a(i, j));
  return m;
}

CVecD to_eigen(const CVec& v) {
  CVecD w(v.size());
  for (size_t i = 0; i < v.size(); ++i) w(i) = to_complex(v[i]);
  return w;
}

CMatrixD group_element(const OrbitModule& m, const std::vector<double>& x) {
  if (static_cast<int>(x.size()) != m.algebra_dim()) throw std::invalid_argument("group_element: length mismatch");
  if (!m.matrix_exp) throw std::invalid_argument("module has no evaluator");
  CMatrixD s = CMatrixD::Zero(m.dim, m.dim);
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * to_eigen(m.generators[i]);
  if (m.dim == 0) return s;
  return s.exp();
}

std::complex<double> evaluate_group(const RepFunction& phi, const CMatrixD& pi_g) {
  if (phi.dim() == 0) return 0;
  CVecD d = to_eigen(phi.delta), v = to_eigen(phi.v);
  return d.transpose() * (pi_g * v);
}

std::complex<double> evaluate_point(const RepFunction& phi, const std::vector<double>& x) {
  return evaluate_group(phi, group_element(*phi.module, x));
}

std::complex<double> lie_taylor_partial_sum(const RepFunction& phi, const std::vector<double>& x, int K) {
  if (phi.dim() == 0) return 0;
  CMatrixD s = CMatrixD::Zero(phi.dim(), phi.dim());
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * to_eigen(phi.module->generators[i]);
  CVecD d = to_eigen(phi.delta), w = to_eigen(phi.v);
  std::complex<double> total = 0;
  for (int k = 0; k <= K; ++k) {
    total += (d.transpose() * w)(0);
    w = s * w / static_cast<double>(k + 1);
  }
  return total;
}

}  // namespace liestar
