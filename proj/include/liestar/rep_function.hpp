#ifndef LIESTAR_REP_FUNCTION_HPP
#define LIESTAR_REP_FUNCTION_HPP

#include <complex>
#include <memory>
#include <vector>

#include <Eigen/Dense>

#include "liestar/lie_algebra.hpp"
#include "liestar/matrix.hpp"
#include "liestar/scalar.hpp"

namespace liestar {

// finite-dimensional module of Lie derivatives; A_i realizes L_{X_{e_i}}
struct OrbitModule {
  int dim = 0;
  std::vector<CMatrix> generators;
  bool matrix_exp = true;

  int algebra_dim() const { return static_cast<int>(generators.size()); }
  CMatrix combination(const std::vector<GaussRational>& xi) const;
  friend bool operator==(const OrbitModule& a, const OrbitModule& b) {
    return a.dim == b.dim && a.generators == b.generators;
  }
};

using ModulePtr = std::shared_ptr<const OrbitModule>;

ModulePtr make_module(std::vector<CMatrix> generators);
ValidationReport validate_module(const OrbitModule& m, const LieAlgebra& g);

// phi(g) = delta . pi(g) . v
struct RepFunction {
  ModulePtr module;
  CVec v, delta;

  int dim() const { return module->dim; }
  int algebra_dim() const { return module->algebra_dim(); }
  GaussRational at_unit() const { return dot(delta, v); }
};

RepFunction make_function(ModulePtr m, CVec v, CVec delta);
RepFunction constant_function(int n, const GaussRational& value);

RepFunction lie_derive(const RepFunction& phi, const std::vector<GaussRational>& xi);
RepFunction lie_derive(const RepFunction& phi, int i);
// iterated derivative L_{i_1} ... L_{i_k} phi
RepFunction lie_derive_word(const RepFunction& phi, const std::vector<int>& word);
RepFunction scale(const RepFunction& phi, const GaussRational& s);
RepFunction conj(const RepFunction& phi);
RepFunction multiply(const RepFunction& phi, const RepFunction& psi, bool reduce_result = true);
// sum on the direct-sum module
RepFunction add(const RepFunction& phi, const RepFunction& psi, bool reduce_result = true);
// minimal realization: cyclic submodule of v, then quotient by the largest
// submodule inside ker delta; all coefficients delta A_alpha v are kept
RepFunction reduce(const RepFunction& phi);
bool is_zero_function(const RepFunction& phi);
bool same_function(const RepFunction& phi, const RepFunction& psi);

RepFunction inversion_pullback(const RepFunction& phi);
// T is n_H x n_G: T(j, i) is the e_j-coordinate of the image of e_i
ValidationReport check_morphism(const CMatrix& T, const LieAlgebra& g, const LieAlgebra& h);
RepFunction morphism_pullback(const RepFunction& phi, const CMatrix& T);

struct Translated {
  RepFunction f;
  // l1 bound on the difference between f.v and the exact pi(exp xi) v
  double l1_error = 0;
  bool exact = false;
};
Translated right_translate(const RepFunction& phi, const std::vector<GaussRational>& xi);

using CMatrixD = Eigen::MatrixXcd;
using CVecD = Eigen::VectorXcd;

CMatrixD to_eigen(const CMatrix& a);
CVecD to_eigen(const CVec& v);
CMatrixD group_element(const OrbitModule& m, const std::vector<double>& x);
std::complex<double> evaluate_group(const RepFunction& phi, const CMatrixD& pi_g);
std::complex<double> evaluate_point(const RepFunction& phi, const std::vector<double>& x);
// sum_{k <= K} (1/k!) delta (x^i A_i)^k v
std::complex<double> lie_taylor_partial_sum(const RepFunction& phi, const std::vector<double>& x, int K);

}  // namespace liestar

#endif
