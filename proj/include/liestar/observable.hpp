#ifndef LIESTAR_OBSERVABLE_HPP
#define LIESTAR_OBSERVABLE_HPP

#include <complex>
#include <map>
#include <vector>

#include "liestar/gutt.hpp"
#include "liestar/lie_algebra.hpp"
#include "liestar/rep_function.hpp"
#include "liestar/sym_poly.hpp"
#include "liestar/taylor.hpp"

namespace liestar {

using SVec = std::vector<Scalar>;

// finite sum  sum_m phi_m (x) m  with every phi_m = delta . pi(g) . v_m on one
// shared module; the v_m are vectors of hbar polynomials
class Observable {
 public:
  using Terms = std::map<Monomial, SVec>;

  Observable() = default;
  explicit Observable(LieAlgebra g);
  Observable(LieAlgebra g, ModulePtr module, CVec delta, Terms terms);

  // phi (x) P
  static Observable tensor(const LieAlgebra& g, const RepFunction& phi, const SymPoly& p);
  static Observable function(const LieAlgebra& g, const RepFunction& phi);
  static Observable momentum(const LieAlgebra& g, const SymPoly& p);

  const LieAlgebra& algebra() const { return g_; }
  const ModulePtr& module() const { return module_; }
  const CVec& delta() const { return delta_; }
  const Terms& terms() const { return terms_; }
  int module_dim() const { return module_->dim; }
  bool is_zero() const;
  int degree() const;
  int hbar_degree() const;

  // coefficient function of m at a numeric hbar
  RepFunction coefficient(const Monomial& m, const GaussRational& hbar) const;
  // coefficient of hbar^r in the coefficient function of m
  RepFunction coefficient_part(const Monomial& m, unsigned r) const;

  Observable hbar_coeff(unsigned r) const;
  Observable at_hbar(const GaussRational& h) const;
  Observable homogeneous_part(int k) const;
  Observable conj() const;
  // minimal shared realization; drops vanishing monomials
  Observable canonical() const;

  Observable& operator+=(const Observable& o);
  Observable& operator-=(const Observable& o);
  Observable& operator*=(const Scalar& s);
  friend Observable operator+(Observable a, const Observable& b) { return a += b; }
  friend Observable operator-(Observable a, const Observable& b) { return a -= b; }
  friend Observable operator*(Observable a, const Scalar& s) { return a *= s; }
  // equality as elements, independent of the realization
  friend bool operator==(const Observable& a, const Observable& b);
  friend bool operator!=(const Observable& a, const Observable& b) { return !(a == b); }

 private:
  void add_vector(const Monomial& m, const SVec& v);
  LieAlgebra g_;
  ModulePtr module_;
  CVec delta_;
  Terms terms_;
};

SVec act(const CMatrix& a, const SVec& v);
SVec kron(const SVec& a, const SVec& b);

// symmetrized iterated derivative: the average over all words with letter
// counts nu of A_{w_1} ... A_{w_p} v
SVec sym_derivative(const OrbitModule& m, const std::vector<int>& nu, const SVec& v);

Observable star_std(const Observable& f, const Observable& g);
// the same product through the literal sum over S_k (k <= 6)
Observable star_std_literal(const Observable& f, const Observable& g);

Observable laplace(const Observable& f);
Observable laplace_power(const Observable& f, int l);
// Delta^l through the closed multinomial formula
Observable laplace_power_closed(const Observable& f, int l);
Observable modular_derivative(const Observable& f);
// exp(t L_alpha) for the vertical modular vector field
Observable vertical_modular_derivative(const Observable& f, const Scalar& t);
// Delta + L_alpha
Observable laplace_flat(const Observable& f);
Observable neumaier(const Observable& f, const Rational& kappa);
Observable star_kappa(const Observable& f, const Observable& g, const Rational& kappa);
Observable star_weyl(const Observable& f, const Observable& g);

// hbar^r coefficient of the standard-ordered product
Observable extract_Cr(const Observable& f, const Observable& g, unsigned r);
Observable poisson_bracket(const Observable& f, const Observable& g);

// unit-monomial part; pi_lift(phi) = phi (x) 1
Observable iota_restrict(const Observable& f);
Observable pi_lift(const LieAlgebra& g, const RepFunction& phi);
// rho_std(F) applied to a degree zero observable, via iota(F * pi phi)
Observable std_apply(const Observable& f, const Observable& phi);
Observable std_quantize(const Observable& f, const RepFunction& phi);
// the explicit operator formula with symmetrized Lie derivatives
Observable std_quantize_explicit(const Observable& f, const RepFunction& phi);

// pullback along a covering morphism G -> H with invertible tangent map T
// (n_H x n_G): functions by morphism_pullback, momenta by T^{-1} per slot
Observable point_transform(const Observable& f, const CMatrix& T, const LieAlgebra& g);

// (q_{R,c} (x) p_{Rp,cp})(F) at a numeric hbar
SeminormInterval seminorm_cross(const Observable& f, double R, double c, double Rp, double cp,
                                const GaussRational& hbar, int K_max = TaylorProfile::kMaxTerms,
                                int exact_depth = TaylorProfile::kMaxDegree);
std::complex<double> evaluate(const Observable& f, const std::vector<double>& x, const std::vector<double>& eta,
                              std::complex<double> hbar);

}  // namespace liestar

#endif
