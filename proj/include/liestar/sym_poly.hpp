#ifndef LIESTAR_SYM_POLY_HPP
#define LIESTAR_SYM_POLY_HPP

#include <complex>
#include <map>
#include <vector>

#include "liestar/scalar.hpp"

namespace liestar {

// sorted 0-based basis indices; empty = unit
using Monomial = std::vector<int>;

Monomial mono_multiply(const Monomial& a, const Monomial& b);
// multiplicity of each index, length n
std::vector<int> multiplicities(const Monomial& m, int n);
Monomial from_multiplicities(const std::vector<int>& mult);

class SymPoly {
 public:
  using Terms = std::map<Monomial, Scalar>;

  SymPoly() = default;
  explicit SymPoly(int dim) : n_(dim) {}
  SymPoly(int dim, const Monomial& m, const Scalar& c = Scalar(1));

  static SymPoly unit(int dim) { return SymPoly(dim, Monomial{}); }
  static SymPoly generator(int dim, int i) { return SymPoly(dim, Monomial{i}); }

  int dim() const { return n_; }
  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  int degree() const;
  Scalar coeff(const Monomial& m) const;

  void add_term(const Monomial& m, const Scalar& c);
  SymPoly& operator+=(const SymPoly& o);
  SymPoly& operator-=(const SymPoly& o);
  SymPoly& operator*=(const Scalar& s);
  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
  friend SymPoly operator*(SymPoly a, const Scalar& s) { return a *= s; }
  friend bool operator==(const SymPoly& a, const SymPoly& b) { return a.n_ == b.n_ && a.t_ == b.t_; }
  friend bool operator!=(const SymPoly& a, const SymPoly& b) { return !(a == b); }

  SymPoly conj() const;
  SymPoly hbar_coeff(unsigned r) const;
  SymPoly homogeneous_part(int k) const;
  SymPoly at_hbar(const GaussRational& h) const;
  int hbar_degree() const;

 private:
  int n_ = 0;
  Terms t_;
};

SymPoly sym_multiply(const SymPoly& p, const SymPoly& q);
double seminorm_p(const SymPoly& p, double Rp, double c, std::complex<double> hbar);
std::complex<double> eval_momentum(const SymPoly& p, const std::vector<double>& eta, std::complex<double> hbar);
GaussRational eval_momentum_exact(const SymPoly& p, const std::vector<Rational>& eta, const GaussRational& hbar);

}  // namespace liestar

#endif
