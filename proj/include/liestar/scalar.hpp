#ifndef LIESTAR_SCALAR_HPP
#define LIESTAR_SCALAR_HPP

#include <complex>
#include <string>
#include <vector>

#include "liestar/rational.hpp"

namespace liestar {

// polynomial in hbar, coefficients ascending; never stores trailing zeros
class Scalar {
 public:
  Scalar() = default;
  Scalar(const GaussRational& c);
  Scalar(const Rational& c) : Scalar(GaussRational(c)) {}
  Scalar(long c) : Scalar(GaussRational(c)) {}
  Scalar(int c) : Scalar(GaussRational(c)) {}
  explicit Scalar(std::vector<GaussRational> coeffs);

  static Scalar hbar() { return Scalar(std::vector<GaussRational>{0, 1}); }
  static Scalar monomial(const GaussRational& c, unsigned power);
  // hbar / i = -i hbar, the prefactor of each derivative
  static Scalar hbar_over_i() { return monomial(GaussRational(0, -1), 1); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<GaussRational>& coeffs() const { return c_; }
  GaussRational coeff(unsigned r) const { return r < c_.size() ? c_[r] : GaussRational(); }

  Scalar conj() const;
  GaussRational at(const GaussRational& h) const;
  std::complex<double> at(std::complex<double> h) const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator*=(const GaussRational& o);
  Scalar operator-() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar r = a;
    r *= b;
    return r;
  }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  void trim();
  std::vector<GaussRational> c_;
};

std::string to_string(const Scalar& s);
std::complex<double> to_complex(const GaussRational& z);

}  // namespace liestar

#endif
