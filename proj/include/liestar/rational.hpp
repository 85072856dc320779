#ifndef LIESTAR_RATIONAL_HPP
#define LIESTAR_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace liestar {

using Integer = mpz_class;
using Rational = mpq_class;

// accepts "p", "p/q", "-p/q", decimals "0.125", "1e-3"
Rational parse_rational(const std::string& s);
std::string to_string(const Rational& q);
double to_double(const Rational& q);

Rational factorial(unsigned k);
Integer binomial(unsigned n, unsigned k);

// exact Gaussian rational a + b i
struct GaussRational {
  Rational re, im;

  GaussRational() = default;
  GaussRational(const Rational& r) : re(r), im(0) {}
  GaussRational(long r) : re(r), im(0) {}
  GaussRational(int r) : re(r), im(0) {}
  GaussRational(const Rational& r, const Rational& i) : re(r), im(i) {}

  static GaussRational I() { return GaussRational(0, 1); }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }
  GaussRational conj() const { return GaussRational(re, -im); }
  Rational norm2() const { return re * re + im * im; }

  GaussRational& operator+=(const GaussRational& o) {
    if (sgn(o.re) != 0) re += o.re;
    if (sgn(o.im) != 0) im += o.im;
    return *this;
  }
  GaussRational& operator-=(const GaussRational& o) {
    if (sgn(o.re) != 0) re -= o.re;
    if (sgn(o.im) != 0) im -= o.im;
    return *this;
  }
  GaussRational& operator*=(const GaussRational& o);
  GaussRational& operator/=(const GaussRational& o);
  GaussRational operator-() const { return GaussRational(-re, -im); }

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }
  // lexicographic, only for use as a map key
  friend bool operator<(const GaussRational& a, const GaussRational& b) {
    int c = cmp(a.re, b.re);
    return c != 0 ? c < 0 : cmp(a.im, b.im) < 0;
  }
};

std::string to_string(const GaussRational& z);

}  // namespace liestar

#endif
