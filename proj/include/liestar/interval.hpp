#ifndef LIESTAR_INTERVAL_HPP
#define LIESTAR_INTERVAL_HPP

#include <cmath>
#include <limits>
#include <string>

#include "liestar/rational.hpp"

namespace liestar {

// closed interval of reals with outward rounding; libm results are widened
// by a relative 8 ulp margin
struct Interval {
  double lo = 0, hi = 0;

  Interval() = default;
  Interval(double x) : lo(x), hi(x) {}
  Interval(double l, double h) : lo(l), hi(h) {}

  static Interval entire() { return {-inf(), inf()}; }
  static double inf() { return std::numeric_limits<double>::infinity(); }

  double mid() const { return 0.5 * lo + 0.5 * hi; }
  double width() const { return hi - lo; }
  bool contains(double x) const { return lo <= x && x <= hi; }
  bool bounded() const { return std::isfinite(lo) && std::isfinite(hi); }

  Interval& operator+=(const Interval& o);
  Interval& operator*=(const Interval& o);
  friend Interval operator+(Interval a, const Interval& b) { return a += b; }
  friend Interval operator*(Interval a, const Interval& b) { return a *= b; }
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);
};

double down(double x);
double up(double x);

Interval from_rational(const Rational& q);
Interval from_integer(const Integer& z);
Interval hull(const Interval& a, const Interval& b);

Interval isqrt(const Interval& x);
Interval iexp(const Interval& x);
// log of a nonnegative interval; log 0 = -inf
Interval ilog(const Interval& x);
// log k! via lgamma
Interval ilog_factorial(unsigned k);
Interval ipow(const Interval& x, const Interval& y);

std::string to_string(const Interval& x);

}  // namespace liestar

#endif
