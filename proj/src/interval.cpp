#include "liestar/interval.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace liestar {

namespace {

constexpr double kLibmRel = 8 * std::numeric_limits<double>::epsilon();

double widen_down(double x) {
  if (std::isnan(x)) return -Interval::inf();
  if (!std::isfinite(x)) return x;
  return down(x - std::fabs(x) * kLibmRel);
}

double widen_up(double x) {
  if (std::isnan(x)) return Interval::inf();
  if (!std::isfinite(x)) return x;
  return up(x + std::fabs(x) * kLibmRel);
}

// error-free sum: round outward only when a + b is inexact
double two_sum_err(double a, double b, double s) {
  double bb = s - a;
  return (a - (s - bb)) + (b - bb);
}

double add_lo(double a, double b) {
  double s = a + b;
  if (!std::isfinite(s)) return s;
  return two_sum_err(a, b, s) < 0 ? down(s) : s;
}

double add_hi(double a, double b) {
  double s = a + b;
  if (!std::isfinite(s)) return s;
  return two_sum_err(a, b, s) > 0 ? up(s) : s;
}

double mul_lo(double a, double b) {
  if (a == 0 || b == 0) return 0;
  return down(a * b);
}

double mul_hi(double a, double b) {
  if (a == 0 || b == 0) return 0;
  return up(a * b);
}

}  // namespace

double down(double x) { return std::nextafter(x, -Interval::inf()); }
double up(double x) { return std::nextafter(x, Interval::inf()); }

Interval& Interval::operator+=(const Interval& o) {
  lo = add_lo(lo, o.lo);
  hi = add_hi(hi, o.hi);
  return *this;
}

Interval& Interval::operator*=(const Interval& o) {
  double c[4] = {mul_lo(lo, o.lo), mul_lo(lo, o.hi), mul_lo(hi, o.lo), mul_lo(hi, o.hi)};
  double d[4] = {mul_hi(lo, o.lo), mul_hi(lo, o.hi), mul_hi(hi, o.lo), mul_hi(hi, o.hi)};
  lo = *std::min_element(c, c + 4);
  hi = *std::max_element(d, d + 4);
  return *this;
}

Interval operator-(const Interval& a, const Interval& b) { return {add_lo(a.lo, -b.hi), add_hi(a.hi, -b.lo)}; }

Interval operator/(const Interval& a, const Interval& b) {
  if (b.lo <= 0 && b.hi >= 0) return Interval::entire();
  double c[4] = {a.lo / b.lo, a.lo / b.hi, a.hi / b.lo, a.hi / b.hi};
  return {down(*std::min_element(c, c + 4)), up(*std::max_element(c, c + 4))};
}

Interval from_integer(const Integer& z) {
  double d = z.get_d();  // truncates toward zero
  if (Integer(d) == z) return Interval(d);
  return {down(d), up(d)};
}

Interval from_rational(const Rational& q) {
  double d = q.get_d();
  if (std::isfinite(d) && Rational(d) == q) return Interval(d);
  if (std::isfinite(d) && d != 0) return {down(d), up(d)};
  // tiny or huge: go through the integer parts
  Interval r = from_integer(q.get_num()) / from_integer(q.get_den());
  return r;
}

Interval hull(const Interval& a, const Interval& b) { return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)}; }

Interval isqrt(const Interval& x) {
  if (x.hi < 0) throw std::domain_error("sqrt of negative interval");
  double l = x.lo <= 0 ? 0 : down(std::sqrt(x.lo));
  double h = x.hi <= 0 ? 0 : up(std::sqrt(x.hi));
  return {std::max(0.0, l), h};
}

Interval iexp(const Interval& x) {
  double l = x.lo == -Interval::inf() ? 0 : std::max(0.0, widen_down(std::exp(x.lo)));
  double h = x.hi == -Interval::inf() ? 0 : widen_up(std::exp(x.hi));
  if (std::isinf(l) && l > 0) l = std::numeric_limits<double>::max();
  return {l, h};
}

Interval ilog(const Interval& x) {
  if (x.hi < 0) throw std::domain_error("log of negative interval");
  double l = x.lo <= 0 ? -Interval::inf() : widen_down(std::log(x.lo));
  double h = x.hi <= 0 ? -Interval::inf() : widen_up(std::log(x.hi));
  return {l, h};
}

Interval ilog_factorial(unsigned k) {
  // lgamma error is a few ulps; the margin is generous
  auto compute = [](unsigned j) {
    if (j < 2) return Interval(0.0);
    double g = std::lgamma(static_cast<double>(j) + 1);
    double m = std::fabs(g) * 64 * std::numeric_limits<double>::epsilon();
    return Interval(down(g - m), up(g + m));
  };
  static const std::vector<Interval> table = [&] {
    std::vector<Interval> t;
    for (unsigned j = 0; j <= 1024; ++j) t.push_back(compute(j));
    return t;
  }();
  return k < table.size() ? table[k] : compute(k);
}

Interval ipow(const Interval& x, const Interval& y) {
  if (x.lo < 0) throw std::domain_error("pow of negative base");
  if (x.hi == 0) return Interval(0.0);
  Interval e = iexp(ilog(x) * y);
  return e;
}

std::string to_string(const Interval& x) {
  char buf[80];
  std::snprintf(buf, sizeof buf, "[%.17g, %.17g]", x.lo, x.hi);
  return buf;
}

}  // namespace liestar
