#include "liestar/rational.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

namespace liestar {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

Rational parse_decimal(const std::string& s) {
  std::string mant = s;
  long exp10 = 0;
  auto epos = s.find_first_of("eE");
  if (epos != std::string::npos) {
    mant = s.substr(0, epos);
    std::string e = s.substr(epos + 1);
    std::string digits = (!e.empty() && (e[0] == '+' || e[0] == '-')) ? e.substr(1) : e;
    if (!all_digits(digits) || digits.size() > 6) throw std::invalid_argument("bad exponent: " + s);
    exp10 = std::stol(e);
  }
  bool neg = false;
  if (!mant.empty() && (mant[0] == '-' || mant[0] == '+')) {
    neg = mant[0] == '-';
    mant = mant.substr(1);
  }
  auto dot = mant.find('.');
  std::string ip = mant, fp;
  if (dot != std::string::npos) {
    ip = mant.substr(0, dot);
    fp = mant.substr(dot + 1);
  }
  if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
    throw std::invalid_argument("bad number: " + s);
  Integer num(ip.empty() ? std::string("0") : ip);
  Integer scale = 1;
  for (char ch : fp) {
    num = num * 10 + (ch - '0');
    scale *= 10;
  }
  Rational r(num, scale);
  r.canonicalize();
  Integer p10;
  mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
  if (exp10 > 0) r *= Rational(p10);
  if (exp10 < 0) r /= Rational(p10);
  return neg ? Rational(-r) : r;
}

}  // namespace

Rational parse_rational(const std::string& raw) {
  std::string s;
  for (char ch : raw)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto slash = s.find('/');
  if (slash == std::string::npos) return parse_decimal(s);
  Rational p = parse_decimal(s.substr(0, slash));
  Rational q = parse_decimal(s.substr(slash + 1));
  if (sgn(q) == 0) throw std::invalid_argument("zero denominator: " + raw);
  return p / q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

double to_double(const Rational& q) { return q.get_d(); }

Rational factorial(unsigned k) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return Rational(f);
}

Integer binomial(unsigned n, unsigned k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
  if (sgn(o.im) == 0) {
    re *= o.re;
    if (sgn(im) != 0) im *= o.re;
    return *this;
  }
  if (sgn(im) == 0) {
    im = re * o.im;
    re *= o.re;
    return *this;
  }
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re.swap(r);
  im.swap(i);
  return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& o) {
  Rational n = o.norm2();
  if (sgn(n) == 0) throw std::domain_error("division by zero");
  Rational r = (re * o.re + im * o.im) / n;
  Rational i = (im * o.re - re * o.im) / n;
  re.swap(r);
  im.swap(i);
  return *this;
}

std::string to_string(const GaussRational& z) {
  if (z.is_real()) return to_string(z.re);
  if (sgn(z.re) == 0) return to_string(z.im) + "i";
  std::string s = to_string(z.re);
  if (sgn(z.im) > 0) s += "+";
  return s + to_string(z.im) + "i";
}

}  // namespace liestar
