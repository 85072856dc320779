#include "liestar/scalar.hpp"

namespace liestar {

Scalar::Scalar(const GaussRational& c) {
  if (!c.is_zero()) c_.push_back(c);
}

Scalar::Scalar(std::vector<GaussRational> coeffs) : c_(std::move(coeffs)) { trim(); }

Scalar Scalar::monomial(const GaussRational& c, unsigned power) {
  std::vector<GaussRational> v(power + 1);
  v[power] = c;
  return Scalar(std::move(v));
}

void Scalar::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Scalar Scalar::conj() const {
  Scalar r = *this;
  for (auto& z : r.c_) z = z.conj();
  return r;
}

GaussRational Scalar::at(const GaussRational& h) const {
  GaussRational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= h;
    acc += *it;
  }
  return acc;
}

std::complex<double> Scalar::at(std::complex<double> h) const {
  std::complex<double> acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * h + to_complex(*it);
  return acc;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (size_t r = 0; r < o.c_.size(); ++r) c_[r] += o.c_[r];
  trim();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (size_t r = 0; r < o.c_.size(); ++r) c_[r] -= o.c_[r];
  trim();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<GaussRational> r(c_.size() + o.c_.size() - 1);
  for (size_t a = 0; a < c_.size(); ++a) {
    if (c_[a].is_zero()) continue;
    for (size_t b = 0; b < o.c_.size(); ++b)
      if (!o.c_[b].is_zero()) r[a + b] += c_[a] * o.c_[b];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

Scalar& Scalar::operator*=(const GaussRational& o) {
  if (o.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& z : c_) z *= o;
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& z : r.c_) z = -z;
  return r;
}

std::string to_string(const Scalar& s) {
  if (s.is_zero()) return "0";
  std::string out;
  for (size_t r = 0; r < s.coeffs().size(); ++r) {
    const auto& z = s.coeffs()[r];
    if (z.is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + to_string(z) + ")";
    if (r == 1) out += "h";
    if (r > 1) out += "h^" + std::to_string(r);
  }
  return out;
}

std::complex<double> to_complex(const GaussRational& z) { return {z.re.get_d(), z.im.get_d()}; }

}  // namespace liestar
