#include "liestar/sym_poly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace liestar {

Monomial mono_multiply(const Monomial& a, const Monomial& b) {
  Monomial m(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), m.begin());
  return m;
}

std::vector<int> multiplicities(const Monomial& m, int n) {
  std::vector<int> mult(n);
  for (int i : m) ++mult.at(i);
  return mult;
}

Monomial from_multiplicities(const std::vector<int>& mult) {
  Monomial m;
  for (size_t i = 0; i < mult.size(); ++i) m.insert(m.end(), mult[i], static_cast<int>(i));
  return m;
}

SymPoly::SymPoly(int dim, const Monomial& m, const Scalar& c) : n_(dim) { add_term(m, c); }

int SymPoly::degree() const {
  int d = -1;
  for (const auto& [m, c] : t_) d = std::max(d, static_cast<int>(m.size()));
  return d;
}

Scalar SymPoly::coeff(const Monomial& m) const {
  auto it = t_.find(m);
  return it == t_.end() ? Scalar() : it->second;
}

void SymPoly::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  for (size_t k = 0; k < m.size(); ++k) {
    if (m[k] < 0 || m[k] >= n_) throw std::out_of_range("monomial index out of range");
    if (k && m[k] < m[k - 1]) throw std::invalid_argument("monomial not sorted");
  }
  auto [it, fresh] = t_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
  if (o.n_ != n_) throw std::invalid_argument("SymPoly dimension mismatch");
  for (const auto& [m, c] : o.t_) add_term(m, c);
  return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
  if (o.n_ != n_) throw std::invalid_argument("SymPoly dimension mismatch");
  for (const auto& [m, c] : o.t_) add_term(m, -c);
  return *this;
}

SymPoly& SymPoly::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    t_.clear();
    return *this;
  }
  for (auto it = t_.begin(); it != t_.end();) {
    it->second *= s;
    it = it->second.is_zero() ? t_.erase(it) : std::next(it);
  }
  return *this;
}

SymPoly SymPoly::conj() const {
  SymPoly r(n_);
  for (const auto& [m, c] : t_) r.t_.emplace(m, c.conj());
  return r;
}

SymPoly SymPoly::hbar_coeff(unsigned r) const {
  SymPoly p(n_);
  for (const auto& [m, c] : t_) p.add_term(m, Scalar(c.coeff(r)));
  return p;
}

SymPoly SymPoly::homogeneous_part(int k) const {
  SymPoly p(n_);
  for (const auto& [m, c] : t_)
    if (static_cast<int>(m.size()) == k) p.t_.emplace(m, c);
  return p;
}

SymPoly SymPoly::at_hbar(const GaussRational& h) const {
  SymPoly p(n_);
  for (const auto& [m, c] : t_) p.add_term(m, Scalar(c.at(h)));
  return p;
}

int SymPoly::hbar_degree() const {
  int d = -1;
  for (const auto& [m, c] : t_) d = std::max(d, c.degree());
  return d;
}

SymPoly sym_multiply(const SymPoly& p, const SymPoly& q) {
  if (p.dim() != q.dim()) throw std::invalid_argument("sym_multiply: dimension mismatch");
  SymPoly r(p.dim());
  for (const auto& [a, x] : p.terms())
    for (const auto& [b, y] : q.terms()) r.add_term(mono_multiply(a, b), x * y);
  return r;
}

double seminorm_p(const SymPoly& p, double Rp, double c, std::complex<double> hbar) {
  if (c < 0) throw std::invalid_argument("seminorm_p: negative c");
  double s = 0;
  for (const auto& [m, a] : p.terms()) {
    double k = static_cast<double>(m.size());
    double w = m.empty() ? 1.0 : (c == 0 ? 0.0 : std::exp(Rp * std::lgamma(k + 1) + k * std::log(c)));
    s += w * std::abs(a.at(hbar));
  }
  return s;
}

std::complex<double> eval_momentum(const SymPoly& p, const std::vector<double>& eta, std::complex<double> hbar) {
  if (static_cast<int>(eta.size()) != p.dim()) throw std::invalid_argument("eval_momentum: length mismatch");
  std::complex<double> s = 0;
  for (const auto& [m, a] : p.terms()) {
    double x = 1;
    for (int i : m) x *= eta[i];
    s += a.at(hbar) * x;
  }
  return s;
}

GaussRational eval_momentum_exact(const SymPoly& p, const std::vector<Rational>& eta, const GaussRational& hbar) {
  if (static_cast<int>(eta.size()) != p.dim()) throw std::invalid_argument("eval_momentum: length mismatch");
  GaussRational s;
  for (const auto& [m, a] : p.terms()) {
    Rational x = 1;
    for (int i : m) x *= eta[i];
    s += a.at(hbar) * GaussRational(x);
  }
  return s;
}

}  // namespace liestar
