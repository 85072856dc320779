#include "liestar/matrix.hpp"

#include <stdexcept>

namespace liestar {

CMatrix CMatrix::identity(size_t n) {
  CMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool CMatrix::is_zero() const {
  for (const auto& z : a_)
    if (!z.is_zero()) return false;
  return true;
}

CMatrix CMatrix::transpose() const {
  CMatrix t(c_, r_);
  for (size_t i = 0; i < r_; ++i)
    for (size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

CMatrix CMatrix::conj() const {
  CMatrix t = *this;
  for (auto& z : t.a_) z = z.conj();
  return t;
}

CMatrix& CMatrix::operator+=(const CMatrix& o) {
  if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix shape mismatch");
  for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
  if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix shape mismatch");
  for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
  return *this;
}

CMatrix& CMatrix::operator*=(const GaussRational& s) {
  for (auto& z : a_) z *= s;
  return *this;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.c_ != b.r_) throw std::invalid_argument("matrix shape mismatch");
  CMatrix p(a.r_, b.c_);
  for (size_t i = 0; i < a.r_; ++i)
    for (size_t k = 0; k < a.c_; ++k) {
      const GaussRational& x = a(i, k);
      if (x.is_zero()) continue;
      for (size_t j = 0; j < b.c_; ++j)
        if (!b(k, j).is_zero()) p(i, j) += x * b(k, j);
    }
  return p;
}

CVec operator*(const CMatrix& a, const CVec& v) {
  if (a.c_ != v.size()) throw std::invalid_argument("matrix/vector shape mismatch");
  CVec w(a.r_);
  for (size_t j = 0; j < a.c_; ++j) {
    if (v[j].is_zero()) continue;
    for (size_t i = 0; i < a.r_; ++i)
      if (!a(i, j).is_zero()) w[i] += a(i, j) * v[j];
  }
  return w;
}

CVec row_times(const CVec& row, const CMatrix& a) {
  if (a.rows() != row.size()) throw std::invalid_argument("vector/matrix shape mismatch");
  CVec w(a.cols());
  for (size_t i = 0; i < a.rows(); ++i) {
    if (row[i].is_zero()) continue;
    for (size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero()) w[j] += row[i] * a(i, j);
  }
  return w;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (size_t p = 0; p < b.rows(); ++p)
        for (size_t q = 0; q < b.cols(); ++q)
          if (!b(p, q).is_zero()) k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
    }
  return k;
}

CVec kron(const CVec& a, const CVec& b) {
  CVec k(a.size() * b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t p = 0; p < b.size(); ++p)
      if (!b[p].is_zero()) k[i * b.size() + p] = a[i] * b[p];
  }
  return k;
}

CMatrix commutator(const CMatrix& a, const CMatrix& b) { return a * b - b * a; }

CMatrix direct_sum(const CMatrix& a, const CMatrix& b) {
  CMatrix s(a.rows() + b.rows(), a.cols() + b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) s(i, j) = a(i, j);
  for (size_t i = 0; i < b.rows(); ++i)
    for (size_t j = 0; j < b.cols(); ++j) s(a.rows() + i, a.cols() + j) = b(i, j);
  return s;
}

GaussRational dot(const CVec& a, const CVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  GaussRational s;
  for (size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

CVec& axpy(CVec& y, const GaussRational& a, const CVec& x) {
  if (y.size() != x.size()) throw std::invalid_argument("vector length mismatch");
  if (a.is_zero()) return y;
  for (size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) y[i] += a * x[i];
  return y;
}

CVec scaled(CVec v, const GaussRational& s) {
  for (auto& z : v) z *= s;
  return v;
}

bool is_zero(const CVec& v) {
  for (const auto& z : v)
    if (!z.is_zero()) return false;
  return true;
}

CVec conj(CVec v) {
  for (auto& z : v) z = z.conj();
  return v;
}

std::optional<CMatrix> inverse(const CMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse of non-square matrix");
  size_t n = a.rows();
  CMatrix m = a, inv = CMatrix::identity(n);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m(piv, col).is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    if (piv != col)
      for (size_t j = 0; j < n; ++j) {
        std::swap(m(piv, j), m(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    GaussRational s = GaussRational(1) / m(col, col);
    for (size_t j = 0; j < n; ++j) {
      m(col, j) *= s;
      inv(col, j) *= s;
    }
    for (size_t i = 0; i < n; ++i) {
      if (i == col || m(i, col).is_zero()) continue;
      GaussRational f = m(i, col);
      for (size_t j = 0; j < n; ++j) {
        m(i, j) -= f * m(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

void ExactSpan::reduce(CVec& w, CVec* coords) const {
  for (const Row& r : rows_) {
    if (w[r.pivot].is_zero()) continue;
    GaussRational f = w[r.pivot];
    axpy(w, -f, r.e);
    if (coords) axpy(*coords, f, r.comb);
  }
}

bool ExactSpan::add(const CVec& v) {
  if (v.size() != dim_) throw std::invalid_argument("span dimension mismatch");
  CVec w = v;
  CVec comb(basis_.size() + 1);
  for (const Row& r : rows_) {
    if (w[r.pivot].is_zero()) continue;
    GaussRational f = w[r.pivot];
    axpy(w, -f, r.e);
    for (size_t k = 0; k < r.comb.size(); ++k)
      if (!r.comb[k].is_zero()) comb[k] -= f * r.comb[k];
  }
  size_t p = 0;
  while (p < dim_ && w[p].is_zero()) ++p;
  if (p == dim_) return false;
  comb[basis_.size()] = 1;
  GaussRational s = GaussRational(1) / w[p];
  for (auto& z : w) z *= s;
  for (auto& z : comb) z *= s;
  basis_.push_back(v);
  for (Row& r : rows_) r.comb.resize(basis_.size());
  rows_.push_back({std::move(w), p, std::move(comb)});
  return true;
}

bool ExactSpan::contains(const CVec& v) const {
  CVec w = v;
  reduce(w, nullptr);
  return is_zero(w);
}

std::optional<CVec> ExactSpan::coordinates(const CVec& v) const {
  CVec w = v;
  CVec c(basis_.size());
  reduce(w, &c);
  if (!is_zero(w)) return std::nullopt;
  return c;
}

}  // namespace liestar
