#ifndef LIESTAR_MATRIX_HPP
#define LIESTAR_MATRIX_HPP

#include <optional>
#include <vector>

#include "liestar/rational.hpp"

namespace liestar {

using CVec = std::vector<GaussRational>;

// dense row-major matrix over Q(i)
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(size_t rows, size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}

  static CMatrix identity(size_t n);

  size_t rows() const { return r_; }
  size_t cols() const { return c_; }
  GaussRational& operator()(size_t i, size_t j) { return a_[i * c_ + j]; }
  const GaussRational& operator()(size_t i, size_t j) const { return a_[i * c_ + j]; }

  bool is_zero() const;
  CMatrix transpose() const;
  CMatrix conj() const;

  CMatrix& operator+=(const CMatrix& o);
  CMatrix& operator-=(const CMatrix& o);
  CMatrix& operator*=(const GaussRational& s);
  friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
  friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
  friend CMatrix operator*(CMatrix a, const GaussRational& s) { return a *= s; }
  friend CMatrix operator*(const CMatrix& a, const CMatrix& b);
  friend CVec operator*(const CMatrix& a, const CVec& v);
  friend bool operator==(const CMatrix& a, const CMatrix& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
  }
  friend bool operator!=(const CMatrix& a, const CMatrix& b) { return !(a == b); }

 private:
  size_t r_ = 0, c_ = 0;
  std::vector<GaussRational> a_;
};

CVec row_times(const CVec& row, const CMatrix& a);
CMatrix kron(const CMatrix& a, const CMatrix& b);
CVec kron(const CVec& a, const CVec& b);
CMatrix commutator(const CMatrix& a, const CMatrix& b);
// block diagonal
CMatrix direct_sum(const CMatrix& a, const CMatrix& b);

GaussRational dot(const CVec& a, const CVec& b);
CVec& axpy(CVec& y, const GaussRational& a, const CVec& x);
CVec scaled(CVec v, const GaussRational& s);
bool is_zero(const CVec& v);
CVec conj(CVec v);

std::optional<CMatrix> inverse(const CMatrix& a);

// incrementally built span with coordinates relative to the inserted vectors
class ExactSpan {
 public:
  explicit ExactSpan(size_t dim) : dim_(dim) {}

  bool add(const CVec& v);
  bool contains(const CVec& v) const;
  std::optional<CVec> coordinates(const CVec& v) const;
  size_t rank() const { return basis_.size(); }
  size_t dim() const { return dim_; }
  const std::vector<CVec>& basis() const { return basis_; }

 private:
  struct Row {
    CVec e;
    size_t pivot;
    CVec comb;
  };
  void reduce(CVec& w, CVec* coords) const;

  size_t dim_;
  std::vector<CVec> basis_;
  std::vector<Row> rows_;
};

}  // namespace liestar

#endif
