#include "liestar/realization.hpp"

#include <stdexcept>

namespace liestar {

ModulePtr make_module_sized(std::vector<CMatrix> generators, int dim, int n) {
  if (static_cast<int>(generators.size()) != n) throw std::invalid_argument("generator count mismatch");
  auto m = std::make_shared<OrbitModule>();
  m->dim = dim;
  m->generators = std::move(generators);
  return m;
}

namespace {

// reduced row echelon basis: row i has a one at pivot i and zeros at the
// other pivots, so coordinates of a member are its pivot entries
class Echelon {
 public:
  explicit Echelon(size_t dim) : dim_(dim) {}

  bool add(CVec w) {
    for (size_t i = 0; i < rows_.size(); ++i) {
      if (w[piv_[i]].is_zero()) continue;
      GaussRational f = -w[piv_[i]];
      axpy(w, f, rows_[i]);
    }
    size_t p = 0;
    while (p < dim_ && w[p].is_zero()) ++p;
    if (p == dim_) return false;
    GaussRational s = GaussRational(1) / w[p];
    for (auto& z : w)
      if (!z.is_zero()) z *= s;
    for (auto& r : rows_) {
      if (r[p].is_zero()) continue;
      GaussRational f = -r[p];
      axpy(r, f, w);
    }
    rows_.push_back(std::move(w));
    piv_.push_back(p);
    return true;
  }

  CVec coordinates(const CVec& v) const {
    CVec c(rows_.size());
    for (size_t i = 0; i < rows_.size(); ++i) c[i] = v[piv_[i]];
    return c;
  }

  size_t rank() const { return rows_.size(); }
  const std::vector<CVec>& rows() const { return rows_; }

 private:
  size_t dim_;
  std::vector<CVec> rows_;
  std::vector<size_t> piv_;
};

Realization reachable(const Realization& r) {
  Echelon span(static_cast<size_t>(r.dim));
  std::vector<CVec> queue;
  for (const auto& v : r.vectors)
    if (span.add(v)) queue.push_back(v);
  for (size_t q = 0; q < queue.size(); ++q)
    for (const auto& a : r.generators) {
      CVec w = a * queue[q];
      if (span.add(w)) queue.push_back(std::move(w));
    }
  const auto& basis = span.rows();
  int d = static_cast<int>(basis.size());
  Realization out;
  out.dim = d;
  for (const auto& a : r.generators) {
    CMatrix b(d, d);
    for (int j = 0; j < d; ++j) {
      CVec c = span.coordinates(a * basis[j]);
      for (int i = 0; i < d; ++i) b(i, j) = c[i];
    }
    out.generators.push_back(std::move(b));
  }
  for (const auto& v : r.vectors) out.vectors.push_back(span.coordinates(v));
  out.delta.resize(d);
  for (int j = 0; j < d; ++j) out.delta[j] = dot(r.delta, basis[j]);
  return out;
}

Realization observable(const Realization& r) {
  Echelon span(static_cast<size_t>(r.dim));
  std::vector<CVec> queue;
  if (span.add(r.delta)) queue.push_back(r.delta);
  for (size_t q = 0; q < queue.size(); ++q)
    for (const auto& a : r.generators) {
      CVec w = row_times(queue[q], a);
      if (span.add(w)) queue.push_back(std::move(w));
    }
  const auto& rows = span.rows();
  int e = static_cast<int>(rows.size());
  Realization out;
  out.dim = e;
  // C A = A'' C with C the row basis
  for (const auto& a : r.generators) {
    CMatrix b(e, e);
    for (int i = 0; i < e; ++i) {
      CVec c = span.coordinates(row_times(rows[i], a));
      for (int j = 0; j < e; ++j) b(i, j) = c[j];
    }
    out.generators.push_back(std::move(b));
  }
  for (const auto& v : r.vectors) {
    CVec w(e);
    for (int i = 0; i < e; ++i) w[i] = dot(rows[i], v);
    out.vectors.push_back(std::move(w));
  }
  out.delta = span.coordinates(r.delta);
  return out;
}

}  // namespace

Realization minimal_realization(const Realization& r) { return observable(reachable(r)); }

}  // namespace liestar
