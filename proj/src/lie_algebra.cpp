#include "liestar/lie_algebra.hpp"

#include <stdexcept>

namespace liestar {

LieAlgebra::LieAlgebra(int dim) : n_(dim), c_(static_cast<size_t>(dim) * dim * dim) {
  if (dim <= 0) throw std::invalid_argument("Lie algebra dimension must be positive");
}

void LieAlgebra::set_bracket(int i, int j, int k, const Rational& v) {
  set(i, j, k, v);
  set(j, i, k, -v);
}

bool LieAlgebra::is_abelian() const {
  for (const auto& q : c_)
    if (sgn(q) != 0) return false;
  return true;
}

ValidationReport validate(const LieAlgebra& g) {
  int n = g.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (g.c(i, j, k) != -g.c(j, i, k))
          return {false, "antisymmetry", {i + 1, j + 1, k + 1}};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Rational s = 0;
          for (int m = 0; m < n; ++m)
            s += g.c(i, j, m) * g.c(m, k, l) + g.c(j, k, m) * g.c(m, i, l) + g.c(k, i, m) * g.c(m, j, l);
          if (sgn(s) != 0) return {false, "jacobi", {i + 1, j + 1, k + 1, l + 1}};
        }
  return {};
}

RVec bracket(const LieAlgebra& g, const RVec& x, const RVec& y) {
  int n = g.dim();
  if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
    throw std::invalid_argument("bracket: length mismatch");
  RVec z(n);
  for (int i = 0; i < n; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (sgn(y[j]) == 0) continue;
      Rational xy = x[i] * y[j];
      for (int k = 0; k < n; ++k)
        if (sgn(g.c(i, j, k)) != 0) z[k] += xy * g.c(i, j, k);
    }
  }
  return z;
}

CMatrix ad_matrix(const LieAlgebra& g, const RVec& x) {
  int n = g.dim();
  if (static_cast<int>(x.size()) != n) throw std::invalid_argument("ad_matrix: length mismatch");
  CMatrix a(n, n);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) {
      Rational s = 0;
      for (int i = 0; i < n; ++i) s += x[i] * g.c(i, j, k);
      a(k, j) = s;
    }
  return a;
}

ModularForm modular_form(const LieAlgebra& g) {
  int n = g.dim();
  ModularForm m;
  m.alpha.assign(n, 0);
  for (int k = 0; k < n; ++k) {
    Rational s = 0;
    for (int i = 0; i < n; ++i) s += g.c(i, k, i);
    m.alpha[k] = s / 2;
    if (sgn(m.alpha[k]) != 0) m.unimodular = false;
  }
  return m;
}

RVec basis_vector(int n, int i) {
  RVec e(n);
  e[i] = 1;
  return e;
}

namespace algebras {

LieAlgebra abelian(int n) {
  LieAlgebra g(n);
  g.name = "abelian" + std::to_string(n);
  return g;
}

LieAlgebra heisenberg() {
  LieAlgebra g(3);
  g.name = "heisenberg";
  g.set_bracket(0, 1, 2, 1);
  return g;
}

LieAlgebra so3() {
  LieAlgebra g(3);
  g.name = "so3";
  g.set_bracket(0, 1, 2, 1);
  g.set_bracket(1, 2, 0, 1);
  g.set_bracket(2, 0, 1, 1);
  return g;
}

LieAlgebra su2() {
  LieAlgebra g = so3();
  g.name = "su2";
  return g;
}

LieAlgebra aff1() {
  LieAlgebra g(2);
  g.name = "aff1";
  g.set_bracket(0, 1, 1, 1);
  return g;
}

LieAlgebra sl2() {
  LieAlgebra g(3);
  g.name = "sl2";
  g.set_bracket(0, 1, 1, 2);
  g.set_bracket(0, 2, 2, -2);
  g.set_bracket(1, 2, 0, 1);
  return g;
}

LieAlgebra heisenberg_plus_line() {
  LieAlgebra g(4);
  g.name = "heisenberg+R";
  g.set_bracket(0, 1, 2, 1);
  return g;
}

}  // namespace algebras

}  // namespace liestar
