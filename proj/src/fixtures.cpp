#include "liestar/fixtures.hpp"

#include <stdexcept>

#include "liestar/realization.hpp"

namespace liestar {

namespace {

CMatrix unit(int m, int i, int j, const GaussRational& x = 1) {
  CMatrix a(m, m);
  a(i, j) = x;
  return a;
}

}  // namespace

bool is_nilpotent(const OrbitModule& m) {
  int d = m.dim;
  std::vector<CVec> cur;
  for (int i = 0; i < d; ++i) {
    CVec e(d);
    e[i] = 1;
    cur.push_back(e);
  }
  for (int step = 0; step < d && !cur.empty(); ++step) {
    ExactSpan span(d);
    std::vector<CVec> next;
    for (const auto& w : cur)
      for (const auto& a : m.generators) {
        CVec x = a * w;
        if (span.add(x)) next.push_back(std::move(x));
      }
    cur = std::move(next);
  }
  return cur.empty();
}

std::vector<RVec> character_basis(const LieAlgebra& g) {
  // lambda with sum_k c^k_ij lambda_k = 0: null space of the bracket rows
  int n = g.dim();
  ExactSpan rows(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      CVec r(n);
      for (int k = 0; k < n; ++k) r[k] = g.c(i, j, k);
      if (!is_zero(r)) rows.add(r);
    }
  std::vector<RVec> out;
  // annihilator of the row span
  std::vector<CVec> basis = rows.basis();
  int r = static_cast<int>(basis.size());
  CMatrix m(r, n);
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < n; ++k) m(i, k) = basis[i][k];
  // reduced row echelon form
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < n && row < r; ++col) {
    int p = row;
    while (p < r && m(p, col).is_zero()) ++p;
    if (p == r) continue;
    for (int j = 0; j < n; ++j) std::swap(m(p, j), m(row, j));
    GaussRational s = GaussRational(1) / m(row, col);
    for (int j = 0; j < n; ++j) m(row, j) *= s;
    for (int i = 0; i < r; ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      GaussRational f = m(i, col);
      for (int j = 0; j < n; ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  for (int free = 0; free < n; ++free) {
    bool is_pivot = false;
    for (int p : pivots) is_pivot |= (p == free);
    if (is_pivot) continue;
    RVec lam(n);
    lam[free] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) lam[pivots[i]] = -m(i, free).re;
    out.push_back(lam);
  }
  return out;
}

ModulePtr trivial_module(int n) { return make_module_sized(std::vector<CMatrix>(n, CMatrix(1, 1)), 1, n); }

ModulePtr adjoint_module(const LieAlgebra& g) {
  std::vector<CMatrix> gens;
  for (int i = 0; i < g.dim(); ++i) gens.push_back(ad_matrix(g, basis_vector(g.dim(), i)));
  return make_module(std::move(gens));
}

ModulePtr coadjoint_module(const LieAlgebra& g) {
  std::vector<CMatrix> gens;
  for (int i = 0; i < g.dim(); ++i) gens.push_back(ad_matrix(g, basis_vector(g.dim(), i)).transpose() * GaussRational(-1));
  return make_module(std::move(gens));
}

ModulePtr character_module(const std::vector<GaussRational>& lambda) {
  std::vector<CMatrix> gens;
  for (const auto& l : lambda) gens.push_back(unit(1, 0, 0, l));
  return make_module(std::move(gens));
}

std::vector<FixtureModule> module_library(const LieAlgebra& g) {
  int n = g.dim();
  std::vector<FixtureModule> lib;
  auto push = [&](std::string name, ModulePtr m) {
    bool nil = is_nilpotent(*m);
    lib.push_back({std::move(name), std::move(m), nil});
  };
  push("trivial", trivial_module(n));
  push("adjoint", adjoint_module(g));
  push("coadjoint", coadjoint_module(g));
  auto chars = character_basis(g);
  for (size_t c = 0; c < chars.size(); ++c) {
    std::vector<GaussRational> lam(chars[c].begin(), chars[c].end());
    push("character" + std::to_string(c + 1), character_module(lam));
    std::vector<GaussRational> ilam;
    for (const auto& x : lam) ilam.push_back(x * GaussRational(0, 1));
    push("unitary_character" + std::to_string(c + 1), character_module(ilam));
  }
  if (g.name == "heisenberg" || g.name == "heisenberg+R") {
    std::vector<CMatrix> up = {unit(3, 0, 1), unit(3, 1, 2), unit(3, 0, 2)};
    if (n == 4) up.push_back(CMatrix(3, 3));
    push("unipotent", make_module(std::move(up)));
  }
  if (g.name == "su2" || g.name == "so3") {
    // -i sigma_k / 2
    GaussRational h(0, Rational(-1, 2));
    CMatrix a1(2, 2), a2(2, 2), a3(2, 2);
    a1(0, 1) = h;
    a1(1, 0) = h;
    a2(0, 1) = Rational(-1, 2);
    a2(1, 0) = Rational(1, 2);
    a3(0, 0) = h;
    a3(1, 1) = -h;
    push("spin_half", make_module({a1, a2, a3}));
  }
  if (g.name == "sl2") {
    CMatrix h(2, 2);
    h(0, 0) = 1;
    h(1, 1) = -1;
    push("defining", make_module({h, unit(2, 0, 1), unit(2, 1, 0)}));
  }
  if (g.name == "aff1") push("defining", make_module({unit(2, 0, 0), unit(2, 0, 1)}));
  if (g.is_abelian()) {
    for (int i = 0; i < n && i < 2; ++i) {
      std::vector<CMatrix> rot(n, CMatrix(2, 2)), jor(n, CMatrix(2, 2));
      rot[i](0, 1) = -1;
      rot[i](1, 0) = 1;
      jor[i](0, 1) = 1;
      push("rotation" + std::to_string(i + 1), make_module(std::move(rot)));
      push("jordan" + std::to_string(i + 1), make_module(std::move(jor)));
    }
  }
  return lib;
}

namespace functions {

RepFunction exp_line() { return make_function(character_module({GaussRational(1)}), CVec{1}, CVec{1}); }

RepFunction circle(long k) {
  return make_function(character_module({GaussRational(0, k)}), CVec{1}, CVec{1});
}

RepFunction su2_coefficient(int i, int j) {
  auto lib = module_library(algebras::su2());
  for (const auto& f : lib)
    if (f.name == "spin_half") {
      CVec v(2), d(2);
      v[j] = 1;
      d[i] = 1;
      return make_function(f.module, v, d);
    }
  throw std::logic_error("spin_half module missing");
}

RepFunction so3_coefficient(int i, int j) {
  CVec v(3), d(3);
  v[j] = 1;
  d[i] = 1;
  return make_function(adjoint_module(algebras::so3()), v, d);
}

}  // namespace functions

}  // namespace liestar
