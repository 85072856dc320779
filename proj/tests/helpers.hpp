#ifndef LIESTAR_TESTS_HELPERS_HPP
#define LIESTAR_TESTS_HELPERS_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <random>
#include <vector>

#include "liestar/fixtures.hpp"
#include "liestar/lie_algebra.hpp"
#include "liestar/observable.hpp"
#include "liestar/rep_function.hpp"
#include "liestar/scalar.hpp"
#include "liestar/sym_poly.hpp"

namespace testing {

using namespace liestar;

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}

  int below(int n) { return static_cast<int>(gen() % static_cast<std::uint64_t>(n)); }
  int range(int lo, int hi) { return lo + below(hi - lo + 1); }
  Rational rational(int h = 3) { return Rational(range(-h, h)) / range(1, 2); }
  GaussRational gauss(int h = 3) {
    GaussRational z(rational(h));
    if (below(3) == 0) z.im = rational(h);
    return z;
  }
  Scalar scalar(int h = 3, int hbar_deg = 1) {
    std::vector<GaussRational> c;
    for (int r = 0; r <= hbar_deg; ++r) c.push_back(below(2) ? gauss(h) : GaussRational());
    return Scalar(c);
  }
  Monomial monomial(int n, int max_deg) {
    Monomial m;
    int k = range(0, max_deg);
    for (int i = 0; i < k; ++i) m.push_back(below(n));
    std::sort(m.begin(), m.end());
    return m;
  }
  SymPoly sympoly(int n, int max_deg, int terms = 3, int hbar_deg = 0) {
    SymPoly p(n);
    while (p.is_zero())
      for (int t = 0; t < terms; ++t) p.add_term(monomial(n, max_deg), scalar(3, hbar_deg));
    return p;
  }
  CVec vec(int m, int h = 2) {
    CVec v(m);
    while (is_zero(v))
      for (auto& z : v) z = gauss(h);
    return v;
  }
  std::vector<double> reals(int n, double a) {
    std::uniform_real_distribution<double> u(-a, a);
    std::vector<double> x(n);
    for (auto& t : x) t = u(gen);
    return x;
  }
};

inline std::vector<LieAlgebra> test_algebras() {
  return {algebras::abelian(2), algebras::heisenberg(), algebras::so3(), algebras::su2(),
          algebras::aff1(),     algebras::sl2(),        algebras::heisenberg_plus_line()};
}

// modules of dimension <= max_dim from the fixture library
inline std::vector<ModulePtr> small_modules(const LieAlgebra& g, int max_dim = 3) {
  std::vector<ModulePtr> out;
  for (const auto& f : module_library(g))
    if (f.module->dim <= max_dim) out.push_back(f.module);
  return out;
}

inline RepFunction random_function(Rng& r, const LieAlgebra& g, int max_dim = 3) {
  auto mods = small_modules(g, max_dim);
  auto m = mods[r.below(static_cast<int>(mods.size()))];
  RepFunction phi;
  do phi = make_function(m, r.vec(m->dim), r.vec(m->dim));
  while (is_zero_function(phi));
  return phi;
}

// sum of phi_t (x) P_t with independent modules per term
inline Observable random_observable(Rng& r, const LieAlgebra& g, int max_deg, int terms = 2, int max_dim = 3) {
  Observable f(g);
  while (f.is_zero())
    for (int t = 0; t < terms; ++t)
      f += Observable::tensor(g, random_function(r, g, max_dim), SymPoly(g.dim(), r.monomial(g.dim(), max_deg), r.scalar(2, 0)));
  return f;
}

// independent brute-force normal ordering: repeatedly swap the first descent
inline std::map<std::vector<int>, Scalar> brute_normal_order(const LieAlgebra& g, const std::vector<int>& word) {
  Scalar z = Scalar::monomial(GaussRational(0, -1), 1);
  std::map<std::vector<int>, Scalar> done, todo;
  todo[word] = Scalar(1);
  while (!todo.empty()) {
    auto it = todo.begin();
    std::vector<int> w = it->first;
    Scalar c = it->second;
    todo.erase(it);
    if (c.is_zero()) continue;
    size_t p = 0;
    while (p + 1 < w.size() && w[p] <= w[p + 1]) ++p;
    if (p + 1 >= w.size()) {
      done[w] += c;
      continue;
    }
    int a = w[p], b = w[p + 1];
    std::vector<int> sw = w;
    std::swap(sw[p], sw[p + 1]);
    todo[sw] += c;
    for (int k = 0; k < g.dim(); ++k) {
      if (sgn(g.c(a, b, k)) == 0) continue;
      std::vector<int> shorter(w.begin(), w.begin() + p);
      shorter.push_back(k);
      shorter.insert(shorter.end(), w.begin() + p + 2, w.end());
      todo[shorter] += c * z * Scalar(g.c(a, b, k));
    }
  }
  for (auto it = done.begin(); it != done.end();)
    it = it->second.is_zero() ? done.erase(it) : std::next(it);
  return done;
}

}  // namespace testing

#endif
