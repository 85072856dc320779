#include "liestar/gutt.hpp"

#include <memory>
#include <stdexcept>

namespace liestar {

void pbw_add(PBWElement& u, const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = u.emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) u.erase(it);
  }
}

PBWElement pbw_scaled(const PBWElement& u, const Scalar& c) {
  PBWElement r;
  for (const auto& [w, a] : u) pbw_add(r, w, a * c);
  return r;
}

GuttEngine::GuttEngine(LieAlgebra g) : g_(std::move(g)), z_(Scalar::hbar_over_i()) {}

const PBWElement& GuttEngine::times_letter(const Word& w, int j) {
  auto key = std::make_pair(w, j);
  auto it = right_.find(key);
  if (it != right_.end()) return it->second;
  PBWElement r;
  if (w.empty() || j >= w.back()) {
    Word x = w;
    x.push_back(j);
    r.emplace(std::move(x), Scalar(1));
  } else {
    // w = w' e_l with l > j: w' e_l e_j = (w' e_j) e_l + z sum_k c^k_lj w' e_k
    int l = w.back();
    Word head(w.begin(), w.end() - 1);
    PBWElement left = times_letter(head, j);
    r = times_letter(left, l);
    for (int k = 0; k < g_.dim(); ++k) {
      const Rational& ck = g_.c(l, j, k);
      if (sgn(ck) == 0) continue;
      for (const auto& [x, a] : times_letter(head, k)) pbw_add(r, x, a * z_ * Scalar(ck));
    }
  }
  return right_.emplace(std::move(key), std::move(r)).first->second;
}

PBWElement GuttEngine::times_letter(const PBWElement& u, int j) {
  PBWElement r;
  for (const auto& [w, a] : u)
    for (const auto& [x, b] : times_letter(w, j)) pbw_add(r, x, a * b);
  return r;
}

PBWElement GuttEngine::normalize(const Word& word, const Scalar& coef) {
  PBWElement u;
  pbw_add(u, Word{}, coef);
  for (int j : word) {
    if (j < 0 || j >= g_.dim()) throw std::out_of_range("word letter out of range");
    u = times_letter(u, j);
  }
  return u;
}

PBWElement GuttEngine::multiply(const PBWElement& a, const PBWElement& b) {
  PBWElement r;
  for (const auto& [w, y] : b) {
    PBWElement t = a;
    for (int j : w) t = times_letter(t, j);
    for (const auto& [x, c] : t) pbw_add(r, x, c * y);
  }
  return r;
}

const PBWElement& GuttEngine::symmetrize(const Monomial& m) {
  auto it = sym_.find(m);
  if (it != sym_.end()) return it->second;
  PBWElement r;
  if (m.size() <= 1) {
    r.emplace(m, Scalar(1));
  } else {
    // sigma(m) = (1/k) sum_j mult_j sigma(m - e_j) e_j
    Rational inv_k(1, static_cast<unsigned long>(m.size()));
    for (size_t p = 0; p < m.size(); ++p) {
      if (p && m[p] == m[p - 1]) continue;
      size_t q = p;
      while (q < m.size() && m[q] == m[p]) ++q;
      Monomial rest = m;
      rest.erase(rest.begin() + static_cast<long>(p));
      PBWElement t = times_letter(symmetrize(rest), m[p]);
      Scalar w(Rational(inv_k * static_cast<long>(q - p)));
      for (const auto& [x, c] : t) pbw_add(r, x, c * w);
    }
  }
  return sym_.emplace(m, std::move(r)).first->second;
}

PBWElement GuttEngine::symmetrize(const SymPoly& p) {
  PBWElement r;
  for (const auto& [m, a] : p.terms())
    for (const auto& [x, c] : symmetrize(m)) pbw_add(r, x, c * a);
  return r;
}

SymPoly GuttEngine::unsymmetrize(const PBWElement& u) {
  SymPoly out(g_.dim());
  PBWElement rest = u;
  while (!rest.empty()) {
    // the top-degree part of sigma(w) is w itself
    auto top = rest.begin();
    for (auto it = rest.begin(); it != rest.end(); ++it)
      if (it->first.size() > top->first.size()) top = it;
    Word w = top->first;
    Scalar a = top->second;
    out.add_term(w, a);
    for (const auto& [x, c] : symmetrize(w)) pbw_add(rest, x, -(c * a));
    if (rest.count(w)) throw std::logic_error("unsymmetrize: triangular solve failed");
  }
  return out;
}

const SymPoly& GuttEngine::star(const Monomial& a, const Monomial& b) {
  auto key = std::make_pair(a, b);
  auto it = star_.find(key);
  if (it != star_.end()) return it->second;
  SymPoly r(g_.dim());
  if (a.empty() || b.empty()) {
    r.add_term(mono_multiply(a, b), Scalar(1));
  } else {
    PBWElement sa = symmetrize(a);
    PBWElement sb = symmetrize(b);
    r = unsymmetrize(multiply(sa, sb));
  }
  return star_.emplace(std::move(key), std::move(r)).first->second;
}

SymPoly GuttEngine::star(const SymPoly& p, const SymPoly& q) {
  if (p.dim() != g_.dim() || q.dim() != g_.dim()) throw std::invalid_argument("gutt_star: dimension mismatch");
  SymPoly r(g_.dim());
  for (const auto& [a, x] : p.terms())
    for (const auto& [b, y] : q.terms()) {
      Scalar xy = x * y;
      for (const auto& [m, c] : star(a, b).terms()) r.add_term(m, c * xy);
    }
  return r;
}

GuttEngine& gutt_engine(const LieAlgebra& g) {
  thread_local std::vector<std::unique_ptr<GuttEngine>> cache;
  for (auto& e : cache)
    if (e->algebra() == g) return *e;
  if (cache.size() > 32) cache.clear();
  cache.push_back(std::make_unique<GuttEngine>(g));
  return *cache.back();
}

PBWElement pbw_normalize(const LieAlgebra& g, const Word& word, const Scalar& coef) {
  return gutt_engine(g).normalize(word, coef);
}

PBWElement symmetrize(const LieAlgebra& g, const SymPoly& p) { return gutt_engine(g).symmetrize(p); }

SymPoly unsymmetrize(const LieAlgebra& g, const PBWElement& u) { return gutt_engine(g).unsymmetrize(u); }

SymPoly gutt_star(const LieAlgebra& g, const SymPoly& p, const SymPoly& q) { return gutt_engine(g).star(p, q); }

SymPoly linear_poisson(const LieAlgebra& g, const SymPoly& p, const SymPoly& q) {
  int n = g.dim();
  SymPoly r(n);
  // {a, b} = sum_{i,j} d_i a d_j b [e_i, e_j]
  for (const auto& [a, x] : p.terms())
    for (const auto& [b, y] : q.terms())
      for (size_t s = 0; s < a.size(); ++s) {
        if (s && a[s] == a[s - 1]) continue;
        long ma = 0;
        for (int t : a) ma += (t == a[s]);
        Monomial ra = a;
        ra.erase(ra.begin() + static_cast<long>(s));
        for (size_t u = 0; u < b.size(); ++u) {
          if (u && b[u] == b[u - 1]) continue;
          long mb = 0;
          for (int t : b) mb += (t == b[u]);
          Monomial rb = b;
          rb.erase(rb.begin() + static_cast<long>(u));
          Monomial base = mono_multiply(ra, rb);
          for (int k = 0; k < n; ++k) {
            const Rational& ck = g.c(a[s], b[u], k);
            if (sgn(ck) == 0) continue;
            r.add_term(mono_multiply(base, Monomial{k}), x * y * Scalar(Rational(ck * (ma * mb))));
          }
        }
      }
  return r;
}

}  // namespace liestar
