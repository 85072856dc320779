#include "liestar/leibniz.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace liestar {

TestPoly TestPoly::variable(int vars, int i) {
  TestPoly p(vars);
  Exponent e(vars, 0);
  e[i] = 1;
  p.add_term(e, 1);
  return p;
}

TestPoly TestPoly::constant(int vars, const Rational& c) {
  TestPoly p(vars);
  p.add_term(Exponent(vars, 0), c);
  return p;
}

void TestPoly::add_term(const Exponent& e, const Rational& c) {
  if (static_cast<int>(e.size()) != r_) throw std::invalid_argument("TestPoly: exponent length");
  if (c == 0) return;
  auto [it, fresh] = t_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

TestPoly TestPoly::partial(int i) const {
  TestPoly out(r_);
  for (const auto& [e, c] : t_) {
    if (e[i] == 0) continue;
    Exponent f = e;
    --f[i];
    out.add_term(f, c * e[i]);
  }
  return out;
}

TestPoly& TestPoly::operator+=(const TestPoly& o) {
  if (r_ == 0) r_ = o.r_;
  for (const auto& [e, c] : o.t_) add_term(e, c);
  return *this;
}

TestPoly operator*(const TestPoly& a, const TestPoly& b) {
  TestPoly out(std::max(a.r_, b.r_));
  for (const auto& [e, c] : a.t_)
    for (const auto& [f, d] : b.t_) {
      TestPoly::Exponent g = e;
      for (size_t i = 0; i < g.size(); ++i) g[i] += f[i];
      out.add_term(g, c * d);
    }
  return out;
}

TestPoly operator*(TestPoly a, const Rational& s) {
  TestPoly out(a.r_);
  for (const auto& [e, c] : a.t_) out.add_term(e, c * s);
  return out;
}

TestPoly Derivation::operator()(const TestPoly& a) const {
  TestPoly out(a.vars());
  for (size_t i = 0; i < coeffs.size(); ++i) out += coeffs[i] * a.partial(static_cast<int>(i));
  return out;
}

TestPoly apply_chain(const std::vector<Derivation>& ds, const std::vector<int>& order, const TestPoly& a) {
  TestPoly x = a;
  for (int i : order) x = ds[i](x);
  return x;
}

LeibnizReport higher_leibniz_check(const std::vector<Derivation>& ds, const TestPoly& a, const TestPoly& b) {
  int n = static_cast<int>(ds.size());
  LeibnizReport rep;
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);

  // shuffles are subsets: the first p slots go to b, the rest to a
  TestPoly lhs = apply_chain(ds, id, a * b), rhs(a.vars());
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> to_b, to_a;
    for (int i = 0; i < n; ++i) (mask >> i & 1 ? to_b : to_a).push_back(i);
    rhs += apply_chain(ds, to_a, a) * apply_chain(ds, to_b, b);
  }
  rep.shuffle_ok = lhs == rhs;

  TestPoly slhs(a.vars()), srhs(a.vars());
  std::vector<int> perm = id;
  do {
    slhs += apply_chain(ds, perm, a * b);
    for (int p = 0; p <= n; ++p) {
      std::vector<int> lo(perm.begin(), perm.begin() + p), hi(perm.begin() + p, perm.end());
      srhs += (apply_chain(ds, hi, a) * apply_chain(ds, lo, b)) * Rational(binomial(n, p));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  rep.symmetrized_ok = slhs == srhs;
  if (!rep.shuffle_ok) rep.message = "shuffle form differs";
  else if (!rep.symmetrized_ok) rep.message = "symmetrized form differs";
  return rep;
}

}  // namespace liestar
