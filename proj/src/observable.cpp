#include "liestar/observable.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "liestar/realization.hpp"

namespace liestar {

namespace {

ModulePtr empty_module(int n) { return make_module_sized(std::vector<CMatrix>(n, CMatrix(0, 0)), 0, n); }

SVec to_svec(const CVec& v) { return SVec(v.begin(), v.end()); }

SVec scaled(SVec v, const Scalar& s) {
  for (auto& x : v) x *= s;
  return v;
}

void add_into(SVec& y, const SVec& x) {
  if (y.empty()) y.assign(x.size(), Scalar());
  for (size_t i = 0; i < x.size(); ++i) y[i] += x[i];
}

bool all_zero(const SVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Monomial remove(const Monomial& m, const std::vector<int>& nu) {
  std::vector<int> mu = multiplicities(m, static_cast<int>(nu.size()));
  for (size_t j = 0; j < nu.size(); ++j) mu[j] -= nu[j];
  return from_multiplicities(mu);
}

// calls f(nu) for every nu <= mu componentwise
template <class F>
void for_each_submultiset(const std::vector<int>& mu, F&& f) {
  std::vector<int> nu(mu.size(), 0);
  while (true) {
    f(nu);
    size_t j = 0;
    while (j < mu.size() && nu[j] == mu[j]) nu[j++] = 0;
    if (j == mu.size()) return;
    ++nu[j];
  }
}

Scalar binomials(const std::vector<int>& mu, const std::vector<int>& nu) {
  Integer b = 1;
  for (size_t j = 0; j < mu.size(); ++j) b *= binomial(mu[j], nu[j]);
  return Scalar(Rational(b));
}

Scalar power(const Scalar& s, int p) {
  Scalar r(1);
  for (int i = 0; i < p; ++i) r *= s;
  return r;
}

struct Tensor {
  ModulePtr module;
  CVec delta;
};

Tensor tensor_module(const Observable& f, const Observable& g) {
  int n = f.algebra().dim();
  CMatrix ia = CMatrix::identity(f.module_dim()), ib = CMatrix::identity(g.module_dim());
  std::vector<CMatrix> gens;
  for (int i = 0; i < n; ++i)
    gens.push_back(kron(f.module()->generators[i], ib) + kron(ia, g.module()->generators[i]));
  int d = f.module_dim() * g.module_dim();
  return {make_module_sized(std::move(gens), d, n), kron(f.delta(), g.delta())};
}

void require_same_algebra(const Observable& f, const Observable& g) {
  if (!(f.algebra() == g.algebra())) throw std::invalid_argument("observables over different Lie algebras");
}

// A_{w_1} ... A_{w_p} v, last letter first
SVec word_derivative(const OrbitModule& m, const std::vector<int>& word, SVec v) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) v = act(m.generators[*it], v);
  return v;
}

}  // namespace

Observable::Observable(LieAlgebra g) : g_(std::move(g)), module_(empty_module(g_.dim())) {}

Observable::Observable(LieAlgebra g, ModulePtr module, CVec delta, Terms terms)
    : g_(std::move(g)), module_(std::move(module)), delta_(std::move(delta)), terms_(std::move(terms)) {
  if (module_->algebra_dim() != g_.dim()) throw std::invalid_argument("Observable: module does not match algebra");
  if (static_cast<int>(delta_.size()) != module_->dim) throw std::invalid_argument("Observable: covector length");
  for (const auto& [m, v] : terms_) {
    if (static_cast<int>(v.size()) != module_->dim) throw std::invalid_argument("Observable: vector length");
    for (int i : m)
      if (i < 0 || i >= g_.dim()) throw std::invalid_argument("Observable: monomial index out of range");
    if (!std::is_sorted(m.begin(), m.end())) throw std::invalid_argument("Observable: monomial not sorted");
  }
}

Observable Observable::tensor(const LieAlgebra& g, const RepFunction& phi, const SymPoly& p) {
  if (phi.algebra_dim() != g.dim() || p.dim() != g.dim()) throw std::invalid_argument("tensor: dimension mismatch");
  Terms t;
  SVec v = to_svec(phi.v);
  for (const auto& [m, c] : p.terms()) t[m] = scaled(v, c);
  return Observable(g, phi.module, phi.delta, std::move(t)).canonical();
}

Observable Observable::function(const LieAlgebra& g, const RepFunction& phi) {
  return tensor(g, phi, SymPoly::unit(g.dim()));
}

Observable Observable::momentum(const LieAlgebra& g, const SymPoly& p) {
  return tensor(g, constant_function(g.dim(), 1), p);
}

bool Observable::is_zero() const { return canonical().terms_.empty(); }

int Observable::degree() const {
  int d = -1;
  for (const auto& [m, v] : canonical().terms_) d = std::max(d, static_cast<int>(m.size()));
  return d;
}

int Observable::hbar_degree() const {
  int d = -1;
  for (const auto& [m, v] : canonical().terms_)
    for (const auto& s : v) d = std::max(d, s.degree());
  return d;
}

RepFunction Observable::coefficient(const Monomial& m, const GaussRational& hbar) const {
  CVec v(module_->dim);
  auto it = terms_.find(m);
  if (it != terms_.end())
    for (int i = 0; i < module_->dim; ++i) v[i] = it->second[i].at(hbar);
  return RepFunction{module_, std::move(v), delta_};
}

RepFunction Observable::coefficient_part(const Monomial& m, unsigned r) const {
  CVec v(module_->dim);
  auto it = terms_.find(m);
  if (it != terms_.end())
    for (int i = 0; i < module_->dim; ++i) v[i] = it->second[i].coeff(r);
  return RepFunction{module_, std::move(v), delta_};
}

void Observable::add_vector(const Monomial& m, const SVec& v) { add_into(terms_[m], v); }

Observable Observable::hbar_coeff(unsigned r) const {
  Terms t;
  for (const auto& [m, v] : terms_) {
    SVec w;
    for (const auto& s : v) w.push_back(Scalar(s.coeff(r)));
    t[m] = std::move(w);
  }
  return Observable(g_, module_, delta_, std::move(t)).canonical();
}

Observable Observable::at_hbar(const GaussRational& h) const {
  Terms t;
  for (const auto& [m, v] : terms_) {
    SVec w;
    for (const auto& s : v) w.push_back(Scalar(s.at(h)));
    t[m] = std::move(w);
  }
  return Observable(g_, module_, delta_, std::move(t)).canonical();
}

Observable Observable::homogeneous_part(int k) const {
  Terms t;
  for (const auto& [m, v] : terms_)
    if (static_cast<int>(m.size()) == k) t[m] = v;
  return Observable(g_, module_, delta_, std::move(t)).canonical();
}

Observable Observable::conj() const {
  std::vector<CMatrix> gens;
  for (const auto& a : module_->generators) gens.push_back(a.conj());
  Terms t;
  for (const auto& [m, v] : terms_) {
    SVec w;
    for (const auto& s : v) w.push_back(s.conj());
    t[m] = std::move(w);
  }
  return Observable(g_, make_module_sized(std::move(gens), module_->dim, g_.dim()), liestar::conj(delta_),
                    std::move(t));
}

Observable Observable::canonical() const {
  Realization r;
  r.generators = module_->generators;
  r.delta = delta_;
  r.dim = module_->dim;
  std::vector<std::pair<const Monomial*, int>> slots;
  for (const auto& [m, v] : terms_) {
    int deg = -1;
    for (const auto& s : v) deg = std::max(deg, s.degree());
    for (int p = 0; p <= deg; ++p) {
      CVec c(module_->dim);
      for (int i = 0; i < module_->dim; ++i) c[i] = v[i].coeff(p);
      if (liestar::is_zero(c)) continue;
      r.vectors.push_back(std::move(c));
      slots.emplace_back(&m, p);
    }
  }
  if (r.vectors.empty()) return Observable(g_);
  Realization z = minimal_realization(r);
  if (z.dim == 0) return Observable(g_);
  std::map<Monomial, std::vector<std::vector<GaussRational>>> coeffs;
  for (size_t s = 0; s < slots.size(); ++s) {
    if (liestar::is_zero(z.vectors[s])) continue;
    auto& c = coeffs[*slots[s].first];
    c.resize(z.dim);
    for (int i = 0; i < z.dim; ++i) {
      auto& poly = c[i];
      if (static_cast<int>(poly.size()) <= slots[s].second) poly.resize(slots[s].second + 1);
      poly[slots[s].second] = z.vectors[s][i];
    }
  }
  Terms t;
  for (auto& [m, c] : coeffs) {
    SVec w;
    for (auto& poly : c) w.push_back(Scalar(std::move(poly)));
    t[m] = std::move(w);
  }
  Observable out(g_);
  out.module_ = make_module_sized(std::move(z.generators), z.dim, g_.dim());
  out.delta_ = std::move(z.delta);
  out.terms_ = std::move(t);
  return out;
}

Observable& Observable::operator+=(const Observable& o) {
  require_same_algebra(*this, o);
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  if ((module_ == o.module_ || *module_ == *o.module_) && delta_ == o.delta_) {
    for (const auto& [m, v] : o.terms_) add_vector(m, v);
    return *this;
  }
  int a = module_->dim, b = o.module_->dim, n = g_.dim();
  std::vector<CMatrix> gens;
  for (int i = 0; i < n; ++i) gens.push_back(direct_sum(module_->generators[i], o.module_->generators[i]));
  CVec d = delta_;
  d.insert(d.end(), o.delta_.begin(), o.delta_.end());
  Terms t;
  for (const auto& [m, v] : terms_) {
    SVec w = v;
    w.resize(a + b);
    t[m] = std::move(w);
  }
  for (const auto& [m, v] : o.terms_) {
    SVec w(a);
    w.insert(w.end(), v.begin(), v.end());
    add_into(t[m], w);
  }
  module_ = make_module_sized(std::move(gens), a + b, n);
  delta_ = std::move(d);
  terms_ = std::move(t);
  return *this;
}

Observable& Observable::operator-=(const Observable& o) { return *this += o * Scalar(-1); }

Observable& Observable::operator*=(const Scalar& s) {
  for (auto& [m, v] : terms_) v = scaled(v, s);
  return *this;
}

bool operator==(const Observable& a, const Observable& b) {
  if (!(a.g_ == b.g_)) return false;
  return (a - b).canonical().terms_.empty();
}

SVec act(const CMatrix& a, const SVec& v) {
  SVec out(a.rows());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero() || v[j].is_zero()) continue;
      Scalar t = v[j];
      t *= a(i, j);
      out[i] += t;
    }
  return out;
}

SVec kron(const SVec& a, const SVec& b) {
  SVec out(a.size() * b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) out[i * b.size() + j] = a[i] * b[j];
  }
  return out;
}

SVec sym_derivative(const OrbitModule& m, const std::vector<int>& nu, const SVec& v) {
  std::map<std::vector<int>, SVec> memo;
  auto rec = [&](auto&& self, const std::vector<int>& k) -> SVec {
    int p = std::accumulate(k.begin(), k.end(), 0);
    if (p == 0) return v;
    auto it = memo.find(k);
    if (it != memo.end()) return it->second;
    SVec out(v.size());
    for (size_t j = 0; j < k.size(); ++j) {
      if (k[j] == 0) continue;
      std::vector<int> sub = k;
      --sub[j];
      add_into(out, scaled(act(m.generators[j], self(self, sub)), Scalar(Rational(k[j]) / p)));
    }
    memo[k] = out;
    return out;
  };
  return rec(rec, nu);
}

Observable star_std(const Observable& f, const Observable& g) {
  require_same_algebra(f, g);
  const LieAlgebra& alg = f.algebra();
  int n = alg.dim();
  if (f.terms().empty() || g.terms().empty()) return Observable(alg);
  Tensor t = tensor_module(f, g);
  GuttEngine& engine = gutt_engine(alg);
  Observable::Terms out;
  std::map<std::pair<Monomial, std::vector<int>>, SVec> derivs;
  const Scalar z = Scalar::hbar_over_i();
  for (const auto& [m, v] : f.terms()) {
    std::vector<int> mu = multiplicities(m, n);
    for (const auto& [m2, w] : g.terms()) {
      for_each_submultiset(mu, [&](const std::vector<int>& nu) {
        int p = std::accumulate(nu.begin(), nu.end(), 0);
        auto key = std::make_pair(m2, nu);
        auto it = derivs.find(key);
        if (it == derivs.end()) it = derivs.emplace(key, sym_derivative(*g.module(), nu, w)).first;
        if (all_zero(it->second)) return;
        SVec base = kron(v, it->second);
        Scalar coef = binomials(mu, nu) * power(z, p);
        for (const auto& [m3, s] : engine.star(remove(m, nu), m2).terms()) add_into(out[m3], scaled(base, coef * s));
      });
    }
  }
  return Observable(alg, t.module, t.delta, std::move(out)).canonical();
}

Observable star_std_literal(const Observable& f, const Observable& g) {
  require_same_algebra(f, g);
  const LieAlgebra& alg = f.algebra();
  if (f.terms().empty() || g.terms().empty()) return Observable(alg);
  Tensor t = tensor_module(f, g);
  GuttEngine& engine = gutt_engine(alg);
  Observable::Terms out;
  const Scalar z = Scalar::hbar_over_i();
  for (const auto& [m, v] : f.terms()) {
    int k = static_cast<int>(m.size());
    if (k > 6) throw std::invalid_argument("star_std_literal: degree too large");
    std::vector<int> sigma(k);
    std::iota(sigma.begin(), sigma.end(), 0);
    for (const auto& [m2, w] : g.terms()) {
      do {
        for (int p = 0; p <= k; ++p) {
          std::vector<int> word;
          Monomial rest;
          for (int s = 0; s < k; ++s) (s < p ? word : rest).push_back(m[sigma[s]]);
          std::sort(rest.begin(), rest.end());
          SVec base = kron(v, word_derivative(*g.module(), word, w));
          Scalar coef = power(z, p) * Scalar(Rational(1) / (factorial(p) * factorial(k - p)));
          for (const auto& [m3, s] : engine.star(rest, m2).terms()) add_into(out[m3], scaled(base, coef * s));
        }
      } while (std::next_permutation(sigma.begin(), sigma.end()));
    }
  }
  return Observable(alg, t.module, t.delta, std::move(out)).canonical();
}

namespace {

Observable::Terms laplace_terms(const Observable::Terms& terms, const OrbitModule& module, int n) {
  Observable::Terms out;
  for (const auto& [m, v] : terms) {
    std::vector<int> mu = multiplicities(m, n);
    for (int j = 0; j < n; ++j) {
      if (mu[j] == 0) continue;
      std::vector<int> e(n, 0);
      e[j] = 1;
      add_into(out[remove(m, e)], scaled(act(module.generators[j], v), Scalar(mu[j])));
    }
  }
  return out;
}

Observable::Terms modular_terms(const Observable::Terms& terms, const RVec& alpha) {
  int n = static_cast<int>(alpha.size());
  Observable::Terms out;
  for (const auto& [m, v] : terms) {
    std::vector<int> mu = multiplicities(m, n);
    for (int j = 0; j < n; ++j) {
      if (mu[j] == 0 || alpha[j] == 0) continue;
      std::vector<int> e(n, 0);
      e[j] = 1;
      add_into(out[remove(m, e)], scaled(v, Scalar(alpha[j] * mu[j])));
    }
  }
  return out;
}

// sum_l step^l / l! D^l on one module
template <class Op>
Observable exponential(const Observable& f, const Scalar& step, Op op) {
  Observable::Terms sum = f.terms(), term = f.terms();
  for (int l = 1; !term.empty(); ++l) {
    term = op(term);
    for (auto& [m, v] : term) {
      v = scaled(v, step * Scalar(Rational(1, l)));
      add_into(sum[m], v);
    }
  }
  return Observable(f.algebra(), f.module(), f.delta(), std::move(sum)).canonical();
}

}  // namespace

Observable laplace(const Observable& f) {
  return Observable(f.algebra(), f.module(), f.delta(), laplace_terms(f.terms(), *f.module(), f.algebra().dim()))
      .canonical();
}

Observable laplace_power(const Observable& f, int l) {
  Observable::Terms t = f.terms();
  for (int i = 0; i < l && !t.empty(); ++i) t = laplace_terms(t, *f.module(), f.algebra().dim());
  return Observable(f.algebra(), f.module(), f.delta(), std::move(t)).canonical();
}

Observable laplace_power_closed(const Observable& f, int l) {
  int n = f.algebra().dim();
  Observable::Terms out;
  Scalar lf(factorial(l));
  for (const auto& [m, v] : f.terms()) {
    std::vector<int> mu = multiplicities(m, n);
    for_each_submultiset(mu, [&](const std::vector<int>& nu) {
      if (std::accumulate(nu.begin(), nu.end(), 0) != l) return;
      add_into(out[remove(m, nu)], scaled(sym_derivative(*f.module(), nu, v), lf * binomials(mu, nu)));
    });
  }
  return Observable(f.algebra(), f.module(), f.delta(), std::move(out)).canonical();
}

Observable modular_derivative(const Observable& f) {
  return Observable(f.algebra(), f.module(), f.delta(), modular_terms(f.terms(), modular_form(f.algebra()).alpha))
      .canonical();
}

Observable vertical_modular_derivative(const Observable& f, const Scalar& t) {
  RVec alpha = modular_form(f.algebra()).alpha;
  return exponential(f, t, [&](const Observable::Terms& x) { return modular_terms(x, alpha); });
}

Observable laplace_flat(const Observable& f) { return (laplace(f) + modular_derivative(f)).canonical(); }

Observable neumaier(const Observable& f, const Rational& kappa) {
  // exp(-i kappa hbar Delta)
  int n = f.algebra().dim();
  return exponential(f, Scalar::monomial(GaussRational(0, -kappa), 1),
                     [&](const Observable::Terms& x) { return laplace_terms(x, *f.module(), n); });
}

Observable star_kappa(const Observable& f, const Observable& g, const Rational& kappa) {
  if (kappa == 0) return star_std(f, g);
  return neumaier(star_std(neumaier(f, kappa), neumaier(g, kappa)), -kappa);
}

Observable star_weyl(const Observable& f, const Observable& g) { return star_kappa(f, g, Rational(1, 2)); }

Observable extract_Cr(const Observable& f, const Observable& g, unsigned r) { return star_std(f, g).hbar_coeff(r); }

Observable poisson_bracket(const Observable& f, const Observable& g) {
  Observable d = extract_Cr(f, g, 1) - extract_Cr(g, f, 1);
  return (d * Scalar(GaussRational(0, 1))).canonical();
}

Observable iota_restrict(const Observable& f) { return f.homogeneous_part(0); }

Observable pi_lift(const LieAlgebra& g, const RepFunction& phi) { return Observable::function(g, phi); }

Observable std_apply(const Observable& f, const Observable& phi) {
  if (phi.degree() > 0) throw std::invalid_argument("std_apply: argument must be a function");
  return iota_restrict(star_std(f, phi));
}

Observable std_quantize(const Observable& f, const RepFunction& phi) {
  return std_apply(f, pi_lift(f.algebra(), phi));
}

Observable std_quantize_explicit(const Observable& f, const RepFunction& phi) {
  const LieAlgebra& alg = f.algebra();
  Observable p = pi_lift(alg, phi);
  if (f.terms().empty() || p.terms().empty()) return Observable(alg);
  Tensor t = tensor_module(f, p);
  const SVec& w = p.terms().begin()->second;
  SVec total;
  for (const auto& [m, v] : f.terms()) {
    int k = static_cast<int>(m.size());
    std::vector<int> sigma = m;
    SVec acc(w.size());
    do {
      add_into(acc, word_derivative(*p.module(), sigma, w));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    // distinct arrangements stand for k! / prod mu_j! permutations each
    Integer rep = 1;
    for (int mu : multiplicities(m, alg.dim())) rep *= factorial(mu).get_num();
    Scalar coef = power(Scalar::hbar_over_i(), k) * Scalar(Rational(rep) / factorial(k));
    add_into(total, scaled(kron(v, acc), coef));
  }
  Observable::Terms out;
  out[Monomial{}] = total;
  return Observable(alg, t.module, t.delta, std::move(out)).canonical();
}

Observable point_transform(const Observable& f, const CMatrix& T, const LieAlgebra& g) {
  ValidationReport rep = check_morphism(T, g, f.algebra());
  if (!rep.ok) throw std::invalid_argument("point_transform: " + rep.message);
  auto inv = inverse(T);
  if (!inv) throw std::invalid_argument("point_transform: tangent map is singular");
  int ng = g.dim(), nh = f.algebra().dim();
  std::vector<SymPoly> images;
  for (int i = 0; i < nh; ++i) {
    SymPoly s(ng);
    for (int l = 0; l < ng; ++l)
      if (!(*inv)(l, i).is_zero()) s.add_term(Monomial{l}, Scalar((*inv)(l, i)));
    images.push_back(std::move(s));
  }
  RepFunction carrier = morphism_pullback(RepFunction{f.module(), CVec(f.module_dim()), f.delta()}, T);
  Observable::Terms out;
  for (const auto& [m, v] : f.terms()) {
    SymPoly prod = SymPoly::unit(ng);
    for (int i : m) prod = sym_multiply(prod, images[i]);
    for (const auto& [m2, c] : prod.terms()) add_into(out[m2], scaled(v, c));
  }
  return Observable(g, carrier.module, f.delta(), std::move(out)).canonical();
}

SeminormInterval seminorm_cross(const Observable& f, double R, double c, double Rp, double cp,
                                const GaussRational& hbar, int K_max,
                                int exact_depth) {
  if (c < 0 || cp < 0) throw std::invalid_argument("seminorm_cross: negative radius");
  SeminormInterval out;
  double lo = 0, hi = 0;
  for (const auto& [m, v] : f.terms()) {
    (void)v;
    SeminormInterval q = seminorm_q(f.coefficient(m, hbar), R, c, K_max, exact_depth);
    int k = static_cast<int>(m.size());
    Interval w(1.0);
    if (k > 0) {
      if (cp == 0) continue;
      w = iexp(Interval(Rp) * ilog_factorial(k) + Interval(static_cast<double>(k)) * ilog(Interval(cp)));
    }
    Interval l = Interval(q.lower) * w, u = Interval(q.upper) * w;
    lo = (Interval(lo) + l).lo;
    hi = (Interval(hi) + u).hi;
    out.certified &= q.certified;
    out.K = std::max(out.K, q.K);
  }
  out.lower = lo;
  out.upper = hi;
  return out;
}

std::complex<double> evaluate(const Observable& f, const std::vector<double>& x, const std::vector<double>& eta,
                              std::complex<double> hbar) {
  if (static_cast<int>(eta.size()) != f.algebra().dim()) throw std::invalid_argument("evaluate: eta length");
  if (f.terms().empty()) return 0;
  CMatrixD pi = group_element(*f.module(), x);
  CVecD d = to_eigen(f.delta());
  std::complex<double> total = 0;
  for (const auto& [m, v] : f.terms()) {
    CVecD w(v.size());
    for (size_t i = 0; i < v.size(); ++i) w(i) = v[i].at(hbar);
    std::complex<double> val = d.transpose() * (pi * w);
    for (int i : m) val *= eta[i];
    total += val;
  }
  return total;
}

}  // namespace liestar
