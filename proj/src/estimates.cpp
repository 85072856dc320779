#include "liestar/estimates.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "liestar/fixtures.hpp"
#include "liestar/gutt.hpp"
#include "liestar/taylor.hpp"

namespace liestar {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : s) h = (h ^ ch) * 1099511628211ULL;
  return h;
}

// only the raw engine output is used, so draws agree across platforms
struct Draw {
  std::mt19937_64 eng;
  explicit Draw(std::uint64_t seed) : eng(splitmix(seed)) {}
  int below(int n) { return static_cast<int>(eng() % static_cast<std::uint64_t>(n)); }
  int range(int lo, int hi) { return lo + below(hi - lo + 1); }
  bool chance(int one_in) { return below(one_in) == 0; }
  Rational small(int height) {
    Rational q(range(-height, height), range(1, 2));
    q.canonicalize();
    return q;
  }
  GaussRational entry(int height) {
    GaussRational z(small(height));
    if (chance(4)) z.im = small(height);
    return z;
  }
  CVec vec(int dim, int height) {
    CVec v(dim);
    do
      for (auto& z : v) z = entry(height);
    while (is_zero(v));
    return v;
  }
  Monomial monomial(int n, int max_degree) {
    Monomial m;
    int k = range(0, max_degree);
    for (int j = 0; j < k; ++j) m.push_back(below(n));
    std::sort(m.begin(), m.end());
    return m;
  }
};

Interval abs_interval(const GaussRational& z) {
  if (z.is_real()) {
    Interval a = from_rational(z.re);
    return a.lo < 0 ? Interval(-a.hi, -a.lo) : a;
  }
  return isqrt(from_rational(z.norm2()));
}

// radius rounded down, for right hand sides
double radius_down(const Rational& q) {
  double d = to_double(q);
  if (Rational(d) > q) d = down(d);
  return d;
}

Interval as_interval(const SeminormInterval& s) { return Interval(s.lower, s.upper); }

double sup_norm_real(const std::vector<Rational>& xi) {
  Rational best = 0;
  for (const auto& x : xi) best = std::max(best, Rational(abs(x)));
  return to_double(best);
}

Interval sup_norm(const CVec& v) {
  Interval best(0.0);
  for (const auto& z : v) {
    Interval a = abs_interval(z);
    best = Interval(std::max(best.lo, a.lo), std::max(best.hi, a.hi));
  }
  return best;
}

Interval l1_norm(const CVec& v) {
  Interval s(0.0);
  for (const auto& z : v) s += abs_interval(z);
  return s;
}

// max column sum of moduli
Interval op_norm(const CMatrix& a) {
  Interval best(0.0);
  for (size_t j = 0; j < a.cols(); ++j) {
    Interval s(0.0);
    for (size_t i = 0; i < a.rows(); ++i) s += abs_interval(a(i, j));
    best = Interval(std::max(best.lo, s.lo), std::max(best.hi, s.hi));
  }
  return best;
}

Interval weight(double Rp, double c, int k) {
  if (k == 0) return Interval(1.0);
  if (c == 0) return Interval(0.0);
  return iexp(Interval(Rp) * ilog_factorial(k) + Interval(static_cast<double>(k)) * ilog(Interval(c)));
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

constexpr int kRhsDegree = 40;

InstanceProfile profile_for(const EstimateSpec& s) {
  InstanceProfile p;
  p.nilpotent_only = s.R >= 1;
  if (s.kind == EstimateKind::gutt || s.kind == EstimateKind::sym_product) p.max_degree = 3;
  return p;
}

std::vector<CMatrix> automorphisms(const LieAlgebra& g, Draw& d) {
  static const int scales[][2] = {{1, 1}, {-1, 1}, {2, 1}, {1, 2}, {-1, 2}, {-2, 1}};
  auto scale = [&] {
    const auto& s = scales[d.below(6)];
    return Rational(s[0], s[1]);
  };
  int n = g.dim();
  CMatrix t(n, n);
  if (g.name == "heisenberg" || g.name == "heisenberg+R") {
    Rational a = scale(), b = scale();
    t(0, 0) = a;
    t(1, 1) = b;
    t(2, 2) = Rational(a * b);
    if (n == 4) t(3, 3) = scale();
  } else if (g.name == "so3" || g.name == "su2") {
    std::vector<int> p = {0, 1, 2};
    for (int i = 2; i > 0; --i) std::swap(p[i], p[d.below(i + 1)]);
    int inversions = (p[0] > p[1]) + (p[0] > p[2]) + (p[1] > p[2]);
    int s0 = d.chance(2) ? -1 : 1, s1 = d.chance(2) ? -1 : 1;
    int s2 = s0 * s1 * (inversions % 2 ? -1 : 1);
    t(p[0], 0) = s0;
    t(p[1], 1) = s1;
    t(p[2], 2) = s2;
  } else if (g.name == "aff1") {
    t(0, 0) = 1;
    t(1, 0) = d.small(2);
    t(1, 1) = scale();
  } else if (g.name == "sl2") {
    Rational a = scale();
    t(0, 0) = 1;
    t(1, 1) = a;
    t(2, 2) = Rational(1 / a);
  } else if (g.is_abelian()) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) t(i, j) = d.small(2);
  } else {
    return {};
  }
  return {t};
}

Observable pointwise(const Observable& f, const Observable& g) {
  const LieAlgebra& alg = f.algebra();
  int n = alg.dim();
  Observable out(alg);
  Observable f0 = f.hbar_coeff(0), g0 = g.hbar_coeff(0);
  for (const auto& [m, v] : f0.terms()) {
    (void)v;
    for (const auto& [m2, w] : g0.terms()) {
      (void)w;
      RepFunction prod = multiply(f0.coefficient_part(m, 0), g0.coefficient_part(m2, 0));
      out += Observable::tensor(alg, prod, SymPoly(n, mono_multiply(m, m2)));
    }
  }
  return out;
}

}  // namespace

Interval seminorm_p_interval(const SymPoly& p, double Rp, double c, const GaussRational& hbar) {
  if (c < 0) throw std::invalid_argument("seminorm_p: negative c");
  Interval s(0.0);
  for (const auto& [m, a] : p.terms()) s += weight(Rp, c, static_cast<int>(m.size())) * abs_interval(a.at(hbar));
  return s;
}

Rational gutt_constant(const Rational& hbar, const Rational& cp) { return 32 * (hbar + 1) * cp; }

Rational mixed_constant(const Rational& hbar, const Rational& cp) { return std::max(Rational(2 * hbar), cp); }

double composed_d(double R, double Rp, double c, double cp, const Rational& hbar) {
  double h = to_double(hbar);
  double fn = std::pow(2.0, R + 1) * c;
  double mom = 32 * (h + 1) * std::pow(2.0, Rp) * cp;
  return down(std::max({fn, 2 * h, mom}));
}

std::string kind_name(EstimateKind k) {
  switch (k) {
    case EstimateKind::gutt: return "gutt";
    case EstimateKind::mixed: return "mixed";
    case EstimateKind::full: return "full";
    case EstimateKind::sym_product: return "sym_product";
    case EstimateKind::multiplication: return "multiplication";
    case EstimateKind::differentiation: return "differentiation";
    case EstimateKind::translation: return "translation";
    case EstimateKind::pullback: return "pullback";
    case EstimateKind::leibniz: return "leibniz";
    case EstimateKind::rep_entire: return "rep_entire";
  }
  return "unknown";
}

std::string EstimateSpec::name() const {
  std::string s = kind_name(kind) + "[R=" + fmt(R) + ",Rp=" + fmt(Rp) + ",c=" + fmt(c) + ",cp=" + fmt(cp);
  return s + ",hbar=" + to_string(hbar) + "]";
}

std::vector<EstimateSpec> estimate_suite() {
  const std::vector<std::pair<double, double>> pairs = {{0, 1}, {0.5, 1}, {1, 1}, {0, 2}, {0.5, 1.5}};
  const std::vector<Rational> hbars = {Rational(1, 10), Rational(1), Rational(2)};
  const std::vector<double> radii = {1, 2};
  const std::vector<double> rs = {0, 0.5, 1};
  std::vector<EstimateSpec> out;
  auto add = [&](EstimateKind k, double R, double Rp, double c, double cp, const Rational& h) {
    EstimateSpec s;
    s.kind = k;
    s.R = R;
    s.Rp = Rp;
    s.c = c;
    s.cp = cp;
    s.hbar = h;
    out.push_back(s);
  };
  for (double Rp : {1.0, 2.0, 1.5})
    for (const auto& h : hbars)
      for (double cp : radii) add(EstimateKind::gutt, 0, Rp, 1, cp, h);
  for (auto kind : {EstimateKind::mixed, EstimateKind::full})
    for (const auto& [R, Rp] : pairs)
      for (const auto& h : hbars)
        for (double c : radii)
          for (double cp : radii) add(kind, R, Rp, c, cp, h);
  for (double Rp : {1.0, 2.0, 1.5})
    for (double c : radii) add(EstimateKind::sym_product, 0, Rp, 1, c, 1);
  for (auto kind : {EstimateKind::multiplication, EstimateKind::differentiation, EstimateKind::pullback})
    for (double R : rs)
      for (double c : radii) add(kind, R, 1, c, 1, 1);
  for (auto kind : {EstimateKind::translation, EstimateKind::leibniz})
    for (double c : radii) add(kind, 0, 1, c, 1, 1);
  for (double R : {0.0, 0.5})
    for (double c : radii) add(EstimateKind::rep_entire, R, 1, c, 1, 1);
  return out;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::certified: return "certified";
    case Verdict::tight: return "tight";
    case Verdict::inconclusive: return "inconclusive";
    case Verdict::counterexample: return "counterexample";
  }
  return "unknown";
}

Verdict classify(const Interval& lhs, const Interval& rhs) {
  if (lhs.hi <= rhs.lo) return Verdict::certified;
  if (lhs.lo > rhs.hi) return Verdict::counterexample;
  double scale = std::max(std::abs(rhs.lo), std::numeric_limits<double>::min());
  if (lhs.hi - rhs.lo <= kTightRel * scale) return Verdict::tight;
  return Verdict::inconclusive;
}

LieAlgebra algebra_by_name(const std::string& name) {
  if (name == "heisenberg") return algebras::heisenberg();
  if (name == "so3") return algebras::so3();
  if (name == "su2") return algebras::su2();
  if (name == "aff1") return algebras::aff1();
  if (name == "sl2") return algebras::sl2();
  if (name == "heisenberg+R") return algebras::heisenberg_plus_line();
  if (name.rfind("abelian", 0) == 0) {
    int n = name.size() > 7 ? std::stoi(name.substr(7)) : 1;
    return algebras::abelian(n);
  }
  throw std::invalid_argument("unknown algebra: " + name);
}

Instance random_instance(const InstanceProfile& profile, std::uint64_t seed) {
  Draw d(seed);
  Instance inst;
  inst.g = algebra_by_name(profile.algebras.at(d.below(static_cast<int>(profile.algebras.size()))));
  const LieAlgebra& g = inst.g;
  int n = g.dim();
  std::vector<FixtureModule> lib;
  for (auto& f : module_library(g))
    if (f.module->dim <= profile.max_orbit_dim && (f.nilpotent || !profile.nilpotent_only)) lib.push_back(f);
  if (lib.empty()) throw std::logic_error("random_instance: no admissible module");
  std::ostringstream desc;
  desc << g.name;
  auto pick = [&]() -> const FixtureModule& { return lib[d.below(static_cast<int>(lib.size()))]; };
  for (int t = 0; t < 2; ++t) {
    const auto& fm = pick();
    RepFunction phi;
    do phi = make_function(fm.module, d.vec(fm.module->dim, profile.height), d.vec(fm.module->dim, profile.height));
    while (is_zero_function(phi));
    inst.functions.push_back(phi);
    desc << " phi" << t << ":" << fm.name;
  }
  for (int t = 0; t < 2; ++t) {
    SymPoly p(n);
    while (p.is_zero()) {
      int terms = d.range(1, profile.max_terms + 1);
      for (int s = 0; s < terms; ++s) p.add_term(d.monomial(n, profile.max_degree), Scalar(d.entry(profile.height)));
    }
    inst.momenta.push_back(p);
    desc << " xi" << t << ":deg" << p.degree();
  }
  for (int t = 0; t < 2; ++t) {
    const auto& fm = pick();
    Observable f(g);
    while (f.is_zero()) {
      Observable::Terms terms;
      int count = d.range(1, profile.max_terms);
      for (int s = 0; s < count; ++s) {
        CVec v = d.vec(fm.module->dim, profile.height);
        terms[d.monomial(n, profile.max_degree)] = SVec(v.begin(), v.end());
      }
      f = Observable(g, fm.module, d.vec(fm.module->dim, profile.height), std::move(terms)).canonical();
    }
    inst.observables.push_back(f);
    desc << " F" << t << ":" << fm.name << "/deg" << f.degree();
  }
  inst.description = desc.str();
  return inst;
}

bool validate_instance(const Instance& inst) {
  if (!validate(inst.g).ok) return false;
  for (const auto& phi : inst.functions) {
    if (!phi.module || phi.algebra_dim() != inst.g.dim() || !validate_module(*phi.module, inst.g).ok) return false;
    if (static_cast<int>(phi.v.size()) != phi.dim() || static_cast<int>(phi.delta.size()) != phi.dim()) return false;
  }
  for (const auto& p : inst.momenta)
    if (p.dim() != inst.g.dim() || p.is_zero()) return false;
  for (const auto& f : inst.observables) {
    if (f.is_zero() || !(f.algebra() == inst.g) || !validate_module(*f.module(), inst.g).ok) return false;
  }
  return true;
}

namespace {

TrialReport evaluate_trial(const EstimateSpec& s, std::uint64_t seed) {
  TrialReport r;
  r.seed = seed;
  Instance inst = random_instance(profile_for(s), seed);
  Draw extra(seed ^ 0x5bd1e995ULL);
  r.instance = inst.description;
  const LieAlgebra& g = inst.g;
  int n = g.dim();
  GaussRational h(s.hbar);
  const RepFunction& phi = inst.functions[0];
  const RepFunction& psi = inst.functions[1];
  const SymPoly& xi = inst.momenta[0];
  const SymPoly& eta = inst.momenta[1];
  switch (s.kind) {
    case EstimateKind::gutt: {
      double ct = radius_down(gutt_constant(s.hbar, Rational(s.cp)));
      SymPoly prod = gutt_star(g, xi, eta);
      r.lhs = seminorm_p_interval(prod, s.Rp, s.cp, h);
      r.rhs = seminorm_p_interval(xi, s.Rp, ct, h) * seminorm_p_interval(eta, s.Rp, ct, h);
      break;
    }
    case EstimateKind::mixed: {
      double dp = radius_down(mixed_constant(s.hbar, Rational(s.cp)));
      Observable prod = star_std(Observable::momentum(g, xi), Observable::function(g, phi));
      r.lhs = as_interval(seminorm_cross(prod, s.R, s.c, s.Rp, s.cp, h));
      r.rhs = Interval(2.0) * seminorm_p_interval(xi, s.Rp, dp, h) * as_interval(seminorm_q(phi, s.R, 2 * s.c));
      break;
    }
    case EstimateKind::full: {
      double dd = composed_d(s.R, s.Rp, s.c, s.cp, s.hbar);
      const Observable& P = inst.observables[0];
      const Observable& Q = inst.observables[1];
      r.lhs = as_interval(seminorm_cross(star_std(P, Q), s.R, s.c, s.Rp, s.cp, h));
      // partial sums of low degree already dominate at radius d
      r.rhs = Interval(2.0) * as_interval(seminorm_cross(P, s.R, dd, s.Rp, dd, h, kRhsDegree)) *
              as_interval(seminorm_cross(Q, s.R, dd, s.Rp, dd, h, kRhsDegree));
      r.instance += " d=" + fmt(dd);
      break;
    }
    case EstimateKind::sym_product: {
      double c2 = down(std::pow(2.0, s.Rp) * s.cp);
      r.lhs = seminorm_p_interval(sym_multiply(xi, eta), s.Rp, s.cp, 0);
      r.rhs = seminorm_p_interval(xi, s.Rp, c2, 0) * seminorm_p_interval(eta, s.Rp, c2, 0);
      break;
    }
    case EstimateKind::multiplication:
    case EstimateKind::leibniz: {
      double c2 = s.kind == EstimateKind::leibniz ? s.c : down(std::pow(2.0, s.R) * s.c);
      double R = s.kind == EstimateKind::leibniz ? 0 : s.R;
      r.lhs = as_interval(seminorm_q(multiply(phi, psi), R, s.c));
      r.rhs = as_interval(seminorm_q(phi, R, c2)) * as_interval(seminorm_q(psi, R, c2));
      break;
    }
    case EstimateKind::differentiation: {
      std::vector<Rational> x(n);
      do
        for (auto& q : x) q = extra.small(2);
      while (std::all_of(x.begin(), x.end(), [](const Rational& q) { return sgn(q) == 0; }));
      std::vector<GaussRational> xc(x.begin(), x.end());
      r.lhs = as_interval(seminorm_q(lie_derive(phi, xc), s.R, s.c));
      r.rhs = as_interval(seminorm_q(phi, s.R, s.c + 1)) * Interval(sup_norm_real(x));
      break;
    }
    case EstimateKind::translation: {
      std::vector<Rational> x(n);
      for (auto& q : x) q = Rational(extra.range(-2, 2)) / 2;
      std::vector<GaussRational> xc(x.begin(), x.end());
      Translated tr = right_translate(phi, xc);
      Interval lhs = as_interval(seminorm_q(tr.f, 0, s.c));
      if (!tr.exact) {
        Interval gen(0.0);
        for (const auto& a : phi.module->generators) gen += op_norm(a);
        Interval err = sup_norm(tr.f.delta) * Interval(tr.l1_error) * iexp(Interval(s.c) * gen);
        lhs += Interval(0.0, err.hi);
      }
      r.lhs = lhs;
      r.rhs = as_interval(seminorm_q(phi, 0, s.c + sup_norm_real(x)));
      break;
    }
    case EstimateKind::pullback: {
      std::vector<CMatrix> autos = automorphisms(g, extra);
      CMatrix T;
      LieAlgebra source;
      if (!autos.empty() && extra.chance(2)) {
        T = autos[0];
        source = g;
        r.instance += " automorphism";
      } else {
        T = CMatrix(n, 1);
        for (int j = 0; j < n; ++j) T(j, 0) = extra.small(2);
        source = algebras::abelian(1);
        r.instance += " one-parameter";
      }
      if (!check_morphism(T, source, g).ok) throw std::logic_error("pullback: not a morphism");
      Rational D = 0;
      for (size_t i = 0; i < T.rows(); ++i)
        for (size_t j = 0; j < T.cols(); ++j) D = std::max(D, Rational(abs(T(i, j).re)));
      r.lhs = as_interval(seminorm_q(morphism_pullback(phi, T), s.R, s.c));
      r.rhs = as_interval(seminorm_q(phi, s.R, radius_down(Rational(s.c) * static_cast<long>(T.cols()) * D)));
      break;
    }
    case EstimateKind::rep_entire: {
      if (!(s.R < 1)) throw std::invalid_argument("rep_entire: R must be below 1");
      Interval psi_norm(0.0);
      for (const auto& a : phi.module->generators) {
        Interval o = op_norm(a);
        psi_norm = Interval(std::max(psi_norm.lo, o.lo), std::max(psi_norm.hi, o.hi));
      }
      Interval x = Interval(s.c) * psi_norm * Interval(static_cast<double>(n));
      // partial sums bound the series from below
      double lo = 1;
      if (x.lo > 0) {
        Interval lx = ilog(Interval(x.lo));
        for (int k = 1; k < 100000; ++k) {
          Interval t = iexp(Interval(s.R - 1) * ilog_factorial(k) + Interval(static_cast<double>(k)) * lx);
          lo = down(lo + t.lo);
          if (k > 4 && t.lo < 1e-18 * lo && (s.R - 1) * std::log(k + 1.0) + lx.lo < 0) break;
        }
      }
      Interval pre = sup_norm(phi.delta) * l1_norm(phi.v);
      r.lhs = as_interval(seminorm_q(phi, s.R, s.c));
      r.rhs = Interval((Interval(pre.lo) * Interval(lo)).lo, Interval::inf());
      break;
    }
  }
  r.verdict = classify(r.lhs, r.rhs);
  if (r.rhs.lo > 0)
    r.margin = 1 - r.lhs.hi / r.rhs.lo;
  else
    r.margin = r.lhs.hi <= 0 ? 0 : -Interval::inf();
  return r;
}

}  // namespace

TrialReport run_trial(const EstimateSpec& s, std::uint64_t seed) {
  // deeper exact Taylor data only when the cheap bounds leave it open
  TrialReport r = evaluate_trial(s, seed);
  for (size_t budget : {size_t{8192}, size_t{131072}}) {
    if (r.verdict != Verdict::inconclusive) break;
    ScopedExactBudget scope(budget);
    r = evaluate_trial(s, seed);
  }
  return r;
}

int worker_count() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  int n = hw > 0 ? hw : 1;
  if (const char* env = std::getenv("LIESTAR_THREADS")) {
    int cap = std::atoi(env);
    if (cap > 0) n = std::min(n, cap);
  }
  return std::max(1, n);
}

SpecReport verify_estimate(const EstimateSpec& spec, int trials, std::uint64_t seed, int threads) {
  auto start = std::chrono::steady_clock::now();
  SpecReport rep;
  rep.spec = spec;
  rep.trials = trials;
  std::vector<TrialReport> results(std::max(trials, 0));
  std::uint64_t base = splitmix(seed ^ fnv(spec.name()));
  std::atomic<int> next{0};
  auto work = [&] {
    for (int i = next++; i < trials; i = next++) {
      std::uint64_t s = splitmix(base + static_cast<std::uint64_t>(i));
      try {
        results[i] = run_trial(spec, s);
      } catch (const std::exception& e) {
        results[i].seed = s;
        results[i].instance = std::string("error: ") + e.what();
        results[i].verdict = Verdict::inconclusive;
        results[i].margin = -Interval::inf();
      }
    }
  };
  int workers = std::min(threads > 0 ? threads : worker_count(), std::max(trials, 1));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  std::vector<double> ratios;
  const TrialReport* worst = nullptr;
  const TrialReport* bad = nullptr;
  for (const auto& t : results) {
    switch (t.verdict) {
      case Verdict::certified: ++rep.certified; break;
      case Verdict::tight: ++rep.tight; break;
      case Verdict::inconclusive: ++rep.inconclusive; break;
      case Verdict::counterexample: ++rep.counterexamples; break;
    }
    if (t.verdict == Verdict::counterexample && !bad) bad = &t;
    if (!worst || t.margin < worst->margin) worst = &t;
    if (t.rhs.lo > 0 && std::isfinite(t.rhs.lo)) ratios.push_back(t.lhs.hi / t.rhs.lo);
  }
  if (worst) rep.worst_margin = worst->margin;
  if (bad)
    rep.witness = *bad;
  else if (worst)
    rep.witness = *worst;
  if (!ratios.empty()) {
    std::nth_element(ratios.begin(), ratios.begin() + ratios.size() / 2, ratios.end());
    rep.median_ratio = ratios[ratios.size() / 2];
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

HolomorphyReport holomorphy_check(const Observable& f, const Observable& g, const std::vector<GaussRational>& hbars) {
  HolomorphyReport rep;
  std::ostringstream msg;
  Observable prod = star_std(f, g);
  int bound = std::max(f.degree(), 0) + std::max(g.degree(), 0);
  rep.hbar_degree = prod.hbar_degree();
  rep.polynomial = prod.hbar_degree() <= bound;
  if (!rep.polynomial) msg << "hbar degree " << prod.hbar_degree() << " exceeds " << bound << "; ";

  rep.degree_drop = true;
  for (int a = 0; a <= f.degree(); ++a) {
    Observable fa = f.homogeneous_part(a);
    if (fa.is_zero()) continue;
    for (int b = 0; b <= g.degree(); ++b) {
      Observable gb = g.homogeneous_part(b);
      if (gb.is_zero()) continue;
      Observable pab = star_std(fa, gb);
      for (int r = 0; r <= pab.hbar_degree(); ++r) {
        Observable cr = pab.hbar_coeff(r);
        if (cr.is_zero()) continue;
        if (a + b - r < 0 || cr != cr.homogeneous_part(a + b - r)) {
          rep.degree_drop = false;
          msg << "degree drop fails at (" << a << "," << b << "," << r << "); ";
        }
      }
    }
  }

  rep.coefficients = true;
  bool literal = f.degree() <= 6;
  Observable lit = literal ? star_std_literal(f, g) : Observable(f.algebra());
  for (int r = 0; r <= bound; ++r) {
    Observable cr = prod.hbar_coeff(r);
    if (cr != extract_Cr(f, g, r) || (literal && cr != lit.hbar_coeff(r))) {
      rep.coefficients = false;
      msg << "hbar^" << r << " coefficient mismatch; ";
    }
  }

  rep.classical_limit = prod.hbar_coeff(0) == pointwise(f, g);
  if (!rep.classical_limit) msg << "classical limit differs from the pointwise product; ";

  rep.evaluations = true;
  int n = f.algebra().dim();
  std::vector<double> x(n), eta(n);
  for (int i = 0; i < n; ++i) {
    x[i] = 0.3 - 0.17 * i;
    eta[i] = 0.7 + 0.2 * i;
  }
  for (const auto& h : hbars) {
    Observable direct = prod.at_hbar(h);
    Observable series(f.algebra());
    GaussRational hp(1);
    for (int r = 0; r <= prod.hbar_degree(); ++r, hp *= h) series += prod.hbar_coeff(r) * Scalar(hp);
    bool exact = direct == series;
    std::complex<double> hc = to_complex(h);
    std::complex<double> a = evaluate(prod, x, eta, hc), b = evaluate(direct, x, eta, 0);
    bool numeric = std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(a));
    if (!exact || !numeric) {
      rep.evaluations = false;
      msg << "evaluation at hbar=" << to_string(h) << " differs; ";
    }
  }
  rep.message = msg.str();
  return rep;
}

}  // namespace liestar
