#include "liestar/taylor.hpp"

#include <algorithm>
#include <numeric>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace liestar {

namespace {

constexpr long long kIntLimit = (1LL << 62);

struct VecHash {
  size_t operator()(const std::vector<long long>& v) const {
    size_t h = 1469598103934665603ULL;
    for (long long x : v) {
      h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 1099511628211ULL;
    }
    return h;
  }
};

Interval from_i128(__int128 x) {
  double d = static_cast<double>(x);
  if (std::fabs(d) < 9.007199254740992e15 && static_cast<__int128>(d) == x) return Interval(d);
  return {down(d), up(d)};
}

Interval abs_gauss(__int128 re, __int128 im) {
  if (im == 0) return from_i128(re < 0 ? -re : re);
  if (re == 0) return from_i128(im < 0 ? -im : im);
  Interval a = from_i128(re), b = from_i128(im);
  return isqrt(a * a + b * b);
}

double abs_upper(const GaussRational& z) {
  if (z.is_zero()) return 0;
  if (z.is_real()) return from_rational(abs(z.re)).hi;
  return isqrt(from_rational(z.norm2())).hi;
}

Integer lcm_den(const Rational& q, const Integer& acc) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), acc.get_mpz_t(), q.get_den_mpz_t());
  return r;
}

bool to_ll(const Rational& q, long long& out) {
  if (q.get_den() != 1) return false;
  const Integer& z = q.get_num();
  if (!z.fits_slong_p()) return false;
  long v = z.get_si();
  if (v >= kIntLimit || v <= -kIntLimit) return false;
  out = v;
  return true;
}

}  // namespace

void AbsSum::add_abs(const GaussRational& z, const Integer& count) {
  if (z.is_zero() || count == 0) return;
  Rational q = z.norm2();
  // sqrt(a/b) = sqrt(a b) / b
  Integer N = q.get_num() * q.get_den();
  Integer s = 1, t = N;
  for (unsigned long p = 2; p < 2000; ++p) {
    unsigned long pp = p * p;
    if (Integer(pp) > t) break;
    while (mpz_divisible_ui_p(t.get_mpz_t(), pp)) {
      mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), pp);
      s *= p;
    }
  }
  if (mpz_perfect_square_p(t.get_mpz_t())) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), t.get_mpz_t());
    s *= r;
    t = 1;
  }
  Rational coef(s * count, q.get_den());
  coef.canonicalize();
  if (t == 1) {
    rational += coef;
  } else {
    Rational& slot = radicals[t];
    slot += coef;
  }
}

AbsSum& AbsSum::operator/=(const Rational& q) {
  rational /= q;
  for (auto& [t, a] : radicals) a /= q;
  return *this;
}

Interval AbsSum::to_interval() const {
  Interval s = from_rational(rational);
  for (const auto& [t, a] : radicals) s += from_rational(a) * isqrt(from_integer(t));
  return s;
}

std::vector<AbsSum> exact_abs_sums(const RepFunction& phi, int K) {
  std::vector<AbsSum> out;
  std::map<CVec, Integer> level;
  if (!is_zero(phi.v)) level.emplace(phi.v, 1);
  for (int k = 0; k <= K; ++k) {
    AbsSum s;
    for (const auto& [w, cnt] : level) s.add_abs(dot(phi.delta, w), cnt);
    out.push_back(std::move(s));
    if (k == K) break;
    std::map<CVec, Integer> next;
    for (const auto& [w, cnt] : level)
      for (const auto& a : phi.module->generators) {
        CVec x = a * w;
        if (is_zero(x)) continue;
        next[std::move(x)] += cnt;
      }
    level = std::move(next);
  }
  return out;
}

AbsSum taylor_coeff_exact(const RepFunction& phi, int k) {
  AbsSum s = exact_abs_sums(phi, k).back();
  s /= factorial(static_cast<unsigned>(k));
  return s;
}

namespace {
thread_local size_t g_exact_budget = 256;
}

size_t exact_budget() { return g_exact_budget; }

ScopedExactBudget::ScopedExactBudget(size_t budget) : saved_(g_exact_budget) { g_exact_budget = budget; }

ScopedExactBudget::~ScopedExactBudget() { g_exact_budget = saved_; }

TaylorProfile::TaylorProfile(const RepFunction& phi, size_t max_distinct)
    : m_(phi.dim()), n_(phi.algebra_dim()), max_distinct_(max_distinct) {
  const auto& gens = phi.module->generators;
  Integer den = 1, vden = 1, dden = 1;
  for (const auto& a : gens)
    for (int i = 0; i < m_; ++i)
      for (int j = 0; j < m_; ++j) {
        den = lcm_den(a(i, j).re, den);
        den = lcm_den(a(i, j).im, den);
      }
  for (const auto& z : phi.v) vden = lcm_den(z.im, lcm_den(z.re, vden));
  for (const auto& z : phi.delta) dden = lcm_den(z.im, lcm_den(z.re, dden));
  log_den_ = ilog(from_integer(den));
  log_vden_ = ilog(from_integer(vden));
  log_dden_ = ilog(from_integer(dden));

  gens_.resize(n_);
  for (int g = 0; g < n_; ++g)
    for (int i = 0; i < m_; ++i)
      for (int j = 0; j < m_; ++j) {
        const auto& z = gens[g](i, j);
        if (z.is_zero()) continue;
        long long re = 0, im = 0;
        int_ok_ &= to_ll(z.re * Rational(den), re) && to_ll(z.im * Rational(den), im);
        gens_[g].push_back({i, j, re, im});
      }
  delta_.assign(2 * m_, 0);
  std::vector<long long> v0(2 * m_, 0);
  for (int i = 0; i < m_; ++i) {
    int_ok_ &= to_ll(phi.delta[i].re * Rational(dden), delta_[2 * i]);
    int_ok_ &= to_ll(phi.delta[i].im * Rational(dden), delta_[2 * i + 1]);
    int_ok_ &= to_ll(phi.v[i].re * Rational(vden), v0[2 * i]);
    int_ok_ &= to_ll(phi.v[i].im * Rational(vden), v0[2 * i + 1]);
  }
  if (int_ok_ && std::any_of(v0.begin(), v0.end(), [](long long x) { return x != 0; })) {
    level_.vecs.push_back(v0);
    level_.counts.push_back(Interval(1.0));
  }

  abs_gen_sum_.assign(static_cast<size_t>(m_) * m_, 0.0);
  for (const auto& a : gens)
    for (int i = 0; i < m_; ++i)
      for (int j = 0; j < m_; ++j) {
        double& s = abs_gen_sum_[i * m_ + j];
        double x = abs_upper(a(i, j));
        if (x > 0) s = up(s + x);
      }
  for (int j = 0; j < m_; ++j) {
    double col = 0;
    for (int i = 0; i < m_; ++i)
      if (abs_gen_sum_[i * m_ + j] > 0) col = up(col + abs_gen_sum_[i * m_ + j]);
    s_norm1_ = std::max(s_norm1_, col);
  }
  abs_delta_.resize(m_);
  for (int i = 0; i < m_; ++i) {
    abs_delta_[i] = abs_upper(phi.delta[i]);
    delta_sup_ = std::max(delta_sup_, abs_delta_[i]);
  }

  abs_v_.resize(m_);
  for (int i = 0; i < m_; ++i) abs_v_[i] = abs_upper(phi.v[i]);
  log_s0_ = ilog(isqrt(from_rational(dot(phi.delta, phi.v).norm2())));
  if (!int_ok_) {
    exact_blocked_ = true;
    start_from_vector();
    return;
  }
  if (level_.vecs.empty()) terminal_ = 0;
}

void TaylorProfile::build_block() {
  block_ = 1;
  if (!int_ok_ || n_ < 2 || m_ == 0) return;
  // longest b with n^b words inside the exact budget
  int b = 1;
  double words = n_;
  while (b < 12 && words * n_ <= static_cast<double>(max_distinct_)) {
    words *= n_;
    ++b;
  }
  if (b < 2) return;
  size_t mm = static_cast<size_t>(m_) * m_;
  std::vector<double> sum(mm, 0.0);
  // prefix products in Gaussian integers, depth-first
  std::vector<std::vector<__int128>> stack(b + 1, std::vector<__int128>(2 * mm, 0));
  for (int i = 0; i < m_; ++i) stack[0][2 * (i * m_ + i)] = 1;
  std::vector<int> word(b, 0);
  bool ok = true;
  auto mult = [&](const std::vector<__int128>& a, int g, std::vector<__int128>& out) {
    std::fill(out.begin(), out.end(), 0);
    // out = a * G_g
    for (const auto& e : gens_[g])
      for (int i = 0; i < m_; ++i) {
        __int128 ar = a[2 * (i * m_ + e.row)], ai = a[2 * (i * m_ + e.row) + 1];
        if (ar == 0 && ai == 0) continue;
        __int128& r = out[2 * (i * m_ + e.col)];
        __int128& q = out[2 * (i * m_ + e.col) + 1];
        r += ar * e.re - ai * e.im;
        q += ar * e.im + ai * e.re;
        if (r >= kIntLimit || r <= -kIntLimit || q >= kIntLimit || q <= -kIntLimit) ok = false;
      }
  };
  int depth = 0;
  while (ok) {
    if (depth == b) {
      const auto& a = stack[b];
      for (size_t t = 0; t < mm; ++t) {
        if (a[2 * t] == 0 && a[2 * t + 1] == 0) continue;
        sum[t] = up(sum[t] + abs_gauss(a[2 * t], a[2 * t + 1]).hi);
      }
      while (depth > 0 && word[depth - 1] == n_ - 1) --depth;
      if (depth == 0) break;
      ++word[depth - 1];
      mult(stack[depth - 1], word[depth - 1], stack[depth]);
      continue;
    }
    word[depth] = 0;
    mult(stack[depth], 0, stack[depth + 1]);
    ++depth;
  }
  if (!ok) return;
  block_ = b;
  block_sum_ = std::move(sum);
  block_log_scale_ = -(Interval(static_cast<double>(b)) * log_den_).lo;
}

void TaylorProfile::start_from_vector() {
  // majorant from |v| at degree 0, S_0 exact
  exact_blocked_ = true;
  w_ = abs_v_;
  double mx = w_.empty() ? 0.0 : *std::max_element(w_.begin(), w_.end());
  if (mx == 0) {
    terminal_ = 0;
    return;
  }
  for (auto& x : w_) x = up(x / mx);
  log_w_ = ilog(Interval(mx)).hi;
  w_degree_ = 0;
  base_degree_ = -1;
  log_s_.assign(1, log_s0_);
  double sum = 0;
  for (double x : w_) sum = up(sum + x);
  log_b_.assign(1, up(log_w_ + ilog(Interval(sum)).hi));
  exact_depth_ = 0;
}

bool TaylorProfile::exact_step() {
  if (exact_blocked_ || terminal_ >= 0) return false;
  int k = exact_depth_ + 1;
  Level next;
  if (k == 0) {
    next = level_;
  } else {
    std::unordered_map<std::vector<long long>, size_t, VecHash> index;
    std::vector<long long> x(2 * m_);
    std::vector<__int128> acc(2 * m_);
    for (size_t p = 0; p < level_.vecs.size(); ++p) {
      const auto& w = level_.vecs[p];
      for (int g = 0; g < n_; ++g) {
        std::fill(acc.begin(), acc.end(), 0);
        bool nonzero = false;
        for (const auto& e : gens_[g]) {
          __int128 wr = w[2 * e.col], wi = w[2 * e.col + 1];
          if (wr == 0 && wi == 0) continue;
          acc[2 * e.row] += wr * e.re - wi * e.im;
          acc[2 * e.row + 1] += wr * e.im + wi * e.re;
          nonzero = true;
        }
        if (!nonzero) continue;
        bool any = false;
        for (int i = 0; i < 2 * m_; ++i) {
          if (acc[i] >= kIntLimit || acc[i] <= -kIntLimit) {
            exact_blocked_ = true;
            return false;
          }
          x[i] = static_cast<long long>(acc[i]);
          any |= x[i] != 0;
        }
        if (!any) continue;
        // projective class: divide by the content, fix the unit
        long long gcd = 0;
        for (long long c : x) gcd = std::gcd(gcd, c < 0 ? -c : c);
        int lead = 0;
        while (x[2 * lead] == 0 && x[2 * lead + 1] == 0) ++lead;
        for (int r = 0; r < 4 && !(x[2 * lead] > 0 && x[2 * lead + 1] >= 0); ++r)
          for (int i = 0; i < m_; ++i) {
            long long re = x[2 * i];
            x[2 * i] = -x[2 * i + 1];
            x[2 * i + 1] = re;
          }
        for (auto& c : x) c /= gcd;
        Interval weight = level_.counts[p] * (gcd == 1 ? Interval(1.0) : from_integer(Integer(static_cast<long>(gcd))));
        auto [it, fresh] = index.emplace(x, next.vecs.size());
        if (fresh) {
          next.vecs.push_back(x);
          next.counts.push_back(weight);
          if (next.vecs.size() > max_distinct_) {
            exact_blocked_ = true;
            return false;
          }
        } else {
          next.counts[it->second] += weight;
        }
      }
    }
  }
  // record degree k
  Interval s(0.0), b(0.0);
  for (size_t p = 0; p < next.vecs.size(); ++p) {
    const auto& w = next.vecs[p];
    __int128 re = 0, im = 0;
    bool ovf = false;
    for (int i = 0; i < m_; ++i) {
      __int128 dr = delta_[2 * i], di = delta_[2 * i + 1], wr = w[2 * i], wi = w[2 * i + 1];
      if ((dr == 0 && di == 0) || (wr == 0 && wi == 0)) continue;
      __int128 pr = dr * wr - di * wi, pi = dr * wi + di * wr;
      ovf |= __builtin_add_overflow(re, pr, &re);
      ovf |= __builtin_add_overflow(im, pi, &im);
    }
    if (ovf) {
      exact_blocked_ = true;
      return false;
    }
    s += next.counts[p] * abs_gauss(re, im);
    Interval n1(0.0);
    for (int i = 0; i < m_; ++i) n1 += abs_gauss(w[2 * i], w[2 * i + 1]);
    b += next.counts[p] * n1;
  }
  level_ = std::move(next);
  Interval kk(static_cast<double>(k));
  Interval scale = log_dden_ + log_vden_ + kk * log_den_;
  Interval ls = ilog(s) - scale;
  if (s.hi == 0) ls = Interval(-Interval::inf(), -Interval::inf());
  if (static_cast<int>(log_s_.size()) > k) log_s_.resize(k);
  if (static_cast<int>(log_b_.size()) > k) log_b_.resize(k);
  log_s_.push_back(ls);
  Interval lb = ilog(b) - (log_vden_ + kk * log_den_);
  log_b_.push_back(b.hi == 0 ? -Interval::inf() : lb.hi);
  exact_depth_ = k;
  w_degree_ = -1;
  base_degree_ = -1;
  if (level_.vecs.empty()) terminal_ = k;
  return true;
}

void TaylorProfile::refine(int depth) {
  depth = std::min(depth, kMaxDegree);
  while (exact_depth_ < depth && exact_step()) {
  }
}

void TaylorProfile::grow_majorant(int k) {
  if (terminal_ >= 0 && k >= terminal_) return;
  if (w_degree_ < 0) {
    // restart from the deepest exact level
    int k0 = exact_depth_;
    if (k0 < 0) refine(0);
    k0 = exact_depth_;
    if (k0 < 0) {
      start_from_vector();
      grow_majorant(k);
      return;
    }
    w_.assign(m_, 0.0);
    double mx = 0;
    for (size_t p = 0; p < level_.vecs.size(); ++p)
      for (int i = 0; i < m_; ++i) {
        double a = (level_.counts[p] * abs_gauss(level_.vecs[p][2 * i], level_.vecs[p][2 * i + 1])).hi;
        if (a > 0) w_[i] = up(w_[i] + a);
      }
    for (double x : w_) mx = std::max(mx, x);
    if (mx == 0) {
      terminal_ = k0;
      return;
    }
    for (auto& x : w_) x = up(x / mx);
    Interval kk(static_cast<double>(k0));
    log_w_ = up(ilog(Interval(mx)).hi - (log_vden_ + kk * log_den_).lo);
    w_degree_ = k0;
    base_degree_ = -1;
    log_s_.resize(k0 + 1);
    log_b_.resize(k0 + 1);
  }
  if (block_ == 0) build_block();
  if (base_degree_ < 0 || base_degree_ > w_degree_) {
    base_ = w_;
    log_base_ = log_w_;
    base_degree_ = w_degree_;
  }
  auto apply = [&](const std::vector<double>& mat, const std::vector<double>& x) {
    std::vector<double> y(m_, 0.0);
    for (int i = 0; i < m_; ++i)
      for (int j = 0; j < m_; ++j) {
        double a = mat[i * m_ + j];
        if (a > 0 && x[j] > 0) y[i] = up(y[i] + up(a * x[j]));
      }
    return y;
  };
  while (w_degree_ < k) {
    bool block_step = block_ > 1 && w_degree_ + 1 - base_degree_ == block_;
    std::vector<double> nw = block_step ? apply(block_sum_, base_) : apply(abs_gen_sum_, w_);
    double mx = *std::max_element(nw.begin(), nw.end());
    ++w_degree_;
    if (mx == 0) {
      terminal_ = w_degree_;
      log_s_.push_back(Interval(-Interval::inf(), -Interval::inf()));
      log_b_.push_back(-Interval::inf());
      return;
    }
    for (auto& x : nw) x = up(x / mx);
    w_ = std::move(nw);
    if (block_step) {
      log_w_ = up(up(log_base_ + ilog(Interval(mx)).hi) + block_log_scale_);
      base_ = w_;
      log_base_ = log_w_;
      base_degree_ = w_degree_;
    } else {
      log_w_ = up(log_w_ + ilog(Interval(mx)).hi);
    }
    double ds = 0, sum = 0;
    for (int i = 0; i < m_; ++i) {
      if (abs_delta_[i] > 0 && w_[i] > 0) ds = up(ds + up(abs_delta_[i] * w_[i]));
      sum = up(sum + w_[i]);
    }
    double ls = ds == 0 ? -Interval::inf() : up(log_w_ + ilog(Interval(ds)).hi);
    log_s_.push_back(Interval(-Interval::inf(), ls));
    log_b_.push_back(up(log_w_ + ilog(Interval(sum)).hi));
  }
}

Interval TaylorProfile::log_abs_sum(int k) {
  if (terminal_ < 0 && !exact_blocked_ && k > exact_depth_ && exact_depth_ < exact_limit_) refine(std::min(k, exact_limit_));
  if (terminal_ >= 0 && k >= terminal_) return Interval(-Interval::inf(), -Interval::inf());
  if (k <= exact_depth_ || k < static_cast<int>(log_s_.size())) {
    if (k < static_cast<int>(log_s_.size())) return log_s_[k];
  }
  grow_majorant(k);
  if (terminal_ >= 0 && k >= terminal_) return Interval(-Interval::inf(), -Interval::inf());
  return log_s_[k];
}

Interval TaylorProfile::taylor_coeff(int k) {
  Interval ls = log_abs_sum(k);
  if (ls.hi == -Interval::inf()) return Interval(0.0);
  return iexp(ls - ilog_factorial(static_cast<unsigned>(k)));
}

SeminormInterval TaylorProfile::weighted(const std::function<Interval(int)>& log_weight,
                                         const std::function<double(int)>& ratio, int K_max) {
  K_max = std::min(K_max, kMaxTerms);
  SeminormInterval out;
  double lo = 0, hi = 0;
  auto finish = [&](double tail) {
    out.lower = lo;
    out.upper = up(hi + tail);
    return out;
  };
  for (int k = 0; k <= K_max; ++k) {
    out.K = k;
    Interval ls = log_abs_sum(k);
    if (terminal_ >= 0 && k >= terminal_) return finish(0);
    Interval lw = log_weight(k);
    if (ls.hi != -Interval::inf() && lw.hi != -Interval::inf()) {
      Interval t = iexp(lw - ilog_factorial(static_cast<unsigned>(k)) + ls);
      if (ls.lo != -Interval::inf() && lw.lo != -Interval::inf()) lo = down(lo + t.lo);
      hi = up(hi + t.hi);
    }
    if (terminal_ >= 0 && k + 1 >= terminal_) return finish(0);
    if (k < 8 && k < K_max) continue;
    // sum_{j > k} <= (w_k / k!) |delta|_sup B_k sum_i rho^i
    double rho = up(ratio(k) * s_norm1_);
    if (!(rho < 1)) continue;
    double lb = log_b_[k];
    if (lb == -Interval::inf() || delta_sup_ == 0 || lw.hi == -Interval::inf()) return finish(0);
    Interval la = lw - ilog_factorial(static_cast<unsigned>(k)) + ilog(Interval(delta_sup_)) + Interval(lb);
    double tail = up(iexp(la).hi * up(rho / down(1 - rho)));
    if (tail < std::max(1e-12, 1e-12 * lo) || k == K_max) return finish(tail);
  }
  out.lower = lo;
  out.upper = Interval::inf();
  out.certified = false;
  return out;
}

SeminormInterval TaylorProfile::seminorm(double R, double c, int K_max) {
  if (c < 0) throw std::invalid_argument("seminorm: negative c");
  Interval lc = c > 0 ? ilog(Interval(c)) : Interval(-Interval::inf(), -Interval::inf());
  Interval r(R);
  auto log_weight = [&](int k) {
    if (k == 0) return Interval(0.0);
    if (c == 0) return Interval(-Interval::inf(), -Interval::inf());
    return r * ilog_factorial(static_cast<unsigned>(k)) + Interval(static_cast<double>(k)) * lc;
  };
  auto ratio = [&](int k) {
    if (R > 1) return Interval::inf();
    return up(ipow(Interval(static_cast<double>(k + 1)), r - Interval(1.0)).hi * c);
  };
  return weighted(log_weight, ratio, K_max);
}

SeminormInterval seminorm_q(const RepFunction& phi, double R, double c, int K_max, int exact_depth) {
  TaylorProfile p(phi);
  p.limit_exact(exact_depth);
  return p.seminorm(R, c, K_max);
}

Interval taylor_coeff(const RepFunction& phi, int k) {
  TaylorProfile p(phi);
  p.refine(k);
  return p.taylor_coeff(k);
}

SeminormInterval norm_finite_order(const RepFunction& phi, double R, double eps) {
  if (!(R > 0) || !(eps > 0)) throw std::invalid_argument("norm_finite_order: R and eps must be positive");
  TaylorProfile p(phi);
  p.refine(TaylorProfile::kMaxDegree);
  Interval ir(R), ie(eps);
  auto damp = [&](double z) { return z == 0 ? Interval(1.0) : iexp(Interval(0.0) - ie * ipow(Interval(z), Interval(1.0) / ir)); };
  // sup over [Z, inf) of the sum, bounded termwise by the larger of the
  // value at Z and the unconstrained maximum of z^k exp(-eps z^{1/R})
  auto range_bound = [&](double Z) {
    Interval lz = Z > 0 ? ilog(Interval(Z)) : Interval(-Interval::inf(), -Interval::inf());
    Interval dz = Z > 0 ? Interval(0.0) - ie * ipow(Interval(Z), Interval(1.0) / ir) : Interval(0.0);
    auto log_weight = [&](int k) {
      if (k == 0) return Z > 0 ? dz : Interval(0.0);
      double zstar = std::pow(k * R / eps, R);
      if (zstar <= Z) return Interval(static_cast<double>(k)) * lz + dz;
      Interval kr = Interval(static_cast<double>(k)) * ir;
      return kr * (ilog(kr / ie) - Interval(1.0));
    };
    auto ratio = [&](int k) {
      if (R > 1) return Interval::inf();
      double a = up(Z / (k + 1));
      double b = ipow(ir / ie, ir).hi * ipow(Interval(static_cast<double>(k + 1)), ir - Interval(1.0)).hi;
      return std::max(a, up(b));
    };
    return p.weighted(log_weight, ratio, TaylorProfile::kMaxDegree).upper;
  };
  double best_lo = 0, best_hi = 0;
  double z = 0;
  SeminormInterval cur = p.seminorm(0, 0);
  for (int step = 1; z < 1e6; ++step) {
    double zn = z + 0.002 * (1 + z);
    SeminormInterval next = p.seminorm(0, zn);
    Interval d = damp(z);
    best_lo = std::max(best_lo, down(cur.lower * d.lo));
    best_hi = std::max(best_hi, up(next.upper * d.hi));
    z = zn;
    cur = next;
    if (step % 100 == 0) {
      double t = range_bound(z);
      if (t <= best_hi) break;
    }
  }
  SeminormInterval out;
  out.lower = best_lo;
  out.upper = std::max(best_hi, range_bound(z));
  out.K = TaylorProfile::kMaxDegree;
  out.certified = std::isfinite(out.upper);
  return out;
}

}  // namespace liestar
