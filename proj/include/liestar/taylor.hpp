#ifndef LIESTAR_TAYLOR_HPP
#define LIESTAR_TAYLOR_HPP

#include <functional>
#include <map>
#include <vector>

#include "liestar/interval.hpp"
#include "liestar/rep_function.hpp"

namespace liestar {

// exact formal sum  r + sum_t a_t sqrt(t), t > 1 squarefree
struct AbsSum {
  Rational rational = 0;
  std::map<Integer, Rational> radicals;

  void add_abs(const GaussRational& z, const Integer& count);
  AbsSum& operator/=(const Rational& q);
  Interval to_interval() const;
  friend bool operator==(const AbsSum& a, const AbsSum& b) {
    return a.rational == b.rational && a.radicals == b.radicals;
  }
};

// exact sums S_k = sum_{|alpha| = k} |delta A_alpha v| for k = 0..K
std::vector<AbsSum> exact_abs_sums(const RepFunction& phi, int K);
// c_k = S_k / k!
AbsSum taylor_coeff_exact(const RepFunction& phi, int k);

struct SeminormInterval {
  double lower = 0, upper = 0;
  int K = 0;
  bool certified = true;
};

// cap on distinct vectors per level of the exact recursion, per thread
size_t exact_budget();
class ScopedExactBudget {
 public:
  explicit ScopedExactBudget(size_t budget);
  ~ScopedExactBudget();
  ScopedExactBudget(const ScopedExactBudget&) = delete;
  ScopedExactBudget& operator=(const ScopedExactBudget&) = delete;

 private:
  size_t saved_;
};

// Lie-Taylor data of one function, extended lazily. Degrees up to
// exact_depth() come from a distinct-vector recursion in exact Gaussian
// integers; later degrees are bounded through the entrywise majorant
// sum_i |A_i|.
class TaylorProfile {
 public:
  static constexpr int kMaxDegree = 200;
  // summation cap; degrees past the exact depth use the majorant
  static constexpr int kMaxTerms = 20000;

  explicit TaylorProfile(const RepFunction& phi, size_t max_distinct = exact_budget());

  void refine(int depth);
  // lazy refinement stops here; later degrees use the majorant
  void limit_exact(int depth) { exact_limit_ = depth; }
  int exact_depth() const { return exact_depth_; }
  // all coefficients beyond this degree vanish (or -1)
  int terminates_at() const { return terminal_; }

  // bounds on log S_k
  Interval log_abs_sum(int k);
  Interval taylor_coeff(int k);

  // q_{R,c} with the stopping rule; K_max caps the degree
  SeminormInterval seminorm(double R, double c, int K_max = kMaxTerms);
  // Maj_R(z) for z >= 0 is the same sum
  SeminormInterval majorant(double R, double z) { return seminorm(R, z); }
  // sum_k exp(log_weight(k)) c_k; ratio(k) must bound
  // sup_{j >= k} (w_{j+1} / w_j) / (j + 1)
  SeminormInterval weighted(const std::function<Interval(int)>& log_weight, const std::function<double(int)>& ratio,
                            int K_max = kMaxTerms);

 private:
  void grow_majorant(int k);
  void build_block();
  bool exact_step();
  void start_from_vector();

  int m_ = 0, n_ = 0;
  size_t max_distinct_;
  // Gaussian integer data: generators scaled by den_, v by vden_, delta by dden_
  struct Entry {
    int row, col;
    long long re, im;
  };
  std::vector<std::vector<Entry>> gens_;
  std::vector<long long> delta_;
  Interval log_den_, log_vden_, log_dden_;
  bool int_ok_ = true;

  struct Level {
    std::vector<std::vector<long long>> vecs;
    std::vector<Interval> counts;
  };
  Level level_;
  int exact_depth_ = -1;
  bool exact_blocked_ = false;
  int exact_limit_ = kMaxDegree;
  int terminal_ = -1;

  std::vector<Interval> log_s_;
  // majorant: |S_k| <= exp(log_w_) * (|delta| . w), sum_j w_j bounds B_k
  std::vector<double> abs_gen_sum_;  // dense m x m, S = sum_i |A_i|
  std::vector<double> abs_delta_, abs_v_;
  Interval log_s0_;
  double delta_sup_ = 0, s_norm1_ = 0;
  std::vector<double> w_;
  double log_w_ = 0;
  int w_degree_ = -1;
  // block majorant sum_{|u|=b} |A_u| over words of length b (b = 1: unused)
  int block_ = 0;
  std::vector<double> block_sum_;
  double block_log_scale_ = 0;
  std::vector<double> base_;
  double log_base_ = 0;
  int base_degree_ = -1;
  std::vector<double> log_b_;  // log upper bound of sum_|alpha|=k ||A_alpha v||_1
};

SeminormInterval seminorm_q(const RepFunction& phi, double R, double c, int K_max = TaylorProfile::kMaxTerms,
                            int exact_depth = TaylorProfile::kMaxDegree);
Interval taylor_coeff(const RepFunction& phi, int k);
// sup_{z > 0} Maj(z) exp(-eps z^{1/R})
SeminormInterval norm_finite_order(const RepFunction& phi, double R, double eps);

}  // namespace liestar

#endif
