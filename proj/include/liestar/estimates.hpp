#ifndef LIESTAR_ESTIMATES_HPP
#define LIESTAR_ESTIMATES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "liestar/interval.hpp"
#include "liestar/lie_algebra.hpp"
#include "liestar/observable.hpp"
#include "liestar/rep_function.hpp"
#include "liestar/sym_poly.hpp"

namespace liestar {

// p_{Rp,c} at a numeric hbar, enclosed
Interval seminorm_p_interval(const SymPoly& p, double Rp, double c, const GaussRational& hbar);

// c~' = 32 (hbar + 1) c'
Rational gutt_constant(const Rational& hbar, const Rational& cp);
// d' = max{2 hbar, c'}
Rational mixed_constant(const Rational& hbar, const Rational& cp);
// d = max{2^{R+1} c, 2 hbar, 32 (hbar + 1) 2^{Rp} c'}
double composed_d(double R, double Rp, double c, double cp, const Rational& hbar);

enum class EstimateKind {
  gutt,
  mixed,
  full,
  sym_product,
  multiplication,
  differentiation,
  translation,
  pullback,
  leibniz,
  rep_entire,
};

std::string kind_name(EstimateKind k);

struct EstimateSpec {
  EstimateKind kind = EstimateKind::gutt;
  double R = 0, Rp = 1, c = 1, cp = 1;
  Rational hbar = 1;
  std::string name() const;
};

// the parameter grid of every inequality
std::vector<EstimateSpec> estimate_suite();

enum class Verdict { certified, tight, inconclusive, counterexample };
std::string verdict_name(Verdict v);

// LHS and RHS both enclosed; exact equalities are tight when the enclosures
// overlap within kTightRel
constexpr double kTightRel = 1e-9;
Verdict classify(const Interval& lhs, const Interval& rhs);

struct TrialReport {
  std::uint64_t seed = 0;
  std::string instance;
  Interval lhs, rhs;
  Verdict verdict = Verdict::inconclusive;
  // 1 - lhs.hi / rhs.lo
  double margin = 0;
  bool pass() const { return verdict == Verdict::certified || verdict == Verdict::tight; }
};

TrialReport run_trial(const EstimateSpec& spec, std::uint64_t seed);

struct SpecReport {
  EstimateSpec spec;
  int trials = 0;
  int certified = 0, tight = 0, inconclusive = 0, counterexamples = 0;
  double worst_margin = 1;
  double median_ratio = 0;
  double seconds = 0;
  // first counterexample, else the worst trial
  TrialReport witness;
  bool pass() const { return counterexamples == 0 && inconclusive == 0 && trials > 0; }
};

// trials are derived from (seed, index); aggregation is order independent
SpecReport verify_estimate(const EstimateSpec& spec, int trials, std::uint64_t seed, int threads = 0);
// LIESTAR_THREADS caps the worker count
int worker_count();

struct InstanceProfile {
  std::vector<std::string> algebras = {"heisenberg", "so3", "su2", "aff1", "sl2", "abelian2", "heisenberg+R"};
  int max_orbit_dim = 3;
  int max_degree = 2;
  int max_terms = 2;
  int height = 2;
  bool nilpotent_only = false;
};

struct Instance {
  LieAlgebra g;
  std::vector<Observable> observables;
  std::vector<RepFunction> functions;
  std::vector<SymPoly> momenta;
  std::string description;
};

LieAlgebra algebra_by_name(const std::string& name);
// two observables, two functions on one module each, two momentum polynomials
Instance random_instance(const InstanceProfile& profile, std::uint64_t seed);
bool validate_instance(const Instance& inst);

struct HolomorphyReport {
  bool polynomial = false;
  bool degree_drop = false;
  bool coefficients = false;
  bool classical_limit = false;
  bool evaluations = false;
  int hbar_degree = 0;
  std::string message;
  bool ok() const { return polynomial && degree_drop && coefficients && classical_limit && evaluations; }
};

HolomorphyReport holomorphy_check(const Observable& f, const Observable& g, const std::vector<GaussRational>& hbars);

}  // namespace liestar

#endif
