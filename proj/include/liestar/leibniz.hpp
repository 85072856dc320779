#ifndef LIESTAR_LEIBNIZ_HPP
#define LIESTAR_LEIBNIZ_HPP

#include <map>
#include <string>
#include <vector>

#include "liestar/rational.hpp"

namespace liestar {

// commutative test algebra Q[x_1..x_r]
class TestPoly {
 public:
  using Exponent = std::vector<int>;
  TestPoly() = default;
  explicit TestPoly(int vars) : r_(vars) {}
  static TestPoly variable(int vars, int i);
  static TestPoly constant(int vars, const Rational& c);

  int vars() const { return r_; }
  const std::map<Exponent, Rational>& terms() const { return t_; }
  void add_term(const Exponent& e, const Rational& c);
  TestPoly partial(int i) const;

  TestPoly& operator+=(const TestPoly& o);
  friend TestPoly operator+(TestPoly a, const TestPoly& b) { return a += b; }
  friend TestPoly operator*(const TestPoly& a, const TestPoly& b);
  friend TestPoly operator*(TestPoly a, const Rational& s);
  friend bool operator==(const TestPoly& a, const TestPoly& b) { return a.t_ == b.t_; }

 private:
  int r_ = 0;
  std::map<Exponent, Rational> t_;
};

// D = sum_i f_i d/dx_i
struct Derivation {
  std::vector<TestPoly> coeffs;
  TestPoly operator()(const TestPoly& a) const;
};

struct LeibnizReport {
  bool shuffle_ok = false;
  bool symmetrized_ok = false;
  std::string message;
};

// D_k ... D_1 applied to a (D_1 first)
TestPoly apply_chain(const std::vector<Derivation>& ds, const std::vector<int>& order, const TestPoly& a);
LeibnizReport higher_leibniz_check(const std::vector<Derivation>& ds, const TestPoly& a, const TestPoly& b);

}  // namespace liestar

#endif
