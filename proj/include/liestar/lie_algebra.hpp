#ifndef LIESTAR_LIE_ALGEBRA_HPP
#define LIESTAR_LIE_ALGEBRA_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "liestar/matrix.hpp"
#include "liestar/rational.hpp"

namespace liestar {

using RVec = std::vector<Rational>;

struct ValidationReport {
  bool ok = true;
  std::string message;
  std::vector<int> witness;  // 1-based indices of the first violation
};

// structure constants c^k_ij, stored densely (indices 0-based internally)
class LieAlgebra {
 public:
  LieAlgebra() = default;
  explicit LieAlgebra(int dim);

  int dim() const { return n_; }
  const Rational& c(int i, int j, int k) const { return c_[(i * n_ + j) * n_ + k]; }
  void set(int i, int j, int k, const Rational& v) { c_[(i * n_ + j) * n_ + k] = v; }
  // sets c^k_ij = v and c^k_ji = -v
  void set_bracket(int i, int j, int k, const Rational& v);

  bool is_abelian() const;
  std::string name;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) { return a.n_ == b.n_ && a.c_ == b.c_; }

 private:
  int n_ = 0;
  std::vector<Rational> c_;
};

ValidationReport validate(const LieAlgebra& g);
RVec bracket(const LieAlgebra& g, const RVec& x, const RVec& y);
// (ad_x)^k_j stored at (k, j)
CMatrix ad_matrix(const LieAlgebra& g, const RVec& x);

struct ModularForm {
  RVec alpha;
  bool unimodular = true;
};
ModularForm modular_form(const LieAlgebra& g);

RVec basis_vector(int n, int i);

namespace algebras {
LieAlgebra abelian(int n);
LieAlgebra heisenberg();
LieAlgebra so3();
// su(2) in the basis -i sigma_k / 2, same constants as so(3)
LieAlgebra su2();
// [e1, e2] = e2
LieAlgebra aff1();
// basis (h, e, f)
LieAlgebra sl2();
// heisenberg (+) R, dimension 4
LieAlgebra heisenberg_plus_line();
}  // namespace algebras

}  // namespace liestar

#endif
