#ifndef LIESTAR_GUTT_HPP
#define LIESTAR_GUTT_HPP

#include <map>
#include <utility>
#include <vector>

#include "liestar/lie_algebra.hpp"
#include "liestar/sym_poly.hpp"

namespace liestar {

// nondecreasing words span the enveloping algebra with relation
// e_i e_j = e_j e_i + z sum_k c^k_ij e_k, z = -i hbar
using Word = std::vector<int>;
using PBWElement = std::map<Word, Scalar>;

void pbw_add(PBWElement& u, const Word& w, const Scalar& c);
PBWElement pbw_scaled(const PBWElement& u, const Scalar& c);

// memoizing normal-ordering engine; one instance per thread
class GuttEngine {
 public:
  explicit GuttEngine(LieAlgebra g);

  const LieAlgebra& algebra() const { return g_; }

  PBWElement normalize(const Word& word, const Scalar& coef = Scalar(1));
  PBWElement multiply(const PBWElement& a, const PBWElement& b);
  const PBWElement& symmetrize(const Monomial& m);
  PBWElement symmetrize(const SymPoly& p);
  SymPoly unsymmetrize(const PBWElement& u);
  const SymPoly& star(const Monomial& a, const Monomial& b);
  SymPoly star(const SymPoly& p, const SymPoly& q);

 private:
  const PBWElement& times_letter(const Word& w, int j);
  PBWElement times_letter(const PBWElement& u, int j);

  LieAlgebra g_;
  Scalar z_;
  std::map<std::pair<Word, int>, PBWElement> right_;
  std::map<Monomial, PBWElement> sym_;
  std::map<std::pair<Monomial, Monomial>, SymPoly> star_;
};

// engine cached per algebra for the calling thread
GuttEngine& gutt_engine(const LieAlgebra& g);

PBWElement pbw_normalize(const LieAlgebra& g, const Word& word, const Scalar& coef = Scalar(1));
PBWElement symmetrize(const LieAlgebra& g, const SymPoly& p);
SymPoly unsymmetrize(const LieAlgebra& g, const PBWElement& u);
SymPoly gutt_star(const LieAlgebra& g, const SymPoly& p, const SymPoly& q);
// linear Poisson bracket extended as a biderivation
SymPoly linear_poisson(const LieAlgebra& g, const SymPoly& p, const SymPoly& q);

}  // namespace liestar

#endif
