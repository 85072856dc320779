#ifndef LIESTAR_FIXTURES_HPP
#define LIESTAR_FIXTURES_HPP

#include <string>
#include <vector>

#include "liestar/lie_algebra.hpp"
#include "liestar/rep_function.hpp"

namespace liestar {

struct FixtureModule {
  std::string name;
  ModulePtr module;
  bool nilpotent = false;
};

// words of length dim act as zero
bool is_nilpotent(const OrbitModule& m);

// functionals vanishing on [g, g]; rows of a basis
std::vector<RVec> character_basis(const LieAlgebra& g);

ModulePtr trivial_module(int n);
ModulePtr adjoint_module(const LieAlgebra& g);
ModulePtr coadjoint_module(const LieAlgebra& g);
ModulePtr character_module(const std::vector<GaussRational>& lambda);

// finite-dimensional modules known for the algebra (by name), plus the
// generic trivial/adjoint/coadjoint/character modules
std::vector<FixtureModule> module_library(const LieAlgebra& g);

namespace functions {
// exp on the real line
RepFunction exp_line();
// e^{i k theta} on the circle
RepFunction circle(long k);
// matrix coefficient pi_{ij} of the spin one half representation of su(2)
RepFunction su2_coefficient(int i, int j);
// matrix coefficient of the defining representation of so(3)
RepFunction so3_coefficient(int i, int j);
}  // namespace functions

}  // namespace liestar

#endif
