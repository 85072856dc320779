#ifndef LIESTAR_REALIZATION_HPP
#define LIESTAR_REALIZATION_HPP

#include <vector>

#include "liestar/matrix.hpp"
#include "liestar/rep_function.hpp"

namespace liestar {

// a module with several vectors sharing one covector
struct Realization {
  std::vector<CMatrix> generators;
  std::vector<CVec> vectors;
  CVec delta;
  int dim = 0;
};

// restrict to the submodule generated by all vectors, then pass to the
// quotient by the largest submodule contained in ker delta
Realization minimal_realization(const Realization& r);

ModulePtr make_module_sized(std::vector<CMatrix> generators, int dim, int n);

}  // namespace liestar

#endif
