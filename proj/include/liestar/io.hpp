#ifndef LIESTAR_IO_HPP
#define LIESTAR_IO_HPP

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "liestar/estimates.hpp"
#include "liestar/lie_algebra.hpp"
#include "liestar/observable.hpp"
#include "liestar/rep_function.hpp"
#include "liestar/sym_poly.hpp"
#include "liestar/taylor.hpp"

namespace liestar {

using Json = nlohmann::json;

// malformed input or unreadable file
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);
// two-space indent, sorted keys, trailing newline
std::string dump(const Json& j);

Rational rational_from_json(const Json& j);
Json to_json(const Rational& q);
// ["re", "im"], or a bare rational string
GaussRational gauss_from_json(const Json& j);
Json to_json(const GaussRational& z);
// list of coefficients in ascending powers of hbar
Json to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);
std::string decimal(double x);

// {"dim": n, "c": [[i, j, k, "p/q"], ...]}, indices 1-based
Json to_json(const LieAlgebra& g);
LieAlgebra algebra_from_json(const Json& j);

// {"dim", "generators", "v", "delta", "evaluator"}
Json to_json(const RepFunction& phi);
RepFunction function_from_json(const Json& j, int algebra_dim);

// {"terms": [{"mono": [1, 2], "coef": [[re, im], ...]}]}
Json to_json(const SymPoly& p);
SymPoly sympoly_from_json(const Json& j, int algebra_dim);

// {"terms": [{"mono": [...], "hbar": r, "fun": {...}}]}; a term stands for
// hbar^r fun (x) mono, and "hbar" is left out when zero
Json to_json(const Observable& f);
// also accepts the element format, read as pure momenta
Observable observable_from_json(const Json& j, const LieAlgebra& g);

Json to_json(const SeminormInterval& s);
Json to_json(const EstimateSpec& s);
Json to_json(const TrialReport& t);
Json to_json(const SpecReport& r);
Json to_json(const HolomorphyReport& r);

}  // namespace liestar

#endif
