#pragma once

#include "rig/curvature.hpp"
#include "rig/embed.hpp"
#include "rig/rigidity.hpp"

#include <nlohmann/json.hpp>

namespace rig {

using Json = nlohmann::json;

// Wire conventions: rationals are strings "p/q" (or "p"), complex scalars
// are {"re","im"}, polynomials are {"n","k","l","terms":[{"hol","antihol",
// "re","im"}]}, vector forms add "r" and "components" (one term list per
// component). Parse errors throw std::invalid_argument with a field path.

Json to_json(const Rational& x);
Json to_json(const GaussianRational& x);
Json to_json(const HermitianPoly& p);
Json to_json(const VectorForm& f);
Json to_json(const Matrix<GaussianRational>& m);
Json to_json(const Matrix<Rational>& m);
Json to_json(const GramPair& g);
Json to_json(const SymForm& f);
Json to_json(const RigidityVerdict& v, bool emit_witness);
Json to_json(const WeylVerdict& v, bool emit_witness);

Rational rational_from_json(const Json& j, const std::string& path);
GaussianRational gaussian_from_json(const Json& j, const std::string& path);
HermitianPoly poly_from_json(const Json& j, const std::string& path);
VectorForm vector_form_from_json(const Json& j, const std::string& path);
Matrix<GaussianRational> cmatrix_from_json(const Json& j, const std::string& path);
Matrix<Rational> rmatrix_from_json(const Json& j, const std::string& path);
GramPair grams_from_json(const Json& j, const std::string& path);
SymForm sym_form_from_json(const Json& j, const std::string& path);

}  // namespace rig
