#pragma once

#include <json.hpp>

#include "selberg/polynomial.hpp"

namespace selberg {

// Polynomials serialize as arrays of decimal coefficient strings, lowest
// degree first; rational coefficients use "n/d".
nlohmann::json to_json(const IntPolynomial& f);
nlohmann::json to_json(const RatPolynomial& f);
IntPolynomial int_polynomial_from_json(const nlohmann::json& j);
RatPolynomial rat_polynomial_from_json(const nlohmann::json& j);

}  // namespace selberg
