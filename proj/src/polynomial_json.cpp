#include "selberg/polynomial_json.hpp"

namespace selberg {

nlohmann::json to_json(const IntPolynomial& f) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& c : f.coeffs()) j.push_back(to_string(c));
  return j;
}

nlohmann::json to_json(const RatPolynomial& f) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& c : f.coeffs()) j.push_back(to_string(c));
  return j;
}

IntPolynomial int_polynomial_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw DomainError("polynomial JSON must be an array");
  std::vector<BigInt> c;
  for (const auto& e : j) {
    if (!e.is_string()) throw DomainError("polynomial coefficients must be decimal strings");
    c.push_back(parse_bigint(e.get<std::string>()));
  }
  return IntPolynomial(std::move(c));
}

RatPolynomial rat_polynomial_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw DomainError("polynomial JSON must be an array");
  std::vector<BigRat> c;
  for (const auto& e : j) {
    if (!e.is_string()) throw DomainError("polynomial coefficients must be decimal strings");
    c.push_back(parse_bigrat(e.get<std::string>()));
  }
  return RatPolynomial(std::move(c));
}

}  // namespace selberg
