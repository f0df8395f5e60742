#pragma once

#include <string>

#include <boost/multiprecision/mpfr.hpp>

#include "selberg/bigint.hpp"

namespace selberg {

// 50 decimal digits (about 166 bits) of MPFR precision.
using Real = boost::multiprecision::mpfr_float_50;

Real to_real(const BigInt& a);
Real to_real(const BigRat& a);
Real parse_real(const std::string& s);

// Fixed-width scientific rendering; identical bytes for identical values.
std::string format_real(const Real& x, int significant_digits = 20);

// Largest integer <= x, for x >= 0.
BigInt floor_to_bigint(const Real& x);

}  // namespace selberg

#include "selberg/polynomial.hpp"

namespace selberg {

template <class Coeff>
Real eval_real(const Polynomial<Coeff>& f, const Real& x) {
  Real acc = 0;
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) acc = acc * x + to_real(*it);
  return acc;
}

}  // namespace selberg
