#pragma once

#include <cstdint>

#include "selberg/polynomial.hpp"

namespace selberg {

// T_n with T_n(cos t) = cos(n t), via T_{n+1} = 2x T_n - T_{n-1}.
IntPolynomial chebyshev_T(int n);

// n-th cyclotomic polynomial.
IntPolynomial cyclotomic(std::uint64_t n);

// Monic minimal polynomial of 2cos(2pi/p), degree (p-1)/2. Built from
// Phi_p(z) = z^m * Psi(z + 1/z), m = (p-1)/2, where z^k + z^-k is expanded
// through the Lucas-type recurrence D_{k+1} = y D_k - D_{k-1}.
IntPolynomial minpoly_two_cos(std::uint64_t p);

// Primitive minimal polynomial of cos(2pi/p): minpoly_two_cos(p)(2x) with
// content removed. Its leading coefficient is a power of two.
IntPolynomial minpoly_cos(std::uint64_t p);

}  // namespace selberg
