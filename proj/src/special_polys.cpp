#include "selberg/special_polys.hpp"

#include <string>

namespace selberg {

namespace {

void require_odd_prime(std::uint64_t p) {
  if (p < 3 || p % 2 == 0 || !is_prime(p)) {
    throw DomainError("expected an odd prime, got " + std::to_string(p));
  }
}

}  // namespace

IntPolynomial chebyshev_T(int n) {
  if (n < 1) throw DomainError("chebyshev_T requires n >= 1");
  const IntPolynomial two_x{0, 2};
  IntPolynomial prev{1};
  IntPolynomial cur{0, 1};
  for (int k = 1; k < n; ++k) {
    IntPolynomial next = two_x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

IntPolynomial cyclotomic(std::uint64_t n) {
  if (n == 0) throw DomainError("cyclotomic polynomial index must be positive");
  // x^n - 1 divided by Phi_d for every proper divisor d.
  RatPolynomial acc = to_rational(IntPolynomial::monomial(1, n) - IntPolynomial{1});
  for (std::uint64_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    acc = divmod(acc, to_rational(cyclotomic(d))).first;
  }
  return clear_denominators(acc).first;
}

IntPolynomial minpoly_two_cos(std::uint64_t p) {
  require_odd_prime(p);
  const std::uint64_t m = (p - 1) / 2;
  const IntPolynomial y{0, 1};
  IntPolynomial d_prev{2};  // D_0
  IntPolynomial d_cur = y;  // D_1
  IntPolynomial psi{1};
  for (std::uint64_t k = 1; k <= m; ++k) {
    psi += d_cur;
    IntPolynomial d_next = y * d_cur - d_prev;
    d_prev = std::move(d_cur);
    d_cur = std::move(d_next);
  }
  return psi;
}

IntPolynomial minpoly_cos(std::uint64_t p) {
  IntPolynomial f = primitive_part(minpoly_two_cos(p).scale_argument(BigInt(2)));
  if (!is_power_of_two(f.leading())) {
    throw std::logic_error("minpoly_cos: leading coefficient is not a power of two");
  }
  return f;
}

}  // namespace selberg
