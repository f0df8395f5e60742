#pragma once

#include <cstdint>
#include <vector>

#include "selberg/polynomial.hpp"

namespace selberg {

// Polynomial over Z/p with coefficients in [0, p), lowest degree first,
// no trailing zeros. p must be a prime below 2^32 so products fit in 64 bits.
class ModpPolynomial {
 public:
  ModpPolynomial(std::uint64_t p, std::vector<std::uint64_t> coeffs);
  static ModpPolynomial reduce(const IntPolynomial& f, std::uint64_t p);
  static ModpPolynomial constant(std::uint64_t p, std::uint64_t c);
  static ModpPolynomial x(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  const std::vector<std::uint64_t>& coeffs() const { return c_; }
  std::uint64_t leading() const { return c_.empty() ? 0 : c_.back(); }

  // Lift with coefficients in [0, p).
  IntPolynomial lift() const;

  friend bool operator==(const ModpPolynomial& a, const ModpPolynomial& b) {
    return a.p_ == b.p_ && a.c_ == b.c_;
  }
  friend bool operator<(const ModpPolynomial& a, const ModpPolynomial& b);

  friend ModpPolynomial operator+(const ModpPolynomial& a, const ModpPolynomial& b);
  friend ModpPolynomial operator-(const ModpPolynomial& a, const ModpPolynomial& b);
  friend ModpPolynomial operator*(const ModpPolynomial& a, const ModpPolynomial& b);
  ModpPolynomial scaled(std::uint64_t s) const;

  ModpPolynomial monic() const;
  ModpPolynomial derivative() const;

 private:
  void trim();

  std::uint64_t p_;
  std::vector<std::uint64_t> c_;
};

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p);
std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p);

struct DivModResult {
  ModpPolynomial quotient;
  ModpPolynomial remainder;
};
DivModResult divmod(const ModpPolynomial& f, const ModpPolynomial& g);
ModpPolynomial gcd(ModpPolynomial a, ModpPolynomial b);
// base^e mod modulus.
ModpPolynomial powmod(const ModpPolynomial& base, const BigInt& e, const ModpPolynomial& modulus);

struct ModpFactor {
  ModpPolynomial factor;  // monic irreducible
  int multiplicity;
};

struct ModpFactorization {
  std::uint64_t unit;  // leading coefficient of f mod p
  std::vector<ModpFactor> factors;  // sorted by (degree, coefficients)
};

// Complete factorization over F_p: squarefree decomposition, then
// distinct-degree, then equal-degree (Cantor-Zassenhaus) splitting.
// Randomness comes from a generator seeded with `seed`, so the output is
// reproducible. Throws DomainError for composite p or f == 0 mod p.
ModpFactorization factor_mod_p(const IntPolynomial& f, std::uint64_t p, std::uint64_t seed = 0x5e1be5);

}  // namespace selberg
