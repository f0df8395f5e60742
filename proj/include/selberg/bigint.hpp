#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace selberg {

using BigInt = mpz_class;
using BigRat = mpq_class;

// Builds num/den in lowest terms with a positive denominator.
BigRat make_rat(const BigInt& num, const BigInt& den);

std::string to_string(const BigInt& a);
// "n" for integers, "n/d" otherwise.
std::string to_string(const BigRat& a);

BigInt parse_bigint(std::string_view s);
BigRat parse_bigrat(std::string_view s);

BigInt ipow(const BigInt& base, unsigned long exponent);

// p-adic valuation; a must be nonzero and p >= 2.
long valuation(const BigInt& a, const BigInt& p);
long valuation(const BigRat& a, const BigInt& p);

bool is_power_of_two(const BigInt& a);

// Deterministic for the full 64-bit range.
bool is_prime(std::uint64_t n);
bool is_prime(const BigInt& n);

int sign(const BigInt& a);
int sign(const BigRat& a);

}  // namespace selberg
