#include "selberg/bigint.hpp"

#include <cctype>

#include "selberg/errors.hpp"

namespace selberg {

BigRat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  BigRat r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const BigInt& a) { return a.get_str(10); }

std::string to_string(const BigRat& a) {
  if (a.get_den() == 1) return a.get_num().get_str(10);
  return a.get_num().get_str(10) + "/" + a.get_den().get_str(10);
}

BigInt parse_bigint(std::string_view s) {
  std::string t;
  for (char ch : s) {
    if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
  }
  if (!t.empty() && t.front() == '+') t.erase(t.begin());
  bool ok = !t.empty();
  for (std::size_t i = 0; i < t.size() && ok; ++i) {
    const char ch = t[i];
    if (i == 0 && ch == '-' && t.size() > 1) continue;
    ok = std::isdigit(static_cast<unsigned char>(ch)) != 0;
  }
  if (!ok) throw DomainError("not an integer: '" + std::string(s) + "'");
  return BigInt(t, 10);
}

BigRat parse_bigrat(std::string_view s) {
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return BigRat(parse_bigint(s));
  return make_rat(parse_bigint(s.substr(0, slash)), parse_bigint(s.substr(slash + 1)));
}

BigInt ipow(const BigInt& base, unsigned long exponent) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

long valuation(const BigInt& a, const BigInt& p) {
  if (a == 0) throw DomainError("valuation of zero is infinite");
  if (p < 2) throw DomainError("valuation base must be >= 2");
  BigInt rest;
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()));
}

long valuation(const BigRat& a, const BigInt& p) {
  if (a == 0) throw DomainError("valuation of zero is infinite");
  return valuation(a.get_num(), p) - valuation(a.get_den(), p);
}

bool is_power_of_two(const BigInt& a) {
  return a > 0 && mpz_popcount(a.get_mpz_t()) == 1;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e != 0) {
    if (e & 1U) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1U;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // This witness set is deterministic below 3.3e24.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  if (mpz_fits_ulong_p(n.get_mpz_t()) != 0) return is_prime(static_cast<std::uint64_t>(n.get_ui()));
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

int sign(const BigInt& a) { return sgn(a); }
int sign(const BigRat& a) { return sgn(a); }

}  // namespace selberg
