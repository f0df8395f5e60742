#include "selberg/modp.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <utility>

namespace selberg {

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e != 0) {
    if (e & 1U) r = mod_mul(r, b, p);
    b = mod_mul(b, b, p);
    e >>= 1U;
  }
  return r;
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw DomainError("inverse of zero mod p");
  return mod_pow(a, p - 2, p);
}

ModpPolynomial::ModpPolynomial(std::uint64_t p, std::vector<std::uint64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
  for (auto& c : c_) c %= p_;
  trim();
}

ModpPolynomial ModpPolynomial::reduce(const IntPolynomial& f, std::uint64_t p) {
  std::vector<std::uint64_t> c;
  c.reserve(f.coeffs().size());
  const BigInt bp(static_cast<unsigned long>(p));
  for (const auto& a : f.coeffs()) {
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), bp.get_mpz_t());
    c.push_back(r.get_ui());
  }
  return ModpPolynomial(p, std::move(c));
}

ModpPolynomial ModpPolynomial::constant(std::uint64_t p, std::uint64_t c) { return ModpPolynomial(p, {c}); }

ModpPolynomial ModpPolynomial::x(std::uint64_t p) { return ModpPolynomial(p, {0, 1}); }

IntPolynomial ModpPolynomial::lift() const {
  std::vector<BigInt> c;
  c.reserve(c_.size());
  for (auto a : c_) c.emplace_back(static_cast<unsigned long>(a));
  return IntPolynomial(std::move(c));
}

bool operator<(const ModpPolynomial& a, const ModpPolynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.c_.rbegin(), a.c_.rend(), b.c_.rbegin(), b.c_.rend());
}

void ModpPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ModpPolynomial operator+(const ModpPolynomial& a, const ModpPolynomial& b) {
  std::vector<std::uint64_t> r(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const std::uint64_t x = i < a.c_.size() ? a.c_[i] : 0;
    const std::uint64_t y = i < b.c_.size() ? b.c_[i] : 0;
    r[i] = (x + y) % a.p_;
  }
  return ModpPolynomial(a.p_, std::move(r));
}

ModpPolynomial operator-(const ModpPolynomial& a, const ModpPolynomial& b) {
  std::vector<std::uint64_t> r(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const std::uint64_t x = i < a.c_.size() ? a.c_[i] : 0;
    const std::uint64_t y = i < b.c_.size() ? b.c_[i] : 0;
    r[i] = (x + a.p_ - y) % a.p_;
  }
  return ModpPolynomial(a.p_, std::move(r));
}

ModpPolynomial operator*(const ModpPolynomial& a, const ModpPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return ModpPolynomial(a.p_, {});
  std::vector<std::uint64_t> r(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      r[i + j] = (r[i + j] + mod_mul(a.c_[i], b.c_[j], a.p_)) % a.p_;
    }
  }
  return ModpPolynomial(a.p_, std::move(r));
}

ModpPolynomial ModpPolynomial::scaled(std::uint64_t s) const {
  std::vector<std::uint64_t> r = c_;
  for (auto& c : r) c = mod_mul(c, s % p_, p_);
  return ModpPolynomial(p_, std::move(r));
}

ModpPolynomial ModpPolynomial::monic() const {
  if (c_.empty()) return *this;
  return scaled(mod_inv(c_.back(), p_));
}

ModpPolynomial ModpPolynomial::derivative() const {
  if (c_.size() <= 1) return ModpPolynomial(p_, {});
  std::vector<std::uint64_t> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = mod_mul(c_[i], i % p_, p_);
  return ModpPolynomial(p_, std::move(r));
}

DivModResult divmod(const ModpPolynomial& f, const ModpPolynomial& g) {
  if (g.is_zero()) throw DomainError("division by the zero polynomial mod p");
  const std::uint64_t p = f.modulus();
  if (f.degree() < g.degree()) return {ModpPolynomial(p, {}), f};
  std::vector<std::uint64_t> r = f.coeffs();
  std::vector<std::uint64_t> q(f.degree() - g.degree() + 1, 0);
  const auto& gc = g.coeffs();
  const int dg = g.degree();
  const std::uint64_t inv = mod_inv(g.leading(), p);
  for (int dr = f.degree(); dr >= dg; --dr) {
    if (r[dr] == 0) continue;
    const std::uint64_t t = mod_mul(r[dr], inv, p);
    q[dr - dg] = t;
    for (int i = 0; i <= dg; ++i) {
      r[dr - dg + i] = (r[dr - dg + i] + p - mod_mul(t, gc[i], p)) % p;
    }
  }
  r.resize(dg);
  return {ModpPolynomial(p, std::move(q)), ModpPolynomial(p, std::move(r))};
}

ModpPolynomial gcd(ModpPolynomial a, ModpPolynomial b) {
  while (!b.is_zero()) {
    ModpPolynomial r = divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

ModpPolynomial powmod(const ModpPolynomial& base, const BigInt& e, const ModpPolynomial& modulus) {
  const std::uint64_t p = base.modulus();
  ModpPolynomial result = divmod(ModpPolynomial::constant(p, 1), modulus).remainder;
  ModpPolynomial b = divmod(base, modulus).remainder;
  const auto bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = divmod(result * result, modulus).remainder;
    if (mpz_tstbit(e.get_mpz_t(), i) != 0) result = divmod(result * b, modulus).remainder;
  }
  return result;
}

namespace {

ModpPolynomial exact_div(const ModpPolynomial& f, const ModpPolynomial& g) { return divmod(f, g).quotient; }

// f has only exponents divisible by p; returns g with g^p = f.
ModpPolynomial pth_root(const ModpPolynomial& f) {
  const std::uint64_t p = f.modulus();
  std::vector<std::uint64_t> r;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) r.push_back(f.coeffs()[i]);
  return ModpPolynomial(p, std::move(r));
}

void squarefree_decomposition(const ModpPolynomial& f, int scale, std::vector<std::pair<ModpPolynomial, int>>& out) {
  const std::uint64_t p = f.modulus();
  ModpPolynomial c = gcd(f, f.derivative());
  ModpPolynomial w = exact_div(f, c);
  int i = 1;
  while (!w.is_one()) {
    ModpPolynomial y = gcd(w, c);
    ModpPolynomial fac = exact_div(w, y);
    if (fac.degree() > 0) out.emplace_back(fac.monic(), i * scale);
    w = y;
    c = exact_div(c, y);
    ++i;
  }
  if (c.degree() > 0) squarefree_decomposition(pth_root(c).monic(), scale * static_cast<int>(p), out);
}

// Splits a squarefree monic f into products of irreducibles of equal degree.
std::vector<std::pair<ModpPolynomial, int>> distinct_degree(ModpPolynomial f) {
  const std::uint64_t p = f.modulus();
  std::vector<std::pair<ModpPolynomial, int>> out;
  const ModpPolynomial x = ModpPolynomial::x(p);
  ModpPolynomial h = divmod(x, f).remainder;
  const BigInt bp(static_cast<unsigned long>(p));
  int i = 1;
  while (f.degree() >= 2 * i) {
    h = powmod(h, bp, f);
    ModpPolynomial g = gcd(f, h - x);
    if (!g.is_one()) {
      out.emplace_back(g, i);
      f = exact_div(f, g);
      h = divmod(h, f).remainder;
    }
    ++i;
  }
  if (f.degree() > 0) out.emplace_back(f, f.degree());
  return out;
}

ModpPolynomial random_poly(std::uint64_t p, int below_degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
  std::vector<std::uint64_t> c(below_degree);
  for (auto& a : c) a = dist(rng);
  return ModpPolynomial(p, std::move(c));
}

void equal_degree(const ModpPolynomial& f, int d, std::mt19937_64& rng, std::vector<ModpPolynomial>& out) {
  if (f.degree() == d) {
    out.push_back(f);
    return;
  }
  const std::uint64_t p = f.modulus();
  const BigInt bp(static_cast<unsigned long>(p));
  for (;;) {
    ModpPolynomial a = random_poly(p, f.degree(), rng);
    if (a.degree() < 1) continue;
    ModpPolynomial b(p, {});
    if (p == 2) {
      // Trace map a + a^2 + ... + a^(2^(d-1)).
      ModpPolynomial t = a;
      b = a;
      for (int i = 1; i < d; ++i) {
        t = divmod(t * t, f).remainder;
        b = b + t;
      }
    } else {
      BigInt e = (ipow(bp, static_cast<unsigned long>(d)) - 1) / 2;
      b = powmod(a, e, f) - ModpPolynomial::constant(p, 1);
    }
    ModpPolynomial g = gcd(f, b);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(exact_div(f, g), d, rng, out);
      return;
    }
  }
}

}  // namespace

ModpFactorization factor_mod_p(const IntPolynomial& f, std::uint64_t p, std::uint64_t seed) {
  if (p >= (1ULL << 32U) || !is_prime(p)) {
    throw DomainError("factor_mod_p requires a prime modulus below 2^32, got " + std::to_string(p));
  }
  ModpPolynomial fp = ModpPolynomial::reduce(f, p);
  if (fp.is_zero()) throw DomainError("polynomial vanishes mod " + std::to_string(p));
  ModpFactorization result{fp.leading(), {}};
  if (fp.degree() == 0) return result;

  std::mt19937_64 rng(seed);
  std::vector<std::pair<ModpPolynomial, int>> sqf;
  squarefree_decomposition(fp.monic(), 1, sqf);
  for (const auto& [part, mult] : sqf) {
    for (const auto& [block, d] : distinct_degree(part)) {
      std::vector<ModpPolynomial> irreducibles;
      equal_degree(block, d, rng, irreducibles);
      for (auto& g : irreducibles) result.factors.push_back({std::move(g), mult});
    }
  }
  std::sort(result.factors.begin(), result.factors.end(), [](const ModpFactor& a, const ModpFactor& b) {
    if (a.factor == b.factor) return a.multiplicity < b.multiplicity;
    return a.factor < b.factor;
  });
  return result;
}

}  // namespace selberg
