#pragma once

// Test-only reference computations. Nothing here calls into the code paths
// it is used to check: brute force, closed forms, and floating evaluation
// at high precision.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include <boost/math/constants/constants.hpp>

#include "selberg/polynomial.hpp"
#include "selberg/real.hpp"

namespace oracle {

using selberg::BigInt;
using selberg::BigRat;
using selberg::IntPolynomial;
using selberg::Real;

inline Real pi() { return boost::math::constants::pi<Real>(); }

inline Real two_cos(std::uint64_t k, std::uint64_t p) { return 2 * cos(2 * pi() * Real(k) / Real(p)); }

// T_n(x) = (n/2) sum_k (-1)^k (n-k-1)! / (k! (n-2k)!) (2x)^(n-2k), n >= 1.
inline IntPolynomial chebyshev_closed_form(int n) {
  auto fact = [](int m) {
    BigInt r = 1;
    for (int i = 2; i <= m; ++i) r *= i;
    return r;
  };
  std::vector<BigInt> c(n + 1, 0);
  for (int k = 0; 2 * k <= n; ++k) {
    BigRat term = BigRat(BigInt(n) * fact(n - k - 1), 2 * fact(k) * fact(n - 2 * k));
    term.canonicalize();
    term *= selberg::ipow(BigInt(2), static_cast<unsigned long>(n - 2 * k));
    if (k % 2 == 1) term = -term;
    c[n - 2 * k] += term.get_num() / term.get_den();
  }
  return IntPolynomial(c);
}

// All a in [0, p) with f(a) == 0 mod p.
inline std::vector<std::uint64_t> roots_mod_p(const IntPolynomial& f, std::uint64_t p) {
  std::vector<std::uint64_t> r;
  for (std::uint64_t a = 0; a < p; ++a) {
    BigInt v = f.eval(BigInt(static_cast<unsigned long>(a)));
    BigInt m;
    mpz_fdiv_r_ui(m.get_mpz_t(), v.get_mpz_t(), p);
    if (m == 0) r.push_back(a);
  }
  return r;
}

// Naive polynomial arithmetic over Z/p on plain vectors (lowest first).
using NaivePoly = std::vector<std::int64_t>;

inline NaivePoly naive_trim(NaivePoly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

inline NaivePoly naive_reduce(const IntPolynomial& f, std::int64_t p) {
  NaivePoly r;
  for (const auto& c : f.coeffs()) {
    BigInt m;
    mpz_fdiv_r_ui(m.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(p));
    r.push_back(static_cast<std::int64_t>(m.get_si()));
  }
  return naive_trim(r);
}

inline std::int64_t naive_inv(std::int64_t a, std::int64_t p) {
  for (std::int64_t b = 1; b < p; ++b) {
    if (a * b % p == 1) return b;
  }
  return 0;
}

// Returns true and sets q when g divides f exactly over Z/p.
inline bool naive_divides(const NaivePoly& f, const NaivePoly& g, std::int64_t p, NaivePoly& q) {
  NaivePoly r = f;
  if (r.size() < g.size()) return r.empty();
  q.assign(r.size() - g.size() + 1, 0);
  const std::int64_t inv = naive_inv(g.back(), p);
  for (std::size_t k = r.size(); k-- >= g.size();) {
    const std::int64_t t = r[k] * inv % p;
    q[k - (g.size() - 1)] = t;
    for (std::size_t i = 0; i < g.size(); ++i) {
      std::size_t idx = k - (g.size() - 1) + i;
      r[idx] = ((r[idx] - t * g[i]) % p + p) % p;
    }
    if (k == g.size() - 1) break;
  }
  return naive_trim(r).empty();
}

// Factorization by trial division with every monic polynomial in increasing
// degree: returns the multiset of monic irreducible factor coefficient
// vectors. Only usable for tiny p and degree.
inline std::map<NaivePoly, int> naive_factor(const IntPolynomial& f, std::int64_t p) {
  NaivePoly cur = naive_reduce(f, p);
  {
    const std::int64_t inv = naive_inv(cur.back(), p);
    for (auto& c : cur) c = c * inv % p;
  }
  std::map<NaivePoly, int> out;
  for (int d = 1; static_cast<int>(cur.size()) - 1 >= d;) {
    bool found = false;
    std::int64_t total = 1;
    for (int i = 0; i < d; ++i) total *= p;
    for (std::int64_t code = 0; code < total && !found; ++code) {
      NaivePoly g(d + 1, 0);
      g[d] = 1;
      std::int64_t c = code;
      for (int i = 0; i < d; ++i) {
        g[i] = c % p;
        c /= p;
      }
      NaivePoly q;
      if (naive_divides(cur, g, p, q)) {
        ++out[g];
        cur = naive_trim(q);
        found = true;
      }
    }
    if (!found) ++d;
  }
  return out;
}

// Euler phi for every m <= n by sieve.
inline std::vector<std::uint64_t> phi_sieve(std::uint64_t n) {
  std::vector<std::uint64_t> phi(n + 1);
  std::iota(phi.begin(), phi.end(), std::uint64_t{0});
  for (std::uint64_t q = 2; q <= n; ++q) {
    if (phi[q] != q) continue;
    for (std::uint64_t m = q; m <= n; m += q) phi[m] -= phi[m] / q;
  }
  return phi;
}

// Max lcm over sets of distinct m <= mmax with sum phi(m) <= budget, by
// exhaustive depth-first enumeration.
inline std::uint64_t naive_max_lcm(int budget, std::uint64_t mmax = 200) {
  const auto phi = phi_sieve(mmax);
  std::vector<std::uint64_t> cands;
  for (std::uint64_t m = 2; m <= mmax; ++m) {
    if (phi[m] <= static_cast<std::uint64_t>(budget)) cands.push_back(m);
  }
  std::uint64_t best = 1;
  auto rec = [&](auto&& self, std::size_t from, int left, std::uint64_t l) -> void {
    best = std::max(best, l);
    for (std::size_t i = from; i < cands.size(); ++i) {
      const auto c = static_cast<int>(phi[cands[i]]);
      if (c > left) continue;
      self(self, i + 1, left - c, std::lcm(l, cands[i]));
    }
  };
  rec(rec, 0, budget, 1);
  return best;
}

using IntMatrix = std::vector<std::vector<std::int64_t>>;

inline IntMatrix identity(std::size_t n) {
  IntMatrix m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  IntMatrix c(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline IntMatrix mat_pow(IntMatrix a, std::uint64_t e) {
  IntMatrix r = identity(a.size());
  for (std::uint64_t i = 0; i < e; ++i) r = mat_mul(r, a);
  return r;
}

// x^m - 1 divided by every x^k - 1 for proper divisors k, by long division
// of integer vectors (lowest first).
inline std::vector<std::int64_t> cyclotomic_naive(std::uint64_t m) {
  std::vector<std::int64_t> num(m + 1, 0);
  num[0] = -1;
  num[m] = 1;
  std::vector<std::uint64_t> divs;
  for (std::uint64_t k = 1; k < m; ++k) {
    if (m % k == 0) divs.push_back(k);
  }
  for (std::uint64_t k : divs) {
    const auto den = cyclotomic_naive(k);
    std::vector<std::int64_t> q(num.size() - den.size() + 1, 0);
    for (std::size_t i = num.size(); i-- >= den.size();) {
      const std::int64_t t = num[i];
      q[i - (den.size() - 1)] = t;
      for (std::size_t j = 0; j < den.size(); ++j) num[i - (den.size() - 1) + j] -= t * den[j];
      if (i == den.size() - 1) break;
    }
    num = q;
  }
  return num;
}

// Block-diagonal matrix of companion matrices of Phi_{m_i}, padded with 1s
// to size n.
inline IntMatrix cyclotomic_block_matrix(const std::vector<std::uint64_t>& ms, std::size_t n) {
  IntMatrix g = identity(n);
  std::size_t at = 0;
  for (std::uint64_t m : ms) {
    const auto phi = cyclotomic_naive(m);
    const std::size_t k = phi.size() - 1;
    for (std::size_t i = 0; i < k; ++i) {
      g[at + i][at + i] = 0;
      if (i + 1 < k) g[at + i + 1][at + i] = 1;
      g[at + i][at + k - 1] = -phi[i];
    }
    at += k;
  }
  return g;
}

// Splitting of a rational prime q in Q(2cos(2 pi / p)) from cyclotomic
// theory: q != p is unramified with f = order of q in (Z/p)^* / {+-1};
// q = p is totally ramified. Returns (e, f) repeated g times.
inline std::vector<std::pair<int, int>> real_cyclotomic_split(std::uint64_t p, std::uint64_t q) {
  const int d = static_cast<int>((p - 1) / 2);
  if (q == p) return {{d, 1}};
  std::uint64_t x = q % p;
  int f = 1;
  while (x != 1 && x != p - 1) {
    x = x * (q % p) % p;
    ++f;
  }
  return std::vector<std::pair<int, int>>(static_cast<std::size_t>(d / f), {1, f});
}

// Smallest norm q^f over prime ideals with e <= q - 2, given a splitting
// rule, by scanning every prime q up to the bound.
template <class Split>
std::uint64_t min_passing_norm(Split split, std::uint64_t q_bound) {
  std::uint64_t best = 0;
  for (std::uint64_t q = 2; q <= q_bound; ++q) {
    bool prime = true;
    for (std::uint64_t r = 2; r * r <= q; ++r) prime = prime && q % r != 0;
    if (!prime) continue;
    for (const auto& [e, f] : split(q)) {
      if (static_cast<std::uint64_t>(e) + 2 > q) continue;
      std::uint64_t n = 1;
      for (int i = 0; i < f; ++i) n *= q;
      if (best == 0 || n < best) best = n;
    }
  }
  return best;
}

}  // namespace oracle
