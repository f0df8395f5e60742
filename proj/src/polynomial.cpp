#include "selberg/polynomial.hpp"

#include <sstream>

namespace selberg {

BigInt content(const IntPolynomial& f) {
  BigInt g = 0;
  for (const auto& c : f.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPolynomial primitive_part(const IntPolynomial& f) {
  if (f.is_zero()) return f;
  BigInt g = content(f);
  if (f.leading() < 0) g = -g;
  std::vector<BigInt> c = f.coeffs();
  for (auto& a : c) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(c));
}

RatPolynomial to_rational(const IntPolynomial& f) {
  std::vector<BigRat> c;
  c.reserve(f.coeffs().size());
  for (const auto& a : f.coeffs()) c.emplace_back(a);
  return RatPolynomial(std::move(c));
}

std::pair<IntPolynomial, BigInt> clear_denominators(const RatPolynomial& f) {
  BigInt l = 1;
  for (const auto& a : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.get_den_mpz_t());
  std::vector<BigInt> c;
  c.reserve(f.coeffs().size());
  for (const auto& a : f.coeffs()) c.emplace_back(a.get_num() * (l / a.get_den()));
  return {IntPolynomial(std::move(c)), l};
}

IntPolynomial pseudo_remainder(const IntPolynomial& f, const IntPolynomial& g) {
  if (g.is_zero()) throw DomainError("pseudo-remainder by the zero polynomial");
  if (f.degree() < g.degree()) return f;
  const int dg = g.degree();
  const BigInt& lc = g.leading();
  int steps = f.degree() - dg + 1;
  IntPolynomial r = f;
  while (!r.is_zero() && r.degree() >= dg) {
    IntPolynomial shifted = IntPolynomial::monomial(r.leading(), static_cast<std::size_t>(r.degree() - dg)) * g;
    r = r * lc - shifted;
    --steps;
  }
  for (; steps > 0; --steps) r *= lc;
  return r;
}

BigInt resultant(const IntPolynomial& f, const IntPolynomial& g) {
  if (f.is_zero() || g.is_zero()) return 0;
  const int m = f.degree();
  const int n = g.degree();
  if (m == 0 && n == 0) return 1;
  if (m == 0) return ipow(f.leading(), static_cast<unsigned long>(n));
  if (n == 0) return ipow(g.leading(), static_cast<unsigned long>(m));
  const int size = m + n;
  std::vector<std::vector<BigInt>> a(size, std::vector<BigInt>(size, 0));
  // Rows 0..n-1 hold shifted copies of f, rows n..n+m-1 of g, highest degree first.
  for (int r = 0; r < n; ++r) {
    for (int i = 0; i <= m; ++i) a[r][r + i] = f.coeffs()[m - i];
  }
  for (int r = 0; r < m; ++r) {
    for (int i = 0; i <= n; ++i) a[n + r][r + i] = g.coeffs()[n - i];
  }
  int sign_flip = 1;
  BigInt prev = 1;
  for (int k = 0; k < size - 1; ++k) {
    if (a[k][k] == 0) {
      int piv = k + 1;
      while (piv < size && a[piv][k] == 0) ++piv;
      if (piv == size) return 0;
      std::swap(a[k], a[piv]);
      sign_flip = -sign_flip;
    }
    for (int i = k + 1; i < size; ++i) {
      for (int j = k + 1; j < size; ++j) {
        BigInt t = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign_flip * a[size - 1][size - 1];
}

BigInt discriminant(const IntPolynomial& f) {
  const int d = f.degree();
  if (d < 1) throw DomainError("discriminant of a constant polynomial");
  BigInt res = resultant(f, f.derivative());
  BigInt q;
  mpz_divexact(q.get_mpz_t(), res.get_mpz_t(), f.leading().get_mpz_t());
  if ((static_cast<long>(d) * (d - 1) / 2) % 2 != 0) q = -q;
  return q;
}

std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& f, const RatPolynomial& g) {
  if (g.is_zero()) throw DomainError("division by the zero polynomial");
  if (f.degree() < g.degree()) return {RatPolynomial{}, f};
  std::vector<BigRat> r = f.coeffs();
  std::vector<BigRat> q(f.degree() - g.degree() + 1, BigRat(0));
  const auto& gc = g.coeffs();
  const int dg = g.degree();
  const BigRat lc_inv = 1 / g.leading();
  for (int dr = f.degree(); dr >= dg; --dr) {
    if (r[dr] == 0) continue;
    const BigRat t = r[dr] * lc_inv;
    q[dr - dg] = t;
    for (int i = 0; i <= dg; ++i) r[dr - dg + i] -= t * gc[i];
  }
  r.resize(dg);
  return {RatPolynomial(std::move(q)), RatPolynomial(std::move(r))};
}

RatPolynomial monic(const RatPolynomial& f) {
  if (f.is_zero()) return f;
  return f * BigRat(1 / f.leading());
}

RatPolynomial gcd(RatPolynomial a, RatPolynomial b) {
  while (!b.is_zero()) {
    RatPolynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

bool is_squarefree(const IntPolynomial& f) {
  if (f.degree() < 1) return true;
  return gcd(to_rational(f), to_rational(f.derivative())).degree() == 0;
}

std::string to_display_string(const IntPolynomial& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = f.degree(); i >= 0; --i) {
    const BigInt& c = f.coeffs()[i];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || i == 0) os << mag.get_str();
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

}  // namespace selberg
