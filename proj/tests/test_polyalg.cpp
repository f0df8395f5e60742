#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "selberg/modp.hpp"
#include "selberg/newton_polygon.hpp"
#include "selberg/real_roots.hpp"
#include "selberg/special_polys.hpp"

using namespace selberg;

namespace {

IntPolynomial random_poly(std::mt19937_64& rng, int degree, long range) {
  std::uniform_int_distribution<long> dist(-range, range);
  std::vector<BigInt> c(degree + 1);
  for (auto& a : c) a = dist(rng);
  if (c.back() == 0) c.back() = 1;
  return IntPolynomial(c);
}

IntPolynomial product_of(const ModpFactorization& fac, std::uint64_t p) {
  ModpPolynomial acc = ModpPolynomial::constant(p, fac.unit);
  for (const auto& f : fac.factors) {
    for (int i = 0; i < f.multiplicity; ++i) acc = acc * f.factor;
  }
  return acc.lift();
}

}  // namespace

TEST_CASE("chebyshev_T small cases") {
  CHECK(chebyshev_T(1) == IntPolynomial{0, 1});
  CHECK(chebyshev_T(2) == IntPolynomial{-1, 0, 2});
  CHECK(chebyshev_T(5) == IntPolynomial{0, 5, 0, -20, 0, 16});
  CHECK_THROWS_AS(chebyshev_T(0), DomainError);
}

TEST_CASE("chebyshev_T matches the closed-form expansion") {
  for (int n = 1; n <= 40; ++n) CHECK(chebyshev_T(n) == oracle::chebyshev_closed_form(n));
}

TEST_CASE("chebyshev_T agrees with cos(n arccos q) at high precision") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-1000, 1000);
  std::vector<BigRat> qs;
  for (int i = 0; i < 1000; ++i) qs.push_back(make_rat(BigInt(num(rng)), BigInt(1000)));
  const Real tol("1e-9");
  int failures = 0;
  for (int n = 1; n <= 50; ++n) {
    const IntPolynomial t = chebyshev_T(n);
    for (const auto& q : qs) {
      const Real exact = to_real(t.eval(q));
      const Real ref = cos(Real(n) * acos(to_real(q)));
      if (abs(exact - ref) >= tol) ++failures;
    }
  }
  CHECK(failures == 0);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == IntPolynomial{-1, 1});
  CHECK(cyclotomic(2) == IntPolynomial{1, 1});
  CHECK(cyclotomic(4) == IntPolynomial{1, 0, 1});
  CHECK(cyclotomic(6) == IntPolynomial{1, -1, 1});
  CHECK(cyclotomic(12) == IntPolynomial{1, 0, -1, 0, 1});
  for (std::uint64_t p : {3U, 5U, 7U, 11U}) {
    std::vector<BigInt> ones(p, 1);
    CHECK(cyclotomic(p) == IntPolynomial(ones));
  }
}

TEST_CASE("minpoly_two_cos examples") {
  CHECK(minpoly_two_cos(3) == IntPolynomial{1, 1});
  CHECK(minpoly_two_cos(5) == IntPolynomial{-1, 1, 1});
  CHECK(minpoly_two_cos(7) == IntPolynomial{-1, -2, 1, 1});
  CHECK_THROWS_AS(minpoly_two_cos(9), DomainError);
  CHECK_THROWS_AS(minpoly_two_cos(2), DomainError);
}

TEST_CASE("minpoly_two_cos rewrites the cyclotomic polynomial") {
  // z^m * Psi(z + 1/z) expanded as sum c_k z^(m-k) (z^2 + 1)^k.
  for (std::uint64_t p : {3U, 5U, 7U, 11U, 13U, 17U}) {
    const IntPolynomial psi = minpoly_two_cos(p);
    const std::uint64_t m = (p - 1) / 2;
    IntPolynomial lhs;
    for (int k = 0; k <= psi.degree(); ++k) {
      lhs += IntPolynomial::monomial(psi.coeffs()[k], m - k) * pow(IntPolynomial{1, 0, 1}, k);
    }
    std::vector<BigInt> ones(p, 1);
    CHECK(lhs == IntPolynomial(ones));
  }
}

TEST_CASE("minpoly_two_cos vanishes at 2cos(2pi/p)") {
  for (std::uint64_t p : {3U, 5U, 7U, 11U, 13U, 31U}) {
    const IntPolynomial psi = minpoly_two_cos(p);
    CHECK(abs(eval_real(psi, oracle::two_cos(1, p))) < Real("1e-10"));
  }
}

TEST_CASE("minpoly_cos examples") {
  CHECK(minpoly_cos(3) == IntPolynomial{1, 2});
  CHECK(minpoly_cos(5) == IntPolynomial{-1, 2, 4});
  CHECK(minpoly_cos(7) == IntPolynomial{-1, -4, 4, 8});
  for (std::uint64_t p : {5U, 7U}) {
    CHECK(abs(eval_real(minpoly_cos(p), oracle::two_cos(1, p) / 2)) < Real("1e-10"));
  }
}

TEST_CASE("minimal polynomials of cosines for all odd primes below 100") {
  for (std::uint64_t p = 3; p < 100; p += 2) {
    if (!is_prime(p)) continue;
    CAPTURE(p);
    const IntPolynomial psi = minpoly_two_cos(p);
    const int m = static_cast<int>((p - 1) / 2);
    CHECK(psi.degree() == m);
    CHECK(psi.is_monic());
    CHECK(is_power_of_two(minpoly_cos(p).leading()));
    // Irreducible over Q because it is irreducible modulo some prime.
    bool certified = m == 1;
    for (std::uint64_t q = 2; q < 2000 && !certified; ++q) {
      if (!is_prime(q) || q == p) continue;
      const auto fac = factor_mod_p(psi, q);
      certified = fac.factors.size() == 1 && fac.factors[0].multiplicity == 1;
    }
    CHECK(certified);
  }
}

TEST_CASE("factor_mod_p examples") {
  const IntPolynomial f{-2, 0, 1};
  const auto f7 = factor_mod_p(f, 7);
  REQUIRE(f7.factors.size() == 2);
  CHECK(f7.factors[0].factor.coeffs() == std::vector<std::uint64_t>{3, 1});
  CHECK(f7.factors[1].factor.coeffs() == std::vector<std::uint64_t>{4, 1});
  CHECK(oracle::roots_mod_p(f, 7) == std::vector<std::uint64_t>{3, 4});

  const auto f5 = factor_mod_p(f, 5);
  REQUIRE(f5.factors.size() == 1);
  CHECK(f5.factors[0].factor.degree() == 2);
  CHECK(oracle::roots_mod_p(f, 5).empty());

  const auto f2 = factor_mod_p(f, 2);
  REQUIRE(f2.factors.size() == 1);
  CHECK(f2.factors[0].factor.coeffs() == std::vector<std::uint64_t>{0, 1});
  CHECK(f2.factors[0].multiplicity == 2);

  CHECK_THROWS_AS(factor_mod_p(f, 9), DomainError);
  CHECK_THROWS_AS(factor_mod_p(IntPolynomial{7, 14}, 7), DomainError);
}

TEST_CASE("factor_mod_p handles inseparable parts") {
  // (x^2 + 1)^3 over F_3 has derivative 0 after expansion.
  const IntPolynomial f = pow(IntPolynomial{1, 0, 1}, 3);
  const auto fac = factor_mod_p(f, 3);
  REQUIRE(fac.factors.size() == 1);
  CHECK(fac.factors[0].multiplicity == 3);
  CHECK(fac.factors[0].factor.coeffs() == std::vector<std::uint64_t>{1, 0, 1});
}

TEST_CASE("factor_mod_p property: product and root count") {
  std::mt19937_64 rng(20240611);
  std::vector<std::uint64_t> primes;
  for (std::uint64_t q = 2; q <= 97; ++q) {
    if (is_prime(q)) primes.push_back(q);
  }
  std::uniform_int_distribution<std::size_t> pick(0, primes.size() - 1);
  std::uniform_int_distribution<int> deg(1, 8);
  int checked = 0;
  while (checked < 500) {
    const std::uint64_t p = primes[pick(rng)];
    const IntPolynomial f = random_poly(rng, deg(rng), 50);
    if (ModpPolynomial::reduce(f, p).is_zero()) continue;
    const auto fac = factor_mod_p(f, p);
    CHECK(product_of(fac, p) == ModpPolynomial::reduce(f, p).lift());
    std::size_t linear = 0;
    for (const auto& g : fac.factors) {
      if (g.factor.degree() == 1) ++linear;
    }
    CHECK(linear == oracle::roots_mod_p(f, p).size());
    ++checked;
  }
}

TEST_CASE("factor_mod_p agrees with trial-division factorization for tiny primes") {
  std::mt19937_64 rng(7);
  for (std::uint64_t p : {2U, 3U, 5U, 7U}) {
    for (int trial = 0; trial < 40; ++trial) {
      const IntPolynomial f = random_poly(rng, 1 + trial % 6, 20);
      if (ModpPolynomial::reduce(f, p).degree() < 1) continue;
      std::map<oracle::NaivePoly, int> got;
      for (const auto& g : factor_mod_p(f, p).factors) {
        oracle::NaivePoly v(g.factor.coeffs().begin(), g.factor.coeffs().end());
        got[v] += g.multiplicity;
      }
      CHECK(got == oracle::naive_factor(f, static_cast<std::int64_t>(p)));
    }
  }
}

TEST_CASE("factor_mod_p is reproducible") {
  const IntPolynomial f = minpoly_two_cos(31);
  const auto a = factor_mod_p(f, 61);
  const auto b = factor_mod_p(f, 61);
  REQUIRE(a.factors.size() == b.factors.size());
  for (std::size_t i = 0; i < a.factors.size(); ++i) CHECK(a.factors[i].factor == b.factors[i].factor);
  // 61 = 1 mod 31 splits completely in the real cyclotomic field.
  CHECK(a.factors.size() == 15);
}

TEST_CASE("discriminant examples") {
  CHECK(discriminant(IntPolynomial{-2, 0, 1}) == 8);
  CHECK(discriminant(IntPolynomial{-1, 1, 1}) == 5);
  CHECK(discriminant(IntPolynomial{-1, -2, 1, 1}) == 49);
  CHECK_THROWS_AS(discriminant(IntPolynomial{5}), DomainError);
}

TEST_CASE("discriminant of a cubic matches the root-product oracle") {
  // disc = prod_{i<j} (r_i - r_j)^2 over the roots 2cos(2pi k/7).
  Real prod = 1;
  for (int i = 1; i <= 3; ++i) {
    for (int j = i + 1; j <= 3; ++j) {
      const Real diff = oracle::two_cos(i, 7) - oracle::two_cos(j, 7);
      prod *= diff * diff;
    }
  }
  CHECK(abs(prod - 49) < Real("1e-30"));
}

TEST_CASE("discriminant of monic quadratics is b^2 - 4c") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> dist(-1000000, 1000000);
  for (int i = 0; i < 100; ++i) {
    const BigInt b = dist(rng);
    const BigInt c = dist(rng);
    CHECK(discriminant(IntPolynomial(std::vector<BigInt>{c, b, 1})) == b * b - 4 * c);
  }
  // Non-monic: b^2 - 4ac.
  CHECK(discriminant(IntPolynomial{3, 5, 7}) == 25 - 4 * 7 * 3);
}

TEST_CASE("resultant basics") {
  // Res(x - a, g) = g(a).
  const IntPolynomial g{3, -1, 0, 2};
  CHECK(resultant(IntPolynomial{-5, 1}, g) == g.eval(BigInt(5)));
  CHECK(resultant(IntPolynomial{-1, 0, 1}, IntPolynomial{-1, 1}) == 0);
}

TEST_CASE("pseudo_remainder identity") {
  const IntPolynomial f{1, 2, 3, 4, 5};
  const IntPolynomial g{-1, 0, 3};
  const IntPolynomial r = pseudo_remainder(f, g);
  CHECK(r.degree() < g.degree());
  // lc(g)^(3) f - r is divisible by g over Q.
  const RatPolynomial lhs = to_rational(f * BigInt(27) - r);
  CHECK(divmod(lhs, to_rational(g)).second.is_zero());
}

TEST_CASE("isolate_real_roots examples") {
  const auto sqrt2 = isolate_real_roots(IntPolynomial{-2, 0, 1}, make_rat(1, 1000));
  REQUIRE(sqrt2.size() == 2);
  const Real r2 = sqrt(Real(2));
  CHECK(to_real(sqrt2[0].lo) < -r2);
  CHECK(-r2 < to_real(sqrt2[0].hi));
  CHECK(to_real(sqrt2[1].lo) < r2);
  CHECK(r2 < to_real(sqrt2[1].hi));
  for (const auto& iv : sqrt2) CHECK(iv.width() <= make_rat(1, 1000));

  const auto cubic = isolate_real_roots(minpoly_two_cos(7), make_rat(1, 1000000));
  REQUIRE(cubic.size() == 3);
  // Ascending order: 2cos(6pi/7) < 2cos(4pi/7) < 2cos(2pi/7).
  for (int i = 0; i < 3; ++i) {
    const Real root = oracle::two_cos(3 - i, 7);
    CHECK(to_real(cubic[i].lo) < root);
    CHECK(root < to_real(cubic[i].hi));
    CHECK(cubic[i].width() <= make_rat(1, 1000000));
  }

  CHECK(isolate_real_roots(IntPolynomial{1, 0, 1}, BigRat(1)).empty());
}

TEST_CASE("isolate_real_roots rejects repeated roots") {
  const IntPolynomial f = pow(IntPolynomial{-1, 1}, 2) * IntPolynomial{1, 1};
  CHECK_THROWS_AS(isolate_real_roots(f, BigRat(1)), NotSquarefreeError);
}

TEST_CASE("isolate_real_roots finds exact rational roots") {
  // (x)(2x - 1)(x + 3)
  const IntPolynomial f = IntPolynomial{0, 1} * IntPolynomial{-1, 2} * IntPolynomial{3, 1};
  const auto roots = isolate_real_roots(f, make_rat(1, 64));
  REQUIRE(roots.size() == 3);
  CHECK(roots[0].contains(BigRat(-3)));
  CHECK(roots[1].contains(BigRat(0)));
  CHECK(roots[2].contains(make_rat(1, 2)));
}

TEST_CASE("isolate_real_roots property: Sturm count and sign changes") {
  std::mt19937_64 rng(99);
  int checked = 0;
  while (checked < 150) {
    const IntPolynomial f = random_poly(rng, 1 + checked % 7, 30);
    if (!is_squarefree(f)) continue;
    const auto roots = isolate_real_roots(f, make_rat(1, 256));
    const SturmSequence s(f);
    CHECK(static_cast<int>(roots.size()) == s.count_real_roots());
    for (std::size_t i = 0; i < roots.size(); ++i) {
      const auto& iv = roots[i];
      if (!iv.is_point()) CHECK(sign_at(f, iv.lo) * sign_at(f, iv.hi) < 0);
      if (i > 0) CHECK(roots[i - 1].hi <= iv.lo);
    }
    ++checked;
  }
}

TEST_CASE("refine_root narrows without losing the root") {
  const IntPolynomial f{-2, 0, 1};
  auto roots = isolate_real_roots(f, BigRat(1));
  const auto fine = refine_root(f, roots[1], make_rat(1, BigInt(1) << 100));
  CHECK(fine.width() <= make_rat(1, BigInt(1) << 100));
  CHECK(sign_at(f, fine.lo) < 0);
  CHECK(sign_at(f, fine.hi) > 0);
}

TEST_CASE("newton_polygon examples") {
  const auto a = newton_polygon(IntPolynomial{-2, 0, 1}, 2);
  REQUIRE(a.slopes.size() == 1);
  CHECK(a.slopes[0].valuation == make_rat(1, 2));
  CHECK(a.slopes[0].length == 2);

  // Roots 2 +- sqrt2 have valuation 1/2 each; the point (1, 2) lies above the hull.
  const auto b = newton_polygon(IntPolynomial{2, -4, 1}, 2);
  REQUIRE(b.slopes.size() == 1);
  CHECK(b.slopes[0].valuation == make_rat(1, 2));
  CHECK(b.slopes[0].length == 2);
  CHECK(b.vertices.size() == 2);

  const auto c = newton_polygon(IntPolynomial{-6, 1}, 2);
  REQUIRE(c.slopes.size() == 1);
  CHECK(c.slopes[0].valuation == 1);

  CHECK_THROWS_AS(newton_polygon(IntPolynomial{}, 2), DomainError);
  CHECK_THROWS_AS(newton_polygon(IntPolynomial{1, 1}, 4), DomainError);
}

TEST_CASE("newton_polygon recovers prescribed root valuations") {
  // f = prod (x - p^k_i u_i) with u_i prime to p has roots of valuation k_i.
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> kdist(0, 4);
  std::uniform_int_distribution<long> udist(1, 40);
  for (long p : {2L, 3L, 5L}) {
    for (int trial = 0; trial < 60; ++trial) {
      IntPolynomial f{1};
      std::map<long, int> expected;
      const int n = 1 + trial % 5;
      for (int i = 0; i < n; ++i) {
        const int k = kdist(rng);
        long u = udist(rng);
        while (u % p == 0) ++u;
        f *= IntPolynomial(std::vector<BigInt>{-ipow(BigInt(p), k) * u, 1});
        ++expected[k];
      }
      const auto np = newton_polygon(f, p);
      std::map<long, int> got;
      int total = 0;
      for (const auto& s : np.slopes) {
        REQUIRE(s.valuation.get_den() == 1);
        got[s.valuation.get_num().get_si()] += s.length;
        total += s.length;
      }
      CHECK(got == expected);
      CHECK(total == f.degree());
      for (std::size_t i = 1; i < np.slopes.size(); ++i) CHECK(np.slopes[i - 1].valuation < np.slopes[i].valuation);
      // Multiplying by a constant prime to p leaves the polygon unchanged.
      const auto scaled = newton_polygon(f * BigInt(p == 2 ? 7 : p + 1), p);
      REQUIRE(scaled.slopes.size() == np.slopes.size());
      for (std::size_t i = 0; i < np.slopes.size(); ++i) CHECK(scaled.slopes[i].valuation == np.slopes[i].valuation);
    }
  }
}
