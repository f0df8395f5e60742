#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "selberg/errors.hpp"
#include "selberg/torsion.hpp"

using namespace selberg;

namespace {

std::uint64_t lcm_of(const std::vector<std::uint64_t>& w) {
  std::uint64_t l = 1;
  for (auto m : w) l = std::lcm(l, m);
  return l;
}

bool close(const Real& a, const Real& b, const Real& rel = Real("1e-30")) { return abs(a - b) <= rel * abs(b); }

}  // namespace

TEST_CASE("totient examples and sieve agreement") {
  CHECK(totient(1) == 1);
  CHECK(totient(12) == 4);
  CHECK(totient(1024) == 512);
  CHECK_THROWS_AS(totient(0), DomainError);
  const auto phi = oracle::phi_sieve(20000);
  for (std::uint64_t m = 1; m <= 20000; ++m) CHECK(totient(m) == phi[m]);
  CHECK(totient(999999937ULL) == 999999936ULL);
}

TEST_CASE("max_torsion_order examples") {
  const std::vector<long> expected{2, 6, 6, 12, 12, 30};
  for (int n = 1; n <= 6; ++n) {
    CAPTURE(n);
    CHECK(max_torsion_order(n, 1).exact_max_order == expected[n - 1]);
  }
  CHECK(max_torsion_order(1, 1).witness_orders == std::vector<std::uint64_t>{2});
  CHECK(max_torsion_order(2, 1).witness_orders == std::vector<std::uint64_t>{6});
  CHECK(max_torsion_order(6, 1).witness_orders == std::vector<std::uint64_t>{5, 6});
}

TEST_CASE("max_torsion_order errors") {
  CHECK_THROWS_AS(max_torsion_order(0, 1), DomainError);
  CHECK_THROWS_AS(max_torsion_order(1, 0), DomainError);
  CHECK_THROWS_AS(max_torsion_order(9, 8), ResourceLimitError);
  CHECK_NOTHROW(max_torsion_order(8, 8));
}

TEST_CASE("max_torsion_order matches the naive multiset oracle") {
  for (int budget = 1; budget <= 16; ++budget) {
    CAPTURE(budget);
    CHECK(max_torsion_order(budget, 1).exact_max_order == oracle::naive_max_lcm(budget));
  }
}

TEST_CASE("witnesses are valid and bounds hold on nd <= 12") {
  for (int n = 1; n <= 12; ++n) {
    for (int d = 1; n * d <= 12; ++d) {
      CAPTURE(n);
      CAPTURE(d);
      const TorsionProfile t = max_torsion_order(n, d);
      CHECK(BigInt(static_cast<unsigned long>(lcm_of(t.witness_orders))) == t.exact_max_order);
      std::uint64_t cost = 0;
      for (auto m : t.witness_orders) cost += totient(m);
      CHECK(cost <= static_cast<std::uint64_t>(n * d));
      CHECK(std::adjacent_find(t.witness_orders.begin(), t.witness_orders.end()) == t.witness_orders.end());
      CHECK(t.stated_holds);
      CHECK(t.proof_holds);
      CHECK(t.exact_max_order <= t.stated_bound);
    }
  }
}

TEST_CASE("max_torsion_order is monotone in n and d") {
  for (int n = 1; n < 12; ++n) CHECK(max_torsion_order(n, 1).exact_max_order <= max_torsion_order(n + 1, 1).exact_max_order);
  for (int d = 1; d < 12; ++d) CHECK(max_torsion_order(3, d).exact_max_order <= max_torsion_order(3, d + 1).exact_max_order);
}

TEST_CASE("witness matrices have exactly the claimed order") {
  for (int n = 1; n <= 4; ++n) {
    CAPTURE(n);
    const TorsionProfile t = max_torsion_order(n, 1);
    const std::uint64_t l = t.exact_max_order.get_ui();
    const auto g = oracle::cyclotomic_block_matrix(t.witness_orders, static_cast<std::size_t>(n));
    const auto id = oracle::identity(static_cast<std::size_t>(n));
    CHECK(oracle::mat_pow(g, l) == id);
    for (std::uint64_t q = 2; q <= l; ++q) {
      if (l % q == 0 && totient(q) == q - 1) CHECK(oracle::mat_pow(g, l / q) != id);
    }
  }
}

TEST_CASE("stated_order_bounds examples") {
  CHECK(stated_order_bounds(2, 1).stated == 32);
  CHECK(stated_order_bounds(2, 1).proof == 64);
  CHECK(stated_order_bounds(1, 1).stated == 2);
  CHECK(stated_order_bounds(1, 1).proof == 4);
  CHECK(stated_order_bounds(3, 2).stated == 93312);
  CHECK(stated_order_bounds(3, 2).proof == 186624);
}

TEST_CASE("totient_sqrt_inequality") {
  CHECK(totient_sqrt_inequality(6));
  CHECK(totient_sqrt_inequality(2));
  CHECK(totient_sqrt_inequality(1));
  const auto phi = oracle::phi_sieve(100000);
  for (std::uint64_t l = 1; l <= 100000; ++l) {
    const bool expected = 2.0 * static_cast<double>(phi[l]) * static_cast<double>(phi[l]) >= static_cast<double>(l);
    CHECK(totient_sqrt_inequality(l) == expected);
  }
}

TEST_CASE("volume bounds") {
  const Real e = boost::multiprecision::exp(Real(1));
  CHECK(close(torsion_order_volume_bound(boost::multiprecision::exp(Real(10)), 1, 1), Real(10)));
  CHECK(close(torsion_order_volume_bound(boost::multiprecision::exp(Real(2)), 2, 3), Real(16)));
  CHECK(torsion_order_volume_bound(Real(100), 1, 1) < torsion_order_volume_bound(Real(1000), 1, 1));
  CHECK_THROWS_AS(torsion_order_volume_bound(e, 1, 1), DomainError);
  CHECK_THROWS_AS(torsion_order_volume_bound(Real(2), 1, 1), DomainError);

  const Real v = boost::multiprecision::exp(Real(10));
  CHECK(close(finite_subgroup_bound(v, 1, 1, 3, 2), torsion_order_volume_bound(v, 3, 2)));
  CHECK(close(finite_subgroup_bound(v, 2, 60, 1, 1), Real(6000)));
  CHECK_THROWS_AS(finite_subgroup_bound(v, 2, Real("0.5"), 1, 1), DomainError);
}

TEST_CASE("order_volume_constants") {
  const auto c = order_volume_constants(3, 1);
  CHECK(close(c.c1, Real(1458)));
  CHECK(close(c.c2, Real(6)));
  // With d <= log v the constants dominate the stated bound 2 (3d)^6.
  const Real logv = 5;
  CHECK(c.c1 * pow(logv, c.c2) >= to_real(stated_order_bounds(3, 5).stated));
}

TEST_CASE("witness_string and JSON") {
  CHECK(witness_string({5, 6}) == "{5,6}");
  const auto j = to_json(max_torsion_order(6, 1));
  CHECK(j["exact_max_order"] == "30");
  CHECK(j["stated_bound"] == "4353564672");
  CHECK(j["stated_holds"] == true);
}
