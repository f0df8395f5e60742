#include "selberg/torsion.hpp"

#include <algorithm>

#include "selberg/errors.hpp"
#include "selberg/primes.hpp"

namespace selberg {

std::uint64_t totient(std::uint64_t m) {
  if (m == 0) throw DomainError("totient requires m >= 1");
  std::uint64_t result = m;
  for (std::uint64_t q = 2; q * q <= m; q += (q == 2 ? 1 : 2)) {
    if (m % q != 0) continue;
    while (m % q == 0) m /= q;
    result -= result / q;
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

void require_positive(int n, int d) {
  if (n < 1 || d < 1) throw DomainError("n and d must be >= 1");
}

struct Choice {
  BigInt product = 1;
  std::vector<std::uint64_t> powers;
};

}  // namespace

PaperOrderBounds stated_order_bounds(int n, int d) {
  require_positive(n, d);
  const BigInt base = ipow(BigInt(static_cast<long>(n) * d), static_cast<unsigned long>(2 * n));
  return {2 * base, 4 * base};
}

TorsionProfile max_torsion_order(int n, int d) {
  require_positive(n, d);
  if (static_cast<long>(n) * d > kMaxTorsionBudget) {
    throw ResourceLimitError("torsion search is capped at n*d <= " + std::to_string(kMaxTorsionBudget));
  }
  const int budget = n * d;

  // Knapsack over odd primes: each contributes one prime power q^a at cost
  // phi(q^a). best[b] is the largest product of cost at most b.
  std::vector<Choice> best(budget + 1);
  for (std::uint64_t q : primes_up_to(static_cast<std::uint64_t>(budget) + 1)) {
    if (q == 2) continue;
    const std::vector<Choice> prev = best;
    for (int b = 0; b <= budget; ++b) {
      std::uint64_t power = q;
      std::uint64_t cost = q - 1;
      while (cost <= static_cast<std::uint64_t>(b)) {
        const Choice& base = prev[b - static_cast<int>(cost)];
        const BigInt candidate = base.product * BigInt(static_cast<unsigned long>(power));
        if (candidate > best[b].product) {
          best[b].product = candidate;
          best[b].powers = base.powers;
          best[b].powers.push_back(power);
        }
        power *= q;
        cost *= q;
      }
    }
  }

  // The prime 2: a lone factor 2 rides along with any odd prime power for
  // free, since phi(2m) = phi(m) for odd m; 2^a with a >= 2 costs 2^(a-1).
  BigInt top = 1;
  std::vector<std::uint64_t> witness;
  for (int b = 0; b <= budget; ++b) {
    const Choice& odd = best[b];
    for (int a = 0;; ++a) {
      const std::uint64_t cost = a == 0 ? 0 : (a == 1 ? (odd.product > 1 ? 0 : 1) : (1ULL << (a - 1)));
      if (static_cast<std::uint64_t>(b) + cost > static_cast<std::uint64_t>(budget)) break;
      const BigInt candidate = odd.product * ipow(BigInt(2), static_cast<unsigned long>(a));
      if (candidate > top) {
        top = candidate;
        witness = odd.powers;
        std::sort(witness.begin(), witness.end());
        if (a == 1 && !witness.empty()) {
          witness.front() *= 2;
        } else if (a >= 1) {
          witness.push_back(1ULL << a);
        }
        std::sort(witness.begin(), witness.end());
      }
    }
  }

  TorsionProfile t;
  t.n = n;
  t.d = d;
  t.exact_max_order = top;
  t.witness_orders = witness;
  const PaperOrderBounds bounds = stated_order_bounds(n, d);
  t.stated_bound = bounds.stated;
  t.proof_bound = bounds.proof;
  t.stated_holds = top <= bounds.stated;
  t.proof_holds = top <= bounds.proof;
  return t;
}

bool totient_sqrt_inequality(std::uint64_t l) {
  if (l == 0) throw DomainError("totient_sqrt_inequality requires l >= 1");
  const BigInt phi(static_cast<unsigned long>(totient(l)));
  return 2 * phi * phi >= BigInt(static_cast<unsigned long>(l));
}

namespace {

Real log_volume(const Real& v) {
  if (!(v > boost::multiprecision::exp(Real(1)))) throw DomainError("volume must exceed e");
  return log(v);
}

}  // namespace

Real torsion_order_volume_bound(const Real& v, const Real& c1, const Real& c2) {
  if (!(c1 > 0) || !(c2 > 0)) throw DomainError("constants must be positive");
  return c1 * pow(log_volume(v), c2);
}

Real finite_subgroup_bound(const Real& v, int n, const Real& jordan_index, const Real& c1, const Real& c2) {
  if (n < 1) throw DomainError("n must be >= 1");
  if (!(jordan_index >= 1)) throw DomainError("jordan_index must be >= 1");
  return jordan_index * pow(torsion_order_volume_bound(v, c1, c2), n);
}

OrderVolumeConstants order_volume_constants(int n, const Real& prasad_c2) {
  if (n < 1) throw DomainError("n must be >= 1");
  if (!(prasad_c2 > 0)) throw DomainError("constants must be positive");
  return {2 * pow(Real(n) * prasad_c2, 2 * n), Real(2 * n)};
}

std::string witness_string(const std::vector<std::uint64_t>& w) {
  std::string s = "{";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i != 0) s += ",";
    s += std::to_string(w[i]);
  }
  return s + "}";
}

nlohmann::json to_json(const TorsionProfile& t) {
  return {
      {"n", t.n},
      {"d", t.d},
      {"exact_max_order", to_string(t.exact_max_order)},
      {"witness_orders", t.witness_orders},
      {"stated_bound", to_string(t.stated_bound)},
      {"proof_bound", to_string(t.proof_bound)},
      {"stated_holds", t.stated_holds},
      {"proof_holds", t.proof_holds},
  };
}

}  // namespace selberg
