#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "selberg/bigint.hpp"
#include "selberg/real.hpp"

namespace selberg {

std::uint64_t totient(std::uint64_t m);

// Largest lcm of distinct m_i with sum phi(m_i) <= n*d. This is the
// degree-budget bound: exact for GL_n(Q), an upper bound over any field of
// degree d.
struct TorsionProfile {
  int n = 0;
  int d = 0;
  BigInt exact_max_order;
  std::vector<std::uint64_t> witness_orders;  // ascending
  BigInt stated_bound;                  // 2 (nd)^(2n)
  BigInt proof_bound;                   // 4 (nd)^(2n)
  bool stated_holds = false;
  bool proof_holds = false;
};

inline constexpr int kMaxTorsionBudget = 64;

// Throws DomainError for n, d < 1 and ResourceLimitError for n*d > 64.
TorsionProfile max_torsion_order(int n, int d);

struct PaperOrderBounds {
  BigInt stated;
  BigInt proof;
};
PaperOrderBounds stated_order_bounds(int n, int d);

// phi(l) >= sqrt(l / 2), decided exactly as 2 phi(l)^2 >= l.
bool totient_sqrt_inequality(std::uint64_t l);

// c1 (log v)^c2, for v > e.
Real torsion_order_volume_bound(const Real& v, const Real& c1, const Real& c2);

// jordan_index * (c1 (log v)^c2)^n.
Real finite_subgroup_bound(const Real& v, int n, const Real& jordan_index, const Real& c1, const Real& c2);

// Constants for the volume form of the order bound in GL_n, obtained by
// substituting d <= prasad_c2 log v into 2 (nd)^(2n):
// c1 = 2 (n prasad_c2)^(2n), c2 = 2n.
struct OrderVolumeConstants {
  Real c1;
  Real c2;
};
OrderVolumeConstants order_volume_constants(int n, const Real& prasad_c2);

nlohmann::json to_json(const TorsionProfile& t);

// "{5,6}"
std::string witness_string(const std::vector<std::uint64_t>& w);

}  // namespace selberg
