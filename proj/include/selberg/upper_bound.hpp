#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "selberg/number_field.hpp"
#include "selberg/real.hpp"

namespace selberg {

// Level a = prime ideal over q with ramification e gives a torsion-free
// principal congruence subgroup iff a^(r-1) does not divide rO for every
// rational prime r. Only r = q matters, where this reads e <= q - 2.
bool kionke_criterion(const BigInt& q, int e);

struct CongruenceLevel {
  BigInt q;
  int f = 0;
  int e = 0;
  BigInt norm;  // q^f
  bool torsion_free_certificate = false;
  BigInt index_bound;  // norm^dim_G
  int dim_G = 0;
  // Scanned primes whose splitting was skipped by the Dedekind index test.
  std::vector<std::uint64_t> skipped_primes;
};

inline constexpr std::uint64_t kDefaultPrimeScanCap = 1000000;

// Minimal-norm prime ideal passing the Kionke criterion, scanning rational
// primes upward until q reaches the best norm found. Ties go to smaller q,
// then smaller f. Throws ResourceLimitError when q would exceed scan_cap.
CongruenceLevel find_congruence_level(const NumberField& k, int dim_G, std::uint64_t scan_cap = kDefaultPrimeScanCap,
                                      unsigned threads = 1);

// 13 sqrt(x) (log_D + d log x), x >= 2.
Real grh_error(const Real& x, int d, const Real& log_D);

// Li(x) = integral from 2 to x of dt / log t, x >= 2.
Real logarithmic_integral(const Real& x);
// The lower surrogate x / log x.
Real li_lower_surrogate(const Real& x);

struct GrhReport {
  int d = 0;
  Real log_D;
  BigInt threshold_x;
  Real li_at_threshold;
  Real err_at_threshold;
  Real li_at_half;  // at floor(threshold_x / 2)
  Real err_at_half;
  std::optional<BigInt> smallest_actual_prime_norm;
};

// Smallest integer x with Li(x) > Err(x) + d^2, found by doubling from 2
// and integer bisection inside the first passing doubling step. Throws
// ResourceLimitError past 2^64.
GrhReport grh_threshold(int d, const Real& log_D);

// grh_threshold for the field's degree and log|disc|, with the norm found
// by find_congruence_level filled in.
GrhReport grh_report_for_field(const NumberField& k, int dim_G, std::uint64_t scan_cap = kDefaultPrimeScanCap,
                               unsigned threads = 1);

// 3^(d dim_H).
BigInt unconditional_index_bound(int d, int dim_H);

// lemma_C ((prasad_c1 + prasad_c2) log v)^((2 + epsilon) dim_H), v > e.
Real volume_index_bound_grh(const Real& v, int dim_H, const Real& epsilon, const Real& prasad_c1,
                            const Real& prasad_c2, const Real& lemma_C);

enum class GrowthForm { power, polylog };

// (f(v (log v)^c) + log log v) / v for v > e^e, with f(u) = u^(1 - alpha)
// or f(u) = (log u)^kappa.
Real generator_bound_pipeline(const Real& v, const Real& alpha, const Real& c, GrowthForm form,
                              const Real& kappa = 1);
GrowthForm parse_growth_form(const std::string& s);

nlohmann::json to_json(const CongruenceLevel& level);
nlohmann::json to_json(const GrhReport& report);

}  // namespace selberg
