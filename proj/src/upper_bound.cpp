#include "selberg/upper_bound.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "selberg/errors.hpp"
#include "selberg/primes.hpp"

namespace selberg {

bool kionke_criterion(const BigInt& q, int e) {
  if (e < 1) throw DomainError("ramification index must be >= 1");
  if (!is_prime(q)) throw DomainError("level must lie over a prime, got " + to_string(q));
  return BigInt(e) <= q - 2;
}

CongruenceLevel find_congruence_level(const NumberField& k, int dim_G, std::uint64_t scan_cap, unsigned threads) {
  if (dim_G < 1) throw DomainError("dim_G must be >= 1");
  if (threads == 0) threads = 1;
  const std::vector<std::uint64_t> primes = primes_up_to(scan_cap);

  CongruenceLevel best;
  bool found = false;
  std::vector<std::uint64_t> skipped;
  const std::size_t batch = 32 * static_cast<std::size_t>(threads);
  for (std::size_t start = 0; start < primes.size(); start += batch) {
    const std::size_t end = std::min(primes.size(), start + batch);
    std::vector<PrimeSplit> splits(end - start);
    parallel_slices(end - start, threads, [&](std::size_t b, std::size_t e, unsigned) {
      for (std::size_t i = b; i < e; ++i) splits[i] = dedekind_split(k, primes[start + i]);
    });
    for (std::size_t i = 0; i < splits.size(); ++i) {
      const std::uint64_t q = primes[start + i];
      const BigInt qz(static_cast<unsigned long>(q));
      if (found && qz >= best.norm) {
        best.index_bound = ipow(best.norm, static_cast<unsigned long>(dim_G));
        best.dim_G = dim_G;
        best.skipped_primes = skipped;
        return best;
      }
      if (splits[i].index_divisible) {
        skipped.push_back(q);
        continue;
      }
      for (const auto& factor : splits[i].factors) {
        if (!kionke_criterion(qz, factor.e)) continue;
        const BigInt norm = ipow(qz, static_cast<unsigned long>(factor.f));
        // Same q with smaller f always has smaller norm, so ties only arise
        // across different q and the earlier q is kept.
        if (!found || norm < best.norm) {
          found = true;
          best.q = qz;
          best.f = factor.f;
          best.e = factor.e;
          best.norm = norm;
          best.torsion_free_certificate = true;
        }
      }
    }
  }
  throw ResourceLimitError("prime scan cap " + std::to_string(scan_cap) + " reached before a level was certified");
}

Real grh_error(const Real& x, int d, const Real& log_D) {
  if (!(x >= 2)) throw DomainError("Err(x) requires x >= 2");
  if (d < 1) throw DomainError("d must be >= 1");
  return 13 * sqrt(x) * (log_D + d * log(x));
}

Real logarithmic_integral(const Real& x) {
  if (!(x >= 2)) throw DomainError("Li(x) requires x >= 2");
  using boost::math::quadrature::gauss_kronrod;
  auto integrand = [](const Real& t) { return Real(1) / log(t); };
  // Dyadic pieces keep each panel's integrand within a factor of about 2.
  Real total = 0;
  Real a = 2;
  while (a < x) {
    const Real b = a * 2 < x ? Real(a * 2) : x;
    Real err = 0;
    total += gauss_kronrod<Real, 61>::integrate(integrand, a, b, 10, Real("1e-40"), &err);
    a = b;
  }
  return total;
}

Real li_lower_surrogate(const Real& x) {
  if (!(x > 1)) throw DomainError("x / log x requires x > 1");
  return x / log(x);
}

namespace {

bool grh_passes(const BigInt& x, int d, const Real& log_D, Real* li = nullptr, Real* err = nullptr) {
  const Real xr = to_real(x);
  const Real l = logarithmic_integral(xr);
  const Real r = grh_error(xr, d, log_D);
  if (li != nullptr) *li = l;
  if (err != nullptr) *err = r;
  return l > r + d * d;
}

}  // namespace

GrhReport grh_threshold(int d, const Real& log_D) {
  if (d < 1) throw DomainError("d must be >= 1");
  if (!(log_D >= 0)) throw DomainError("log_D must be >= 0");
  const BigInt cap = ipow(BigInt(2), 64);
  BigInt lo = 1;
  BigInt hi = 2;
  while (!grh_passes(hi, d, log_D)) {
    if (hi >= cap) throw ResourceLimitError("GRH threshold exceeds 2^64");
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > 1) {
    const BigInt mid = (lo + hi) / 2;
    if (grh_passes(mid, d, log_D)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  GrhReport r;
  r.d = d;
  r.log_D = log_D;
  r.threshold_x = hi;
  grh_passes(hi, d, log_D, &r.li_at_threshold, &r.err_at_threshold);
  const BigInt half = hi / 2 >= 2 ? BigInt(hi / 2) : BigInt(2);
  grh_passes(half, d, log_D, &r.li_at_half, &r.err_at_half);
  return r;
}

GrhReport grh_report_for_field(const NumberField& k, int dim_G, std::uint64_t scan_cap, unsigned threads) {
  // Without a certified field discriminant, |disc(f)| is an upper bound and
  // only raises the threshold.
  const BigInt disc = abs(k.field_disc().value_or(k.disc_poly()));
  GrhReport r = grh_threshold(k.degree(), log(to_real(disc)));
  r.smallest_actual_prime_norm = find_congruence_level(k, dim_G, scan_cap, threads).norm;
  return r;
}

BigInt unconditional_index_bound(int d, int dim_H) {
  if (d < 1 || dim_H < 1) throw DomainError("d and dim_H must be >= 1");
  return ipow(BigInt(3), static_cast<unsigned long>(d) * static_cast<unsigned long>(dim_H));
}

Real volume_index_bound_grh(const Real& v, int dim_H, const Real& epsilon, const Real& prasad_c1,
                            const Real& prasad_c2, const Real& lemma_C) {
  if (!(v > boost::multiprecision::exp(Real(1)))) throw DomainError("volume must exceed e");
  if (dim_H < 1) throw DomainError("dim_H must be >= 1");
  if (!(epsilon >= 0)) throw DomainError("epsilon must be >= 0");
  if (!(prasad_c1 > 0) || !(prasad_c2 > 0) || !(lemma_C > 0)) throw DomainError("constants must be positive");
  return lemma_C * pow((prasad_c1 + prasad_c2) * log(v), (2 + epsilon) * dim_H);
}

Real generator_bound_pipeline(const Real& v, const Real& alpha, const Real& c, GrowthForm form, const Real& kappa) {
  if (!(v > boost::multiprecision::exp(boost::multiprecision::exp(Real(1))))) {
    throw DomainError("volume must exceed e^e");
  }
  const Real logv = log(v);
  const Real u = v * pow(logv, c);
  Real fu;
  switch (form) {
    case GrowthForm::power:
      fu = pow(u, 1 - alpha);
      break;
    case GrowthForm::polylog:
      fu = pow(log(u), kappa);
      break;
  }
  return (fu + log(logv)) / v;
}

GrowthForm parse_growth_form(const std::string& s) {
  if (s == "power") return GrowthForm::power;
  if (s == "polylog") return GrowthForm::polylog;
  throw DomainError("unsupported growth form '" + s + "' (expected power or polylog)");
}

nlohmann::json to_json(const CongruenceLevel& level) {
  return {
      {"q", to_string(level.q)},
      {"f", level.f},
      {"e", level.e},
      {"norm", to_string(level.norm)},
      {"torsion_free_certificate", level.torsion_free_certificate},
      {"index_bound", to_string(level.index_bound)},
      {"dim_G", level.dim_G},
      {"skipped_primes", level.skipped_primes},
      {"criterion", "e <= q - 2"},
      {"discrepancies",
       nlohmann::json::array({"the sufficient condition 'a lies above a prime q > d' is replaced by the exact "
                              "criterion e <= q - 2; at q = d + 1 with e = d (e.g. level 2 over Q) the "
                              "sufficient condition would accept a level that is not torsion-free"})},
  };
}

nlohmann::json to_json(const GrhReport& r) {
  nlohmann::json smallest = nullptr;
  if (r.smallest_actual_prime_norm) smallest = to_string(*r.smallest_actual_prime_norm);
  return {
      {"d", r.d},
      {"log_D", format_real(r.log_D)},
      {"threshold_x", to_string(r.threshold_x)},
      {"li_at_threshold", format_real(r.li_at_threshold)},
      {"err_at_threshold", format_real(r.err_at_threshold)},
      {"li_at_half", format_real(r.li_at_half)},
      {"err_at_half", format_real(r.err_at_half)},
      {"smallest_actual_prime_norm", smallest},
      {"config", {{"err_constant", 13}, {"x_cap", "18446744073709551616"}}},
      {"discrepancies",
       nlohmann::json::array({"the closed form C (log D + d)^(2+eps) is not used because C is unspecified; "
                              "Li(x) > Err(x) + d^2 is solved numerically",
                              "prime ideals of norm <= x are counted exactly rather than bounded by d^2 "
                              "ideals over each small prime"})},
  };
}

}  // namespace selberg
