#include "selberg/construction.hpp"

#include <algorithm>

#include "selberg/errors.hpp"
#include "selberg/newton_polygon.hpp"
#include "selberg/primes.hpp"
#include "selberg/special_polys.hpp"
#include "selberg/torsion.hpp"

namespace selberg {

FieldMatrix::FieldMatrix(const NumberField& k, int rows, int cols)
    : field_(k), rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows * cols), k.from_rational(0)) {}

FieldMatrix FieldMatrix::identity(const NumberField& k, int n) {
  FieldMatrix m(k, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = k.from_rational(1);
  return m;
}

FieldMatrix FieldMatrix::transpose() const {
  FieldMatrix t(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  }
  return t;
}

FieldElement FieldMatrix::determinant() const {
  if (rows_ != cols_) throw DomainError("determinant of a non-square matrix");
  if (rows_ == 1) return at(0, 0);
  FieldElement total = field_.from_rational(0);
  for (int j = 0; j < cols_; ++j) {
    FieldMatrix minor(field_, rows_ - 1, cols_ - 1);
    for (int r = 1; r < rows_; ++r) {
      for (int c = 0, cc = 0; c < cols_; ++c) {
        if (c != j) minor.at(r - 1, cc++) = at(r, c);
      }
    }
    const FieldElement term = at(0, j) * minor.determinant();
    total = j % 2 == 0 ? total + term : total - term;
  }
  return total;
}

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix shapes do not match");
  FieldMatrix c(a.field_, a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int j = 0; j < b.cols_; ++j) {
      FieldElement s = a.field_.from_rational(0);
      for (int k = 0; k < a.cols_; ++k) s = s + a.at(i, k) * b.at(k, j);
      c.at(i, j) = s;
    }
  }
  return c;
}

bool operator==(const FieldMatrix& a, const FieldMatrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

FieldMatrix pow(const FieldMatrix& g, std::uint64_t exponent) {
  FieldMatrix r = FieldMatrix::identity(g.field(), g.rows());
  FieldMatrix b = g;
  while (exponent != 0) {
    if (exponent & 1U) r = r * b;
    exponent >>= 1U;
    if (exponent != 0) b = b * b;
  }
  return r;
}

NumberField cosine_field(std::uint64_t p) { return NumberField::make(minpoly_two_cos(p), Provenance::cosine_minpoly); }

namespace {

void require_construction_prime(std::uint64_t p) {
  if (p < 5 || !is_prime(p)) throw DomainError("construction needs a prime p >= 5, got " + std::to_string(p));
}

// Sign of (root - x) for the irrational root isolated by iv.
int compare_root(const IntPolynomial& f, RationalInterval iv, const BigRat& x) {
  for (int i = 0; i < 4096; ++i) {
    if (iv.is_point()) return sign(iv.lo - x);
    if (x <= iv.lo) return 1;
    if (x >= iv.hi) return -1;
    iv = refine_root(f, iv, iv.width() / 2);
  }
  throw DomainError("could not separate a root from " + to_string(x));
}

}  // namespace

bool t_in_interval(const NumberField& k, const BigRat& T) {
  const auto& roots = k.real_embeddings();
  const std::size_t m = roots.size();
  if (m < 2) throw DomainError("interval test needs a field of degree >= 2");
  // cos(2 pi / p) = r[m-1] / 2 and cos(3 pi / p) = -r[1] / 2, r ascending.
  const IntPolynomial& f = k.defining_poly();
  return compare_root(f, roots[m - 1], -2 * T) > 0 && compare_root(f, roots[1], 2 * T) > 0;
}

FieldElement shifted_omega(const NumberField& k, const BigRat& T) {
  return k.from_rational(T) + BigRat(1, 2) * k.generator();
}

bool two_adic_condition(const FieldElement& c) {
  if (c.is_zero()) throw DomainError("two_adic_condition requires c != 0");
  const RatPolynomial chi = element_charpoly(c);
  const int d = chi.degree();
  const BigInt two = 2;
  // Roots of chi_s(x) = 2^(s d) chi(x / 2^s) are 2^s times those of chi.
  long s = 0;
  for (int i = 0; i < d; ++i) {
    if (chi.coeff(i) == 0) continue;
    const long v = valuation(chi.coeff(i), two);
    const long need = v >= 0 ? 0 : (-v + (d - i) - 1) / (d - i);
    s = std::max(s, need);
  }
  BigInt odd_den = 1;
  for (int i = 0; i <= d; ++i) {
    BigInt den = chi.coeff(i).get_den();
    while (den % 2 == 0) den /= 2;
    mpz_lcm(odd_den.get_mpz_t(), odd_den.get_mpz_t(), den.get_mpz_t());
  }
  std::vector<BigInt> coeffs(static_cast<std::size_t>(d + 1));
  for (int i = 0; i <= d; ++i) {
    BigRat a = chi.coeff(i) * BigRat(odd_den) * BigRat(ipow(two, static_cast<unsigned long>(s * (d - i))));
    a.canonicalize();
    coeffs[static_cast<std::size_t>(i)] = a.get_num();
  }
  const NewtonPolygon poly = newton_polygon(IntPolynomial(std::move(coeffs)), two);
  if (poly.slopes.size() != 1) return false;
  const BigRat v = poly.slopes[0].valuation - BigRat(s);
  if (v.get_den() != 1) return false;
  return v.get_num() % 2 != 0;
}

BigRat choose_T(std::uint64_t p, const BigInt& denominator_cap) {
  require_construction_prime(p);
  if (denominator_cap < 1 || !is_power_of_two(denominator_cap)) {
    throw DomainError("denominator cap must be a power of two");
  }
  const NumberField k = cosine_field(p);
  for (BigInt den = 1; den <= denominator_cap; den *= 2) {
    for (BigInt a = 1; a < den || (den == 1 && a == 1); a += 2) {
      for (const BigInt& signed_a : {BigInt(a), BigInt(-a)}) {
        const BigRat T = make_rat(signed_a, den);
        if (t_in_interval(k, T) && two_adic_condition(shifted_omega(k, T))) return T;
      }
    }
  }
  throw DomainError("no admissible T with denominator <= " + to_string(denominator_cap));
}

ArchimedeanSigns archimedean_check(const FieldElement& c) {
  const std::vector<int> signs = sign_at_embeddings(c);
  if (signs.size() != static_cast<std::size_t>(c.field().degree())) {
    throw DomainError("field is not totally real; the identity embedding is ambiguous");
  }
  ArchimedeanSigns r;
  r.identity_sign = signs.back();
  r.other_signs.assign(signs.begin(), signs.end() - 1);
  r.passes = r.identity_sign > 0 && std::all_of(r.other_signs.begin(), r.other_signs.end(), [](int s) { return s < 0; });
  return r;
}

FieldMatrix order_p_element(const NumberField& k) {
  FieldMatrix g(k, 3, 3);
  g.at(0, 1) = k.from_rational(-1);
  g.at(1, 0) = k.from_rational(1);
  g.at(1, 1) = k.generator();
  g.at(2, 2) = k.from_rational(1);
  return g;
}

FieldMatrix construction_gram(const FieldElement& c) {
  const NumberField& k = c.field();
  const FieldElement omega = BigRat(1, 2) * k.generator();
  FieldMatrix g(k, 3, 3);
  g.at(0, 0) = k.from_rational(1);
  g.at(1, 1) = k.from_rational(1);
  g.at(0, 1) = omega;
  g.at(1, 0) = omega;
  g.at(2, 2) = -c;
  return g;
}

bool verify_order(const FieldMatrix& g, std::uint64_t p) {
  const FieldMatrix id = FieldMatrix::identity(g.field(), g.rows());
  return !(g == id) && pow(g, p) == id;
}

bool form_preservation_check(const FieldMatrix& g, const FieldMatrix& gram) {
  if (g.rows() != g.cols() || gram.rows() != g.rows() || gram.cols() != g.cols()) {
    throw DomainError("matrix shapes do not match");
  }
  return g.transpose() * gram * g == gram && g.determinant() == g.field().from_rational(1);
}

VolumeEstimate volume_estimate(std::uint64_t p, const Real& a_const, const Real& b_const, const Real& c_const) {
  if (!(a_const > 0) || !(b_const > 0) || !(c_const > 0)) throw DomainError("constants must be positive");
  const NumberField k = cosine_field(p);
  if (!k.field_disc()) throw DomainError("field discriminant not certified for p = " + std::to_string(p));
  VolumeEstimate v;
  v.disc_computed = abs(*k.field_disc());
  const Real pr = Real(static_cast<unsigned long>(p));
  v.disc_stated_formula = pow(pr, (pr - 2) / 2);
  const Real log_disc = log(to_real(v.disc_computed));
  v.log_v_hat = log(a_const) + b_const * log_disc;
  v.log_disc_within = log_disc <= c_const * pr * log(pr);
  return v;
}

Real lower_bound_ratio(std::uint64_t p, const Real& log_v_hat) {
  if (!(log_v_hat > 1)) throw DomainError("lower_bound_ratio requires log v > 1");
  return Real(static_cast<unsigned long>(p)) * log(log_v_hat) / log_v_hat;
}

std::vector<SweepRow> construction_sweep(std::uint64_t pmax, const Real& a_const, const Real& b_const,
                                         unsigned threads) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p : primes_up_to(pmax)) {
    if (p >= 5) primes.push_back(p);
  }
  std::vector<SweepRow> rows(primes.size());
  parallel_slices(primes.size(), threads, [&](std::size_t b, std::size_t e, unsigned) {
    for (std::size_t i = b; i < e; ++i) {
      const VolumeEstimate v = volume_estimate(primes[i], a_const, b_const);
      rows[i] = {primes[i], v.disc_computed, v.log_v_hat, lower_bound_ratio(primes[i], v.log_v_hat)};
    }
  });
  return rows;
}

namespace {

// Elements of Z[theta] / 2^k as coefficient vectors; index encoding is base
// 2^k, lowest coefficient first.
class Mod2kRing {
 public:
  Mod2kRing(const IntPolynomial& f, int k) : d_(f.degree()), k_(k), mask_((1ULL << k) - 1) {
    for (int i = 0; i < d_; ++i) f_.push_back(static_cast<std::uint64_t>(reduce(f.coeff(i))));
  }

  std::uint64_t reduce(const BigInt& a) const {
    BigInt r;
    mpz_fdiv_r_2exp(r.get_mpz_t(), a.get_mpz_t(), static_cast<mp_bitcnt_t>(k_));
    return r.get_ui();
  }

  std::size_t size() const { return std::size_t{1} << (d_ * k_); }

  std::vector<std::uint64_t> decode(std::size_t idx) const {
    std::vector<std::uint64_t> v(static_cast<std::size_t>(d_));
    for (auto& c : v) {
      c = idx & mask_;
      idx >>= k_;
    }
    return v;
  }

  std::size_t encode(const std::vector<std::uint64_t>& v) const {
    std::size_t idx = 0;
    for (std::size_t i = v.size(); i-- > 0;) idx = (idx << k_) | (v[i] & mask_);
    return idx;
  }

  std::vector<std::uint64_t> mul(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) const {
    std::vector<std::uint64_t> prod(static_cast<std::size_t>(2 * d_ - 1), 0);
    for (int i = 0; i < d_; ++i) {
      for (int j = 0; j < d_; ++j) prod[static_cast<std::size_t>(i + j)] += a[i] * b[j];
    }
    // theta^d = -(f_0 + ... + f_(d-1) theta^(d-1)); unsigned wraparound is
    // arithmetic mod 2^64, and 2^k divides 2^64.
    for (int i = 2 * d_ - 2; i >= d_; --i) {
      const std::uint64_t t = prod[static_cast<std::size_t>(i)] & mask_;
      for (int j = 0; j < d_; ++j) prod[static_cast<std::size_t>(i - d_ + j)] -= t * f_[j];
    }
    prod.resize(static_cast<std::size_t>(d_));
    for (auto& c : prod) c &= mask_;
    return prod;
  }

  std::vector<std::uint64_t> sub(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) const {
    std::vector<std::uint64_t> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = (a[i] - b[i]) & mask_;
    return r;
  }

  static bool even(const std::vector<std::uint64_t>& a) {
    return std::all_of(a.begin(), a.end(), [](std::uint64_t c) { return (c & 1U) == 0; });
  }

 private:
  int d_;
  int k_;
  std::uint64_t mask_;
  std::vector<std::uint64_t> f_;
};

}  // namespace

ProbeResult mod2k_isotropy_probe(const FieldElement& c, int k, std::size_t max_solutions) {
  if (c.is_zero()) throw DomainError("probe requires c != 0");
  if (k < 1) throw DomainError("probe requires k >= 1");
  if (k > kMaxProbeK) throw ResourceLimitError("probe is capped at k <= " + std::to_string(kMaxProbeK));
  const NumberField& field = c.field();
  const int d = field.degree();
  if (3L * d * k > kMaxProbeLogCandidates) {
    throw ResourceLimitError("probe search space 2^" + std::to_string(3L * d * k) + " exceeds 2^" +
                             std::to_string(kMaxProbeLogCandidates) + " candidates");
  }

  // Scale c by 4^t into Z[theta]; x^2 + y^2 = c z^2 and x^2 + y^2 = 4^t c z'^2
  // have the same solutions up to z = 2^t z'.
  long two_power = 0;
  for (int i = 0; i < d; ++i) {
    const BigRat& a = c.rep().coeff(i);
    if (!is_power_of_two(BigInt(a.get_den()))) throw DomainError("probe requires c in Z[theta, 1/2]");
    two_power = std::max(two_power, static_cast<long>(mpz_sizeinbase(a.get_den_mpz_t(), 2)) - 1);
  }
  const int t = static_cast<int>((two_power + 1) / 2);
  const BigRat scale(ipow(BigInt(4), static_cast<unsigned long>(t)));

  // For Q the representation is a constant and the generator is rational,
  // so the basis is just {1}.
  const IntPolynomial modulus = d == 1 ? IntPolynomial{0, 1} : field.defining_poly();
  const Mod2kRing ring(modulus, k);

  ProbeResult r;
  r.k = k;
  r.scale_exponent = t;
  for (int i = 0; i < d; ++i) {
    const BigRat a = c.rep().coeff(i) * scale;
    r.scaled_c.push_back(ring.reduce(a.get_num() / a.get_den()));
  }

  const std::size_t n = ring.size();
  std::vector<std::vector<std::uint64_t>> elems(n);
  std::vector<std::size_t> square(n);
  std::vector<std::vector<std::size_t>> roots_of(n);
  for (std::size_t u = 0; u < n; ++u) {
    elems[u] = ring.decode(u);
    square[u] = ring.encode(ring.mul(elems[u], elems[u]));
    roots_of[square[u]].push_back(u);
  }

  for (std::size_t z = 0; z < n; ++z) {
    const auto cz2 = ring.mul(r.scaled_c, elems[square[z]]);
    const bool z_even = Mod2kRing::even(elems[z]);
    for (std::size_t x = 0; x < n; ++x) {
      const bool xz_even = z_even && Mod2kRing::even(elems[x]);
      for (std::size_t y : roots_of[ring.encode(ring.sub(cz2, elems[square[x]]))]) {
        if (xz_even && Mod2kRing::even(elems[y])) continue;
        ++r.solution_count;
        if (r.first_solutions.size() < max_solutions) r.first_solutions.push_back({elems[x], elems[y], elems[z]});
      }
    }
  }
  return r;
}

LatticeConstruction build_construction(std::uint64_t p, const ConstructionOptions& options) {
  require_construction_prime(p);
  const NumberField k = cosine_field(p);
  const BigRat T = choose_T(p, options.denominator_cap);
  const FieldElement c = shifted_omega(k, T);
  const FieldMatrix g = order_p_element(k);
  const FieldMatrix gram = construction_gram(c);
  const ArchimedeanSigns signs = archimedean_check(c);

  ConstructionChecks checks;
  checks.interval_ok = t_in_interval(k, T);
  checks.archimedean_ok = signs.passes;
  checks.two_adic_ok = two_adic_condition(c);
  checks.form_preserved = form_preservation_check(g, gram);
  checks.order_verified = verify_order(g, p);

  const VolumeEstimate volume =
      volume_estimate(p, options.belolipetsky_a, options.belolipetsky_b, options.volume_log_c);
  const Real ratio = lower_bound_ratio(p, volume.log_v_hat);
  const OrderVolumeConstants consts = order_volume_constants(3, options.prasad_c2);
  const Real bound =
      finite_subgroup_bound(boost::multiprecision::exp(volume.log_v_hat), 3, options.jordan_index, consts.c1, consts.c2);

  std::optional<ProbeResult> probe;
  if (options.probe_k) probe = mod2k_isotropy_probe(c, *options.probe_k);

  return LatticeConstruction{
      p, k, T, c, gram, g, checks, signs, volume, ratio, bound, Real(static_cast<unsigned long>(p)) <= bound, probe,
  };
}

nlohmann::json to_json(const FieldMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(to_json(m.at(i, j).rep()));
    rows.push_back(row);
  }
  return rows;
}

FieldMatrix field_matrix_from_json(const NumberField& k, const nlohmann::json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) throw DomainError("matrix must be an array of rows");
  const int rows = static_cast<int>(j.size());
  const int cols = static_cast<int>(j[0].size());
  FieldMatrix m(k, rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (j[i].size() != static_cast<std::size_t>(cols)) throw DomainError("ragged matrix");
    for (int c = 0; c < cols; ++c) m.at(i, c) = k.element(rat_polynomial_from_json(j[i][c]));
  }
  return m;
}

nlohmann::json to_json(const ProbeResult& r) {
  nlohmann::json sols = nlohmann::json::array();
  for (const auto& s : r.first_solutions) sols.push_back({{"x", s.x}, {"y", s.y}, {"z", s.z}});
  return {
      {"k", r.k},
      {"scale_exponent", r.scale_exponent},
      {"scaled_c", r.scaled_c},
      {"solution_count", r.solution_count},
      {"first_solutions", sols},
  };
}

nlohmann::json to_json(const LatticeConstruction& c) {
  const auto& ch = c.checks;
  const bool disc_mismatch = to_real(c.volume.disc_computed) != c.volume.disc_stated_formula;
  nlohmann::json discrepancies = nlohmann::json::array();
  if (disc_mismatch) {
    discrepancies.push_back("field discriminant computed as p^((p-3)/2) = " + to_string(c.volume.disc_computed) +
                            "; the formula p^((p-2)/2) gives " + format_real(c.volume.disc_stated_formula));
  }
  discrepancies.push_back(
      "T + sigma(omega) is negative, not positive, at every non-identity embedding; this makes the form definite "
      "there");
  discrepancies.push_back(
      "2-adic anisotropy from an odd valuation of c is not proven here (v(x^2 + y^2) can be odd over 2-adic "
      "fields); the probe gives evidence only");
  discrepancies.push_back("the volume is reported both as log v = p log p (the O(p^p) headline, no constant) and "
                          "through the discriminant bound a D^b");
  const Real pr = Real(static_cast<unsigned long>(c.p));
  return {
      {"p", c.p},
      {"field", to_json(c.field)},
      {"generator_meaning", "theta = 2 cos(2 pi / p), omega = theta / 2"},
      {"T", to_string(c.T)},
      {"c", to_json(c.c.rep())},
      {"gram", to_json(c.gram)},
      {"generator", to_json(c.generator)},
      {"checks",
       {{"interval_ok", ch.interval_ok},
        {"archimedean_ok", ch.archimedean_ok},
        {"two_adic_ok", ch.two_adic_ok},
        {"form_preserved", ch.form_preserved},
        {"order_verified", ch.order_verified}}},
      {"signs", {{"identity", c.signs.identity_sign}, {"others", c.signs.other_signs}}},
      {"disc_used", to_string(c.volume.disc_computed)},
      {"disc_stated_formula", format_real(c.volume.disc_stated_formula)},
      {"disc_formula_mismatch", disc_mismatch},
      {"log_volume_estimate", format_real(c.volume.log_v_hat)},
      {"log_disc_within_p_log_p", c.volume.log_disc_within},
      {"headline_log_volume", format_real(pr * log(pr))},
      {"lower_bound_ratio", format_real(c.ratio)},
      {"cross_check", {{"finite_subgroup_bound", format_real(c.finite_subgroup_bound)}, {"holds", c.cross_check_holds}}},
      {"probe", c.probe ? to_json(*c.probe) : nlohmann::json(nullptr)},
      {"discrepancies", discrepancies},
  };
}

ConstructionChecks recheck(const nlohmann::json& j) {
  try {
    const std::uint64_t p = j.at("p").get<std::uint64_t>();
    require_construction_prime(p);
    const IntPolynomial f = int_polynomial_from_json(j.at("field").at("poly"));
    if (!(f == minpoly_two_cos(p))) throw DomainError("field polynomial does not match p");
    const NumberField k = NumberField::make(f, Provenance::cosine_minpoly);
    const BigRat T = parse_bigrat(j.at("T").get<std::string>());
    const FieldElement c = k.element(rat_polynomial_from_json(j.at("c")));
    const FieldMatrix gram = field_matrix_from_json(k, j.at("gram"));
    const FieldMatrix g = field_matrix_from_json(k, j.at("generator"));

    ConstructionChecks checks;
    checks.interval_ok = c == shifted_omega(k, T) && t_in_interval(k, T);
    checks.archimedean_ok = archimedean_check(c).passes;
    checks.two_adic_ok = two_adic_condition(c);
    checks.form_preserved = gram == construction_gram(c) && form_preservation_check(g, gram);
    checks.order_verified = verify_order(g, p);
    return checks;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed construction JSON: ") + e.what());
  }
}

}  // namespace selberg
