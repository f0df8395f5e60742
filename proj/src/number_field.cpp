#include "selberg/number_field.hpp"

#include <algorithm>
#include <string>

#include "selberg/modp.hpp"
#include "selberg/primes.hpp"

namespace selberg {

namespace {

constexpr std::uint64_t kDiscTrialBound = 1000000;

// Square prime divisors of |n| up to the trial bound; `partial` is set when a
// cofactor remains whose square divisors could not be determined.
std::vector<BigInt> square_prime_divisors(BigInt n, bool& partial) {
  partial = false;
  n = abs(n);
  std::vector<BigInt> out;
  for (std::uint64_t q = 2; q <= kDiscTrialBound; ++q) {
    if (BigInt(static_cast<unsigned long>(q)) * q > n) break;
    if (mpz_divisible_ui_p(n.get_mpz_t(), q) == 0) continue;
    int e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), q) != 0) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), q);
      ++e;
    }
    if (e >= 2) out.emplace_back(static_cast<unsigned long>(q));
  }
  const BigInt bound = BigInt(static_cast<unsigned long>(kDiscTrialBound)) * kDiscTrialBound;
  if (n > 1 && n > bound && !is_prime(n)) {
    if (mpz_perfect_square_p(n.get_mpz_t()) != 0) {
      BigInt r;
      mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
      if (is_prime(r)) {
        out.push_back(r);
      } else {
        partial = true;
      }
    } else {
      partial = true;
    }
  }
  return out;
}

bool has_integer_root(const IntPolynomial& f, const RationalInterval& iv) {
  if (iv.is_point()) return iv.lo.get_den() == 1;
  const RationalInterval narrow = refine_root(f, iv, make_rat(1, 2));
  if (narrow.is_point()) return narrow.lo.get_den() == 1;
  BigInt n;
  mpz_fdiv_q(n.get_mpz_t(), narrow.hi.get_num_mpz_t(), narrow.hi.get_den_mpz_t());
  return BigRat(n) > narrow.lo && f.eval(n) == 0;
}

RatPolynomial reduce_mod(const RatPolynomial& r, const RatPolynomial& modulus) {
  if (r.degree() < modulus.degree()) return r;
  return divmod(r, modulus).second;
}

}  // namespace

NumberField NumberField::make(const IntPolynomial& f, Provenance provenance) {
  if (f.degree() < 1) throw DomainError("defining polynomial must have degree >= 1");
  if (!f.is_monic()) throw DomainError("defining polynomial must be monic");

  auto d = std::make_shared<Data>();
  d->poly = f;
  d->rat_poly = to_rational(f);
  d->provenance = provenance;

  if (f.degree() == 1) {
    d->embeddings.push_back({BigRat(-f.coeffs()[0]), BigRat(-f.coeffs()[0])});
  } else {
    if (!is_squarefree(f)) throw DomainError("defining polynomial is reducible (repeated factor)");
    d->embeddings = isolate_real_roots(f, make_rat(1, 1024));
    for (const auto& iv : d->embeddings) {
      if (has_integer_root(f, iv)) throw DomainError("defining polynomial is reducible (rational root)");
    }
  }

  d->disc_poly = discriminant(f);
  bool partial = false;
  for (const auto& q : square_prime_divisors(d->disc_poly, partial)) {
    if (q >= BigInt(1UL << 32U)) {
      partial = true;
      continue;
    }
    if (!dedekind_p_maximal(f, q.get_ui())) d->index_divisors.push_back(q);
  }
  d->partial_factorization = partial;
  d->monogenic = d->index_divisors.empty() && !partial;
  if (d->monogenic) d->field_disc = d->disc_poly;
  return NumberField(std::move(d));
}

FieldElement NumberField::generator() const {
  if (degree() == 1) return from_rational(-BigRat(data_->poly.coeffs()[0]));
  return FieldElement(*this, RatPolynomial::x());
}

FieldElement NumberField::from_rational(const BigRat& a) const {
  return FieldElement(*this, RatPolynomial::constant(a));
}

FieldElement NumberField::element(const RatPolynomial& r) const { return FieldElement(*this, r); }

FieldElement::FieldElement(NumberField field, RatPolynomial rep)
    : field_(std::move(field)), rep_(reduce_mod(rep, field_.rational_defining_poly())) {}

FieldElement FieldElement::operator-() const { return FieldElement(field_, -rep_); }

FieldElement operator+(const FieldElement& a, const FieldElement& b) { return FieldElement(a.field_, a.rep_ + b.rep_); }

FieldElement operator-(const FieldElement& a, const FieldElement& b) { return FieldElement(a.field_, a.rep_ - b.rep_); }

FieldElement operator*(const FieldElement& a, const FieldElement& b) { return FieldElement(a.field_, a.rep_ * b.rep_); }

FieldElement operator*(const BigRat& s, const FieldElement& a) { return FieldElement(a.field_, a.rep_ * s); }

FieldElement pow(const FieldElement& a, unsigned exponent) {
  FieldElement r = a.field().from_rational(1);
  FieldElement b = a;
  while (exponent != 0) {
    if (exponent & 1U) r = r * b;
    exponent >>= 1U;
    if (exponent != 0) b = b * b;
  }
  return r;
}

RatPolynomial element_charpoly(const FieldElement& a) {
  const int n = a.field().degree();
  // Column j holds the coordinates of a * theta^j.
  std::vector<std::vector<BigRat>> h(n, std::vector<BigRat>(n, BigRat(0)));
  FieldElement col = a;
  const FieldElement theta = a.field().generator();
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) h[i][j] = col.rep().coeff(i);
    if (j + 1 < n) col = col * theta;
  }

  // Similarity reduction to upper Hessenberg form.
  for (int m = 1; m + 1 < n; ++m) {
    int piv = m;
    while (piv < n && h[piv][m - 1] == 0) ++piv;
    if (piv == n) continue;
    if (piv != m) {
      std::swap(h[piv], h[m]);
      for (int r = 0; r < n; ++r) std::swap(h[r][piv], h[r][m]);
    }
    const BigRat t = h[m][m - 1];
    for (int i = m + 1; i < n; ++i) {
      if (h[i][m - 1] == 0) continue;
      const BigRat u = h[i][m - 1] / t;
      for (int j = 0; j < n; ++j) h[i][j] -= u * h[m][j];
      for (int r = 0; r < n; ++r) h[r][m] += u * h[r][i];
    }
  }

  // p_m = (x - h_mm) p_{m-1} - sum_i h_{i,m} (prod_j h_{j,j-1}) p_{i-1}, 1-based.
  std::vector<RatPolynomial> p(n + 1);
  p[0] = RatPolynomial::constant(1);
  for (int m = 1; m <= n; ++m) {
    p[m] = RatPolynomial(std::vector<BigRat>{-h[m - 1][m - 1], BigRat(1)}) * p[m - 1];
    BigRat t = 1;
    for (int i = 1; i < m; ++i) {
      t *= h[m - i][m - i - 1];
      if (t == 0) break;
      p[m] -= p[m - i - 1] * BigRat(t * h[m - i - 1][m - 1]);
    }
  }
  return p[n];
}

BigRat norm(const FieldElement& a) {
  const RatPolynomial chi = element_charpoly(a);
  const BigRat c0 = chi.coeff(0);
  return a.field().degree() % 2 == 0 ? c0 : BigRat(-c0);
}

bool dedekind_p_maximal(const IntPolynomial& f, std::uint64_t p) {
  const ModpFactorization fac = factor_mod_p(f, p);
  ModpPolynomial g = ModpPolynomial::constant(p, 1);
  ModpPolynomial h = ModpPolynomial::constant(p, 1);
  for (const auto& [factor, mult] : fac.factors) {
    g = g * factor;
    for (int i = 1; i < mult; ++i) h = h * factor;
  }
  // Lift g and h separately; the product must be taken over Z.
  const IntPolynomial lifted = (ModpPolynomial::constant(p, fac.unit) * g).lift() * h.lift();
  IntPolynomial diff = f - lifted;
  std::vector<BigInt> c = diff.coeffs();
  for (auto& a : c) mpz_divexact_ui(a.get_mpz_t(), a.get_mpz_t(), p);
  const ModpPolynomial big_f = ModpPolynomial::reduce(IntPolynomial(std::move(c)), p);
  const ModpPolynomial common = gcd(gcd(big_f, g), h);
  return common.degree() == 0;
}

namespace {

bool p_squared_divides(const BigInt& n, std::uint64_t p) {
  const unsigned long p2 = static_cast<unsigned long>(p) * p;
  return mpz_divisible_ui_p(n.get_mpz_t(), p2) != 0;
}

void require_prime(std::uint64_t p) {
  if (p >= (1ULL << 32U) || !is_prime(p)) {
    throw DomainError("expected a prime below 2^32, got " + std::to_string(p));
  }
}

}  // namespace

PrimeSplit dedekind_split(const NumberField& k, std::uint64_t p) {
  require_prime(p);
  PrimeSplit s;
  s.prime = BigInt(static_cast<unsigned long>(p));
  for (const auto& [factor, mult] : factor_mod_p(k.defining_poly(), p).factors) {
    s.factors.push_back({mult, factor.degree()});
  }
  std::sort(s.factors.begin(), s.factors.end(), [](const SplitFactor& a, const SplitFactor& b) {
    return a.f != b.f ? a.f < b.f : a.e < b.e;
  });
  if (p_squared_divides(k.disc_poly(), p)) s.index_divisible = !dedekind_p_maximal(k.defining_poly(), p);
  return s;
}

PrimeIdealCount count_prime_ideals(const NumberField& k, std::uint64_t x, unsigned threads) {
  PrimeIdealCount result;
  result.x = x;
  if (x < 2) return result;
  const std::vector<std::uint64_t> primes = primes_up_to(x);
  const IntPolynomial& f = k.defining_poly();

  struct Slice {
    std::uint64_t count = 0;
    std::vector<std::uint64_t> skipped;
  };
  std::vector<Slice> slices(std::max(1U, threads));

  parallel_slices(primes.size(), threads, [&](std::size_t begin, std::size_t end, unsigned slot) {
    Slice& out = slices[slot];
    for (std::size_t i = begin; i < end; ++i) {
      const std::uint64_t p = primes[i];
      if (p_squared_divides(k.disc_poly(), p) && !dedekind_p_maximal(f, p)) {
        out.skipped.push_back(p);
        continue;
      }
      if (p <= x / p) {
        for (const auto& sf : dedekind_split(k, p).factors) {
          BigInt norm_value = ipow(BigInt(static_cast<unsigned long>(p)), static_cast<unsigned long>(sf.f));
          if (norm_value <= BigInt(static_cast<unsigned long>(x))) ++out.count;
        }
      } else {
        // Only degree-one ideals fit; count distinct roots of f mod p.
        const ModpPolynomial fp = ModpPolynomial::reduce(f, p);
        const ModpPolynomial xp = powmod(ModpPolynomial::x(p), BigInt(static_cast<unsigned long>(p)), fp);
        out.count += static_cast<std::uint64_t>(gcd(fp, xp - ModpPolynomial::x(p)).degree());
      }
    }
  });

  for (auto& s : slices) {
    result.count += s.count;
    result.index_divisible_primes.insert(result.index_divisible_primes.end(), s.skipped.begin(), s.skipped.end());
  }
  return result;
}

namespace {

struct Interval {
  BigRat lo;
  BigRat hi;
};

Interval mul(const Interval& a, const Interval& b) {
  const BigRat c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(c, c + 4), *std::max_element(c, c + 4)};
}

Interval eval_interval(const RatPolynomial& r, const Interval& x) {
  Interval acc{BigRat(0), BigRat(0)};
  for (auto it = r.coeffs().rbegin(); it != r.coeffs().rend(); ++it) {
    acc = mul(acc, x);
    acc.lo += *it;
    acc.hi += *it;
  }
  return acc;
}

}  // namespace

std::vector<int> sign_at_embeddings(const FieldElement& a) {
  if (a.is_zero()) throw DomainError("sign of the zero element");
  const NumberField& k = a.field();
  std::vector<int> signs;
  for (RationalInterval iv : k.real_embeddings()) {
    int s = 0;
    for (int attempt = 0; attempt < 4096 && s == 0; ++attempt) {
      if (iv.is_point()) {
        s = sgn(a.rep().eval(iv.lo));
        if (s == 0) throw DomainError("element vanishes at a real embedding; is the defining polynomial reducible?");
        break;
      }
      const Interval v = eval_interval(a.rep(), {iv.lo, iv.hi});
      if (v.lo > 0) {
        s = 1;
      } else if (v.hi < 0) {
        s = -1;
      } else {
        iv = refine_root(k.defining_poly(), iv, iv.width() / 4);
      }
    }
    if (s == 0) throw DomainError("could not certify the sign at a real embedding");
    signs.push_back(s);
  }
  return signs;
}

nlohmann::json to_json(const NumberField& k) {
  nlohmann::json j;
  j["poly"] = to_json(k.defining_poly());
  j["degree"] = k.degree();
  j["disc_poly"] = to_string(k.disc_poly());
  j["field_disc"] = k.field_disc() ? nlohmann::json(to_string(*k.field_disc())) : nlohmann::json(nullptr);
  j["monogenic"] = k.monogenic_certified();
  return j;
}

nlohmann::json to_json(const PrimeSplit& s) {
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& f : s.factors) factors.push_back({{"e", f.e}, {"f", f.f}});
  return {{"prime", to_string(s.prime)}, {"factors", factors}, {"index_divisible", s.index_divisible}};
}

}  // namespace selberg
