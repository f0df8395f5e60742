#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "selberg/polynomial_json.hpp"
#include "selberg/real_roots.hpp"

namespace selberg {

// Where a defining polynomial came from. Irreducibility is asserted for
// user input and known for polynomials built by minpoly_two_cos.
enum class Provenance { user, cosine_minpoly };

class FieldElement;

// Q[x]/(f) for a monic integer polynomial f, assumed irreducible.
class NumberField {
 public:
  // Validates f, computes disc(f), isolates the real embeddings (ascending)
  // and runs the Dedekind index test at every q with q^2 | disc(f).
  // Throws DomainError for non-monic or visibly reducible input.
  static NumberField make(const IntPolynomial& f, Provenance provenance = Provenance::user);

  const IntPolynomial& defining_poly() const { return data_->poly; }
  const RatPolynomial& rational_defining_poly() const { return data_->rat_poly; }
  int degree() const { return data_->poly.degree(); }
  const BigInt& disc_poly() const { return data_->disc_poly; }
  // Equal to disc_poly when monogenicity is certified; empty otherwise.
  const std::optional<BigInt>& field_disc() const { return data_->field_disc; }
  bool monogenic_certified() const { return data_->monogenic; }
  Provenance provenance() const { return data_->provenance; }
  // Primes q with q^2 | disc(f) where Z[theta] fails to be q-maximal.
  const std::vector<BigInt>& index_divisors() const { return data_->index_divisors; }
  // True when disc(f) could not be factored far enough to test every square divisor.
  bool disc_partially_factored() const { return data_->partial_factorization; }
  const std::vector<RationalInterval>& real_embeddings() const { return data_->embeddings; }

  FieldElement generator() const;
  FieldElement from_rational(const BigRat& a) const;
  // Reduces r modulo the defining polynomial.
  FieldElement element(const RatPolynomial& r) const;

  friend bool operator==(const NumberField& a, const NumberField& b) {
    return a.data_ == b.data_ || a.data_->poly == b.data_->poly;
  }

 private:
  struct Data {
    IntPolynomial poly;
    RatPolynomial rat_poly;
    BigInt disc_poly;
    std::optional<BigInt> field_disc;
    bool monogenic = false;
    bool partial_factorization = false;
    std::vector<BigInt> index_divisors;
    std::vector<RationalInterval> embeddings;
    Provenance provenance = Provenance::user;
  };

  explicit NumberField(std::shared_ptr<const Data> d) : data_(std::move(d)) {}

  std::shared_ptr<const Data> data_;
};

// Element of a NumberField stored as its residue polynomial in the
// generator, degree < field degree, rational coefficients.
class FieldElement {
 public:
  FieldElement(NumberField field, RatPolynomial rep);

  const NumberField& field() const { return field_; }
  const RatPolynomial& rep() const { return rep_; }
  bool is_zero() const { return rep_.is_zero(); }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_ == b.field_ && a.rep_ == b.rep_;
  }

  FieldElement operator-() const;
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const BigRat& s, const FieldElement& a);

 private:
  NumberField field_;
  RatPolynomial rep_;
};

FieldElement pow(const FieldElement& a, unsigned exponent);

// Characteristic polynomial of multiplication by a on the d-dimensional
// Q-vector space with basis 1, theta, ..., theta^(d-1). Monic of degree d.
RatPolynomial element_charpoly(const FieldElement& a);
BigRat norm(const FieldElement& a);

struct SplitFactor {
  int e;  // ramification index
  int f;  // inertia degree
  friend bool operator==(const SplitFactor&, const SplitFactor&) = default;
};

struct PrimeSplit {
  BigInt prime;
  std::vector<SplitFactor> factors;  // sorted by (f, e)
  // p may divide [O : Z[theta]]; the factor list then need not describe pO.
  bool index_divisible = false;
};

// True when Z[theta] is p-maximal, by Dedekind's criterion.
bool dedekind_p_maximal(const IntPolynomial& f, std::uint64_t p);

// Splitting of p read off the factorization of f mod p.
PrimeSplit dedekind_split(const NumberField& k, std::uint64_t p);

struct PrimeIdealCount {
  std::uint64_t x = 0;
  std::uint64_t count = 0;
  // Primes whose splitting could not be trusted; excluded from `count`.
  std::vector<std::uint64_t> index_divisible_primes;
};

// Number of prime ideals of norm <= x. Rational primes are scanned over
// `threads` contiguous slices and merged in order.
PrimeIdealCount count_prime_ideals(const NumberField& k, std::uint64_t x, unsigned threads = 1);

// Sign of sigma(a) for each real embedding sigma, in embedding order.
// Throws DomainError for a == 0.
std::vector<int> sign_at_embeddings(const FieldElement& a);

nlohmann::json to_json(const NumberField& k);
nlohmann::json to_json(const PrimeSplit& s);

}  // namespace selberg
