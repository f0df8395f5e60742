#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "selberg/bigint.hpp"
#include "selberg/errors.hpp"

namespace selberg {

// Dense univariate polynomial, lowest degree first. The coefficient vector
// never ends in a zero, so the zero polynomial is the empty vector and
// degree() == -1 for it.
template <class Coeff>
class Polynomial {
 public:
  Polynomial() = default;

  explicit Polynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  Polynomial(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
  }

  static Polynomial constant(const Coeff& c) { return Polynomial(std::vector<Coeff>{c}); }

  static Polynomial monomial(const Coeff& c, std::size_t k) {
    std::vector<Coeff> v(k + 1, Coeff(0));
    v[k] = c;
    return Polynomial(std::move(v));
  }

  static Polynomial x() { return monomial(Coeff(1), 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Coeff>& coeffs() const { return coeffs_; }

  Coeff coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Coeff(0); }

  const Coeff& leading() const {
    if (coeffs_.empty()) throw DomainError("leading coefficient of the zero polynomial");
    return coeffs_.back();
  }

  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Coeff(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Coeff(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator*=(const Coeff& s) {
    for (auto& c : coeffs_) c *= s;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Coeff& s) { return a *= s; }
  friend Polynomial operator*(const Coeff& s, Polynomial a) { return a *= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> r(a.coeffs_.size() + b.coeffs_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(r));
  }

  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  // Horner evaluation in any ring that accepts Coeff.
  template <class T>
  T eval(const T& x) const {
    T acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc *= x;
      acc += T(*it);
    }
    return acc;
  }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Coeff> r(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) r[i - 1] = coeffs_[i] * static_cast<long>(i);
    return Polynomial(std::move(r));
  }

  // this(inner(x))
  Polynomial compose(const Polynomial& inner) const {
    Polynomial acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * inner;
      acc += constant(*it);
    }
    return acc;
  }

  // x -> s*x
  Polynomial scale_argument(const Coeff& s) const {
    Polynomial r = *this;
    Coeff power(1);
    for (auto& c : r.coeffs_) {
      c *= power;
      power *= s;
    }
    r.trim();
    return r;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Coeff> coeffs_;
};

using IntPolynomial = Polynomial<BigInt>;
using RatPolynomial = Polynomial<BigRat>;

template <class Coeff>
Polynomial<Coeff> pow(const Polynomial<Coeff>& base, unsigned exponent) {
  Polynomial<Coeff> r = Polynomial<Coeff>::constant(Coeff(1));
  Polynomial<Coeff> b = base;
  while (exponent != 0) {
    if (exponent & 1U) r *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return r;
}

// Integer-coefficient helpers.
BigInt content(const IntPolynomial& f);
IntPolynomial primitive_part(const IntPolynomial& f);
RatPolynomial to_rational(const IntPolynomial& f);
// Multiplies by the lcm of denominators and returns the integer polynomial
// together with that multiplier.
std::pair<IntPolynomial, BigInt> clear_denominators(const RatPolynomial& f);

// lc(g)^(deg f - deg g + 1) * f = q*g + r.
IntPolynomial pseudo_remainder(const IntPolynomial& f, const IntPolynomial& g);

// Exact resultant as the determinant of the Sylvester matrix, computed by
// fraction-free (Bareiss) elimination.
BigInt resultant(const IntPolynomial& f, const IntPolynomial& g);

// disc(f) = (-1)^(d(d-1)/2) * Res(f, f') / lc(f). Throws DomainError for
// constant input.
BigInt discriminant(const IntPolynomial& f);

// Rational-coefficient helpers.
std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& f, const RatPolynomial& g);
RatPolynomial monic(const RatPolynomial& f);
// Monic gcd; gcd(0, 0) = 0.
RatPolynomial gcd(RatPolynomial a, RatPolynomial b);
bool is_squarefree(const IntPolynomial& f);

std::string to_display_string(const IntPolynomial& f);

}  // namespace selberg
