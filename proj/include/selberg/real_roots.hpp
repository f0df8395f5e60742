#pragma once

#include <vector>

#include "selberg/polynomial.hpp"

namespace selberg {

// Half-open interval (lo, hi], or the exact point lo when lo == hi.
struct RationalInterval {
  BigRat lo;
  BigRat hi;

  bool is_point() const { return lo == hi; }
  BigRat width() const { return hi - lo; }
  bool contains(const BigRat& x) const { return is_point() ? x == lo : (lo < x && x <= hi); }
};

// Sturm chain f, f', -rem(f, f'), ... built from primitive pseudo-remainders
// with the sign correction that keeps it a valid Sturm sequence.
class SturmSequence {
 public:
  explicit SturmSequence(const IntPolynomial& f);

  const std::vector<IntPolynomial>& chain() const { return chain_; }
  int sign_changes_at(const BigRat& x) const;
  int sign_changes_at_neg_infinity() const;
  int sign_changes_at_pos_infinity() const;
  // Distinct real roots in (lo, hi].
  int count_roots(const BigRat& lo, const BigRat& hi) const;
  int count_real_roots() const;

 private:
  std::vector<IntPolynomial> chain_;
};

int sign_at(const IntPolynomial& f, const BigRat& x);

// Power of two strictly above the absolute value of every real root.
BigRat root_bound(const IntPolynomial& f);

// One interval per real root, in ascending order, each of width at most
// `precision`. Bisection uses dyadic midpoints and exact Sturm counts.
// For a non-point interval the root lies strictly inside and
// sign f(lo) = -sign f(hi) != 0. Throws NotSquarefreeError when
// gcd(f, f') is non-constant.
std::vector<RationalInterval> isolate_real_roots(const IntPolynomial& f, const BigRat& precision);

// Shrinks an isolating interval from isolate_real_roots to width <= width.
RationalInterval refine_root(const IntPolynomial& f, RationalInterval iv, const BigRat& width);

}  // namespace selberg
