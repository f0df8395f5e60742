#include "selberg/real_roots.hpp"

#include <functional>

namespace selberg {

int sign_at(const IntPolynomial& f, const BigRat& x) { return sgn(f.eval(x)); }

SturmSequence::SturmSequence(const IntPolynomial& f) {
  if (f.degree() < 1) throw DomainError("Sturm sequence of a constant polynomial");
  chain_.push_back(primitive_part(f));
  chain_.push_back(primitive_part(f.derivative()));
  while (chain_.back().degree() > 0) {
    const IntPolynomial& a = chain_[chain_.size() - 2];
    const IntPolynomial& b = chain_.back();
    IntPolynomial r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    // prem multiplies by lc(b)^(deg a - deg b + 1); undo its sign, then negate.
    const int k = a.degree() - b.degree() + 1;
    const bool flip = b.leading() < 0 && k % 2 != 0;
    r = flip ? r : -r;
    BigInt c = content(r);
    std::vector<BigInt> coeffs = r.coeffs();
    for (auto& x : coeffs) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    chain_.emplace_back(std::move(coeffs));
  }
}

namespace {

int count_changes(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

int SturmSequence::sign_changes_at(const BigRat& x) const {
  std::vector<int> s;
  s.reserve(chain_.size());
  for (const auto& g : chain_) s.push_back(sign_at(g, x));
  return count_changes(s);
}

int SturmSequence::sign_changes_at_neg_infinity() const {
  std::vector<int> s;
  for (const auto& g : chain_) s.push_back(g.degree() % 2 == 0 ? sgn(g.leading()) : -sgn(g.leading()));
  return count_changes(s);
}

int SturmSequence::sign_changes_at_pos_infinity() const {
  std::vector<int> s;
  for (const auto& g : chain_) s.push_back(sgn(g.leading()));
  return count_changes(s);
}

int SturmSequence::count_roots(const BigRat& lo, const BigRat& hi) const {
  return sign_changes_at(lo) - sign_changes_at(hi);
}

int SturmSequence::count_real_roots() const {
  return sign_changes_at_neg_infinity() - sign_changes_at_pos_infinity();
}

BigRat root_bound(const IntPolynomial& f) {
  // Cauchy: |root| < 1 + max |a_i / a_n|.
  BigRat m = 0;
  for (int i = 0; i < f.degree(); ++i) {
    BigRat q = BigRat(abs(f.coeffs()[i])) / BigRat(abs(f.leading()));
    if (q > m) m = q;
  }
  BigRat bound = 1;
  while (bound <= m + 1) bound *= 2;
  return bound;
}

std::vector<RationalInterval> isolate_real_roots(const IntPolynomial& f, const BigRat& precision) {
  if (f.degree() < 1) throw DomainError("root isolation of a constant polynomial");
  if (precision <= 0) throw DomainError("root isolation precision must be positive");
  if (!is_squarefree(f)) throw NotSquarefreeError("root isolation requires a squarefree polynomial");

  const SturmSequence sturm(f);
  const BigRat bound = root_bound(f);
  std::vector<RationalInterval> out;

  // Invariant on entry: (lo, hi] holds exactly `count` roots, count >= 1.
  std::function<void(const BigRat&, const BigRat&, int)> split = [&](const BigRat& lo, const BigRat& hi, int count) {
    if (count == 1 && hi - lo <= precision && sign_at(f, lo) != 0) {
      if (sign_at(f, hi) == 0) {
        out.push_back({hi, hi});
      } else {
        out.push_back({lo, hi});
      }
      return;
    }
    const BigRat mid = (lo + hi) / 2;
    const int left = sturm.count_roots(lo, mid);
    if (left > 0) split(lo, mid, left);
    if (count - left > 0) split(mid, hi, count - left);
  };

  const int total = sturm.count_roots(-bound, bound);
  if (total > 0) split(-bound, bound, total);
  return out;
}

RationalInterval refine_root(const IntPolynomial& f, RationalInterval iv, const BigRat& width) {
  if (iv.is_point()) return iv;
  const int s_hi = sign_at(f, iv.hi);
  if (s_hi == 0) return {iv.hi, iv.hi};
  while (iv.width() > width) {
    const BigRat mid = (iv.lo + iv.hi) / 2;
    const int s = sign_at(f, mid);
    if (s == 0) return {mid, mid};
    if (s == s_hi) {
      iv.hi = mid;
    } else {
      iv.lo = mid;
    }
  }
  return iv;
}

}  // namespace selberg
