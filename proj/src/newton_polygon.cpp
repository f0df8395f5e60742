#include "selberg/newton_polygon.hpp"

#include <algorithm>

namespace selberg {

NewtonPolygon newton_polygon(const IntPolynomial& f, const BigInt& p) {
  if (f.is_zero()) throw DomainError("Newton polygon of the zero polynomial");
  if (f.coeffs()[0] == 0) throw DomainError("Newton polygon requires a nonzero constant term");
  if (!is_prime(p)) throw DomainError("Newton polygon requires a prime, got " + to_string(p));

  std::vector<NewtonPolygon::Vertex> pts;
  for (int i = 0; i <= f.degree(); ++i) {
    if (f.coeffs()[i] != 0) pts.push_back({i, valuation(f.coeffs()[i], p)});
  }

  // Monotone chain, lower hull only.
  std::vector<NewtonPolygon::Vertex> hull;
  for (const auto& q : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull.back();
      // Drop b when it lies on or above segment a-q.
      const long lhs = (b.valuation - a.valuation) * static_cast<long>(q.index - a.index);
      const long rhs = (q.valuation - a.valuation) * static_cast<long>(b.index - a.index);
      if (lhs >= rhs) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(q);
  }

  NewtonPolygon np{p, hull, {}};
  for (std::size_t k = 1; k < hull.size(); ++k) {
    const int len = hull[k].index - hull[k - 1].index;
    np.slopes.push_back({make_rat(BigInt(hull[k - 1].valuation - hull[k].valuation), BigInt(len)), len});
  }
  std::reverse(np.slopes.begin(), np.slopes.end());
  return np;
}

}  // namespace selberg
