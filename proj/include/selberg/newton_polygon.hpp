#pragma once

#include <vector>

#include "selberg/polynomial.hpp"

namespace selberg {

// Lower convex hull of {(i, v_p(a_i)) : a_i != 0}.
//
// Slope convention: each entry of `slopes` is reported as a root valuation.
// An entry {s, l} means exactly l roots (in an algebraic closure of Q_p)
// have p-adic valuation s; positive s means p-divisible roots. Entries are
// sorted by strictly increasing s. The hull segment joining (i, u) to (j, w)
// produces the entry {(u - w) / (j - i), j - i}.
struct NewtonPolygon {
  struct Vertex {
    int index;
    long valuation;
  };
  struct Slope {
    BigRat valuation;
    int length;
  };

  BigInt prime;
  std::vector<Vertex> vertices;  // left to right along the hull
  std::vector<Slope> slopes;
};

// Requires f != 0, f(0) != 0 and p prime.
NewtonPolygon newton_polygon(const IntPolynomial& f, const BigInt& p);

}  // namespace selberg
