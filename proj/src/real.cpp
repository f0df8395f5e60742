#include "selberg/real.hpp"

#include <cmath>
#include <ios>

#include "selberg/errors.hpp"

namespace selberg {

Real to_real(const BigInt& a) { return Real(a.get_str(10)); }

Real to_real(const BigRat& a) { return to_real(a.get_num()) / to_real(a.get_den()); }

Real parse_real(const std::string& s) {
  try {
    return Real(s);
  } catch (const std::exception&) {
    throw DomainError("not a real number: '" + s + "'");
  }
}

std::string format_real(const Real& x, int significant_digits) {
  return x.str(significant_digits, std::ios_base::scientific);
}

BigInt floor_to_bigint(const Real& x) {
  if (x < 0) throw DomainError("floor_to_bigint expects a non-negative value");
  const Real f = floor(x);
  BigInt r;
  mpfr_get_z(r.get_mpz_t(), f.backend().data(), MPFR_RNDD);
  return r;
}

}  // namespace selberg
