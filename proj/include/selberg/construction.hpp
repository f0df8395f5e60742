#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "selberg/number_field.hpp"
#include "selberg/real.hpp"

namespace selberg {

// Square or rectangular matrix over a number field, row-major.
class FieldMatrix {
 public:
  FieldMatrix(const NumberField& k, int rows, int cols);
  static FieldMatrix identity(const NumberField& k, int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const NumberField& field() const { return field_; }
  const FieldElement& at(int i, int j) const { return a_[static_cast<std::size_t>(i * cols_ + j)]; }
  FieldElement& at(int i, int j) { return a_[static_cast<std::size_t>(i * cols_ + j)]; }

  FieldMatrix transpose() const;
  FieldElement determinant() const;

  friend FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b);
  friend bool operator==(const FieldMatrix& a, const FieldMatrix& b);

 private:
  NumberField field_;
  int rows_;
  int cols_;
  std::vector<FieldElement> a_;
};

FieldMatrix pow(const FieldMatrix& g, std::uint64_t exponent);

// Q(2cos(2 pi / p)) with generator theta = 2 omega.
NumberField cosine_field(std::uint64_t p);

// Certified (-T) in (cos(3 pi / p), cos(2 pi / p)), by refining the
// isolating intervals of 2cos(2 pi (m-1) / p) and 2cos(2 pi / p),
// m = (p - 1) / 2. Requires p >= 5.
bool t_in_interval(const NumberField& k, const BigRat& T);

// c = T + omega.
FieldElement shifted_omega(const NumberField& k, const BigRat& T);

// True iff the 2-adic Newton polygon of the characteristic polynomial of c
// has one slope and that root valuation is an odd integer, which gives
// v(c) odd at every prime over 2.
bool two_adic_condition(const FieldElement& c);

// First T = a / 2^j, a odd, |T| < 1, by increasing j, then |a|, then a > 0
// first, that lies in the interval and passes two_adic_condition. Throws
// DomainError when none exists with 2^j <= denominator_cap.
BigRat choose_T(std::uint64_t p, const BigInt& denominator_cap);

struct ArchimedeanSigns {
  int identity_sign = 0;
  std::vector<int> other_signs;  // remaining embeddings, ascending
  bool passes = false;           // (+; -, ..., -)
};

// The identity embedding is the largest real root, where theta is
// 2cos(2 pi / p).
ArchimedeanSigns archimedean_check(const FieldElement& c);

// blockdiag([[0, -1], [1, 2 omega]], 1).
FieldMatrix order_p_element(const NumberField& k);

// [[1, omega, 0], [omega, 1, 0], [0, 0, -c]].
FieldMatrix construction_gram(const FieldElement& c);

// g^p == I and g != I.
bool verify_order(const FieldMatrix& g, std::uint64_t p);

// g^T G g == G and det g == 1.
bool form_preservation_check(const FieldMatrix& g, const FieldMatrix& gram);

struct VolumeEstimate {
  BigInt disc_computed;
  Real disc_stated_formula;  // p^((p - 2) / 2)
  Real log_v_hat;           // log a + b log disc_computed
  bool log_disc_within;     // log disc_computed <= c p log p
};

VolumeEstimate volume_estimate(std::uint64_t p, const Real& a_const, const Real& b_const, const Real& c_const = 1);

// p log(log_v_hat) / log_v_hat, for log_v_hat > 1.
Real lower_bound_ratio(std::uint64_t p, const Real& log_v_hat);

struct SweepRow {
  std::uint64_t p = 0;
  BigInt disc;
  Real log_v_hat;
  Real ratio;
};

// volume_estimate and lower_bound_ratio for every prime 5 <= p <= pmax,
// fanned out over `threads` and returned in increasing p.
std::vector<SweepRow> construction_sweep(std::uint64_t pmax, const Real& a_const, const Real& b_const,
                                         unsigned threads = 1);

struct ProbeSolution {
  // Coordinates of x, y, z in the basis 1, theta, ..., theta^(d-1), mod 2^k.
  std::vector<std::uint64_t> x, y, z;
};

struct ProbeResult {
  int k = 0;
  int scale_exponent = 0;                    // c was multiplied by 4^scale_exponent
  std::vector<std::uint64_t> scaled_c;       // mod 2^k
  std::uint64_t solution_count = 0;          // primitive solutions mod 2^k
  std::vector<ProbeSolution> first_solutions;  // in enumeration order
};

inline constexpr int kMaxProbeK = 20;
inline constexpr int kMaxProbeLogCandidates = 30;

// Primitive (x, y, z) in (Z[theta] / 2^k)^3 with x^2 + y^2 - c z^2 == 0.
// c must lie in Z[theta, 1/2]; it is scaled by a power of 4 into Z[theta].
ProbeResult mod2k_isotropy_probe(const FieldElement& c, int k, std::size_t max_solutions = 8);

struct ConstructionOptions {
  BigInt denominator_cap = BigInt(1) << 20;
  Real belolipetsky_a = 1;
  Real belolipetsky_b = 1;
  Real volume_log_c = 1;
  // Cross-check against the finite-subgroup bound in GL_3.
  Real prasad_c2 = 1;
  Real jordan_index = 1;
  std::optional<int> probe_k;
};

struct ConstructionChecks {
  bool interval_ok = false;
  bool archimedean_ok = false;
  bool two_adic_ok = false;
  bool form_preserved = false;
  bool order_verified = false;
  bool all() const { return interval_ok && archimedean_ok && two_adic_ok && form_preserved && order_verified; }
};

struct LatticeConstruction {
  std::uint64_t p = 0;
  NumberField field;
  BigRat T;
  FieldElement c;
  FieldMatrix gram;
  FieldMatrix generator;
  ConstructionChecks checks;
  ArchimedeanSigns signs;
  VolumeEstimate volume;
  Real ratio;
  Real finite_subgroup_bound;
  bool cross_check_holds = false;
  std::optional<ProbeResult> probe;
};

LatticeConstruction build_construction(std::uint64_t p, const ConstructionOptions& options = {});

// Recomputes form preservation and order exactly from the serialized data.
ConstructionChecks recheck(const nlohmann::json& j);

nlohmann::json to_json(const FieldMatrix& m);
nlohmann::json to_json(const ProbeResult& r);
nlohmann::json to_json(const LatticeConstruction& c);
FieldMatrix field_matrix_from_json(const NumberField& k, const nlohmann::json& j);

}  // namespace selberg
