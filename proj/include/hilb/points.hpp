#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "hilb/fpform.hpp"
#include "hilb/modla.hpp"
#include "hilb/seq.hpp"
#include "hilb/slice.hpp"

namespace hilb::points {

/// A finite set of pairwise distinct points in projective space, with exact
/// rational homogeneous coordinates.
class PointSet {
 public:
  PointSet(int ambient, std::vector<std::vector<mpq_class>> pts);

  int ambient() const { return ambient_; }
  int coords() const { return ambient_ + 1; }
  std::size_t size() const { return pts_.size(); }
  const std::vector<std::vector<mpq_class>>& pts() const { return pts_; }

  PointSet subset(const std::vector<int>& indices) const;

  /// Points with coordinates [1 : r : ... : r], r uniform in [-box, box].
  /// General position holds with overwhelming probability.
  static PointSet random(int ambient, int count, std::uint64_t seed,
                         std::int64_t box = 10000);

 private:
  int ambient_;
  std::vector<std::vector<mpq_class>> pts_;
};

/// Slice source for the ideal of a point set: the degree-t slice is the
/// kernel of the evaluation matrix on the degree-t monomial basis.
class PointSource : public modla::SliceSource {
 public:
  explicit PointSource(const PointSet& z) : z_(z) {}
  int vars() const override { return z_.coords(); }
  std::vector<fp::Row> slice_rows(int t, const fp::Field& F) const override;

 private:
  const PointSet& z_;
};

/// Evaluation matrix of the degree-t monomials at the points.
fp::Matrix evaluation_matrix(const PointSet& z, int t, const fp::Field& F);

/// h_Z(0..t_max); tail becomes constant once the cardinality is reached.
HilbertSeq hilbert_function(const PointSet& z, int t_max,
                            const modla::EngineConfig& cfg);

/// First difference of h_Z, trimmed at its first zero; sums to |Z|.
HilbertSeq h_vector(const PointSet& z, const modla::EngineConfig& cfg);

struct UppOptions {
  bool exhaustive = true;
  int samples = 200;       // per cardinality, in sampled mode
  int exhaustive_cap = 12; // largest |Z| allowed in exhaustive mode
};

struct UppResult {
  bool pass = false;
  std::optional<std::vector<int>> witness;  // indices of a violating subset
  std::optional<HilbertSeq> witness_h;      // its Hilbert function
  std::optional<HilbertSeq> expected_h;     // the truncated reference
};

/// Uniform position test: every t-point subset must have the truncation of
/// h_Z at t.  Exhaustive mode scans all subsets (|Z| capped); sampled mode
/// draws `samples` random subsets per cardinality.
UppResult upp_test(const PointSet& z, const UppOptions& opt,
                   const modla::EngineConfig& cfg);

/// Kernel basis of the degree-d evaluation matrix as prime-field forms, over
/// the engine's primary prime (the dimension is confirmed across rounds).
std::vector<FpForm> degree_forms(const PointSet& z, int d,
                                 const modla::EngineConfig& cfg);

/// GCD, up to scalar, of nonzero forms in three variables over one prime
/// field.  The result is validated by exact trial division of every input;
/// a validation failure is an internal error, not a data error.
FpForm gcd_of_forms(const std::vector<FpForm>& forms, std::uint64_t seed = 0);

}  // namespace hilb::points
