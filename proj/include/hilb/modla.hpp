#pragma once

#include <gmpxx.h>

#include <optional>
#include <utility>
#include <vector>

#include "hilb/seq.hpp"
#include "hilb/slice.hpp"

namespace hilb::modla {

/// dim I_t, confirmed across engine rounds.
std::int64_t slice_dim(const SliceSource& src, int t, const EngineConfig& cfg);

/// Hilbert function of R/(I + (L_1..L_m)) for m fresh general linear forms,
/// degrees 0..t_max.  m = 0 gives the Hilbert function of R/I itself.
HilbertSeq quotient_by_generic_linears(const SliceSource& src, int m, int t_max,
                                       const EngineConfig& cfg);

/// Least k such that the quotient by m general linear forms vanishes in
/// degree k+1.  Errors past cfg.degree_cap.
int reduction_number(const SliceSource& src, int m, const EngineConfig& cfg);

struct LefschetzRow {
  int t = 0;
  std::int64_t dim_from = 0, dim_to = 0;
  std::int64_t rank = 0, max_rank = 0;
  bool ok = false;
  bool operator==(const LefschetzRow&) const = default;
};

struct LefschetzReport {
  int form_degree = 1;
  bool pass = false;
  std::vector<LefschetzRow> rows;
  bool operator==(const LefschetzReport&) const = default;

  const LefschetzRow* row_at(int t) const;
};

/// Weak Lefschetz test on the Artinian reduction A = R/(I + m general
/// linears): multiplication by one more general linear form must have
/// maximal rank A_t -> A_{t+1} in every degree.  A must vanish by t_max.
LefschetzReport wlp_test(const SliceSource& src, int m, int t_max,
                         const EngineConfig& cfg);

/// Same with a general form of the given degree (degree 1 agrees with WLP).
LefschetzReport slp_test(const SliceSource& src, int m, int form_degree,
                         int t_max, const EngineConfig& cfg);

struct FittedPolynomial {
  std::vector<mpq_class> coefficients;  // constant term first
  long degree = 0;                      // = scheme dimension
  mpq_class leading;
  mpz_class scheme_degree;  // leading coefficient * degree!
  std::vector<std::pair<int, std::int64_t>> samples;
};

/// Samples the Hilbert function of R/<I_{<=d}> past the expected regularity
/// and fits the minimal-degree exact polynomial through it (Lagrange on the
/// first points, verified on at least three spare ones).  Default range is
/// d .. d+n+2: enough points for any Hilbert polynomial of degree < n plus
/// the verification margin.
FittedPolynomial truncated_ideal_polynomial(
    const SliceSource& src, int d,
    std::optional<std::pair<int, int>> sample_range, const EngineConfig& cfg);

/// Least t with I_t != 0; errors past cfg.degree_cap.
int initial_degree(const SliceSource& src, const EngineConfig& cfg);

}  // namespace hilb::modla
