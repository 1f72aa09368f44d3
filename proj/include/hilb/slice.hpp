#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <vector>

#include "hilb/form.hpp"
#include "hilb/fp.hpp"
#include "hilb/fpmatrix.hpp"
#include "hilb/grading.hpp"

namespace hilb::modla {

/// Every answer that involves a random prime or random "general" forms is
/// recomputed under `confirmations` independent (prime, seed) pairs and
/// accepted only when all runs agree.  A single run is wrong with probability
/// at most (matrix dimension)/prime -- around 2^-50 at desk scale -- so two
/// agreeing runs are far below any practical failure rate.
struct EngineConfig {
  std::uint64_t prime = fp::kPrimes[0];
  std::uint64_t seed = 0;
  int confirmations = 2;
  int degree_cap = 40;  // guard for every eventually-vanishing claim

  std::uint64_t prime_for_round(int round) const;
  std::uint64_t seed_for_round(int round) const {
    return fp::derive_seed(seed, static_cast<std::uint64_t>(round));
  }
};

/// Runs fn under each confirmation round and insists on identical results.
template <typename T>
T confirmed(const EngineConfig& cfg,
            const std::function<T(const fp::Field&, fp::Rng&)>& fn) {
  if (cfg.confirmations < 1)
    throw std::invalid_argument("confirmations must be >= 1");
  T first{};
  for (int r = 0; r < cfg.confirmations; ++r) {
    fp::Field F(cfg.prime_for_round(r));
    fp::Rng rng(cfg.seed_for_round(r));
    T got = fn(F, rng);
    if (r == 0)
      first = std::move(got);
    else if (!(got == first))
      throw std::runtime_error("generic choice unstable; raise confirmations");
  }
  return first;
}

/// Degreewise provider of a spanning set of an ideal's degree-t slice, as
/// rows over the monomial basis of R_t (lex-descending order).  Providers
/// must be deterministic functions of (t, field) and safely shareable
/// read-only.
class SliceSource {
 public:
  virtual ~SliceSource() = default;
  virtual int vars() const = 0;
  virtual std::vector<fp::Row> slice_rows(int t, const fp::Field& F) const = 0;
};

/// Slices spanned by {g * m : g a generator, m a monomial of degree t-deg g}.
class GeneratorSource : public SliceSource {
 public:
  GeneratorSource(int n, std::vector<Form> gens);
  int vars() const override { return n_; }
  std::vector<fp::Row> slice_rows(int t, const fp::Field& F) const override;
  const std::vector<Form>& generators() const { return gens_; }

  /// Same ideal with only the generators of degree <= d.
  GeneratorSource restricted_to(int d) const;

 private:
  int n_;
  std::vector<Form> gens_;
};

/// The ideal generated by the degree-<=d part of another source:
/// slices agree up to d, and above d equal R_{t-d} * (slice at d).
class TruncatedSource : public SliceSource {
 public:
  TruncatedSource(const SliceSource& base, int d) : base_(base), d_(d) {}
  int vars() const override { return base_.vars(); }
  std::vector<fp::Row> slice_rows(int t, const fp::Field& F) const override;

 private:
  const SliceSource& base_;
  int d_;
};

/// Rows of L * (monomial basis of R_{t-1}) for a linear form with the given
/// field coefficients; empty when t = 0.
std::vector<fp::Row> linear_multiple_rows(int n, const std::vector<std::uint64_t>& linear,
                                          int t, const fp::Field& F);

/// Rows of F * (monomial basis of R_{t - deg F}) for a dense field form
/// given by coefficients over monomials_of_degree(n, deg).
std::vector<fp::Row> form_multiple_rows(int n, const std::vector<std::uint64_t>& form,
                                        int form_degree, int t, const fp::Field& F);

}  // namespace hilb::modla
