#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "hilb/form.hpp"
#include "hilb/fp.hpp"
#include "hilb/grading.hpp"

namespace hilb {

/// A homogeneous form with coefficients in one prime field.
class FpForm {
 public:
  FpForm(std::uint64_t prime, int n, int degree)
      : prime_(prime), n_(n), degree_(degree) {}

  static FpForm from_row(std::uint64_t prime, int n, int degree,
                         const std::vector<std::uint64_t>& row,
                         const std::vector<Exponents>& basis);
  static FpForm reduce(const Form& f, const fp::Field& F);

  std::uint64_t prime() const { return prime_; }
  int vars() const { return n_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, std::uint64_t>& terms() const { return terms_; }

  FpForm& add_term(const Exponents& e, std::uint64_t c, const fp::Field& F);
  FpForm operator*(const FpForm& o) const;
  /// Leading coefficient scaled to 1 (lex-leading term).
  FpForm monic() const;

  bool operator==(const FpForm& o) const = default;
  std::string str(const std::vector<std::string>& var_names = {}) const;

 private:
  std::uint64_t prime_;
  int n_;
  int degree_;
  std::map<Exponents, std::uint64_t> terms_;
};

/// Exact quotient f/g when g divides f, otherwise nullopt.
std::optional<FpForm> trial_divide(const FpForm& f, const FpForm& g);

}  // namespace hilb
