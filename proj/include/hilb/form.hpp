#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

#include "hilb/grading.hpp"

namespace hilb {

/// A homogeneous polynomial with exact rational coefficients, stored
/// sparsely.  Zero coefficients are never kept.  A Form remembers its degree
/// even when it has no terms (the zero form of that degree).
class Form {
 public:
  Form(int n, int degree) : n_(n), degree_(degree) {}

  static Form monomial(int n, const Exponents& e, const mpq_class& c = 1);
  /// c_1 x_1 + ... + c_n x_n.
  static Form linear(const std::vector<mpq_class>& coeffs);

  int vars() const { return n_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, mpq_class>& terms() const { return terms_; }

  Form& add_term(const Exponents& e, const mpq_class& c);

  Form operator+(const Form& o) const;
  Form operator-(const Form& o) const;
  Form operator*(const Form& o) const;
  Form times_monomial(const Exponents& e) const;

  mpq_class eval(const std::vector<mpq_class>& point) const;

  bool operator==(const Form& o) const = default;
  std::string str(const std::vector<std::string>& var_names = {}) const;

 private:
  int n_;
  int degree_;
  std::map<Exponents, mpq_class> terms_;
};

}  // namespace hilb
