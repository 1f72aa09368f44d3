#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "hilb/macaulay.hpp"
#include "hilb/seq.hpp"

namespace hilb::gotzmann {

/// Value forced at degree d+l once an O-sequence with value c_d in degree d
/// grows maximally into degree d+1: sum of C(m_j + l, j + l) over the
/// d-binomial expansion of c_d.  l = 0 returns c_d.
mpz_class persistence_value(const mpz_class& c_d, int d, long l);

/// The persistence values as an exact polynomial.  Each expansion term
/// C(m_j, j) contributes C(x + m_j - d, m_j - j), so the polynomial degree is
/// m_d - d: the dimension of the subscheme cut out by the degree-<=d part of
/// the ideal.  Its degree is the normalized leading coefficient.
class GotzmannPolynomial {
 public:
  GotzmannPolynomial(const mpz_class& c_d, int d);

  int anchor_degree() const { return d_; }
  const macaulay::BinomialExpansion& expansion() const { return expansion_; }
  long dimension() const { return dimension_; }
  const mpz_class& scheme_degree() const { return scheme_degree_; }

  /// Exact evaluation at any integer point.
  mpz_class eval(const mpz_class& x) const;

  /// Exact coefficients in the monomial basis, constant term first.
  const std::vector<mpq_class>& coefficients() const { return coeffs_; }

  std::string str() const;  // e.g. "3*x + 1/2"

 private:
  int d_;
  macaulay::BinomialExpansion expansion_;
  long dimension_ = 0;
  mpz_class scheme_degree_ = 0;
  std::vector<mpq_class> coeffs_;
};

inline GotzmannPolynomial gotzmann_polynomial(const mpz_class& c_d, int d) {
  return GotzmannPolynomial(c_d, d);
}

struct FlatClass {
  enum Kind { curve_like, polynomial_ring, other } kind = other;
  long dimension = 0;
  mpz_class degree = 0;  // scheme degree (meaningful for curve_like)
  std::string str() const;
};

/// Reads a maximal-growth step of an h-vector (first difference) at degree d
/// in an n-variable ambient ring.  curve_like: the persistence polynomial is
/// constant, so the degree-<=d base locus one dimension up is a curve of that
/// degree.  polynomial_ring: the value is still the full ring's (nothing has
/// been cut yet).  Otherwise the raw dimension is reported.
/// Throws std::domain_error("not maximal") without maximal growth d -> d+1.
FlatClass classify_flat(const HilbertSeq& delta_h, int d, int ambient_n);

}  // namespace hilb::gotzmann
