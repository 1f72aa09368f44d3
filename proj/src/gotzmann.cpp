#include "hilb/gotzmann.hpp"

#include <sstream>
#include <stdexcept>

#include "hilb/binom.hpp"

namespace hilb::gotzmann {

mpz_class persistence_value(const mpz_class& c_d, int d, long l) {
  if (c_d < 1 || d < 1 || l < 0)
    throw std::domain_error("persistence_value: need c_d >= 1, d >= 1, l >= 0");
  mpz_class v = 0;
  for (const auto& t : macaulay::binomial_expansion(c_d, d).terms)
    v += binom(t.top + l, static_cast<unsigned long>(t.level + l));
  return v;
}

GotzmannPolynomial::GotzmannPolynomial(const mpz_class& c_d, int d) : d_(d) {
  if (c_d < 1 || d < 1)
    throw std::domain_error("gotzmann_polynomial: need c_d >= 1, d >= 1");
  expansion_ = macaulay::binomial_expansion(c_d, d);

  // Expand sum_j C(x + m_j - d, b_j) with b_j = m_j - j into monomial basis.
  // b is non-increasing down the expansion, so the first term carries the
  // polynomial degree.
  long top_b = 0;
  {
    mpz_class b0 = expansion_.terms.front().top - expansion_.terms.front().level;
    top_b = b0.get_si();
  }
  coeffs_.assign(static_cast<std::size_t>(top_b) + 1, mpq_class(0));
  for (const auto& t : expansion_.terms) {
    mpz_class shift = t.top - d;
    unsigned long b = mpz_class(t.top - t.level).get_ui();
    // prod_{q=0}^{b-1} (x + shift - q) / b!
    std::vector<mpq_class> term{mpq_class(1)};
    for (unsigned long q = 0; q < b; ++q) {
      std::vector<mpq_class> next(term.size() + 1, mpq_class(0));
      mpq_class c0(shift - static_cast<long>(q));
      for (std::size_t i = 0; i < term.size(); ++i) {
        next[i] += term[i] * c0;
        next[i + 1] += term[i];
      }
      term = std::move(next);
    }
    mpq_class inv_fact(mpz_class(1), factorial(b));
    inv_fact.canonicalize();
    for (std::size_t i = 0; i < term.size(); ++i)
      coeffs_[i] += term[i] * inv_fact;
  }
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();

  dimension_ = static_cast<long>(coeffs_.size()) - 1;
  if (dimension_ != top_b)
    throw std::logic_error("gotzmann_polynomial: degree mismatch");

  mpq_class lead = coeffs_.back() * mpq_class(factorial(
                       static_cast<unsigned long>(dimension_)));
  lead.canonicalize();
  if (lead.get_den() != 1)
    throw std::logic_error("gotzmann_polynomial: non-integral scheme degree");
  scheme_degree_ = lead.get_num();

  if (eval(d) != c_d)
    throw std::logic_error("gotzmann_polynomial: anchor evaluation mismatch");
}

mpz_class GotzmannPolynomial::eval(const mpz_class& x) const {
  mpz_class v = 0;
  for (const auto& t : expansion_.terms) {
    unsigned long b = mpz_class(t.top - t.level).get_ui();
    v += binom_any(x + t.top - d_, b);
  }
  return v;
}

std::string GotzmannPolynomial::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i] == 0 && coeffs_.size() > 1) continue;
    if (!first) os << " + ";
    os << coeffs_[i].get_str();
    if (i == 1) os << "*x";
    if (i > 1) os << "*x^" << i;
    first = false;
  }
  return os.str();
}

std::string FlatClass::str() const {
  switch (kind) {
    case curve_like:
      return "curve-like of degree " + degree.get_str();
    case polynomial_ring:
      return "polynomial-ring growth";
    case other:
      return "dimension " + std::to_string(dimension);
  }
  return "";
}

FlatClass classify_flat(const HilbertSeq& delta_h, int d, int ambient_n) {
  if (d < 1 || ambient_n < 2)
    throw std::domain_error("classify_flat: need d >= 1 and ambient_n >= 2");
  std::int64_t cd = delta_h.value_at(d);
  std::int64_t next = delta_h.value_at(d + 1);
  if (cd < 1 || macaulay::growth(mpz_class(cd), d) != next)
    throw std::domain_error("not maximal");

  FlatClass fc;
  // The Artinian reduction lives in ambient_n - 1 variables; this is the
  // value of its full polynomial ring in degree d.
  if (cd == binom(d + ambient_n - 2, d)) {
    fc.kind = FlatClass::polynomial_ring;
    fc.dimension = ambient_n - 2;
    fc.degree = 1;
    return fc;
  }
  GotzmannPolynomial p(cd, d);
  fc.dimension = p.dimension();
  fc.degree = p.scheme_degree();
  fc.kind = p.dimension() == 0 ? FlatClass::curve_like : FlatClass::other;
  return fc;
}

}  // namespace hilb::gotzmann
