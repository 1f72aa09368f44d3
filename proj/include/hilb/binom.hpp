#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>

namespace hilb {

/// C(n, k) for n >= 0; zero when k > n.
inline mpz_class binom(const mpz_class& n, unsigned long k) {
  if (n < 0) throw std::domain_error("binom: negative top");
  if (n < static_cast<long>(k)) return 0;
  mpz_class r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

inline mpz_class binom(long n, long k) {
  if (k < 0) return 0;
  return binom(mpz_class(n), static_cast<unsigned long>(k));
}

/// C(x, k) for arbitrary (possibly negative) x: x(x-1)...(x-k+1)/k!.
inline mpz_class binom_any(const mpz_class& x, unsigned long k) {
  mpz_class num = 1;
  for (unsigned long q = 0; q < k; ++q) num *= x - static_cast<long>(q);
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), k);
  mpz_class r;
  mpz_divexact(r.get_mpz_t(), num.get_mpz_t(), fact.get_mpz_t());
  return r;
}

inline mpz_class factorial(unsigned long k) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

/// Narrowing helper for results that must fit a machine integer.
inline std::int64_t to_int64(const mpz_class& v) {
  if (!v.fits_slong_p())
    throw std::overflow_error("value does not fit in 64 bits: " + v.get_str());
  return static_cast<std::int64_t>(v.get_si());
}

}  // namespace hilb
