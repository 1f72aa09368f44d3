#include "hilb/fp.hpp"

#include <stdexcept>

namespace hilb::fp {

std::uint64_t Field::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t r = 1;
  a %= p_;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t Field::inv(std::uint64_t a) const {
  if (a == 0) throw std::domain_error("Field::inv(0)");
  return pow(a, p_ - 2);
}

std::uint64_t Field::from_int64(std::int64_t v) const {
  std::int64_t m = v % static_cast<std::int64_t>(p_);
  if (m < 0) m += static_cast<std::int64_t>(p_);
  return static_cast<std::uint64_t>(m);
}

std::uint64_t Field::from_mpz(const mpz_class& v) const {
  mpz_class m = v % mpz_class(p_);
  if (m < 0) m += mpz_class(p_);
  return m.get_ui();
}

std::uint64_t Field::from_mpq(const mpq_class& v) const {
  std::uint64_t num = from_mpz(v.get_num());
  std::uint64_t den = from_mpz(v.get_den());
  if (den == 0)
    throw std::runtime_error("coefficient denominator divisible by the prime");
  return mul(num, inv(den));
}

std::uint64_t Rng::uniform(const Field& F) {
  const std::uint64_t p = F.p();
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % p;
  std::uint64_t x;
  do {
    x = raw();
  } while (x >= limit);
  return x % p;
}

std::uint64_t Rng::nonzero(const Field& F) {
  std::uint64_t x;
  do {
    x = uniform(F);
  } while (x == 0);
  return x;
}

std::int64_t Rng::integer(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do {
    x = raw();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t salt) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace hilb::fp
