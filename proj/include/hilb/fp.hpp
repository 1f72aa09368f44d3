#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <random>

namespace hilb::fp {

/// The eight largest primes below 2^62.  Distinct confirmation runs rotate
/// through this table so that an answer is never trusted to a single prime.
inline constexpr std::array<std::uint64_t, 8> kPrimes = {
    4611686018427387847ULL, 4611686018427387817ULL, 4611686018427387787ULL,
    4611686018427387761ULL, 4611686018427387751ULL, 4611686018427387737ULL,
    4611686018427387733ULL, 4611686018427387709ULL,
};

/// Arithmetic modulo a prime that fits in 62 bits (products fit __int128).
class Field {
 public:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p() const { return p_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint64_t neg(std::uint64_t a) const { return a ? p_ - a : 0; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % p_);
  }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t inv(std::uint64_t a) const;

  std::uint64_t from_int64(std::int64_t v) const;
  std::uint64_t from_mpz(const mpz_class& v) const;
  /// Reduces num/den; throws std::runtime_error if den vanishes mod p.
  std::uint64_t from_mpq(const mpq_class& v) const;

 private:
  std::uint64_t p_;
};

/// Deterministic stream of field elements.  All randomness in the library
/// flows through seeds derived from one base seed, so identical (prime, seed)
/// inputs reproduce identical results bit for bit.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  std::uint64_t raw() { return gen_(); }
  /// Uniform in [0, p) by rejection (no modulo bias).
  std::uint64_t uniform(const Field& F);
  std::uint64_t nonzero(const Field& F);
  /// Uniform in [lo, hi] (inclusive).
  std::int64_t integer(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 gen_;
};

/// Mixes a salt into a base seed (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t salt);

}  // namespace hilb::fp
