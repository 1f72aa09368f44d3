#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hilb/fp.hpp"

namespace hilb::fp {

/// Univariate polynomial over a prime field; coefficients constant-first,
/// no trailing zeros (the zero polynomial is empty).
struct UniPoly {
  std::vector<std::uint64_t> c;

  static UniPoly constant(std::uint64_t v) {
    return v ? UniPoly{{v}} : UniPoly{};
  }
  bool is_zero() const { return c.empty(); }
  long degree() const { return static_cast<long>(c.size()) - 1; }
  std::uint64_t lc() const { return c.back(); }
  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool operator==(const UniPoly&) const = default;
};

UniPoly add(const UniPoly& a, const UniPoly& b, const Field& F);
UniPoly sub(const UniPoly& a, const UniPoly& b, const Field& F);
UniPoly mul(const UniPoly& a, const UniPoly& b, const Field& F);
UniPoly scale(const UniPoly& a, std::uint64_t s, const Field& F);
/// Quotient and remainder; b must be nonzero.
std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b,
                                   const Field& F);
/// Exact division; throws std::logic_error on a nonzero remainder.
UniPoly div_exact(const UniPoly& a, const UniPoly& b, const Field& F);
UniPoly monic(const UniPoly& a, const Field& F);
/// Monic gcd; gcd(0, b) = monic b.
UniPoly gcd(const UniPoly& a, const UniPoly& b, const Field& F);
std::uint64_t eval(const UniPoly& a, std::uint64_t x, const Field& F);
/// Lagrange interpolation through distinct points.
UniPoly interpolate(const std::vector<std::uint64_t>& xs,
                    const std::vector<std::uint64_t>& ys, const Field& F);

/// Bivariate polynomial as coefficients of powers of the main variable,
/// each a univariate polynomial in the second variable.
struct BiPoly {
  std::vector<UniPoly> cx;  // cx[i] = coefficient of x^i

  bool is_zero() const { return cx.empty(); }
  long deg_x() const { return static_cast<long>(cx.size()) - 1; }
  long deg_y() const;
  long total_degree() const;
  void trim() {
    while (!cx.empty() && cx.back().is_zero()) cx.pop_back();
  }
};

UniPoly content_x(const BiPoly& a, const Field& F);
BiPoly divide_content(const BiPoly& a, const UniPoly& c, const Field& F);
UniPoly eval_y(const BiPoly& a, std::uint64_t beta, const Field& F);

/// Modular (evaluation/interpolation) bivariate gcd, Brown's algorithm.
/// Monte Carlo: callers must validate the result by trial division.
BiPoly brown_gcd(const BiPoly& a, const BiPoly& b, const Field& F, Rng& rng);

}  // namespace hilb::fp
