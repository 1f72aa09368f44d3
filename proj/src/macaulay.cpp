#include "hilb/macaulay.hpp"

#include <stdexcept>

#include "hilb/binom.hpp"

namespace hilb::macaulay {

mpz_class BinomialExpansion::value() const {
  mpz_class v = 0;
  for (const auto& t : terms) v += binom(t.top, static_cast<unsigned long>(t.level));
  return v;
}

namespace {

// Largest m >= k with C(m, k) <= c, for c >= 1.
mpz_class largest_top(const mpz_class& c, int k) {
  mpz_class lo = k, hi = k;
  while (binom(hi, static_cast<unsigned long>(k)) <= c) hi = hi * 2 + 1;
  // invariant: C(lo,k) <= c < C(hi,k)
  while (hi - lo > 1) {
    mpz_class mid = (lo + hi) / 2;
    if (binom(mid, static_cast<unsigned long>(k)) <= c)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

}  // namespace

BinomialExpansion binomial_expansion(const mpz_class& c, int i) {
  if (c <= 0 || i <= 0)
    throw std::domain_error("binomial_expansion: need c >= 1 and i >= 1");
  BinomialExpansion ex;
  ex.level = i;
  mpz_class rem = c;
  for (int k = i; k >= 1 && rem > 0; --k) {
    mpz_class m = largest_top(rem, k);
    ex.terms.push_back({m, k});
    rem -= binom(m, static_cast<unsigned long>(k));
  }
  // Greedy choice forces strict descent of the tops and exhausts c by level 1.
  if (rem != 0) throw std::logic_error("binomial_expansion: nonzero remainder");
  return ex;
}

mpz_class growth(const mpz_class& c, int i) {
  if (i <= 0) throw std::domain_error("growth: need i >= 1");
  if (c < 0) throw std::domain_error("growth: negative value");
  if (c == 0) return 0;
  mpz_class g = 0;
  for (const auto& t : binomial_expansion(c, i).terms)
    g += binom(t.top + 1, static_cast<unsigned long>(t.level) + 1);
  return g;
}

OSequenceVerdict is_o_sequence(const HilbertSeq& s) {
  OSequenceVerdict v;
  if (s.empty() || s[0] != 1) {
    v.ok = false;
    v.violation = OSequenceViolation{0, s.empty() ? 0 : s[0], 1, 0, false,
                                     "value at degree 0 must be 1"};
    return v;
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0) {
      v.ok = false;
      v.violation = OSequenceViolation{static_cast<int>(i), s[i], 0, 0, false,
                                       "negative entry"};
      return v;
    }
  }
  for (std::size_t i = 1; i + 1 < s.size(); ++i) {
    mpz_class bound = growth(mpz_class(s[i]), static_cast<int>(i));
    if (bound < s[i + 1]) {
      v.ok = false;
      v.violation = OSequenceViolation{
          static_cast<int>(i), s[i], bound, s[i + 1], false,
          "growth bound exceeded"};
      return v;
    }
  }
  // Beyond the window both tails are safe: zero extension trivially, constant
  // extension because c <= c^<i> always holds.
  v.ok = true;
  return v;
}

OSequenceVerdict is_differentiable_o_sequence(const HilbertSeq& s) {
  OSequenceVerdict base = is_o_sequence(s);
  if (!base.ok) return base;
  OSequenceVerdict diff = is_o_sequence(difference(s, 1));
  if (!diff.ok && diff.violation) diff.violation->in_first_difference = true;
  return diff;
}

std::vector<GrowthVerdict> maximal_growth_degrees(const HilbertSeq& s) {
  OSequenceVerdict v = is_o_sequence(s);
  if (!v.ok) {
    std::string msg = "maximal_growth_degrees: not an O-sequence";
    if (v.violation)
      msg += " (" + v.violation->reason + " at degree " +
             std::to_string(v.violation->degree) + ")";
    throw std::domain_error(msg);
  }
  std::vector<GrowthVerdict> out;
  for (std::size_t i = 1; i < s.size(); ++i) {
    GrowthVerdict g;
    g.degree = static_cast<int>(i);
    g.value = s[i];
    g.bound = growth(mpz_class(s[i]), static_cast<int>(i));
    if (i + 1 < s.size())
      g.next = s[i + 1];
    else if (s.can_extend())
      g.next = s.value_at(i + 1);
    g.is_maximal = g.value > 0 && g.next.has_value() && *g.next == g.bound;
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace hilb::macaulay
