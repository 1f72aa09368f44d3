#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "hilb/seq.hpp"

namespace hilb::macaulay {

struct BinomialTerm {
  mpz_class top;  // m_j
  int level;      // j
  bool operator==(const BinomialTerm&) const = default;
};

/// The unique expansion c = C(m_i,i) + C(m_{i-1},i-1) + ... + C(m_j,j)
/// with m_i > m_{i-1} > ... > m_j >= j >= 1.
struct BinomialExpansion {
  int level = 0;                    // i
  std::vector<BinomialTerm> terms;  // levels descending from i

  mpz_class value() const;  // reconstructs c
};

/// Greedy i-binomial expansion of c (c >= 1, i >= 1).
BinomialExpansion binomial_expansion(const mpz_class& c, int i);

/// The Macaulay bound c^<i>: the largest admissible next value of an
/// O-sequence taking value c in degree i.  growth(0, i) = 0.
mpz_class growth(const mpz_class& c, int i);

struct OSequenceViolation {
  int degree = 0;            // the failing step is degree -> degree+1
  std::int64_t value = 0;    // s[degree]
  mpz_class bound = 0;       // value^<degree>
  std::int64_t next = 0;     // s[degree+1]
  bool in_first_difference = false;
  std::string reason;
};

struct OSequenceVerdict {
  bool ok = false;
  std::optional<OSequenceViolation> violation;
  explicit operator bool() const { return ok; }
};

/// s[0] = 1, no negative entries, and s[i+1] <= s[i]^<i> for every i >= 1.
/// The step 0 -> 1 is unconstrained (s[1] is the embedding dimension).
OSequenceVerdict is_o_sequence(const HilbertSeq& s);

/// s and its first difference are both O-sequences.
OSequenceVerdict is_differentiable_o_sequence(const HilbertSeq& s);

struct GrowthVerdict {
  int degree = 0;
  std::int64_t value = 0;
  mpz_class bound = 0;
  std::optional<std::int64_t> next;  // absent at the window edge
  bool is_maximal = false;           // next == bound (and value > 0)
};

/// One verdict per degree i >= 1 of an O-sequence, flagging the degrees
/// where the growth to degree i+1 attains the Macaulay bound.  The bound is
/// reported even at the window edge, where `next` is absent.  Growth from a
/// zero value is vacuous and never flagged.
/// Throws std::domain_error (carrying the violation) on non-O-sequences.
std::vector<GrowthVerdict> maximal_growth_degrees(const HilbertSeq& s);

}  // namespace hilb::macaulay
