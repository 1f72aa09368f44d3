#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hilb {

/// How a finite value window continues past its last index.
enum class Tail {
  none,      // no claim about values beyond the window
  zero,      // extends by zeros (h-vectors, differences)
  constant,  // last value repeats forever (Hilbert functions of points)
};

/// A degree-indexed integer sequence: a Hilbert function, an h-vector, or a
/// difference of one.  Index 0 is degree 0.  Entries may be negative:
/// differences of arbitrary sequences are legitimate data here, and
/// O-sequence validation is a separate concern (see macaulay.hpp).
class HilbertSeq {
 public:
  HilbertSeq() = default;
  explicit HilbertSeq(std::vector<std::int64_t> values, Tail tail = Tail::none)
      : values_(std::move(values)), tail_(tail) {}

  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  std::int64_t operator[](std::size_t t) const { return values_.at(t); }
  const std::vector<std::int64_t>& values() const { return values_; }
  Tail tail() const { return tail_; }
  std::int64_t back() const { return values_.back(); }

  HilbertSeq with_tail(Tail t) const { return HilbertSeq(values_, t); }

  /// True when indices past the window have a defined value.
  bool can_extend() const { return tail_ != Tail::none; }

  /// Value at any degree, applying the tail beyond the window.
  /// Throws std::out_of_range past the window of a Tail::none sequence.
  std::int64_t value_at(std::size_t t) const;

  /// Same window, materialized out to at least n entries using the tail.
  HilbertSeq extended(std::size_t n) const;

  /// Window with trailing zeros removed (tail becomes zero).
  HilbertSeq trimmed() const;

  bool window_equals(const HilbertSeq& o) const { return values_ == o.values_; }
  bool operator==(const HilbertSeq& o) const {
    return values_ == o.values_ && tail_ == o.tail_;
  }

  std::string str() const;

 private:
  std::vector<std::int64_t> values_;
  Tail tail_ = Tail::none;
};

/// k-th difference with the convention that the value at degree -1 is 0.
/// Output window matches the input window; negative entries are allowed.
HilbertSeq difference(const HilbertSeq& s, int k = 1);

/// Running sums; inverse of difference(s, 1) on the window.
HilbertSeq partial_sum(const HilbertSeq& s);

/// Coefficients of prod_i (1 + t + ... + t^(d_i - 1)): the h-vector of a
/// complete intersection with the given generator degrees.  Palindromic,
/// sums to the product of the degrees.  Empty input gives (1).
HilbertSeq ci_h_vector(const std::vector<int>& degrees);

/// Pointwise minimum of a (non-decreasing) points Hilbert function and the
/// constant `total`: the Hilbert function forced on any total-point subset
/// of a uniform-position set.  Errors when total exceeds the eventual value.
HilbertSeq truncate(const HilbertSeq& s, std::int64_t total);

}  // namespace hilb
