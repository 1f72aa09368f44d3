#include "hilb/seq.hpp"

#include <sstream>
#include <stdexcept>

namespace hilb {

std::int64_t HilbertSeq::value_at(std::size_t t) const {
  if (t < values_.size()) return values_[t];
  switch (tail_) {
    case Tail::zero:
      return 0;
    case Tail::constant:
      if (values_.empty()) throw std::out_of_range("empty sequence");
      return values_.back();
    case Tail::none:
      throw std::out_of_range("degree past window of an unextendable sequence");
  }
  return 0;
}

HilbertSeq HilbertSeq::extended(std::size_t n) const {
  if (n <= values_.size()) return *this;
  std::vector<std::int64_t> v = values_;
  v.reserve(n);
  while (v.size() < n) v.push_back(value_at(v.size()));
  return HilbertSeq(std::move(v), tail_);
}

HilbertSeq HilbertSeq::trimmed() const {
  std::vector<std::int64_t> v = values_;
  while (!v.empty() && v.back() == 0) v.pop_back();
  return HilbertSeq(std::move(v), Tail::zero);
}

std::string HilbertSeq::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) os << ",";
    os << values_[i];
  }
  if (tail_ == Tail::constant) os << ",...";
  return os.str();
}

HilbertSeq difference(const HilbertSeq& s, int k) {
  if (k < 0) throw std::domain_error("difference: negative order");
  std::vector<std::int64_t> v = s.values();
  for (int round = 0; round < k; ++round) {
    std::int64_t prev = 0;  // value at degree -1
    for (auto& x : v) {
      std::int64_t cur = x;
      x = cur - prev;
      prev = cur;
    }
  }
  // A constant continuation differences to zero; a zero continuation stays
  // zero beyond the window (the jump at the window edge is outside it).
  Tail t = s.tail() == Tail::none ? Tail::none : Tail::zero;
  if (k == 0) t = s.tail();
  return HilbertSeq(std::move(v), t);
}

HilbertSeq partial_sum(const HilbertSeq& s) {
  std::vector<std::int64_t> v = s.values();
  std::int64_t run = 0;
  for (auto& x : v) {
    run += x;
    x = run;
  }
  // Sums stabilize only when the summand eventually vanishes.
  Tail t = Tail::none;
  if (s.tail() == Tail::zero) t = Tail::constant;
  if (s.tail() == Tail::constant && !s.empty() && s.back() == 0)
    t = Tail::constant;
  return HilbertSeq(std::move(v), t);
}

HilbertSeq ci_h_vector(const std::vector<int>& degrees) {
  std::vector<std::int64_t> h{1};
  for (int d : degrees) {
    if (d < 1) throw std::domain_error("ci_h_vector: degrees must be >= 1");
    std::vector<std::int64_t> next(h.size() + d - 1, 0);
    for (std::size_t i = 0; i < h.size(); ++i)
      for (int j = 0; j < d; ++j) next[i + j] += h[i];
    h = std::move(next);
  }
  return HilbertSeq(std::move(h), Tail::zero);
}

HilbertSeq truncate(const HilbertSeq& s, std::int64_t total) {
  if (s.empty()) throw std::domain_error("truncate: empty sequence");
  if (total < 0) throw std::domain_error("truncate: negative total");
  if (total > s.back())
    throw std::domain_error("truncation above cardinality");
  std::vector<std::int64_t> v = s.values();
  for (auto& x : v)
    if (x > total) x = total;
  return HilbertSeq(std::move(v), Tail::constant);
}

}  // namespace hilb
