#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace hilb {

using Exponents = std::vector<int>;

inline int total_degree(const Exponents& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

/// dim R_t for R = k[x_1..x_n]: C(t+n-1, n-1).
std::int64_t monomial_count(int n, int t);

/// All exponent vectors of total degree t in n variables, in descending
/// lexicographic order with x_1 > x_2 > ... > x_n (so x_1^t comes first).
std::vector<Exponents> monomials_of_degree(int n, int t);

/// Position lookup for the basis enumerated by monomials_of_degree.
class MonomialIndex {
 public:
  MonomialIndex(int n, int t);
  std::size_t size() const { return list_.size(); }
  const std::vector<Exponents>& list() const { return list_; }
  std::size_t at(const Exponents& e) const;

 private:
  std::vector<Exponents> list_;
  std::map<Exponents, std::size_t> pos_;
};

}  // namespace hilb
