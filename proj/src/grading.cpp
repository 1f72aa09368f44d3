#include "hilb/grading.hpp"

#include <stdexcept>

#include "hilb/binom.hpp"

namespace hilb {

std::int64_t monomial_count(int n, int t) {
  if (n < 1 || t < 0) throw std::domain_error("monomial_count: bad arguments");
  return to_int64(binom(t + n - 1, n - 1));
}

namespace {

void enumerate(int n, int t, Exponents& cur, std::vector<Exponents>& out) {
  if (static_cast<int>(cur.size()) == n - 1) {
    cur.push_back(t);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int e = t; e >= 0; --e) {
    cur.push_back(e);
    enumerate(n, t - e, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Exponents> monomials_of_degree(int n, int t) {
  if (n < 1 || t < 0)
    throw std::domain_error("monomials_of_degree: bad arguments");
  std::vector<Exponents> out;
  out.reserve(static_cast<std::size_t>(monomial_count(n, t)));
  Exponents cur;
  enumerate(n, t, cur, out);
  return out;
}

MonomialIndex::MonomialIndex(int n, int t) : list_(monomials_of_degree(n, t)) {
  for (std::size_t i = 0; i < list_.size(); ++i) pos_[list_[i]] = i;
}

std::size_t MonomialIndex::at(const Exponents& e) const {
  auto it = pos_.find(e);
  if (it == pos_.end())
    throw std::out_of_range("MonomialIndex: monomial not in this degree");
  return it->second;
}

}  // namespace hilb
