#pragma once

#include <random>

#include "hilb/macaulay.hpp"
#include "hilb/monomial_ideal.hpp"
#include "hilb/seq.hpp"

namespace hilb::testutil {

inline mono::MonomialIdeal random_ideal(std::mt19937_64& gen, int n, int count,
                                        int max_deg) {
  std::uniform_int_distribution<int> e(0, max_deg);
  std::vector<mono::Monomial> gens;
  for (int k = 0; k < count; ++k) {
    Exponents exps(static_cast<std::size_t>(n));
    int total = 0;
    for (auto& x : exps) {
      x = e(gen);
      total += x;
    }
    if (total == 0) continue;  // avoid the unit ideal
    gens.push_back(mono::Monomial{exps});
  }
  return mono::MonomialIdeal::minimalize(n, std::move(gens));
}

inline mono::MonomialIdeal random_artinian_ideal(std::mt19937_64& gen, int n,
                                                 int extra, int max_pure) {
  std::uniform_int_distribution<int> p(1, max_pure);
  std::vector<mono::Monomial> gens;
  for (int i = 0; i < n; ++i) {
    Exponents e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = p(gen);
    gens.push_back(mono::Monomial{e});
  }
  auto more = random_ideal(gen, n, extra, max_pure);
  for (const auto& g : more.generators()) gens.push_back(g);
  return mono::MonomialIdeal::minimalize(n, std::move(gens));
}

/// Random O-sequence with embedding dimension n and bounded window length.
inline HilbertSeq random_o_sequence(std::mt19937_64& gen, int n, int len) {
  std::vector<std::int64_t> v{1};
  if (len > 1) v.push_back(n);
  while (static_cast<int>(v.size()) < len) {
    int i = static_cast<int>(v.size()) - 1;
    mpz_class bound = macaulay::growth(mpz_class(v.back()), i);
    long hi = std::min(bound.get_si(), static_cast<long>(v.back() + 6));
    std::uniform_int_distribution<long> pick(0, hi);
    v.push_back(pick(gen));
    if (v.back() == 0) break;
  }
  return HilbertSeq(std::move(v), Tail::zero);
}

}  // namespace hilb::testutil
