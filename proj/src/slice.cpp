#include "hilb/slice.hpp"

#include <algorithm>

namespace hilb::modla {

std::uint64_t EngineConfig::prime_for_round(int round) const {
  auto it = std::find(fp::kPrimes.begin(), fp::kPrimes.end(), prime);
  if (it == fp::kPrimes.end()) return prime;  // a custom prime is kept as-is
  std::size_t i0 = static_cast<std::size_t>(it - fp::kPrimes.begin());
  return fp::kPrimes[(i0 + static_cast<std::size_t>(round)) % fp::kPrimes.size()];
}

GeneratorSource::GeneratorSource(int n, std::vector<Form> gens)
    : n_(n), gens_(std::move(gens)) {
  for (const auto& g : gens_)
    if (g.vars() != n_)
      throw std::invalid_argument("GeneratorSource: variable count mismatch");
}

std::vector<fp::Row> GeneratorSource::slice_rows(int t,
                                                 const fp::Field& F) const {
  MonomialIndex basis(n_, t);
  std::vector<fp::Row> rows;
  for (const auto& g : gens_) {
    if (g.degree() > t || g.is_zero()) continue;
    for (const auto& m : monomials_of_degree(n_, t - g.degree())) {
      fp::Row row(basis.size(), 0);
      for (const auto& [e, c] : g.terms()) {
        Exponents e2(n_);
        for (int i = 0; i < n_; ++i) e2[i] = e[i] + m[i];
        row[basis.at(e2)] = F.add(row[basis.at(e2)], F.from_mpq(c));
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

GeneratorSource GeneratorSource::restricted_to(int d) const {
  std::vector<Form> kept;
  for (const auto& g : gens_)
    if (g.degree() <= d) kept.push_back(g);
  return GeneratorSource(n_, std::move(kept));
}

std::vector<fp::Row> TruncatedSource::slice_rows(int t,
                                                 const fp::Field& F) const {
  if (t <= d_) return base_.slice_rows(t, F);
  const int n = vars();
  MonomialIndex lower(n, d_);
  MonomialIndex upper(n, t);
  std::vector<fp::Row> at_d =
      fp::row_basis(base_.slice_rows(d_, F), lower.size(), F);
  std::vector<fp::Row> rows;
  for (const auto& m : monomials_of_degree(n, t - d_)) {
    for (const auto& r : at_d) {
      fp::Row row(upper.size(), 0);
      for (std::size_t j = 0; j < lower.size(); ++j) {
        if (r[j] == 0) continue;
        Exponents e(n);
        for (int i = 0; i < n; ++i) e[i] = lower.list()[j][i] + m[i];
        row[upper.at(e)] = F.add(row[upper.at(e)], r[j]);
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::vector<fp::Row> linear_multiple_rows(int n,
                                          const std::vector<std::uint64_t>& linear,
                                          int t, const fp::Field& F) {
  std::vector<fp::Row> rows;
  if (t < 1) return rows;
  MonomialIndex basis(n, t);
  for (const auto& m : monomials_of_degree(n, t - 1)) {
    fp::Row row(basis.size(), 0);
    for (int i = 0; i < n; ++i) {
      if (linear[i] == 0) continue;
      Exponents e = m;
      e[i] += 1;
      row[basis.at(e)] = F.add(row[basis.at(e)], linear[i]);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<fp::Row> form_multiple_rows(int n,
                                        const std::vector<std::uint64_t>& form,
                                        int form_degree, int t,
                                        const fp::Field& F) {
  std::vector<fp::Row> rows;
  if (t < form_degree) return rows;
  MonomialIndex basis(n, t);
  const auto form_basis = monomials_of_degree(n, form_degree);
  for (const auto& m : monomials_of_degree(n, t - form_degree)) {
    fp::Row row(basis.size(), 0);
    for (std::size_t k = 0; k < form_basis.size(); ++k) {
      if (form[k] == 0) continue;
      Exponents e(n);
      for (int i = 0; i < n; ++i) e[i] = form_basis[k][i] + m[i];
      row[basis.at(e)] = F.add(row[basis.at(e)], form[k]);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace hilb::modla
