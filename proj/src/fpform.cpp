#include "hilb/fpform.hpp"

#include <sstream>
#include <stdexcept>

namespace hilb {

FpForm FpForm::from_row(std::uint64_t prime, int n, int degree,
                        const std::vector<std::uint64_t>& row,
                        const std::vector<Exponents>& basis) {
  if (row.size() != basis.size())
    throw std::invalid_argument("FpForm::from_row: size mismatch");
  FpForm f(prime, n, degree);
  for (std::size_t i = 0; i < row.size(); ++i)
    if (row[i] != 0) f.terms_[basis[i]] = row[i];
  return f;
}

FpForm FpForm::reduce(const Form& f, const fp::Field& F) {
  FpForm r(F.p(), f.vars(), f.degree());
  for (const auto& [e, c] : f.terms()) {
    std::uint64_t v = F.from_mpq(c);
    if (v != 0) r.terms_[e] = v;
  }
  return r;
}

FpForm& FpForm::add_term(const Exponents& e, std::uint64_t c,
                         const fp::Field& F) {
  if (static_cast<int>(e.size()) != n_ || total_degree(e) != degree_)
    throw std::invalid_argument("FpForm::add_term: bad exponents");
  auto [it, fresh] = terms_.emplace(e, c % F.p());
  if (!fresh) {
    it->second = F.add(it->second, c % F.p());
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

FpForm FpForm::operator*(const FpForm& o) const {
  if (n_ != o.n_ || prime_ != o.prime_)
    throw std::invalid_argument("FpForm: incompatible product");
  fp::Field F(prime_);
  FpForm r(prime_, n_, degree_ + o.degree_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      Exponents e(n_);
      for (int i = 0; i < n_; ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, F.mul(c1, c2), F);
    }
  return r;
}

FpForm FpForm::monic() const {
  if (terms_.empty()) return *this;
  fp::Field F(prime_);
  const std::uint64_t inv = F.inv(terms_.rbegin()->second);
  FpForm r(prime_, n_, degree_);
  for (const auto& [e, c] : terms_) r.terms_[e] = F.mul(c, inv);
  return r;
}

std::string FpForm::str(const std::vector<std::string>& var_names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    os << it->second;
    for (int i = 0; i < n_; ++i) {
      if (it->first[i] == 0) continue;
      os << "*";
      if (static_cast<std::size_t>(i) < var_names.size())
        os << var_names[i];
      else
        os << "x" << i + 1;
      if (it->first[i] > 1) os << "^" << it->first[i];
    }
    first = false;
  }
  return os.str();
}

std::optional<FpForm> trial_divide(const FpForm& f, const FpForm& g) {
  if (g.is_zero()) throw std::domain_error("trial_divide: zero divisor");
  if (f.prime() != g.prime() || f.vars() != g.vars())
    throw std::invalid_argument("trial_divide: incompatible forms");
  if (f.is_zero() || f.degree() < g.degree()) return std::nullopt;
  fp::Field F(f.prime());
  const int n = f.vars();

  // Division by a single divisor: with any monomial order, g | f forces the
  // leading term of g to divide the leading term of every partial remainder.
  FpForm rem = f;
  FpForm q(f.prime(), n, f.degree() - g.degree());
  const Exponents& glead = g.terms().rbegin()->first;
  const std::uint64_t glc_inv = F.inv(g.terms().rbegin()->second);
  while (!rem.is_zero()) {
    const Exponents& rlead = rem.terms().rbegin()->first;
    Exponents shift(n);
    for (int i = 0; i < n; ++i) {
      shift[i] = rlead[i] - glead[i];
      if (shift[i] < 0) return std::nullopt;
    }
    const std::uint64_t coef = F.mul(rem.terms().rbegin()->second, glc_inv);
    q.add_term(shift, coef, F);
    for (const auto& [e, c] : g.terms()) {
      Exponents e2(n);
      for (int i = 0; i < n; ++i) e2[i] = e[i] + shift[i];
      rem.add_term(e2, F.neg(F.mul(coef, c)), F);
    }
  }
  return q;
}

}  // namespace hilb
