#include "hilb/form.hpp"

#include <sstream>
#include <stdexcept>

namespace hilb {

Form Form::monomial(int n, const Exponents& e, const mpq_class& c) {
  Form f(n, total_degree(e));
  f.add_term(e, c);
  return f;
}

Form Form::linear(const std::vector<mpq_class>& coeffs) {
  Form f(static_cast<int>(coeffs.size()), 1);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Exponents e(coeffs.size(), 0);
    e[i] = 1;
    f.add_term(e, coeffs[i]);
  }
  return f;
}

Form& Form::add_term(const Exponents& e, const mpq_class& c) {
  if (static_cast<int>(e.size()) != n_)
    throw std::invalid_argument("Form: exponent length != variable count");
  if (total_degree(e) != degree_)
    throw std::invalid_argument("Form: term degree mismatch (not homogeneous)");
  if (c == 0) return *this;
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

Form Form::operator+(const Form& o) const {
  if (n_ != o.n_ || degree_ != o.degree_)
    throw std::invalid_argument("Form: incompatible addition");
  Form r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Form Form::operator-(const Form& o) const {
  if (n_ != o.n_ || degree_ != o.degree_)
    throw std::invalid_argument("Form: incompatible subtraction");
  Form r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

Form Form::operator*(const Form& o) const {
  if (n_ != o.n_) throw std::invalid_argument("Form: incompatible product");
  Form r(n_, degree_ + o.degree_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      Exponents e(n_);
      for (int i = 0; i < n_; ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, c1 * c2);
    }
  return r;
}

Form Form::times_monomial(const Exponents& m) const {
  Form r(n_, degree_ + total_degree(m));
  for (const auto& [e, c] : terms_) {
    Exponents e2(n_);
    for (int i = 0; i < n_; ++i) e2[i] = e[i] + m[i];
    r.add_term(e2, c);
  }
  return r;
}

mpq_class Form::eval(const std::vector<mpq_class>& point) const {
  if (static_cast<int>(point.size()) != n_)
    throw std::invalid_argument("Form::eval: wrong point size");
  mpq_class v = 0;
  for (const auto& [e, c] : terms_) {
    mpq_class t = c;
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    v += t;
  }
  return v;
}

std::string Form::str(const std::vector<std::string>& var_names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    os << c.get_str();
    for (int i = 0; i < n_; ++i) {
      if (e[i] == 0) continue;
      os << "*";
      if (static_cast<std::size_t>(i) < var_names.size())
        os << var_names[i];
      else
        os << "x" << i + 1;
      if (e[i] > 1) os << "^" << e[i];
    }
    first = false;
  }
  return os.str();
}

}  // namespace hilb
