#include "hilb/monomial_ideal.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hilb/binom.hpp"
#include "hilb/macaulay.hpp"

namespace hilb::mono {

bool Monomial::divides(const Monomial& o) const {
  if (e.size() != o.e.size()) return false;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] > o.e[i]) return false;
  return true;
}

int Monomial::max_index() const {
  for (std::size_t i = e.size(); i-- > 0;)
    if (e[i] > 0) return static_cast<int>(i) + 1;
  return 0;  // the unit monomial
}

std::string Monomial::str() const {
  std::ostringstream os;
  bool any = false;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (any) os << "*";
    os << "x" << i + 1;
    if (e[i] > 1) os << "^" << e[i];
    any = true;
  }
  return any ? os.str() : "1";
}

namespace {

// degree ascending, lex (x_1 > ... > x_n) descending within a degree
bool gen_order(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.e > b.e;
}

}  // namespace

MonomialIdeal MonomialIdeal::minimalize(int n, std::vector<Monomial> gens) {
  for (const auto& g : gens)
    if (static_cast<int>(g.e.size()) != n)
      throw std::invalid_argument("MonomialIdeal: exponent length mismatch");
  std::sort(gens.begin(), gens.end(), gen_order);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> minimal;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& m : minimal) redundant = redundant || m.divides(g);
    if (!redundant) minimal.push_back(g);
  }
  return MonomialIdeal(n, std::move(minimal));
}

bool MonomialIdeal::contains(const Exponents& e) const {
  Monomial m{e};
  for (const auto& g : gens_)
    if (g.divides(m)) return true;
  return false;
}

std::vector<Form> MonomialIdeal::generator_forms() const {
  std::vector<Form> forms;
  for (const auto& g : gens_) forms.push_back(Form::monomial(n_, g.e));
  return forms;
}

HilbertSeq hilbert_function(const MonomialIdeal& I, int t_max) {
  if (t_max < 0) throw std::domain_error("hilbert_function: t_max < 0");
  std::vector<std::int64_t> h;
  for (int t = 0; t <= t_max; ++t) {
    std::int64_t count = 0;
    for (const auto& m : monomials_of_degree(I.vars(), t))
      if (!I.contains(m)) ++count;
    h.push_back(count);
  }
  return HilbertSeq(std::move(h), Tail::none);
}

MonomialIdeal lex_ideal(const HilbertSeq& s, int n) {
  if (s.tail() == Tail::constant)
    throw std::invalid_argument(
        "lex_ideal: expects a finite (zero-extended) Hilbert function");
  auto verdict = macaulay::is_o_sequence(s);
  if (!verdict.ok) {
    std::string msg = "lex_ideal: not an O-sequence";
    if (verdict.violation)
      msg += " (" + verdict.violation->reason + " at degree " +
             std::to_string(verdict.violation->degree) + ")";
    throw std::domain_error(msg);
  }
  if (s.size() > 1 && s[1] > n)
    throw std::domain_error("lex_ideal: s[1] exceeds the variable count");

  int last_positive = -1;
  for (std::size_t t = 0; t < s.size(); ++t)
    if (s[t] > 0) last_positive = static_cast<int>(t);

  std::vector<Monomial> gens;
  std::set<Exponents> prev_segment;  // segment in the previous degree
  for (int t = 1; t <= last_positive + 1; ++t) {
    const std::int64_t want =
        t < static_cast<int>(s.size()) ? s[t] : 0;
    const std::int64_t seg_size = monomial_count(n, t) - want;
    if (seg_size < 0)
      throw std::domain_error("lex_ideal: value exceeds ring dimension at degree " +
                              std::to_string(t));
    const auto all = monomials_of_degree(n, t);  // lex descending
    std::set<Exponents> segment(all.begin(),
                                all.begin() + static_cast<std::size_t>(seg_size));
    // Multiples of the previous segment form a lex segment themselves;
    // Macaulay's bound guarantees they sit inside this one.
    std::set<Exponents> multiples;
    for (const auto& u : prev_segment)
      for (int i = 0; i < n; ++i) {
        Exponents e = u;
        e[i] += 1;
        multiples.insert(std::move(e));
      }
    for (const auto& e : multiples)
      if (!segment.count(e))
        throw std::logic_error("lex_ideal: segment not an ideal slice");
    for (const auto& e : segment)
      if (!multiples.count(e)) gens.push_back(Monomial{e});
    prev_segment = std::move(segment);
  }
  return MonomialIdeal::minimalize(n, std::move(gens));
}

bool is_stable(const MonomialIdeal& I) {
  for (const auto& u : I.generators()) {
    const int mi = u.max_index();
    for (int j = 1; j < mi; ++j) {
      Exponents e = u.e;
      e[static_cast<std::size_t>(mi) - 1] -= 1;
      e[static_cast<std::size_t>(j) - 1] += 1;
      if (!I.contains(e)) return false;
    }
  }
  return true;
}

void BettiDiagram::add(int col, int row, long long v) {
  if (v == 0) return;
  entries_[{col, row}] += v;
  cols_ = std::max(cols_, col + 1);
  max_row_ = std::max(max_row_, row);
}

long long BettiDiagram::at(int col, int row) const {
  auto it = entries_.find({col, row});
  return it == entries_.end() ? 0 : it->second;
}

std::vector<long long> BettiDiagram::totals() const {
  std::vector<long long> t(static_cast<std::size_t>(cols_), 0);
  for (const auto& [key, v] : entries_) t[static_cast<std::size_t>(key.first)] += v;
  return t;
}

std::string BettiDiagram::render() const {
  std::ostringstream os;
  auto cell = [&](const std::string& s) {
    os << std::string(s.size() >= 6 ? 1 : 6 - s.size(), ' ') << s;
  };
  os << "total:";
  for (long long t : totals()) cell(std::to_string(t));
  os << "\n" << std::string(8 + 6 * static_cast<std::size_t>(cols_), '-') << "\n";
  for (int r = 0; r <= max_row_; ++r) {
    std::string label = std::to_string(r) + ":";
    os << std::string(label.size() >= 6 ? 1 : 6 - label.size(), ' ') << label;
    for (int c = 0; c < cols_; ++c) {
      long long v = at(c, r);
      cell(v == 0 ? "-" : std::to_string(v));
    }
    os << "\n";
  }
  return os.str();
}

BettiDiagram ek_betti(const MonomialIdeal& I) {
  if (!is_stable(I))
    throw std::domain_error("Eliahou-Kervaire requires a stable ideal");
  BettiDiagram b;
  b.add(0, 0, 1);
  for (const auto& u : I.generators()) {
    const int m = u.max_index();
    const int d = u.degree();
    for (int i = 0; i < m; ++i)
      b.add(i + 1, d - 1, to_int64(binom(m - 1, i)));
  }
  return b;
}

bool is_artinian(const MonomialIdeal& I) {
  const int n = I.vars();
  std::vector<bool> pure(static_cast<std::size_t>(n), false);
  for (const auto& g : I.generators()) {
    int support = 0, var = -1;
    for (int i = 0; i < n; ++i)
      if (g.e[static_cast<std::size_t>(i)] > 0) {
        ++support;
        var = i;
      }
    if (support == 1) pure[static_cast<std::size_t>(var)] = true;
  }
  for (bool p : pure)
    if (!p) return false;
  return true;
}

namespace {

std::vector<Monomial> standard_monomials(const MonomialIdeal& I) {
  // Bounded by the pure powers, so enumeration terminates.
  std::vector<Monomial> out;
  for (int t = 0;; ++t) {
    bool any = false;
    for (const auto& m : monomials_of_degree(I.vars(), t))
      if (!I.contains(m)) {
        out.push_back(Monomial{m});
        any = true;
      }
    if (!any) break;
  }
  return out;
}

}  // namespace

std::vector<Monomial> socle_monomials(const MonomialIdeal& I) {
  if (!is_artinian(I))
    throw std::domain_error("socle: quotient is not Artinian");
  std::vector<Monomial> socle;
  for (const auto& u : standard_monomials(I)) {
    bool killed_by_all = true;
    for (int i = 0; i < I.vars() && killed_by_all; ++i) {
      Exponents e = u.e;
      e[static_cast<std::size_t>(i)] += 1;
      killed_by_all = I.contains(e);
    }
    if (killed_by_all) socle.push_back(u);
  }
  std::sort(socle.begin(), socle.end(), gen_order);
  return socle;
}

std::vector<int> socle_degrees(const MonomialIdeal& I) {
  std::vector<int> degs;
  for (const auto& u : socle_monomials(I)) degs.push_back(u.degree());
  std::sort(degs.begin(), degs.end());
  return degs;
}

Distraction distraction_points(const MonomialIdeal& I) {
  if (!is_artinian(I))
    throw std::domain_error("distraction: quotient is not Artinian");
  const int n = I.vars();

  std::vector<std::vector<mpq_class>> pts;
  for (const auto& u : standard_monomials(I)) {
    std::vector<mpq_class> p{mpq_class(1)};
    for (int i = 0; i < n; ++i) p.emplace_back(u.e[static_cast<std::size_t>(i)]);
    pts.push_back(std::move(p));
  }

  std::vector<Form> lifted;
  for (const auto& g : I.generators()) {
    Form f(n + 1, 0);
    Exponents unit(n + 1, 0);
    f.add_term(unit, 1);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < g.e[static_cast<std::size_t>(i)]; ++k) {
        // multiply by (x_{i+1} - k * x_0)
        Form lin(n + 1, 1);
        Exponents xi(n + 1, 0), x0(n + 1, 0);
        xi[static_cast<std::size_t>(i) + 1] = 1;
        x0[0] = 1;
        lin.add_term(xi, 1);
        if (k != 0) lin.add_term(x0, -k);
        f = f * lin;
      }
    lifted.push_back(std::move(f));
  }
  return Distraction{points::PointSet(n, std::move(pts)), std::move(lifted)};
}

}  // namespace hilb::mono
