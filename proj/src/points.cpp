#include "hilb/points.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

#include "hilb/fppoly.hpp"

namespace hilb::points {

namespace {

bool projectively_equal(const std::vector<mpq_class>& u,
                        const std::vector<mpq_class>& v) {
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j)
      if (u[i] * v[j] != u[j] * v[i]) return false;
  return true;
}

}  // namespace

PointSet::PointSet(int ambient, std::vector<std::vector<mpq_class>> pts)
    : ambient_(ambient), pts_(std::move(pts)) {
  if (ambient_ < 1) throw std::invalid_argument("PointSet: ambient must be >= 1");
  if (pts_.empty()) throw std::invalid_argument("PointSet: need at least one point");
  for (const auto& p : pts_) {
    if (static_cast<int>(p.size()) != coords())
      throw std::invalid_argument("PointSet: wrong coordinate count");
    bool nonzero = false;
    for (const auto& c : p) nonzero = nonzero || c != 0;
    if (!nonzero) throw std::invalid_argument("PointSet: zero coordinate vector");
  }
  for (std::size_t i = 0; i < pts_.size(); ++i)
    for (std::size_t j = i + 1; j < pts_.size(); ++j)
      if (projectively_equal(pts_[i], pts_[j]))
        throw std::invalid_argument("PointSet: repeated point");
}

PointSet PointSet::subset(const std::vector<int>& indices) const {
  std::vector<std::vector<mpq_class>> sel;
  for (int i : indices) sel.push_back(pts_.at(static_cast<std::size_t>(i)));
  return PointSet(ambient_, std::move(sel));
}

PointSet PointSet::random(int ambient, int count, std::uint64_t seed,
                          std::int64_t box) {
  fp::Rng rng(fp::derive_seed(seed, 0x9055));
  std::vector<std::vector<mpq_class>> pts;
  while (static_cast<int>(pts.size()) < count) {
    std::vector<mpq_class> p{mpq_class(1)};
    for (int i = 0; i < ambient; ++i) p.emplace_back(rng.integer(-box, box));
    bool dup = false;
    for (const auto& q : pts) dup = dup || projectively_equal(p, q);
    if (!dup) pts.push_back(std::move(p));
  }
  return PointSet(ambient, std::move(pts));
}

fp::Matrix evaluation_matrix(const PointSet& z, int t, const fp::Field& F) {
  const int n = z.coords();
  const auto basis = monomials_of_degree(n, t);
  fp::Matrix m(z.size(), basis.size());
  for (std::size_t r = 0; r < z.size(); ++r) {
    std::vector<std::uint64_t> coord(n);
    for (int i = 0; i < n; ++i) coord[i] = F.from_mpq(z.pts()[r][i]);
    for (std::size_t c = 0; c < basis.size(); ++c) {
      std::uint64_t v = 1;
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < basis[c][i]; ++k) v = F.mul(v, coord[i]);
      m.at(r, c) = v;
    }
  }
  return m;
}

std::vector<fp::Row> PointSource::slice_rows(int t, const fp::Field& F) const {
  return evaluation_matrix(z_, t, F).kernel(F);
}

HilbertSeq hilbert_function(const PointSet& z, int t_max,
                            const modla::EngineConfig& cfg) {
  auto values = modla::confirmed<std::vector<std::int64_t>>(
      cfg, [&](const fp::Field& F, fp::Rng&) {
        std::vector<std::int64_t> h;
        for (int t = 0; t <= t_max; ++t)
          h.push_back(
              static_cast<std::int64_t>(evaluation_matrix(z, t, F).rank(F)));
        return h;
      });
  Tail tail = !values.empty() &&
                      values.back() == static_cast<std::int64_t>(z.size())
                  ? Tail::constant
                  : Tail::none;
  return HilbertSeq(std::move(values), tail);
}

HilbertSeq h_vector(const PointSet& z, const modla::EngineConfig& cfg) {
  // h_Z reaches |Z| by degree |Z|-1; track it until it stabilizes.
  int t_max = 1;
  HilbertSeq h = hilbert_function(z, t_max, cfg);
  while (h.tail() != Tail::constant) {
    t_max = std::min(2 * t_max + 1, static_cast<int>(z.size()));
    h = hilbert_function(z, t_max, cfg);
  }
  return difference(h, 1).trimmed();
}

namespace {

bool subset_has_truncated_h(const PointSet& z, const HilbertSeq& h_z,
                            const std::vector<int>& indices,
                            const modla::EngineConfig& cfg,
                            HilbertSeq* got_out, HilbertSeq* want_out) {
  const std::int64_t card = static_cast<std::int64_t>(indices.size());
  // Compare through the first degree where the truncation stabilizes.
  int t_need = 0;
  while (h_z.value_at(t_need) < card) ++t_need;
  PointSet x = z.subset(indices);
  HilbertSeq got = hilbert_function(x, t_need, cfg);
  HilbertSeq want = truncate(h_z, card).extended(t_need + 1);
  bool same = true;
  for (int t = 0; t <= t_need && same; ++t)
    same = got.value_at(t) == want.value_at(t);
  if (!same) {
    if (got_out) *got_out = got;
    if (want_out) *want_out = want;
  }
  return same;
}

bool next_combination(std::vector<int>& idx, int n) {
  const int k = static_cast<int>(idx.size());
  for (int i = k - 1; i >= 0; --i) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

UppResult upp_test(const PointSet& z, const UppOptions& opt,
                   const modla::EngineConfig& cfg) {
  const int n_pts = static_cast<int>(z.size());
  if (opt.exhaustive && n_pts > opt.exhaustive_cap)
    throw std::invalid_argument(
        "upp_test: exhaustive mode capped at " +
        std::to_string(opt.exhaustive_cap) + " points");

  HilbertSeq h_z = hilbert_function(z, std::max(1, n_pts - 1), cfg);
  UppResult res;
  res.pass = true;
  fp::Rng rng(fp::derive_seed(cfg.seed, 0x0990));

  for (int card = 1; card < n_pts && res.pass; ++card) {
    auto check = [&](const std::vector<int>& idx) {
      HilbertSeq got, want;
      if (!subset_has_truncated_h(z, h_z, idx, cfg, &got, &want)) {
        res.pass = false;
        res.witness = idx;
        res.witness_h = got;
        res.expected_h = want;
      }
    };
    if (opt.exhaustive) {
      std::vector<int> idx(card);
      for (int i = 0; i < card; ++i) idx[i] = i;
      do {
        check(idx);
      } while (res.pass && next_combination(idx, n_pts));
    } else {
      for (int s = 0; s < opt.samples && res.pass; ++s) {
        std::vector<int> pool(n_pts);
        for (int i = 0; i < n_pts; ++i) pool[i] = i;
        for (int i = 0; i < card; ++i) {
          int j = static_cast<int>(rng.integer(i, n_pts - 1));
          std::swap(pool[i], pool[j]);
        }
        std::vector<int> idx(pool.begin(), pool.begin() + card);
        std::sort(idx.begin(), idx.end());
        check(idx);
      }
    }
  }
  return res;
}

std::vector<FpForm> degree_forms(const PointSet& z, int d,
                                 const modla::EngineConfig& cfg) {
  // Dimension is cross-checked over all rounds; the coefficients reported
  // live over the round-0 prime.
  modla::confirmed<std::int64_t>(cfg, [&](const fp::Field& F, fp::Rng&) {
    return static_cast<std::int64_t>(evaluation_matrix(z, d, F).rank(F));
  });
  fp::Field F(cfg.prime_for_round(0));
  const auto basis = monomials_of_degree(z.coords(), d);
  std::vector<FpForm> forms;
  for (const auto& row : evaluation_matrix(z, d, F).kernel(F))
    forms.push_back(FpForm::from_row(F.p(), z.coords(), d, row, basis));
  return forms;
}

namespace {

// Exponent of `var` dividing f.
int var_multiplicity(const FpForm& f, int var) {
  int k = INT_MAX;
  for (const auto& [e, c] : f.terms()) k = std::min(k, e[var]);
  return k;
}

FpForm shift_out_var(const FpForm& f, int var, int k) {
  fp::Field F(f.prime());
  FpForm r(f.prime(), f.vars(), f.degree() - k);
  for (const auto& [e, c] : f.terms()) {
    Exponents e2 = e;
    e2[var] -= k;
    r.add_term(e2, c, F);
  }
  return r;
}

// f with var := 1, as a bivariate polynomial in the two remaining variables
// (main = lower index).
fp::BiPoly dehomogenize(const FpForm& f, int var) {
  int a = -1, b = -1;
  for (int i = 0; i < 3; ++i) {
    if (i == var) continue;
    (a < 0 ? a : b) = i;
  }
  fp::BiPoly p;
  for (const auto& [e, c] : f.terms()) {
    const std::size_t i = static_cast<std::size_t>(e[a]);
    const std::size_t j = static_cast<std::size_t>(e[b]);
    if (p.cx.size() <= i) p.cx.resize(i + 1);
    if (p.cx[i].c.size() <= j) p.cx[i].c.resize(j + 1, 0);
    p.cx[i].c[j] = c;
  }
  for (auto& q : p.cx) q.trim();
  p.trim();
  return p;
}

FpForm homogenize(const fp::BiPoly& p, std::uint64_t prime, int var) {
  int a = -1, b = -1;
  for (int i = 0; i < 3; ++i) {
    if (i == var) continue;
    (a < 0 ? a : b) = i;
  }
  const long deg = p.total_degree();
  fp::Field F(prime);
  FpForm f(prime, 3, static_cast<int>(deg));
  for (std::size_t i = 0; i < p.cx.size(); ++i)
    for (std::size_t j = 0; j < p.cx[i].c.size(); ++j) {
      if (p.cx[i].c[j] == 0) continue;
      Exponents e(3, 0);
      e[a] = static_cast<int>(i);
      e[b] = static_cast<int>(j);
      e[var] = static_cast<int>(deg) - e[a] - e[b];
      f.add_term(e, p.cx[i].c[j], F);
    }
  return f;
}

FpForm gcd_pair(const FpForm& f, const FpForm& g, int var, const fp::Field& F,
                fp::Rng& rng) {
  const int kf = var_multiplicity(f, var);
  const int kg = var_multiplicity(g, var);
  const int k = std::min(kf, kg);
  const FpForm fr = shift_out_var(f, var, kf);
  const FpForm gr = shift_out_var(g, var, kg);
  fp::BiPoly h =
      fp::brown_gcd(dehomogenize(fr, var), dehomogenize(gr, var), F, rng);
  FpForm hf = homogenize(h, F.p(), var);
  if (k > 0) {
    Exponents e(3, 0);
    e[var] = k;
    hf = hf * FpForm(F.p(), 3, k).add_term(e, 1, F);
  }
  return hf;
}

}  // namespace

FpForm gcd_of_forms(const std::vector<FpForm>& forms, std::uint64_t seed) {
  if (forms.empty()) throw std::invalid_argument("gcd_of_forms: empty input");
  const std::uint64_t prime = forms.front().prime();
  for (const auto& f : forms) {
    if (f.vars() != 3)
      throw std::invalid_argument("gcd_of_forms: plane forms only (3 variables)");
    if (f.prime() != prime)
      throw std::invalid_argument("gcd_of_forms: mixed prime fields");
    if (f.is_zero()) throw std::invalid_argument("gcd_of_forms: zero form");
  }
  fp::Field F(prime);

  for (int attempt = 0; attempt < 8; ++attempt) {
    fp::Rng rng(fp::derive_seed(seed, 0x6cd0 + static_cast<std::uint64_t>(attempt)));
    const int var = static_cast<int>(rng.integer(0, 2));
    FpForm g = forms.front();
    for (std::size_t i = 1; i < forms.size() && g.degree() > 0; ++i)
      g = gcd_pair(g, forms[i], var, F, rng);
    g = g.monic();
    bool ok = true;
    for (const auto& f : forms) ok = ok && trial_divide(f, g).has_value();
    if (ok) return g;
  }
  throw std::logic_error("gcd_of_forms: trial-division validation failed");
}

}  // namespace hilb::points
