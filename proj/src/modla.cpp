#include "hilb/modla.hpp"

#include <stdexcept>

#include "hilb/binom.hpp"

namespace hilb::modla {

namespace {

std::vector<std::vector<std::uint64_t>> draw_linears(int n, int m,
                                                     const fp::Field& F,
                                                     fp::Rng& rng) {
  std::vector<std::vector<std::uint64_t>> ls;
  for (int k = 0; k < m; ++k) {
    std::vector<std::uint64_t> coeffs(n);
    for (auto& c : coeffs) c = rng.uniform(F);
    ls.push_back(std::move(coeffs));
  }
  return ls;
}

std::vector<fp::Row> reduced_ideal_rows(
    const SliceSource& src, const std::vector<std::vector<std::uint64_t>>& linears,
    int t, const fp::Field& F) {
  std::vector<fp::Row> rows = src.slice_rows(t, F);
  for (const auto& l : linears)
    for (auto& r : linear_multiple_rows(src.vars(), l, t, F))
      rows.push_back(std::move(r));
  return rows;
}

std::int64_t quotient_dim(const SliceSource& src,
                          const std::vector<std::vector<std::uint64_t>>& linears,
                          int t, const fp::Field& F) {
  auto rows = reduced_ideal_rows(src, linears, t, F);
  std::size_t cols = static_cast<std::size_t>(monomial_count(src.vars(), t));
  return monomial_count(src.vars(), t) -
         static_cast<std::int64_t>(fp::rank_of_rows(rows, cols, F));
}

}  // namespace

std::int64_t slice_dim(const SliceSource& src, int t, const EngineConfig& cfg) {
  return confirmed<std::int64_t>(cfg, [&](const fp::Field& F, fp::Rng&) {
    auto rows = src.slice_rows(t, F);
    std::size_t cols = static_cast<std::size_t>(monomial_count(src.vars(), t));
    return static_cast<std::int64_t>(fp::rank_of_rows(rows, cols, F));
  });
}

HilbertSeq quotient_by_generic_linears(const SliceSource& src, int m, int t_max,
                                       const EngineConfig& cfg) {
  if (m < 0 || m > src.vars())
    throw std::invalid_argument("quotient: need 0 <= m <= n");
  auto values = confirmed<std::vector<std::int64_t>>(
      cfg, [&](const fp::Field& F, fp::Rng& rng) {
        auto linears = draw_linears(src.vars(), m, F, rng);
        std::vector<std::int64_t> h;
        for (int t = 0; t <= t_max; ++t)
          h.push_back(quotient_dim(src, linears, t, F));
        return h;
      });
  return HilbertSeq(std::move(values), Tail::none);
}

int reduction_number(const SliceSource& src, int m, const EngineConfig& cfg) {
  if (m < 0 || m > src.vars())
    throw std::invalid_argument("reduction_number: need 0 <= m <= n");
  return confirmed<int>(cfg, [&](const fp::Field& F, fp::Rng& rng) {
    auto linears = draw_linears(src.vars(), m, F, rng);
    for (int t = 0; t <= cfg.degree_cap; ++t) {
      if (quotient_dim(src, linears, t, F) == 0) return t - 1;
    }
    throw std::runtime_error(
        "reduction_number: dimension too large or cap too low");
  });
}

const LefschetzRow* LefschetzReport::row_at(int t) const {
  for (const auto& r : rows)
    if (r.t == t) return &r;
  return nullptr;
}

namespace {

LefschetzReport lefschetz_run(const SliceSource& src, int m, int form_degree,
                              int t_max, const fp::Field& F, fp::Rng& rng) {
  const int n = src.vars();
  auto linears = draw_linears(n, m, F, rng);
  // The multiplier is drawn after the reduction forms, from the same stream.
  std::vector<std::uint64_t> multiplier(
      static_cast<std::size_t>(monomial_count(n, form_degree)));
  for (auto& c : multiplier) c = rng.uniform(F);

  std::vector<std::int64_t> dims;      // dim A_t
  std::vector<std::int64_t> ideal_rk;  // rank of the reduced ideal slice
  int vanish = -1;
  for (int t = 0; t <= t_max; ++t) {
    auto rows = reduced_ideal_rows(src, linears, t, F);
    std::size_t cols = static_cast<std::size_t>(monomial_count(n, t));
    std::int64_t rk =
        static_cast<std::int64_t>(fp::rank_of_rows(rows, cols, F));
    ideal_rk.push_back(rk);
    dims.push_back(monomial_count(n, t) - rk);
    if (dims.back() == 0) {
      vanish = t;
      break;
    }
  }
  if (vanish < 0)
    throw std::runtime_error(
        "lefschetz test: algebra not Artinian below t_max; raise --tmax");

  LefschetzReport rep;
  rep.form_degree = form_degree;
  rep.pass = true;
  for (int t = 0; t + form_degree <= vanish; ++t) {
    const int to = t + form_degree;
    auto rows = reduced_ideal_rows(src, linears, to, F);
    for (auto& r : form_multiple_rows(src.vars(), multiplier, form_degree, to, F))
      rows.push_back(std::move(r));
    std::size_t cols = static_cast<std::size_t>(monomial_count(n, to));
    std::int64_t stacked =
        static_cast<std::int64_t>(fp::rank_of_rows(rows, cols, F));
    LefschetzRow row;
    row.t = t;
    row.dim_from = dims[t];
    row.dim_to = dims[to];
    row.rank = stacked - ideal_rk[to];
    row.max_rank = std::min(row.dim_from, row.dim_to);
    row.ok = row.rank == row.max_rank;
    rep.pass = rep.pass && row.ok;
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace

LefschetzReport wlp_test(const SliceSource& src, int m, int t_max,
                         const EngineConfig& cfg) {
  return confirmed<LefschetzReport>(
      cfg, [&](const fp::Field& F, fp::Rng& rng) {
        return lefschetz_run(src, m, 1, t_max, F, rng);
      });
}

LefschetzReport slp_test(const SliceSource& src, int m, int form_degree,
                         int t_max, const EngineConfig& cfg) {
  if (form_degree < 1)
    throw std::invalid_argument("slp_test: form degree must be >= 1");
  return confirmed<LefschetzReport>(
      cfg, [&](const fp::Field& F, fp::Rng& rng) {
        return lefschetz_run(src, m, form_degree, t_max, F, rng);
      });
}

namespace {

// Exact interpolation through (xs[0..deg], ys[0..deg]); constant term first.
std::vector<mpq_class> lagrange(const std::vector<int>& xs,
                                const std::vector<std::int64_t>& ys, int deg) {
  std::vector<mpq_class> acc(static_cast<std::size_t>(deg) + 1, mpq_class(0));
  for (int i = 0; i <= deg; ++i) {
    std::vector<mpq_class> basis{mpq_class(1)};
    mpq_class denom(1);
    for (int j = 0; j <= deg; ++j) {
      if (j == i) continue;
      std::vector<mpq_class> next(basis.size() + 1, mpq_class(0));
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k] += basis[k] * mpq_class(-xs[j]);
        next[k + 1] += basis[k];
      }
      basis = std::move(next);
      denom *= mpq_class(xs[i] - xs[j]);
    }
    mpq_class scale = mpq_class(ys[i]) / denom;
    for (std::size_t k = 0; k < basis.size(); ++k) acc[k] += basis[k] * scale;
  }
  while (acc.size() > 1 && acc.back() == 0) acc.pop_back();
  return acc;
}

mpq_class eval_poly(const std::vector<mpq_class>& coeffs, int x) {
  mpq_class v = 0;
  for (std::size_t k = coeffs.size(); k-- > 0;) v = v * x + coeffs[k];
  return v;
}

}  // namespace

FittedPolynomial truncated_ideal_polynomial(
    const SliceSource& src, int d,
    std::optional<std::pair<int, int>> sample_range, const EngineConfig& cfg) {
  const int n = src.vars();
  int lo = d, hi = d + n + 2;
  if (sample_range) {
    lo = sample_range->first;
    hi = sample_range->second;
  }
  if (lo < 0 || hi < lo + 3)
    throw std::invalid_argument("truncated_ideal_polynomial: bad sample range");

  TruncatedSource trunc(src, d);
  auto values = confirmed<std::vector<std::int64_t>>(
      cfg, [&](const fp::Field& F, fp::Rng&) {
        std::vector<std::int64_t> v;
        for (int t = lo; t <= hi; ++t) {
          auto rows = trunc.slice_rows(t, F);
          std::size_t cols = static_cast<std::size_t>(monomial_count(n, t));
          v.push_back(monomial_count(n, t) -
                      static_cast<std::int64_t>(fp::rank_of_rows(rows, cols, F)));
        }
        return v;
      });

  const int count = hi - lo + 1;
  std::vector<int> xs(count);
  for (int i = 0; i < count; ++i) xs[i] = lo + i;

  FittedPolynomial fit;
  for (int i = 0; i < count; ++i) fit.samples.emplace_back(xs[i], values[i]);

  // Proper subschemes have Hilbert polynomials of degree < n; a fit must
  // still leave three spare sample points for the stabilization check.
  const int max_deg = std::min(n - 1, count - 4);
  for (int deg = 0; deg <= max_deg; ++deg) {
    auto coeffs = lagrange(xs, values, deg);
    bool all_match = true;
    for (int i = deg + 1; i < count && all_match; ++i)
      all_match = eval_poly(coeffs, xs[i]) == values[i];
    if (!all_match) continue;
    fit.coefficients = std::move(coeffs);
    fit.degree = static_cast<long>(fit.coefficients.size()) - 1;
    fit.leading = fit.coefficients.back();
    mpq_class sd = fit.leading *
                   mpq_class(factorial(static_cast<unsigned long>(fit.degree)));
    sd.canonicalize();
    if (sd.get_den() != 1)
      throw std::logic_error("truncated_ideal_polynomial: non-integral degree");
    fit.scheme_degree = sd.get_num();
    return fit;
  }
  throw std::runtime_error(
      "truncated_ideal_polynomial: range too small or not yet polynomial");
}

int initial_degree(const SliceSource& src, const EngineConfig& cfg) {
  return confirmed<int>(cfg, [&](const fp::Field& F, fp::Rng&) {
    for (int t = 0; t <= cfg.degree_cap; ++t) {
      for (const auto& row : src.slice_rows(t, F))
        for (std::uint64_t x : row)
          if (x != 0) return t;
    }
    throw std::runtime_error(
        "initial_degree: ideal appears zero up to the degree cap");
  });
}

}  // namespace hilb::modla
