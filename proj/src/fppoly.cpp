#include "hilb/fppoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace hilb::fp {

UniPoly add(const UniPoly& a, const UniPoly& b, const Field& F) {
  UniPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < r.c.size(); ++i) {
    std::uint64_t x = i < a.c.size() ? a.c[i] : 0;
    std::uint64_t y = i < b.c.size() ? b.c[i] : 0;
    r.c[i] = F.add(x, y);
  }
  r.trim();
  return r;
}

UniPoly sub(const UniPoly& a, const UniPoly& b, const Field& F) {
  UniPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < r.c.size(); ++i) {
    std::uint64_t x = i < a.c.size() ? a.c[i] : 0;
    std::uint64_t y = i < b.c.size() ? b.c[i] : 0;
    r.c[i] = F.sub(x, y);
  }
  r.trim();
  return r;
}

UniPoly mul(const UniPoly& a, const UniPoly& b, const Field& F) {
  if (a.is_zero() || b.is_zero()) return {};
  UniPoly r;
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j)
      r.c[i + j] = F.add(r.c[i + j], F.mul(a.c[i], b.c[j]));
  }
  return r;
}

UniPoly scale(const UniPoly& a, std::uint64_t s, const Field& F) {
  if (s == 0) return {};
  UniPoly r = a;
  for (auto& x : r.c) x = F.mul(x, s);
  return r;
}

std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b,
                                   const Field& F) {
  if (b.is_zero()) throw std::domain_error("UniPoly: division by zero");
  UniPoly rem = a, q;
  if (a.degree() >= b.degree())
    q.c.assign(static_cast<std::size_t>(a.degree() - b.degree()) + 1, 0);
  const std::uint64_t lead_inv = F.inv(b.lc());
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    const std::size_t shift =
        static_cast<std::size_t>(rem.degree() - b.degree());
    const std::uint64_t f = F.mul(rem.lc(), lead_inv);
    q.c[shift] = f;
    for (std::size_t i = 0; i < b.c.size(); ++i)
      rem.c[shift + i] = F.sub(rem.c[shift + i], F.mul(f, b.c[i]));
    rem.trim();
  }
  q.trim();
  return {q, rem};
}

UniPoly div_exact(const UniPoly& a, const UniPoly& b, const Field& F) {
  auto [q, r] = divrem(a, b, F);
  if (!r.is_zero()) throw std::logic_error("UniPoly: inexact division");
  return q;
}

UniPoly monic(const UniPoly& a, const Field& F) {
  if (a.is_zero()) return a;
  return scale(a, F.inv(a.lc()), F);
}

UniPoly gcd(const UniPoly& a, const UniPoly& b, const Field& F) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = divrem(x, y, F).second;
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x, F);
}

std::uint64_t eval(const UniPoly& a, std::uint64_t x, const Field& F) {
  std::uint64_t v = 0;
  for (std::size_t i = a.c.size(); i-- > 0;) v = F.add(F.mul(v, x), a.c[i]);
  return v;
}

UniPoly interpolate(const std::vector<std::uint64_t>& xs,
                    const std::vector<std::uint64_t>& ys, const Field& F) {
  UniPoly acc;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    UniPoly basis = UniPoly::constant(1);
    std::uint64_t denom = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis = mul(basis, UniPoly{{F.neg(xs[j]), 1}}, F);
      denom = F.mul(denom, F.sub(xs[i], xs[j]));
    }
    acc = add(acc, scale(basis, F.mul(ys[i], F.inv(denom)), F), F);
  }
  return acc;
}

long BiPoly::deg_y() const {
  long d = -1;
  for (const auto& p : cx) d = std::max(d, p.degree());
  return d;
}

long BiPoly::total_degree() const {
  long d = -1;
  for (std::size_t i = 0; i < cx.size(); ++i)
    if (!cx[i].is_zero()) d = std::max(d, static_cast<long>(i) + cx[i].degree());
  return d;
}

UniPoly content_x(const BiPoly& a, const Field& F) {
  UniPoly g;
  for (const auto& p : a.cx) g = gcd(g, p, F);
  return g;
}

BiPoly divide_content(const BiPoly& a, const UniPoly& c, const Field& F) {
  BiPoly r;
  for (const auto& p : a.cx)
    r.cx.push_back(p.is_zero() ? UniPoly{} : div_exact(p, c, F));
  return r;
}

UniPoly eval_y(const BiPoly& a, std::uint64_t beta, const Field& F) {
  UniPoly r;
  r.c.resize(a.cx.size());
  for (std::size_t i = 0; i < a.cx.size(); ++i) r.c[i] = eval(a.cx[i], beta, F);
  r.trim();
  return r;
}

BiPoly brown_gcd(const BiPoly& a, const BiPoly& b, const Field& F, Rng& rng) {
  if (a.is_zero() || b.is_zero())
    throw std::domain_error("brown_gcd: zero input");

  const UniPoly cont_a = content_x(a, F);
  const UniPoly cont_b = content_x(b, F);
  const BiPoly pa = divide_content(a, cont_a, F);
  const BiPoly pb = divide_content(b, cont_b, F);
  const UniPoly cont = gcd(cont_a, cont_b, F);

  // Primitive parts of x-degree zero are units.
  if (pa.deg_x() == 0 || pb.deg_x() == 0)
    return BiPoly{{cont}};

  const UniPoly lead = gcd(pa.cx.back(), pb.cx.back(), F);
  const long deg_y_bound =
      std::min(pa.deg_y(), pb.deg_y()) + lead.degree() + 1;

  long best_dx = std::min(pa.deg_x(), pb.deg_x()) + 1;
  std::vector<std::uint64_t> betas;
  std::vector<UniPoly> images;  // monic gcd at beta, scaled by lead(beta)
  int guard = 0;
  while (static_cast<long>(betas.size()) < deg_y_bound) {
    if (++guard > 64 * deg_y_bound + 512)
      throw std::runtime_error("brown_gcd: could not collect evaluation points");
    const std::uint64_t beta = rng.uniform(F);
    if (std::find(betas.begin(), betas.end(), beta) != betas.end()) continue;
    if (eval(pa.cx.back(), beta, F) == 0) continue;
    if (eval(pb.cx.back(), beta, F) == 0) continue;
    const std::uint64_t lv = eval(lead, beta, F);
    if (lv == 0) continue;
    UniPoly g = gcd(eval_y(pa, beta, F), eval_y(pb, beta, F), F);
    if (g.degree() > best_dx) continue;  // unlucky evaluation
    if (g.degree() < best_dx) {          // all earlier points were unlucky
      best_dx = g.degree();
      betas.clear();
      images.clear();
    }
    betas.push_back(beta);
    images.push_back(scale(g, lv, F));
  }

  if (best_dx == 0) return BiPoly{{cont}};

  BiPoly h;
  h.cx.resize(static_cast<std::size_t>(best_dx) + 1);
  for (long k = 0; k <= best_dx; ++k) {
    std::vector<std::uint64_t> vals(betas.size());
    for (std::size_t i = 0; i < betas.size(); ++i)
      vals[i] = k < static_cast<long>(images[i].c.size()) ? images[i].c[k] : 0;
    h.cx[static_cast<std::size_t>(k)] = interpolate(betas, vals, F);
  }
  h.trim();
  if (h.is_zero()) return BiPoly{{cont}};
  const UniPoly hc = content_x(h, F);
  h = divide_content(h, hc, F);
  for (auto& p : h.cx) p = mul(p, cont, F);
  return h;
}

}  // namespace hilb::fp
