#include "hilb/fixtures.hpp"

#include <algorithm>

#include "hilb/macaulay.hpp"

namespace hilb::fixtures {

mono::MonomialIdeal wlp_families_ideal() {
  std::vector<mono::Monomial> gens = {
      {{3, 0, 0}}, {{2, 2, 0}}, {{2, 1, 2}}, {{0, 0, 5}}};
  for (const auto& m : monomials_of_degree(3, 7)) gens.push_back({m});
  return mono::MonomialIdeal::minimalize(3, std::move(gens));
}

std::vector<Form> cd_generators() {
  // variables x, y, z, t
  Form g1(4, 5);
  g1.add_term({4, 0, 0, 1}, 1);
  g1.add_term({0, 4, 1, 0}, -1);
  Form g2(4, 6);
  g2.add_term({0, 0, 6, 0}, 1);
  g2.add_term({1, 0, 0, 5}, -1);
  return {g1, g2};
}

std::vector<Form> ci334_generators() {
  return {Form::monomial(4, {3, 0, 0, 0}), Form::monomial(4, {0, 3, 0, 0}),
          Form::monomial(4, {0, 0, 4, 0})};
}

HilbertSeq not_decr_type_delta() {
  return HilbertSeq({1,  3,  6,  10, 15, 20, 24, 27, 29, 29, 29,
                     29, 28, 28, 28, 27, 27, 27, 26, 26, 26, 25},
                    Tail::none);
}

HilbertSeq two_sextics_delta() {
  return HilbertSeq(
      {1, 3, 5, 7, 9, 11, 13, 15, 17, 19, 21, 23, 25, 27, 29, 31, 32, 32, 32, 0},
      Tail::zero);
}

points::PointSet conic_points() {
  std::vector<std::vector<mpq_class>> pts;
  for (int k = 0; k <= 8; ++k)
    pts.push_back({mpq_class(1), mpq_class(k), mpq_class(k) * k});
  pts.push_back({mpq_class(0), mpq_class(0), mpq_class(1)});
  return points::PointSet(2, std::move(pts));
}

points::PointSet collinear_quad() {
  return points::PointSet(2, {{mpq_class(1), mpq_class(0), mpq_class(0)},
                              {mpq_class(0), mpq_class(1), mpq_class(0)},
                              {mpq_class(1), mpq_class(1), mpq_class(0)},
                              {mpq_class(0), mpq_class(0), mpq_class(1)}});
}

diagnose::Input not_decr_type_input(bool include_reduced) {
  diagnose::Input in;
  in.ambient_n = 4;
  in.delta_h = not_decr_type_delta();
  in.r2 = 8;
  in.upp = true;
  if (include_reduced) in.reduced = true;
  return in;
}

diagnose::Input two_sextics_input() {
  diagnose::Input in;
  in.ambient_n = 4;
  in.delta_h = two_sextics_delta();
  in.r2 = 16;
  in.upp = true;
  return in;
}

diagnose::Input cant_extend_input() {
  diagnose::Input in;
  in.ambient_n = 4;
  in.delta_h = HilbertSeq({1, 3, 6, 6, 0}, Tail::zero);
  in.r2 = 3;
  in.upp = true;
  in.reduced = true;
  return in;
}

diagnose::Input ci334_input() {
  diagnose::Input in;
  in.ambient_n = 4;
  in.delta_h = HilbertSeq({1, 3, 6, 8, 8, 6, 3, 1, 0}, Tail::zero);
  in.r2 = 3;
  in.reduced = true;
  return in;
}

namespace {

std::string expect_seq(const HilbertSeq& got, const std::vector<std::int64_t>& want,
                       const std::string& what) {
  HilbertSeq w(std::vector<std::int64_t>(want));
  if (got.values() == want) return {};
  return what + ": got (" + got.str() + "), want (" + w.str() + ")";
}

std::string run_macaulay_growth(const modla::EngineConfig&) {
  auto ex = macaulay::binomial_expansion(76, 5);
  std::vector<std::pair<long, int>> got;
  for (const auto& t : ex.terms) got.emplace_back(t.top.get_si(), t.level);
  std::vector<std::pair<long, int>> want{{8, 5}, {6, 4}, {4, 3}, {2, 2}};
  if (got != want) return "expansion of 76 at level 5 is wrong";
  if (macaulay::growth(76, 5) != 111) return "growth(76,5) != 111";
  return {};
}

std::string run_gmr(const modla::EngineConfig&) {
  HilbertSeq c({1, 4, 10, 17, 26, 35});
  auto v = macaulay::is_differentiable_o_sequence(c);
  if (!v.ok) return "1,4,10,17,26,35 should be a differentiable O-sequence";
  auto d2 = macaulay::is_o_sequence(difference(c, 2));
  if (d2.ok) return "second difference 1,2,3,1,2 should fail";
  if (!d2.violation || d2.violation->degree != 3)
    return "second-difference violation should sit at the step 3 -> 4";
  return {};
}

std::string run_ci334(const modla::EngineConfig& cfg) {
  modla::GeneratorSource src(4, ci334_generators());
  std::string err;
  err = expect_seq(modla::quotient_by_generic_linears(src, 1, 8, cfg),
                   {1, 3, 6, 8, 8, 6, 3, 1, 0}, "one generic linear");
  if (!err.empty()) return err;
  err = expect_seq(modla::quotient_by_generic_linears(src, 2, 5, cfg),
                   {1, 2, 3, 2, 0, 0}, "two generic linears");
  if (!err.empty()) return err;
  err = expect_seq(modla::quotient_by_generic_linears(src, 3, 4, cfg),
                   {1, 1, 1, 0, 0}, "three generic linears");
  if (!err.empty()) return err;
  if (modla::reduction_number(src, 1, cfg) != 7) return "r1 != 7";
  if (modla::reduction_number(src, 2, cfg) != 3) return "r2 != 3";
  if (modla::reduction_number(src, 3, cfg) != 2) return "r3 != 2";
  if (!modla::wlp_test(src, 1, 9, cfg).pass)
    return "Artinian reduction of the (3,3,4) complete intersection must have WLP";
  return {};
}

std::string run_cd56(const modla::EngineConfig& cfg) {
  HilbertSeq via_product = partial_sum(ci_h_vector({5, 6}));
  std::string err = expect_seq(
      via_product, {1, 3, 6, 10, 15, 20, 24, 27, 29, 30, 30}, "product route");
  if (!err.empty()) return err;

  modla::GeneratorSource src(4, cd_generators());
  std::vector<std::int64_t> h;
  for (int t = 0; t <= 11; ++t)
    h.push_back(monomial_count(4, t) - modla::slice_dim(src, t, cfg));
  HilbertSeq via_ranks = difference(HilbertSeq(std::move(h)), 1);
  return expect_seq(via_ranks, {1, 3, 6, 10, 15, 20, 24, 27, 29, 30, 30, 30},
                    "rank route");
}

std::string run_wlp_families(const modla::EngineConfig& cfg) {
  auto J = wlp_families_ideal();
  std::string err = expect_seq(mono::hilbert_function(J, 8),
                               {1, 3, 6, 9, 11, 11, 11, 0, 0}, "h of R/J");
  if (!err.empty()) return err;

  auto socle = mono::socle_monomials(J);
  bool deg4 = false;
  for (const auto& u : socle)
    deg4 = deg4 || (u.degree() == 4 && u.e == Exponents{2, 1, 1});
  if (!deg4) return "socle witness x1^2 x2 x3 in degree 4 missing";

  auto lifted = mono::distraction_points(J);
  if (lifted.points.size() != 52) return "distraction should give 52 points";
  err = expect_seq(points::h_vector(lifted.points, cfg),
                   {1, 3, 6, 9, 11, 11, 11}, "h-vector of the lifted points");
  if (!err.empty()) return err;

  points::PointSource zsrc(lifted.points);
  auto wlp = modla::wlp_test(zsrc, 1, 8, cfg);
  if (wlp.pass) return "lifted points must fail WLP";
  const auto* row = wlp.row_at(4);
  if (!row || row->dim_from != 11 || row->dim_to != 11 || row->ok)
    return "WLP failure should occur at t=4 with dimensions 11 -> 11";

  if (modla::reduction_number(zsrc, 2, cfg) != 5)
    return "r2 of the lifted ideal != 5";

  modla::GeneratorSource gens(4, lifted.lifted_gens);
  auto fit = modla::truncated_ideal_polynomial(gens.restricted_to(5), 5,
                                               std::nullopt, cfg);
  if (fit.degree != 1 || fit.scheme_degree != 10)
    return "truncation at degree 5 should cut a curve of degree 10";
  return {};
}

std::string run_lex_betti(const modla::EngineConfig&) {
  auto L = mono::lex_ideal(HilbertSeq({1, 3, 6, 9, 11, 11, 11}, Tail::zero), 3);
  auto b = mono::ek_betti(L);
  if (b.totals() != std::vector<long long>{1, 18, 31, 14})
    return "lex Betti totals should be 1, 18, 31, 14";
  // spot cells of the printed diagram
  struct Cell { int col, row; long long v; };
  for (Cell c : {Cell{1, 2, 1}, Cell{1, 3, 1}, Cell{2, 3, 1}, Cell{1, 4, 2},
                 Cell{2, 4, 4}, Cell{3, 4, 2}, Cell{1, 5, 2}, Cell{2, 5, 3},
                 Cell{3, 5, 1}, Cell{1, 6, 12}, Cell{2, 6, 23}, Cell{3, 6, 11}})
    if (b.at(c.col, c.row) != c.v)
      return "lex Betti cell (" + std::to_string(c.col) + "," +
             std::to_string(c.row) + ") is off";
  return {};
}

std::string run_sixteen_points(const modla::EngineConfig& cfg) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto z = points::PointSet::random(3, 16, seed);
    modla::EngineConfig c = cfg;
    c.seed = fp::derive_seed(cfg.seed, seed);
    HilbertSeq h = points::h_vector(z, c);
    std::string err = expect_seq(h, {1, 3, 6, 6},
                                 "h-vector of 16 random points (seed " +
                                     std::to_string(seed) + ")");
    if (!err.empty()) return err;
    if (macaulay::growth(6, 3) != 7) return "growth bound of 6 at degree 3 != 7";
    // value 0 in degree 4 stays below the bound: growth is not maximal
    if (h.value_at(4) != 0) return "h-vector should vanish in degree 4";
  }
  return {};
}

std::string run_davis_conic(const modla::EngineConfig& cfg) {
  auto z = conic_points();
  std::string err =
      expect_seq(points::h_vector(z, cfg), {1, 2, 2, 2, 2, 1}, "conic h-vector");
  if (!err.empty()) return err;
  for (int d : {2, 3}) {
    auto forms = points::degree_forms(z, d, cfg);
    if (forms.empty()) return "no forms through the points in degree " +
                               std::to_string(d);
    auto g = points::gcd_of_forms(forms, cfg.seed);
    if (g.degree() != 2)
      return "GCD in degree " + std::to_string(d) + " should be the conic";
    for (const auto& f : forms)
      if (!trial_divide(f, g)) return "GCD fails to divide a basis element";
  }
  return {};
}

std::string run_upp(const modla::EngineConfig& cfg) {
  modla::EngineConfig c = cfg;
  c.seed = fp::derive_seed(cfg.seed, 77);
  auto good = points::PointSet::random(2, 5, 7);
  auto res = points::upp_test(good, {}, c);
  if (!res.pass) return "five random plane points should be in uniform position";

  auto bad = collinear_quad();
  auto res2 = points::upp_test(bad, {}, c);
  if (res2.pass) return "a collinear triple must violate uniform position";
  if (!res2.witness || *res2.witness != std::vector<int>{0, 1, 2})
    return "the collinear triple should be reported as the witness";
  return {};
}

std::string expect_fired(const diagnose::Report& rep,
                         const std::vector<std::string>& want,
                         const std::string& what) {
  std::vector<std::string> fired;
  for (const auto& f : rep.flats)
    for (const auto& id : f.fired_ids())
      if (std::find(fired.begin(), fired.end(), id) == fired.end())
        fired.push_back(id);
  std::sort(fired.begin(), fired.end());
  auto sorted_want = want;
  std::sort(sorted_want.begin(), sorted_want.end());
  if (fired == sorted_want) return {};
  std::string got = "{";
  for (const auto& id : fired) got += id + ",";
  return what + ": fired rules " + got + "}";
}

std::string run_diagnose_not_decr_type(const modla::EngineConfig&) {
  auto rep = diagnose::diagnose(not_decr_type_input(false));
  std::string err = expect_fired(rep, {"R5"}, "degree-25 curve case");
  if (!err.empty()) return err;
  for (const auto& f : rep.flats) {
    if (f.d != 9) continue;
    if (f.s != 29) return "flat at d=9 should have s=29";
    auto concl = f.conclusions();
    auto has = [&](diagnose::Conclusion c) {
      return std::find(concl.begin(), concl.end(), c) != concl.end();
    };
    if (!has(diagnose::Conclusion::saturated) ||
        !has(diagnose::Conclusion::curve_of_degree_s) ||
        !has(diagnose::Conclusion::d_regular) ||
        !has(diagnose::Conclusion::unmixed) ||
        !has(diagnose::Conclusion::z_contained_in_c))
      return "flat (9,29) misses an AM-UPP conclusion";
    if (has(diagnose::Conclusion::irreducible) ||
        has(diagnose::Conclusion::reduced))
      return "flat (9,29) must not claim reduced or irreducible";
  }
  return {};
}

std::string run_diagnose_two_sextics(const modla::EngineConfig&) {
  auto rep = diagnose::diagnose(two_sextics_input());
  std::string err = expect_fired(rep, {"R5"}, "two-sextics case");
  if (!err.empty()) return err;
  bool found = false;
  for (const auto& f : rep.flats)
    found = found || (f.d == 17 && f.s == 32 && !f.fired_ids().empty());
  if (!found) return "the rule should fire at the flat (17, 32)";
  return {};
}

std::string run_diagnose_cant_extend(const modla::EngineConfig&) {
  return expect_fired(diagnose::diagnose(cant_extend_input()), {},
                      "sixteen general points");
}

std::string run_diagnose_334(const modla::EngineConfig&) {
  return expect_fired(diagnose::diagnose(ci334_input()), {},
                      "(3,3,4) complete intersection");
}

}  // namespace

const std::vector<Fixture>& all() {
  static const std::vector<Fixture> fixtures = {
      {"macaulay76", "5-binomial expansion and growth bound of 76",
       "worked arithmetic, checked by reconstruction", run_macaulay_growth},
      {"gmr", "differentiable O-sequence whose second difference fails",
       "worked arithmetic", run_gmr},
      {"ci334", "reduction numbers of a (3,3,4) complete intersection",
       "complete-intersection h-vectors (Koszul)", run_ci334},
      {"cd56", "Chardin-D'Cruz (5,6) complete intersection, two routes",
       "product formula vs modular ranks", run_cd56},
      {"wlp_families",
       "monomial ideal with socle in degree 4: distraction, WLP failure, "
       "reduction number, truncation polynomial",
       "independent enumeration and modular ranks", run_wlp_families},
      {"lex_betti", "Eliahou-Kervaire diagram of a lex-segment ideal",
       "Eliahou-Kervaire formula on the lex segment", run_lex_betti},
      {"sixteen_points", "16 random space points stop growing maximally",
       "probabilistic general position, five seeds", run_sixteen_points},
      {"davis_conic", "plane GCD for ten points on a conic",
       "constructed points, validated by trial division", run_davis_conic},
      {"upp", "uniform position: pass and collinear failure",
       "exhaustive subset scan", run_upp},
      {"diagnose_not_decr_type", "rule engine on the degree-25 curve data",
       "curve tables as fixture input", run_diagnose_not_decr_type},
      {"diagnose_two_sextics", "rule engine on the split 352-point data",
       "curve tables as fixture input", run_diagnose_two_sextics},
      {"diagnose_cant_extend", "rule engine finds nothing below the bounds",
       "general-points h-vectors", run_diagnose_cant_extend},
      {"diagnose_334", "rule engine finds nothing for the (3,3,4) data",
       "complete-intersection h-vector", run_diagnose_334},
  };
  return fixtures;
}

std::vector<Outcome> run_fixtures(const std::string& only,
                                  const modla::EngineConfig& cfg) {
  std::vector<Outcome> out;
  for (const auto& f : all()) {
    if (!only.empty() && f.name.find(only) == std::string::npos) continue;
    Outcome o;
    o.name = f.name;
    try {
      o.detail = f.run(cfg);
      o.pass = o.detail.empty();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = e.what();
    }
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace hilb::fixtures
