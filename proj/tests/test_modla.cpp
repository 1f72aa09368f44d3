#include <doctest.h>

#include <random>

#include "hilb/binom.hpp"
#include "hilb/fixtures.hpp"
#include "hilb/modla.hpp"
#include "hilb/points.hpp"
#include "test_util.hpp"

using namespace hilb;
using namespace hilb::modla;

namespace {

EngineConfig test_cfg(std::uint64_t seed = 0) {
  EngineConfig cfg;
  cfg.seed = seed;
  return cfg;
}

}  // namespace

TEST_CASE("slice dimensions of the zero ideal") {
  GeneratorSource zero(3, {});
  EngineConfig cfg = test_cfg();
  for (int t = 0; t <= 4; ++t) CHECK(slice_dim(zero, t, cfg) == 0);
}

TEST_CASE("generator-backed slices of the (5,6) complete intersection") {
  GeneratorSource src(4, fixtures::cd_generators());
  EngineConfig cfg = test_cfg();
  CHECK(slice_dim(src, 4, cfg) == 0);
  CHECK(slice_dim(src, 5, cfg) == 1);
  CHECK(slice_dim(src, 6, cfg) == 5);  // 4 multiples of g1 plus g2
}

TEST_CASE("monomial slices match combinatorial counting") {
  std::mt19937_64 gen(23);
  EngineConfig cfg = test_cfg();
  for (int trial = 0; trial < 10; ++trial) {
    int n = 2 + static_cast<int>(gen() % 2);
    auto I = testutil::random_ideal(gen, n, 5, 4);
    GeneratorSource src(n, I.generator_forms());
    HilbertSeq counted = mono::hilbert_function(I, 8);
    for (int t = 0; t <= 8; ++t)
      CHECK(monomial_count(n, t) - slice_dim(src, t, cfg) ==
            counted[static_cast<std::size_t>(t)]);
  }
}

TEST_CASE("quotient by n generic linears of the zero ideal is the base field") {
  GeneratorSource zero(3, {});
  EngineConfig cfg = test_cfg();
  CHECK(quotient_by_generic_linears(zero, 3, 3, cfg).values() ==
        std::vector<std::int64_t>{1, 0, 0, 0});
  CHECK(reduction_number(zero, 3, cfg) == 0);
}

TEST_CASE("quotient validates the linear-form count") {
  GeneratorSource zero(3, {});
  EngineConfig cfg = test_cfg();
  CHECK_THROWS_AS(quotient_by_generic_linears(zero, 4, 3, cfg),
                  std::invalid_argument);
}

TEST_CASE("bundled (3,3,4) and Chardin-D'Cruz fixtures pass") {
  for (const auto& o : fixtures::run_fixtures("ci334", test_cfg())) {
    INFO(o.name, ": ", o.detail);
    CHECK(o.pass);
  }
  for (const auto& o : fixtures::run_fixtures("cd56", test_cfg())) {
    INFO(o.name, ": ", o.detail);
    CHECK(o.pass);
  }
}

TEST_CASE("one-variable algebra k[x]/(x^3) has WLP and degree-2 SLP") {
  GeneratorSource src(1, {Form::monomial(1, {3})});
  EngineConfig cfg = test_cfg();
  CHECK(wlp_test(src, 0, 5, cfg).pass);
  auto slp = slp_test(src, 0, 2, 5, cfg);
  CHECK(slp.pass);
  const auto* row = slp.row_at(0);
  REQUIRE(row != nullptr);
  CHECK(row->rank == 1);  // x^2 : A_0 -> A_2 is full
}

TEST_CASE("two-variable monomial algebras pass SLP for small degrees") {
  std::mt19937_64 gen(31);
  EngineConfig cfg = test_cfg();
  for (int trial = 0; trial < 6; ++trial) {
    auto I = testutil::random_artinian_ideal(gen, 2, 2, 5);
    GeneratorSource src(2, I.generator_forms());
    for (int d = 1; d <= 4; ++d) {
      INFO("trial ", trial, " degree ", d);
      CHECK(slp_test(src, 0, d, 16, cfg).pass);
    }
  }
}

TEST_CASE("degree-1 SLP agrees with WLP") {
  std::mt19937_64 gen(37);
  EngineConfig cfg = test_cfg();
  for (int trial = 0; trial < 8; ++trial) {
    int n = 2 + static_cast<int>(gen() % 2);
    auto I = testutil::random_artinian_ideal(gen, n, 2, 4);
    GeneratorSource src(n, I.generator_forms());
    auto w = wlp_test(src, 0, 20, cfg);
    auto s = slp_test(src, 0, 1, 20, cfg);
    CHECK(w.pass == s.pass);
    REQUIRE(w.rows.size() == s.rows.size());
    for (std::size_t i = 0; i < w.rows.size(); ++i) {
      CHECK(w.rows[i].dim_from == s.rows[i].dim_from);
      CHECK(w.rows[i].ok == s.rows[i].ok);
    }
  }
}

TEST_CASE("under WLP, one more linear form acts as a positive difference") {
  std::mt19937_64 gen(41);
  EngineConfig cfg = test_cfg();
  int tested = 0;
  for (int trial = 0; trial < 12 && tested < 5; ++trial) {
    int n = 2 + static_cast<int>(gen() % 2);
    auto I = testutil::random_artinian_ideal(gen, n, 2, 4);
    GeneratorSource src(n, I.generator_forms());
    if (!wlp_test(src, 0, 20, cfg).pass) continue;
    ++tested;
    HilbertSeq h0 = quotient_by_generic_linears(src, 0, 12, cfg);
    HilbertSeq h1 = quotient_by_generic_linears(src, 1, 12, cfg);
    HilbertSeq diff = difference(h0, 1);
    for (std::size_t t = 0; t < h1.size(); ++t)
      CHECK(h1[t] == std::max<std::int64_t>(diff[t], 0));
  }
  CHECK(tested > 0);
}

TEST_CASE("truncation of a full complete-intersection curve ideal") {
  // two generic forms of degrees 2 and 3 cut a curve of degree 6
  std::mt19937_64 gen(43);
  EngineConfig cfg = test_cfg();
  auto random_form = [&](int deg) {
    Form f(4, deg);
    std::uniform_int_distribution<int> c(-9, 9);
    for (const auto& e : monomials_of_degree(4, deg)) {
      int v = c(gen);
      if (v != 0) f.add_term(e, v);
    }
    return f;
  };
  GeneratorSource src(4, {random_form(2), random_form(3)});
  auto fit = truncated_ideal_polynomial(src, 3, std::nullopt, cfg);
  CHECK(fit.degree == 1);
  CHECK(fit.scheme_degree == 6);
}

TEST_CASE("seven general space points truncated in degree 2 leave eight") {
  EngineConfig cfg = test_cfg();
  auto z = points::PointSet::random(3, 7, 1234);
  points::PointSource src(z);
  // sample past the regularity of the three quadrics
  auto fit = truncated_ideal_polynomial(src, 2, std::make_pair(3, 9), cfg);
  CHECK(fit.degree == 0);
  CHECK(fit.scheme_degree == 8);
}

TEST_CASE("the fit refuses ranges that never become polynomial") {
  EngineConfig cfg = test_cfg();
  auto z = points::PointSet::random(3, 7, 1234);
  points::PointSource src(z);
  CHECK_THROWS_AS(
      truncated_ideal_polynomial(src, 2, std::make_pair(2, 6), cfg),
      std::runtime_error);
}

TEST_CASE("initial degree") {
  EngineConfig cfg = test_cfg();
  GeneratorSource ci(4, fixtures::ci334_generators());
  CHECK(initial_degree(ci, cfg) == 3);

  GeneratorSource zero(3, {});
  EngineConfig capped = cfg;
  capped.degree_cap = 6;
  CHECK_THROWS_AS(initial_degree(zero, capped), std::runtime_error);

  auto z = points::PointSet::random(2, 5, 77);
  points::PointSource pts(z);
  CHECK(initial_degree(pts, cfg) == 2);  // five points force a conic
}

TEST_CASE("determinism: identical configuration, identical output") {
  GeneratorSource src(4, fixtures::ci334_generators());
  EngineConfig cfg = test_cfg(99);
  auto a = quotient_by_generic_linears(src, 2, 5, cfg);
  auto b = quotient_by_generic_linears(src, 2, 5, cfg);
  CHECK(a == b);
}
