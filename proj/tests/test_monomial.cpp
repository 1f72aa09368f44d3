#include <doctest.h>

#include <map>
#include <random>

#include "hilb/binom.hpp"
#include "hilb/fixtures.hpp"
#include "hilb/monomial_ideal.hpp"
#include "test_util.hpp"

using namespace hilb;
using namespace hilb::mono;
using testutil::random_ideal;
using testutil::random_o_sequence;

TEST_CASE("minimalize drops multiples and sorts") {
  auto I = MonomialIdeal::minimalize(
      2, {Monomial{{2, 0}}, Monomial{{2, 1}}, Monomial{{2, 0}}});
  REQUIRE(I.generators().size() == 1);
  CHECK(I.generators()[0].e == Exponents{2, 0});
}

TEST_CASE("minimalize is idempotent on random input") {
  std::mt19937_64 gen(3);
  for (int trial = 0; trial < 40; ++trial) {
    auto I = random_ideal(gen, 3, 6, 4);
    auto again = MonomialIdeal::minimalize(3, I.generators());
    CHECK(again.generators() == I.generators());
  }
}

TEST_CASE("the socle-in-degree-4 ideal minimalizes to 14 generators") {
  auto J = fixtures::wlp_families_ideal();
  std::map<int, int> by_degree;
  for (const auto& g : J.generators()) by_degree[g.degree()] += 1;
  CHECK(by_degree == std::map<int, int>{{3, 1}, {4, 1}, {5, 2}, {7, 10}});
}

TEST_CASE("Hilbert function by standard-monomial counting") {
  auto J = fixtures::wlp_families_ideal();
  CHECK(hilbert_function(J, 8).values() ==
        std::vector<std::int64_t>{1, 3, 6, 9, 11, 11, 11, 0, 0});

  auto zero = MonomialIdeal::minimalize(3, {});
  CHECK(hilbert_function(zero, 4).values() ==
        std::vector<std::int64_t>{1, 3, 6, 10, 15});
}

TEST_CASE("lex ideal of the socle example has the printed generator profile") {
  auto L = lex_ideal(HilbertSeq({1, 3, 6, 9, 11, 11, 11}, Tail::zero), 3);
  std::map<int, int> by_degree;
  for (const auto& g : L.generators()) by_degree[g.degree()] += 1;
  CHECK(by_degree == std::map<int, int>{{3, 1}, {4, 1}, {5, 2}, {6, 2}, {7, 12}});
  CHECK(hilbert_function(L, 8).values() ==
        std::vector<std::int64_t>{1, 3, 6, 9, 11, 11, 11, 0, 0});
}

TEST_CASE("lex ideal in two variables") {
  auto L = lex_ideal(HilbertSeq({1, 1, 1, 0}, Tail::zero), 2);
  REQUIRE(L.generators().size() == 2);
  CHECK(L.generators()[0].e == Exponents{1, 0});
  CHECK(L.generators()[1].e == Exponents{0, 3});
}

TEST_CASE("lex ideal realizes every sampled O-sequence") {
  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + static_cast<int>(gen() % 3);
    HilbertSeq s = random_o_sequence(gen, n, 2 + static_cast<int>(gen() % 6));
    auto L = lex_ideal(s, n);
    HilbertSeq h = hilbert_function(L, static_cast<int>(s.size()) - 1);
    CHECK(h.values() == s.values());
  }
}

TEST_CASE("lex ideal rejects non-O-sequences and fat embeddings") {
  CHECK_THROWS_AS(lex_ideal(HilbertSeq({1, 2, 3, 1, 2}, Tail::zero), 3),
                  std::domain_error);
  CHECK_THROWS_AS(lex_ideal(HilbertSeq({1, 4}, Tail::zero), 3),
                  std::domain_error);
}

TEST_CASE("stability") {
  CHECK(!is_stable(MonomialIdeal::minimalize(
      2, {Monomial{{2, 0}}, Monomial{{0, 2}}})));  // xy missing
  CHECK(is_stable(MonomialIdeal::minimalize(
      2, {Monomial{{2, 0}}, Monomial{{1, 1}}, Monomial{{0, 2}}})));
  // the socle example is not stable: x z^4 escapes from z^5
  CHECK(!is_stable(fixtures::wlp_families_ideal()));
}

TEST_CASE("lex ideals are always stable") {
  std::mt19937_64 gen(13);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + static_cast<int>(gen() % 3);
    HilbertSeq s = random_o_sequence(gen, n, 2 + static_cast<int>(gen() % 6));
    CHECK(is_stable(lex_ideal(s, n)));
  }
}

TEST_CASE("Eliahou-Kervaire on the lex ideal reproduces the printed diagram") {
  auto L = lex_ideal(HilbertSeq({1, 3, 6, 9, 11, 11, 11}, Tail::zero), 3);
  auto b = ek_betti(L);
  CHECK(b.totals() == std::vector<long long>{1, 18, 31, 14});
  CHECK(b.at(0, 0) == 1);
  CHECK(b.at(1, 2) == 1);
  CHECK(b.at(1, 3) == 1);
  CHECK(b.at(2, 3) == 1);
  CHECK(b.at(1, 4) == 2);
  CHECK(b.at(2, 4) == 4);
  CHECK(b.at(3, 4) == 2);
  CHECK(b.at(1, 5) == 2);
  CHECK(b.at(2, 5) == 3);
  CHECK(b.at(3, 5) == 1);
  CHECK(b.at(1, 6) == 12);
  CHECK(b.at(2, 6) == 23);
  CHECK(b.at(3, 6) == 11);
}

TEST_CASE("a principal ideal resolves in one step") {
  auto I = MonomialIdeal::minimalize(2, {Monomial{{3, 0}}});
  auto b = ek_betti(I);
  CHECK(b.totals() == std::vector<long long>{1, 1});
  CHECK(b.at(1, 2) == 1);
}

TEST_CASE("ek_betti refuses non-stable ideals") {
  CHECK_THROWS_AS(ek_betti(fixtures::wlp_families_ideal()), std::domain_error);
}

TEST_CASE("Betti alternating sums recover the Hilbert function") {
  std::mt19937_64 gen(17);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + static_cast<int>(gen() % 2);
    HilbertSeq s = random_o_sequence(gen, n, 2 + static_cast<int>(gen() % 5));
    auto L = lex_ideal(s, n);  // stable by construction
    auto b = ek_betti(L);

    // numerator K(t) = sum_(i,j) (-1)^i beta_{i,j} t^j, row = j - i
    std::map<int, long long> numerator;
    for (const auto& [key, v] : b.entries()) {
      int i = key.first, j = key.second + key.first;
      numerator[j] += (i % 2 == 0 ? v : -v);
    }
    const int top = 14;
    // h = K * (sum_k C(k+n-1, n-1) t^k)
    std::vector<std::int64_t> h(top + 1, 0);
    for (const auto& [j, kv] : numerator)
      for (int k = 0; j + k <= top; ++k)
        h[static_cast<std::size_t>(j + k)] += kv * monomial_count(n, k);
    HilbertSeq counted = hilbert_function(L, top);
    for (int t = 0; t <= top; ++t) CHECK(counted[static_cast<std::size_t>(t)] == h[static_cast<std::size_t>(t)]);
  }
}

TEST_CASE("socle of the worked ideal: witness in degree 4, eleven on top") {
  auto J = fixtures::wlp_families_ideal();
  auto socle = socle_monomials(J);
  std::map<int, int> by_degree;
  bool witness = false;
  for (const auto& u : socle) {
    by_degree[u.degree()] += 1;
    witness = witness || u.e == Exponents{2, 1, 1};
  }
  CHECK(witness);  // x^2 y z
  CHECK(by_degree == std::map<int, int>{{4, 1}, {6, 11}});
}

TEST_CASE("socle of a power of the maximal ideal") {
  auto I = MonomialIdeal::minimalize(
      2, {Monomial{{3, 0}}, Monomial{{2, 1}}, Monomial{{1, 2}}, Monomial{{0, 3}}});
  for (const auto& u : socle_monomials(I)) CHECK(u.degree() == 2);
  CHECK(socle_monomials(I).size() == 3);
}

TEST_CASE("socle requires an Artinian quotient") {
  CHECK_THROWS_AS(socle_monomials(MonomialIdeal::minimalize(
                      2, {Monomial{{2, 0}}})),
                  std::domain_error);
}

TEST_CASE("distraction of a single pure power") {
  auto I = MonomialIdeal::minimalize(1, {Monomial{{1}}});
  auto lifted = distraction_points(I);
  REQUIRE(lifted.points.size() == 1);
  CHECK(lifted.points.pts()[0] == std::vector<mpq_class>{1, 0});
  REQUIRE(lifted.lifted_gens.size() == 1);
  // x_1 lifts to itself
  CHECK(lifted.lifted_gens[0].terms().size() == 1);
}

TEST_CASE("distraction cardinality and generator degrees for the socle example") {
  auto J = fixtures::wlp_families_ideal();
  auto lifted = distraction_points(J);
  CHECK(lifted.points.size() == 52);
  std::map<int, int> by_degree;
  for (const auto& f : lifted.lifted_gens) by_degree[f.degree()] += 1;
  CHECK(by_degree == std::map<int, int>{{3, 1}, {4, 1}, {5, 2}, {7, 10}});
  // every lifted generator vanishes at every point
  for (const auto& f : lifted.lifted_gens)
    for (const auto& p : lifted.points.pts()) CHECK(f.eval(p) == 0);
}
