#include <doctest.h>

#include <random>

#include "hilb/binom.hpp"
#include "hilb/macaulay.hpp"

using namespace hilb;
using namespace hilb::macaulay;

namespace {

// Exhaustive search for representations c = C(m_i,i) + ... + C(m_j,j) with
// m_i > ... > m_j >= j >= 1, levels consecutive from i downward.  Used as a
// uniqueness oracle for the greedy expansion.
void enumerate_reps(long c, int level, long top_bound,
                    std::vector<std::pair<long, int>>& partial,
                    std::vector<std::vector<std::pair<long, int>>>& found) {
  if (c == 0) {
    found.push_back(partial);
    return;
  }
  if (level < 1) return;
  for (long m = level; m < top_bound; ++m) {
    mpz_class b = binom(m, level);
    if (b > c) break;
    partial.emplace_back(m, level);
    enumerate_reps(c - b.get_si(), level - 1, m, partial, found);
    partial.pop_back();
  }
}

std::vector<std::vector<std::pair<long, int>>> all_representations(long c, int i) {
  std::vector<std::vector<std::pair<long, int>>> found;
  std::vector<std::pair<long, int>> partial;
  enumerate_reps(c, i, 1000, partial, found);
  return found;
}

std::vector<std::pair<long, int>> term_pairs(const BinomialExpansion& e) {
  std::vector<std::pair<long, int>> v;
  for (const auto& t : e.terms) v.emplace_back(t.top.get_si(), t.level);
  return v;
}

}  // namespace

TEST_CASE("binomial expansion of 76 at level 5") {
  auto ex = binomial_expansion(76, 5);
  CHECK(term_pairs(ex) ==
        std::vector<std::pair<long, int>>{{8, 5}, {6, 4}, {4, 3}, {2, 2}});
  CHECK(ex.value() == 76);
}

TEST_CASE("binomial expansion of 1 is the single unit term") {
  for (int i = 1; i <= 6; ++i) {
    auto ex = binomial_expansion(1, i);
    CHECK(term_pairs(ex) == std::vector<std::pair<long, int>>{{i, i}});
  }
}

TEST_CASE("binomial expansion rejects bad input") {
  CHECK_THROWS_AS(binomial_expansion(0, 3), std::domain_error);
  CHECK_THROWS_AS(binomial_expansion(5, 0), std::domain_error);
}

TEST_CASE("greedy expansion is the unique descending representation") {
  // full range covered in the acceptance suite; a sample here
  for (long c = 1; c <= 80; ++c)
    for (int i = 1; i <= 4; ++i) {
      auto reps = all_representations(c, i);
      REQUIRE(reps.size() == 1);
      CHECK(reps.front() == term_pairs(binomial_expansion(c, i)));
    }
}

TEST_CASE("growth worked values") {
  CHECK(growth(76, 5) == 111);
  CHECK(growth(6, 3) == 7);
  CHECK(growth(0, 4) == 0);
}

TEST_CASE("growth of s at degree d is s once d >= s") {
  for (long s = 1; s <= 30; ++s)
    for (int d = static_cast<int>(s); d <= 30; ++d) CHECK(growth(s, d) == s);
}

TEST_CASE("growth is monotone in the value") {
  for (int i = 1; i <= 6; ++i) {
    mpz_class prev = 0;
    for (long c = 1; c <= 200; ++c) {
      mpz_class cur = growth(c, i);
      CHECK(cur >= prev);
      prev = cur;
    }
  }
}

TEST_CASE("O-sequence verdicts") {
  CHECK(is_o_sequence(HilbertSeq({1, 3, 6, 7, 9, 9})).ok);

  auto bad = is_o_sequence(HilbertSeq({1, 2, 3, 1, 2}));
  CHECK(!bad.ok);
  REQUIRE(bad.violation.has_value());
  CHECK(bad.violation->degree == 3);
  CHECK(bad.violation->value == 1);
  CHECK(bad.violation->bound == 1);
  CHECK(bad.violation->next == 2);

  auto zero = is_o_sequence(HilbertSeq({1, 0, 5}));
  CHECK(!zero.ok);
  CHECK(zero.violation->degree == 1);

  CHECK(!is_o_sequence(HilbertSeq({2, 1})).ok);
  CHECK(!is_o_sequence(HilbertSeq({1, 3, -1})).ok);
}

TEST_CASE("differentiable O-sequences check only the first difference") {
  HilbertSeq c({1, 4, 10, 17, 26, 35});
  CHECK(is_differentiable_o_sequence(c).ok);
  // ... even though the second difference 1,2,3,1,2 fails
  CHECK(!is_o_sequence(difference(c, 2)).ok);

  CHECK(is_differentiable_o_sequence(HilbertSeq({1, 3, 6, 10, 15})).ok);

  auto v = is_differentiable_o_sequence(HilbertSeq({1, 2, 4}));
  CHECK(!v.ok);
  CHECK(v.violation->in_first_difference);
}

TEST_CASE("maximal growth detection") {
  auto verdicts = maximal_growth_degrees(HilbertSeq({1, 3, 6, 7, 9, 9}));
  REQUIRE(verdicts.size() == 5);
  CHECK(verdicts[2].degree == 3);
  CHECK(verdicts[2].bound == 9);
  CHECK(verdicts[2].is_maximal);
  CHECK(!verdicts[1].is_maximal);  // 6 -> 7 stays under the bound 10
}

TEST_CASE("maximal growth at degree 1 means the bound is attained") {
  // 3 -> 6 from degree 1 is maximal: 3^<1> = C(4,2) = 6.
  auto verdicts = maximal_growth_degrees(HilbertSeq({1, 3, 6, 7, 9, 9}));
  CHECK(verdicts[0].degree == 1);
  CHECK(verdicts[0].bound == 6);
  CHECK(verdicts[0].is_maximal);
}

TEST_CASE("a flat at the edge of the window reports the bound") {
  auto verdicts = maximal_growth_degrees(HilbertSeq({1, 3, 6, 6, 0}));
  CHECK(verdicts[2].degree == 3);
  CHECK(verdicts[2].bound == 7);
  CHECK(!verdicts[2].is_maximal);  // drops to zero instead
  CHECK(verdicts[3].degree == 4);
  CHECK(!verdicts[3].next.has_value());
  CHECK(!verdicts[3].is_maximal);
}

TEST_CASE("a flat value s at degree d >= s is maximal growth") {
  auto verdicts = maximal_growth_degrees(HilbertSeq({1, 2, 3, 4, 4, 4}));
  bool saw = false;
  for (const auto& v : verdicts)
    if (v.degree == 4) {
      saw = true;
      CHECK(v.bound == 4);
      CHECK(v.is_maximal);
    }
  CHECK(saw);
}

TEST_CASE("maximal_growth_degrees rejects non-O-sequences") {
  CHECK_THROWS_AS(maximal_growth_degrees(HilbertSeq({1, 2, 3, 1, 2})),
                  std::domain_error);
}
