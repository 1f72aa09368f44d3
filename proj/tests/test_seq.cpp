#include <doctest.h>

#include <random>

#include "hilb/seq.hpp"

using namespace hilb;

namespace {

std::vector<std::int64_t> random_values(std::mt19937_64& gen, int len,
                                        std::int64_t lo, std::int64_t hi) {
  std::uniform_int_distribution<std::int64_t> dist(lo, hi);
  std::vector<std::int64_t> v(static_cast<std::size_t>(len));
  for (auto& x : v) x = dist(gen);
  return v;
}

}  // namespace

TEST_CASE("difference: worked first and second differences") {
  HilbertSeq c({1, 4, 10, 17, 26, 35});
  CHECK(difference(c, 1).values() == std::vector<std::int64_t>{1, 3, 6, 7, 9, 9});
  CHECK(difference(c, 2).values() == std::vector<std::int64_t>{1, 2, 3, 1, 2});
  CHECK(difference(c, 0).values() == c.values());
}

TEST_CASE("difference allows negative outputs") {
  HilbertSeq s({1, 5, 2});
  CHECK(difference(s).values() == std::vector<std::int64_t>{1, 4, -3});
}

TEST_CASE("partial_sum of the (5,6) complete intersection h-vector") {
  HilbertSeq h = ci_h_vector({5, 6});
  CHECK(h.values() ==
        std::vector<std::int64_t>{1, 2, 3, 4, 5, 5, 4, 3, 2, 1});
  HilbertSeq sums = partial_sum(h);
  CHECK(sums.values() ==
        std::vector<std::int64_t>{1, 3, 6, 10, 15, 20, 24, 27, 29, 30});
  CHECK(sums.tail() == Tail::constant);
  CHECK(sums.value_at(10) == 30);
  CHECK(sums.value_at(25) == 30);
}

TEST_CASE("partial_sum of a single entry") {
  CHECK(partial_sum(HilbertSeq({1})).values() == std::vector<std::int64_t>{1});
}

TEST_CASE("difference and partial_sum are mutually inverse") {
  std::mt19937_64 gen(42);
  for (int trial = 0; trial < 100; ++trial) {
    HilbertSeq s(random_values(gen, 1 + trial % 12, -30, 30));
    CHECK(partial_sum(difference(s, 1)).values() == s.values());
    CHECK(difference(partial_sum(s), 1).values() == s.values());
  }
}

TEST_CASE("ci_h_vector worked examples") {
  CHECK(ci_h_vector({3, 3, 4}).values() ==
        std::vector<std::int64_t>{1, 3, 6, 8, 8, 6, 3, 1});
  CHECK(ci_h_vector({1}).values() == std::vector<std::int64_t>{1});
  CHECK(ci_h_vector({}).values() == std::vector<std::int64_t>{1});
  CHECK_THROWS_AS(ci_h_vector({0}), std::domain_error);
}

TEST_CASE("ci_h_vector is palindromic and sums to the degree product") {
  std::mt19937_64 gen(7);
  std::uniform_int_distribution<int> deg(1, 6), cnt(1, 4);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> degrees(static_cast<std::size_t>(cnt(gen)));
    std::int64_t prod = 1;
    for (auto& d : degrees) {
      d = deg(gen);
      prod *= d;
    }
    HilbertSeq h = ci_h_vector(degrees);
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < h.size(); ++i) {
      sum += h[i];
      CHECK(h[i] == h[h.size() - 1 - i]);
    }
    CHECK(sum == prod);
  }
}

TEST_CASE("truncate caps a points Hilbert function") {
  // 193 of the 194-and-counting points of a degree-29 configuration: the
  // h-vector of the truncation gains a trailing zero.
  HilbertSeq delta({1, 3, 6, 10, 15, 20, 24, 27, 29, 29, 29}, Tail::zero);
  HilbertSeq h_c = partial_sum(delta);  // ends at 193
  REQUIRE(h_c.back() == 193);
  HilbertSeq capped = truncate(h_c, 193);
  CHECK(capped.values() == h_c.values());
  CHECK(difference(capped.extended(12), 1).values() ==
        std::vector<std::int64_t>{1, 3, 6, 10, 15, 20, 24, 27, 29, 29, 29, 0});
}

TEST_CASE("truncate no-op and error cases") {
  HilbertSeq h({1, 3, 4, 4}, Tail::constant);
  CHECK(truncate(h, 4).values() == h.values());
  CHECK_THROWS_WITH_AS(truncate(h, 5), "truncation above cardinality",
                       std::domain_error);
}

TEST_CASE("truncate matches the enumerate-and-cap oracle and is idempotent") {
  std::mt19937_64 gen(99);
  std::uniform_int_distribution<std::int64_t> step(0, 4);
  for (int trial = 0; trial < 20; ++trial) {
    // simulate a points Hilbert function: non-decreasing from 1, then flat
    std::vector<std::int64_t> v{1};
    for (int t = 0; t < 8; ++t) v.push_back(v.back() + step(gen));
    HilbertSeq h(v, Tail::constant);
    std::uniform_int_distribution<std::int64_t> pick(0, h.back());
    std::int64_t total = pick(gen);

    std::vector<std::int64_t> oracle = v;  // cap every value by hand
    for (auto& x : oracle)
      if (x > total) x = total;

    HilbertSeq capped = truncate(h, total);
    CHECK(capped.values() == oracle);
    CHECK(truncate(capped, total).values() == oracle);
  }
}

TEST_CASE("tail bookkeeping") {
  HilbertSeq hv({1, 2, 1}, Tail::zero);
  CHECK(partial_sum(hv).tail() == Tail::constant);
  CHECK(difference(HilbertSeq({1, 4, 4}, Tail::constant), 1).tail() == Tail::zero);
  // sums of a nonzero constant tail grow without bound: no tail claim
  CHECK(partial_sum(HilbertSeq({1, 4, 4}, Tail::constant)).tail() == Tail::none);
  CHECK_THROWS_AS(HilbertSeq({1, 2}).value_at(5), std::out_of_range);
}
