#include <doctest.h>

#include <random>

#include "hilb/gotzmann.hpp"

using namespace hilb;
using namespace hilb::gotzmann;

TEST_CASE("persistence values by hand") {
  // 7 = C(4,3) + C(3,2): shifting the tops and levels together
  CHECK(persistence_value(7, 3, 0) == 7);
  CHECK(persistence_value(7, 3, 1) == 9);
  CHECK(persistence_value(7, 3, 2) == 11);
}

TEST_CASE("persistence of a flat below the degree is the constant") {
  for (long s = 1; s <= 20; ++s)
    for (int d = static_cast<int>(s); d <= 20; ++d)
      for (long l = 0; l <= 10; ++l) CHECK(persistence_value(s, d, l) == s);
}

TEST_CASE("persistence rejects bad input") {
  CHECK_THROWS_AS(persistence_value(0, 3, 1), std::domain_error);
  CHECK_THROWS_AS(persistence_value(5, 0, 1), std::domain_error);
  CHECK_THROWS_AS(persistence_value(5, 3, -1), std::domain_error);
}

TEST_CASE("constant persistence polynomial for a flat") {
  GotzmannPolynomial p(5, 7);
  CHECK(p.dimension() == 0);
  CHECK(p.scheme_degree() == 5);
  CHECK(p.coefficients() == std::vector<mpq_class>{mpq_class(5)});
}

TEST_CASE("full slice of two variables gives x + 1") {
  GotzmannPolynomial p(4, 3);  // C(4,3): the degree-3 slice of k[x,y]
  CHECK(p.dimension() == 1);
  CHECK(p.scheme_degree() == 1);
  CHECK(p.coefficients() == std::vector<mpq_class>{mpq_class(1), mpq_class(1)});
}

TEST_CASE("polynomial agrees with the direct persistence formula") {
  std::mt19937_64 gen(5);
  std::uniform_int_distribution<long> cs(1, 120);
  std::uniform_int_distribution<int> ds(1, 9);
  for (int trial = 0; trial < 50; ++trial) {
    long c = cs(gen);
    int d = ds(gen);
    GotzmannPolynomial p(c, d);
    for (long l = 0; l <= 8; ++l)
      CHECK(p.eval(d + l) == persistence_value(c, d, l));
  }
}

TEST_CASE("classify: flats of height s at degree d >= s are curve-like") {
  for (long s = 1; s <= 12; ++s)
    for (int d = static_cast<int>(s); d <= 14; ++d) {
      std::vector<std::int64_t> v(static_cast<std::size_t>(d) + 2, 0);
      // only the two top entries matter for the classification call
      v[static_cast<std::size_t>(d)] = s;
      v[static_cast<std::size_t>(d) + 1] = s;
      FlatClass fc = classify_flat(HilbertSeq(v), d, 4);
      CHECK(fc.kind == FlatClass::curve_like);
      CHECK(fc.degree == s);
      CHECK(fc.dimension == 0);
    }
}

TEST_CASE("classify: the plane before the initial degree is still the full ring") {
  HilbertSeq delta({1, 2, 3, 4, 5});
  FlatClass fc = classify_flat(delta, 3, 3);
  CHECK(fc.kind == FlatClass::polynomial_ring);
}

TEST_CASE("classify: a line plus points has dimension 1") {
  // c_d = C(d+1,d) + k unit terms keeps polynomial degree 1
  const int d = 5;
  const long k = 2;
  const long c = d + 1 + k;
  GotzmannPolynomial p(c, d);
  REQUIRE(p.dimension() == 1);
  std::vector<std::int64_t> v(d + 2, 0);
  v[d] = c;
  v[d + 1] = persistence_value(c, d, 1).get_si();
  FlatClass fc = classify_flat(HilbertSeq(v), d, 4);
  CHECK(fc.kind == FlatClass::other);
  CHECK(fc.dimension == 1);
  CHECK(fc.degree == p.scheme_degree());
}

TEST_CASE("classify requires maximal growth") {
  HilbertSeq delta({1, 3, 6, 6, 0});
  CHECK_THROWS_WITH_AS(classify_flat(delta, 3, 4), "not maximal",
                       std::domain_error);
}
