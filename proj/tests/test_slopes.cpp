#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "filltop/farey.hpp"
#include "filltop/slope.hpp"

using namespace filltop;

TEST_CASE("slope canonical form") {
  CHECK(Slope(2, 4) == Slope(1, 2));
  CHECK(Slope(-2, 4) == Slope(-1, 2));
  CHECK(Slope(3, -6) == Slope(-1, 2));
  CHECK(Slope(5, 0) == Slope(1, 0));
  CHECK(Slope(-5, 0) == Slope(1, 0));
  CHECK(Slope(0, -7) == Slope(0, 1));
  CHECK(Slope(0, 1).str() == "0/1");
  CHECK(Slope(1, 0).str() == "1/0");
  CHECK_THROWS_AS(Slope(0, 0), error);
}

TEST_CASE("slope parsing round-trips") {
  for (const char* text : {"0/1", "1/0", "-3/7", "355/113", "8/13"}) {
    CHECK(Slope::parse(text).str() == text);
  }
  CHECK(Slope::parse("2/4").str() == "1/2");
  CHECK(Slope::parse("+3/7").str() == "3/7");
  CHECK_THROWS_AS(Slope::parse("abc"), error);
  CHECK_THROWS_AS(Slope::parse("3"), error);
  CHECK_THROWS_AS(Slope::parse("0/0"), error);
}

TEST_CASE("intersection numbers on both surfaces") {
  Slope zero(0, 1), inf(1, 0);
  CHECK(intersection_number(zero, inf, SurfaceKind::T11) == 1);
  CHECK(intersection_number(zero, inf, SurfaceKind::S04) == 2);

  // Fibonacci pair, n = 5: checked against the plain determinant.
  Slope fib(fibonacci(5), fibonacci(6));
  REQUIRE(fib == Slope(5, 8));
  Int det = Int(0) * Int(8) - Int(5) * Int(1);
  Int expected = boost::multiprecision::abs(det);
  CHECK(expected == 5);
  CHECK(intersection_number(zero, fib, SurfaceKind::T11) == expected);
}

TEST_CASE("intersection number is symmetric and vanishes only on equal slopes") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coin(-20, 20);
  for (int i = 0; i < 200; ++i) {
    int p1 = coin(rng), q1 = std::abs(coin(rng)), p2 = coin(rng), q2 = std::abs(coin(rng));
    if ((p1 == 0 && q1 == 0) || (p2 == 0 && q2 == 0)) continue;
    Slope a(p1, q1), b(p2, q2);
    Int ab = intersection_number(a, b, SurfaceKind::T11);
    CHECK(ab == intersection_number(b, a, SurfaceKind::T11));
    CHECK((ab == 0) == (a == b));
    CHECK(intersection_number(a, b, SurfaceKind::S04) == 2 * ab);
  }
}

TEST_CASE("value ordering puts the infinite slope last") {
  Slope inf(1, 0);
  CHECK(Slope(0, 1).value_less(Slope(1, 1)));
  CHECK(Slope(-1, 3).value_less(Slope(1, 2)));
  CHECK(Slope(1, 2).value_less(inf));
  CHECK_FALSE(inf.value_less(Slope(100, 1)));
  CHECK_FALSE(inf.value_less(inf));
}
