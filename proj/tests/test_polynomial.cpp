#include <doctest.h>

#include <algorithm>

#include "cblab/errors.hpp"
#include "cblab/polynomial.hpp"
#include "oracles.hpp"

using cblab::Complex;
namespace poly = cblab::poly;

TEST_CASE("arithmetic") {
  const poly::Coeffs a{1.0, 2.0};          // 1 + 2z
  const poly::Coeffs b{-1.0, 0.0, 3.0};    // -1 + 3z^2
  const poly::Coeffs ab = poly::multiply(a, b);
  REQUIRE(ab.size() == 4);
  CHECK(ab[0] == Complex(-1.0));
  CHECK(ab[1] == Complex(-2.0));
  CHECK(ab[2] == Complex(3.0));
  CHECK(ab[3] == Complex(6.0));
  CHECK(poly::evaluate(ab, Complex(0.5, 1.0)) == poly::evaluate(a, Complex(0.5, 1.0)) * poly::evaluate(b, Complex(0.5, 1.0)));
  const poly::Coeffs d = poly::derivative(ab);
  CHECK(d == poly::Coeffs{-2.0, 6.0, 18.0});
  const poly::Coeffs diff = poly::subtract(a, b);
  CHECK(diff == poly::Coeffs{2.0, 2.0, -3.0});
  CHECK(poly::trimmed(poly::Coeffs{1.0, 2.0, 1e-20}, 1e-15).size() == 2);
}

TEST_CASE("companion roots") {
  const std::vector<Complex> expected{Complex(1.0), Complex(0.0, 2.0), Complex(-0.5)};
  poly::Coeffs p{1.0};
  for (Complex r : expected) p = poly::multiply(p, poly::Coeffs{-r, 1.0});
  const auto found = poly::roots(p);
  REQUIRE(found.size() == 3);
  for (Complex r : expected) {
    double best = INFINITY;
    for (Complex f : found) best = std::min(best, std::abs(f - r));
    CHECK(best < 1e-12);
  }
  CHECK(poly::roots(poly::Coeffs{5.0}).empty());
  CHECK_THROWS_AS(poly::roots(poly::Coeffs{0.0, 0.0}), cblab::RootFindingError);
}

TEST_CASE("series division against the schoolbook recurrence") {
  CHECK(poly::series_divide(poly::Coeffs{1.0}, poly::Coeffs{1.0, -1.0}, 6) == poly::Coeffs(6, 1.0));
  const poly::Coeffs num{0.3, Complex(1.0, -0.2), 0.0, 2.0};
  const poly::Coeffs den{1.5, 0.4, Complex(0.0, 0.7), -0.1, 0.2};
  const auto got = poly::series_divide(num, den, 20);
  const auto want = oracle::long_division(num, den, 20);
  for (int i = 0; i < 20; ++i) CHECK(std::abs(got[i] - want[i]) <= 1e-13 * std::max(1.0, std::abs(want[i])));
  CHECK_THROWS_AS(poly::series_divide(num, poly::Coeffs{0.0, 1.0}, 4), cblab::DomainError);
}
