#include <doctest.h>

#include "cblab/blaschke.hpp"
#include "cblab/derivatives.hpp"
#include "cblab/errors.hpp"
#include "oracles.hpp"

using namespace cblab;

namespace {

// m-th derivative at 0 from the Taylor coefficients of the expanded form
std::vector<Complex> oracle_derivatives(const ChebyshevBlaschke& cb, int count) {
  auto c = oracle::long_division(cb.numerator(), cb.denominator(), count);
  double f = 1.0;
  for (int m = 0; m < count; ++m) {
    if (m > 0) f *= m;
    c[m] *= f;
  }
  return c;
}

bool close(Complex a, Complex b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

}  // namespace

TEST_CASE("closed forms against long division") {
  for (double y : {0.5, 1.0, 2.0}) {
    const UpperHalfPoint tau = UpperHalfPoint::imaginary(y);
    for (int n = 1; n <= 8; ++n) {
      const auto want = oracle_derivatives(build(n, tau), 6);
      for (int order = 0; order <= 5; ++order) {
        INFO("n=" << n << " y=" << y << " order=" << order);
        CHECK(close(derivative_at_zero_closed(n, tau, order), want[order], 1e-10));
      }
    }
  }
}

TEST_CASE("parity zeros") {
  for (int n = 2; n <= 7; ++n)
    for (int order = 0; order <= 5; ++order)
      if ((order - n) % 2 != 0) CHECK(derivative_at_zero_closed(n, UpperHalfPoint::imaginary(1.0), order) == Complex(0.0));
}

TEST_CASE("derivatives are functions of the three generators") {
  for (Complex t : {Complex(0.0, 0.5), Complex(0.0, 1.0), Complex(0.1, 0.9)}) {
    const UpperHalfPoint tau(t);
    for (int n = 2; n <= 6; ++n) {
      const FieldGenerators g = field_generators(n, tau);
      const ChebyshevBlaschke cb = build(n, tau, {true, {}});
      CHECK(oracle::rel_err(g.sqrt_k, cb.sqrt_k()) <= 1e-15);
      for (int order = 0; order <= 5; ++order)
        CHECK(close(derivative_at_zero_closed(g, n, order), derivative_at_zero_closed(n, tau, order), 1e-12));
    }
  }
}

TEST_CASE("recurrence against long division") {
  const UpperHalfPoint tau = UpperHalfPoint::imaginary(1.0);
  for (int n = 2; n <= 8; ++n) {
    const auto want = oracle_derivatives(build(n, tau), 14);
    for (int i = 4; i <= 11; ++i) {
      if ((i - n) % 2 != 0) continue;
      const std::vector<Complex> lower(want.begin(), want.begin() + i + 1);
      INFO("n=" << n << " i=" << i);
      CHECK(close(derivative_at_zero_recurrence(n, tau, i, lower), want[i + 2], 1e-9));
    }
    const auto table = derivatives_at_zero(n, tau, 13);
    for (int m = 0; m <= 13; ++m) CHECK(close(table[m], want[m], 1e-9));
  }
}

TEST_CASE("recurrence preconditions") {
  const UpperHalfPoint tau = UpperHalfPoint::imaginary(1.0);
  const std::vector<Complex> lower(8, 0.0);
  CHECK_THROWS_AS(derivative_at_zero_recurrence(2, tau, 2, lower), DomainError);
  CHECK_THROWS_AS(derivative_at_zero_recurrence(2, tau, 5, lower), DomainError);
  CHECK_THROWS_AS(derivative_at_zero_recurrence(2, tau, 6, std::vector<Complex>(3)), DomainError);
  CHECK_THROWS_AS(derivative_at_zero_closed(3, tau, 6), DomainError);
}

TEST_CASE("coefficients from derivatives match the zeros") {
  for (double y : {0.5, 1.0, 2.0})
    for (int n = 2; n <= 10; ++n) {
      const UpperHalfPoint tau = UpperHalfPoint::imaginary(y);
      const auto s = build(n, tau).coefficients();
      const auto d = coefficients_from_derivatives(n, tau);
      REQUIRE(d.size() == s.size());
      for (std::size_t j = 0; j < s.size(); ++j) CHECK(oracle::rel_err(d[j], s[j]) <= 1e-8);
    }
}

TEST_CASE("off the imaginary axis") {
  const UpperHalfPoint tau(Complex(0.2, 1.0));
  for (int n = 2; n <= 6; ++n) {
    const auto s = build(n, tau, {true, {}}).coefficients();
    const auto d = coefficients_from_derivatives(n, tau);
    for (std::size_t j = 0; j < s.size(); ++j) CHECK(oracle::rel_err(d[j], s[j]) <= 1e-8);
  }
}

TEST_CASE("degree one and singular systems") {
  const UpperHalfPoint tau = UpperHalfPoint::imaginary(1.0);
  const auto d = derivatives_at_zero(1, tau, 4);
  CHECK(d == std::vector<Complex>{0.0, 1.0, 0.0, 0.0, 0.0});
  CHECK(coefficients_from_derivatives(1, tau).empty());
  const std::vector<Complex> zeros(12, 0.0);
  CHECK_THROWS_AS(coefficients_from_taylor(4, zeros), SingularSystemError);
}
