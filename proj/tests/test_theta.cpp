#include <doctest.h>

#include <vector>

#include "cblab/errors.hpp"
#include "cblab/theta.hpp"
#include "oracles.hpp"

using cblab::Complex;
using cblab::kPi;
using cblab::theta;
using cblab::UpperHalfPoint;

namespace {

const std::vector<UpperHalfPoint>& grid() {
  static const std::vector<UpperHalfPoint> g{
      UpperHalfPoint::imaginary(0.3), UpperHalfPoint::imaginary(0.5), UpperHalfPoint::imaginary(1.0),
      UpperHalfPoint::imaginary(2.0), UpperHalfPoint(Complex(0.25, 0.75))};
  return g;
}

std::vector<Complex> v_grid() {
  std::vector<Complex> vs;
  for (int i = 0; i < 16; ++i) vs.emplace_back(-1.5 + 3.0 * i / 15.0, i % 3 == 0 ? 0.2 : 0.0);
  return vs;
}

}  // namespace

TEST_CASE("theta_3(0, i/2) frozen value") {
  const Complex t = theta(3, 0.0, UpperHalfPoint::imaginary(0.5));
  CHECK(t.real() == doctest::Approx(1.0864348112133080).epsilon(1e-15));
  CHECK(t.imag() == 0.0);
  // 1 + 2 sum exp(-pi n^2), summed by hand
  long double s = 1.0L;
  for (int n = 1; n < 12; ++n) s += 2.0L * std::exp(-oracle::kPiL * n * n);
  CHECK(std::abs(t.real() - double(s)) < 4e-16);
}

TEST_CASE("theta_3 at large Im(tau) is 1") {
  CHECK(theta(3, 0.0, UpperHalfPoint::imaginary(50.0)) == Complex(1.0, 0.0));
}

TEST_CASE("series agrees with the triple product") {
  for (const auto& tau : grid())
    for (Complex v : v_grid())
      for (int j = 0; j < 4; ++j) {
        const Complex a = theta(j, v, tau);
        const Complex b = oracle::theta_product(j, v, tau.value());
        INFO("j=" << j << " tau=" << tau.value() << " v=" << v);
        CHECK(std::abs(a - b) <= 1e-13 * std::max(1.0, std::abs(b)));
      }
}

TEST_CASE("odd and half-period zeros") {
  for (const auto& tau : grid()) {
    CHECK(std::abs(theta(1, 0.0, tau)) == 0.0);
    CHECK(std::abs(theta(2, kPi / 2.0, tau)) <= 1e-15 * std::abs(theta(2, 0.0, tau)));
  }
}

TEST_CASE("quartic relation") {
  for (const auto& tau : grid()) {
    const Complex t0 = theta(0, 0.0, tau), t2 = theta(2, 0.0, tau), t3 = theta(3, 0.0, tau);
    CHECK(std::abs(std::pow(t3, 4) - std::pow(t2, 4) - std::pow(t0, 4)) <= 1e-12 * std::abs(std::pow(t3, 4)));
  }
}

TEST_CASE("theta_0 is theta_3 shifted by pi/2") {
  for (const auto& tau : grid())
    for (Complex v : v_grid())
      CHECK(oracle::rel_err(theta(0, v, tau), theta(3, v + kPi / 2.0, tau)) <= 1e-12);
}

TEST_CASE("a shift of v by 1/2 does not give theta_0") {
  const auto tau = UpperHalfPoint::imaginary(0.5);
  CHECK(oracle::rel_err(theta(0, 0.3, tau), theta(3, 0.8, tau)) > 1e-3);
}

TEST_CASE("tau -> tau + 1") {
  const Complex I(0.0, 1.0);
  for (const auto& tau : grid())
    for (Complex v : v_grid()) {
      CHECK(oracle::rel_err(theta(3, v, tau.shifted(1.0)), theta(3, v, tau)) <= 1e-12);
      // every term of theta_2 has weight (n + 1/2)^2 = n^2 + n + 1/4
      CHECK(oracle::rel_err(theta(2, v, tau.shifted(1.0)), I * theta(2, v, tau)) <= 1e-12);
      CHECK(oracle::rel_err(std::pow(theta(2, v, tau.shifted(1.0)), 4), std::pow(theta(2, v, tau), 4)) <= 1e-12);
    }
}

TEST_CASE("tau -> -1/tau") {
  const Complex I(0.0, 1.0);
  for (const auto& tau : grid()) {
    const Complex t = tau.value();
    const UpperHalfPoint inv(-1.0 / t), quarter(t / 4.0);
    for (Complex v : v_grid()) {
      const Complex f = std::sqrt(-I * t / 2.0) * std::exp(I * t * v * v / (2.0 * kPi));
      CHECK(oracle::rel_err(theta(3, v, inv), f * theta(3, t * v / 2.0, quarter)) <= 1e-10);
      CHECK(oracle::rel_err(theta(2, v, inv), f * theta(0, t * v / 2.0, quarter)) <= 1e-10);
    }
  }
}

TEST_CASE("theta_3(0, tau - 1/2) = theta_0(0, tau)") {
  for (const auto& tau : grid())
    CHECK(oracle::rel_err(theta(3, 0.0, tau.shifted(-0.5)), theta(0, 0.0, tau)) <= 1e-12);
}

TEST_CASE("weight 2 transform under tau -> tau / (4 tau + 1)") {
  for (Complex t : {Complex(0, 1), Complex(0, 2), Complex(0.25, 1)}) {
    const UpperHalfPoint tau(t), image(t / (4.0 * t + 1.0));
    CHECK(oracle::rel_err(theta(3, 0.0, image), std::sqrt(4.0 * t + 1.0) * theta(3, 0.0, tau)) <= 1e-10);
  }
}

TEST_CASE("repeat evaluations are bit-identical") {
  const UpperHalfPoint tau(Complex(0.25, 0.75));
  for (int j = 0; j < 4; ++j) {
    const Complex a = theta(j, Complex(0.3, 0.1), tau);
    const Complex b = theta(j, Complex(0.3, 0.1), tau);
    CHECK(a == b);
  }
}

TEST_CASE("theta_null_imag in double matches the series") {
  for (double y : {0.3, 1.0, 2.0})
    for (int j : {0, 2, 3})
      CHECK(cblab::theta_null_imag<double>(j, y) ==
            doctest::Approx(theta(j, 0.0, UpperHalfPoint::imaginary(y)).real()).epsilon(1e-14));
}

TEST_CASE("domain and precision errors") {
  CHECK_THROWS_AS(UpperHalfPoint::imaginary(0.0), cblab::DomainError);
  CHECK_THROWS_AS(UpperHalfPoint(Complex(1.0, -0.5)), cblab::DomainError);
  CHECK_THROWS_AS(UpperHalfPoint(Complex(NAN, 1.0)), cblab::DomainError);
  CHECK_THROWS_AS(theta(4, 0.0, UpperHalfPoint::imaginary(1.0)), cblab::DomainError);
  CHECK_THROWS_AS(theta(3, 0.0, UpperHalfPoint::imaginary(1.0), {0.0, 64}), cblab::DomainError);

  const UpperHalfPoint small = UpperHalfPoint::imaginary(0.01);
  CHECK(small.degraded());
  const cblab::ThetaEval e = cblab::theta_eval(3, 0.0, small, {1e-15, 8});
  CHECK_FALSE(e.converged);
  CHECK(e.degraded);
  try {
    theta(3, 0.0, small, {1e-15, 8});
    FAIL("expected PrecisionError");
  } catch (const cblab::PrecisionError& err) {
    CHECK(err.degraded());
  }
}

TEST_CASE("nome") {
  CHECK(std::abs(cblab::nome(UpperHalfPoint::imaginary(1.0)) - std::exp(-2.0 * kPi)) < 1e-18);
}
