#include <doctest.h>

#include <random>

#include "cblab/blaschke.hpp"
#include "cblab/elliptic.hpp"
#include "cblab/errors.hpp"
#include "cblab/modulus.hpp"
#include "oracles.hpp"

using namespace cblab;

TEST_CASE("AGM and K") {
  CHECK(agm(1.0, std::sqrt(2.0)) == doctest::Approx(1.1981402347355922).epsilon(1e-15));
  for (double k : {0.0, 0.1, 0.5, 1.0 / std::sqrt(2.0), 0.9, 0.99})
    CHECK(complete_elliptic_k(k) == doctest::Approx(oracle::elliptic_k_quadrature(k)).epsilon(1e-13));
  CHECK_THROWS_AS(complete_elliptic_k(1.0), DomainError);
  CHECK_THROWS_AS(agm(-1.0, 1.0), DomainError);
}

TEST_CASE("Grotzsch anchors") {
  CHECK(std::abs(grotzsch_modulus(1.0 / std::sqrt(2.0)) - 0.25) <= 1e-10);
  CHECK(std::abs(grotzsch_modulus(3.0 - 2.0 * std::sqrt(2.0)) - 0.5) <= 1e-10);
  // decreasing in the slit length
  double prev = INFINITY;
  for (double t = 0.05; t < 1.0; t += 0.05) {
    const double m = grotzsch_modulus(t);
    CHECK(m < prev);
    prev = m;
  }
  CHECK_THROWS_AS(grotzsch_modulus(0.0), DomainError);
}

TEST_CASE("annulus and distance") {
  CHECK(annulus_modulus(std::exp(-2.0 * kPi)) == doctest::Approx(1.0));
  CHECK_THROWS_AS(annulus_modulus(1.0), DomainError);
  CHECK(poincare_distance(0.0, 0.5) == doctest::Approx(std::log(3.0)));
  CHECK(covering_modulus(0.75, 3) == doctest::Approx(0.25));
}

TEST_CASE("geodesic between the critical values") {
  for (double y : {0.5, 1.0, 2.0})
    for (int n = 1; n <= 4; ++n) {
      const double s = EllipticContext(UpperHalfPoint::imaginary(n * y)).sqrt_k().real();
      CHECK(std::abs(disk_minus_geodesic_modulus(GeodesicSegment(-s, s)) - n * y / 4.0) <= 1e-8);
    }
}

TEST_CASE("invariance under disk automorphisms") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const GeodesicSegment seg(Complex(-0.3, 0.1), Complex(0.4, 0.2));
  const double m = disk_minus_geodesic_modulus(seg);
  for (int i = 0; i < 10; ++i) {
    const Complex c = std::polar(0.9 * unit(rng), 2.0 * kPi * unit(rng));
    const Complex rot = std::polar(1.0, 2.0 * kPi * unit(rng));
    auto phi = [&](Complex z) { return rot * (z - c) / (1.0 - std::conj(c) * z); };
    CHECK(std::abs(disk_minus_geodesic_modulus(GeodesicSegment(phi(seg.a()), phi(seg.b()))) - m) <= 1e-10);
  }
  CHECK_THROWS_AS(GeodesicSegment(0.2, 0.2), DomainError);
  CHECK_THROWS_AS(GeodesicSegment(0.2, 1.0), DomainError);
}

TEST_CASE("dessin size") {
  for (double y : {0.5, 1.0, 2.0})
    for (int n = 2; n <= 6; ++n) {
      const DessinSize ds = dessin_size(build(n, UpperHalfPoint::imaginary(y)));
      CHECK(std::abs(ds.size - y / 4.0) <= 1e-8);
      CHECK(ds.ring_modulus == doctest::Approx(n * y / 4.0));
      CHECK(ds.lambda == doctest::Approx(kPi * n * y / 4.0));
    }
  CHECK_THROWS_AS(dessin_size(build(1, UpperHalfPoint::imaginary(1.0))), DomainError);
}
