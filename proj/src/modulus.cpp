#include "cblab/modulus.hpp"

#include <cmath>
#include <string>

#include "cblab/errors.hpp"

namespace cblab {

namespace {

constexpr double kAgmTol = 1e-15;
constexpr int kAgmMaxIter = 64;
constexpr double kDessinTol = 1e-8;

void require_in_disk(Complex z, const char* name) {
  if (!(std::abs(z) < 1.0))
    throw DomainError(std::string(name) + " must lie in the open unit disk");
}

double pseudo_distance(Complex a, Complex b) {
  return std::abs((b - a) / (1.0 - std::conj(a) * b));
}

}  // namespace

GeodesicSegment::GeodesicSegment(Complex a, Complex b) : a_(a), b_(b) {
  require_in_disk(a, "geodesic endpoint a");
  require_in_disk(b, "geodesic endpoint b");
  if (a == b) throw DomainError("geodesic endpoints must be distinct");
}

double poincare_distance(Complex a, Complex b) {
  require_in_disk(a, "a");
  require_in_disk(b, "b");
  const double d = pseudo_distance(a, b);
  return std::log((1.0 + d) / (1.0 - d));
}

double annulus_modulus(double r) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("annulus radius must lie in (0,1)");
  return std::log(1.0 / r) / (2.0 * kPi);
}

double agm(double a, double b) {
  if (!(a > 0.0 && b > 0.0)) throw DomainError("agm needs positive arguments");
  for (int it = 0; it < kAgmMaxIter && std::abs(a - b) > kAgmTol * a; ++it) {
    const double mean = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = mean;
  }
  return 0.5 * (a + b);
}

double complete_elliptic_k(double k) {
  if (!(k >= 0.0 && k < 1.0)) throw DomainError("elliptic modulus must lie in [0,1)");
  return kPi / (2.0 * agm(1.0, std::sqrt((1.0 - k) * (1.0 + k))));
}

double grotzsch_modulus(double t) {
  if (!(t > 0.0 && t < 1.0)) throw DomainError("Grotzsch slit length must lie in (0,1)");
  // K(t') / (4 K(t)) with t' = sqrt(1 - t^2); the complement of t' is t itself
  const double complement = std::sqrt((1.0 - t) * (1.0 + t));
  return agm(1.0, complement) / (4.0 * agm(1.0, t));
}

double disk_minus_geodesic_modulus(const GeodesicSegment& segment) {
  return grotzsch_modulus(pseudo_distance(segment.a(), segment.b()));
}

double covering_modulus(double modulus, int n) {
  if (!(modulus > 0.0)) throw DomainError("modulus must be positive");
  if (n < 1) throw DomainError("covering degree must be positive");
  return modulus / n;
}

DessinSize dessin_size(const ChebyshevBlaschke& cb) {
  if (cb.degree() < 2) throw DomainError("dessin size needs n >= 2");
  if (!cb.tau().on_imaginary_axis())
    throw DomainError("dessin size needs tau on the imaginary axis");
  const double c = cb.sqrt_k_n().real();
  const double ring = disk_minus_geodesic_modulus(GeodesicSegment(-c, c));
  const double size = covering_modulus(ring, cb.degree());
  if (std::abs(size - cb.tau().im() / 4.0) > kDessinTol)
    throw PrecisionError("dessin size misses Im(tau)/4 beyond 1e-8", cb.tau().degraded());
  return {size, ring, kPi * ring};
}

}  // namespace cblab
