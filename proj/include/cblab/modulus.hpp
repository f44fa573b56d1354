#pragma once

#include "cblab/blaschke.hpp"
#include "cblab/theta.hpp"

namespace cblab {

// Hyperbolic geodesic between two distinct points of the open unit disk.
class GeodesicSegment {
 public:
  GeodesicSegment(Complex a, Complex b);
  Complex a() const { return a_; }
  Complex b() const { return b_; }

 private:
  Complex a_, b_;
};

// Curvature -1 distance: log((1 + d) / (1 - d)), d = |(b - a) / (1 - conj(a) b)|.
double poincare_distance(Complex a, Complex b);

// (1 / 2pi) log(1 / r) for the annulus r < |z| < 1.
double annulus_modulus(double r);

// Arithmetic-geometric mean of two positive reals, stopped at 1e-15 relative.
double agm(double a, double b);

// Complete elliptic integral of the first kind K(k) = pi / (2 agm(1, sqrt(1 - k^2))).
double complete_elliptic_k(double k);

// Modulus of the unit disk slit along [0, t]: K(sqrt(1 - t^2)) / (4 K(t)).
double grotzsch_modulus(double t);

// The Moebius map taking a to 0 carries the geodesic onto a radial slit of
// length |(b - a) / (1 - conj(a) b)|.
double disk_minus_geodesic_modulus(const GeodesicSegment& segment);

// Modulus of a degree-n unbranched cover of a ring domain of modulus M.
double covering_modulus(double modulus, int n);

struct DessinSize {
  double size;           // modulus of D - f^{-1}(l) in the (1/2pi) log convention
  double ring_modulus;   // M(D - l) for l joining -sqrt(k(n tau)) and sqrt(k(n tau))
  double lambda;         // pi * ring_modulus, the modulus written n pi tau / 4i
};

// Requires n >= 2 and tau on the imaginary axis. PrecisionError if the size
// misses Im(tau)/4 by more than 1e-8.
DessinSize dessin_size(const ChebyshevBlaschke& cb);

}  // namespace cblab
