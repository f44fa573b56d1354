#pragma once

#include <vector>

#include "cblab/polynomial.hpp"
#include "cblab/theta.hpp"

namespace cblab {

// c * prod (z - a) / (1 - conj(a) z) with |c| = 1 and every |a| < 1.
class FiniteBlaschkeProduct {
 public:
  FiniteBlaschkeProduct(Complex unimodular_constant, std::vector<Complex> zeros);

  Complex unimodular_constant() const { return constant_; }
  const std::vector<Complex>& zeros() const { return zeros_; }
  int degree() const { return static_cast<int>(zeros_.size()); }

  Complex operator()(Complex z) const;

 private:
  Complex constant_;
  std::vector<Complex> zeros_;
};

struct BuildOptions {
  // Accept tau off the imaginary axis. The squared zeros continue
  // meromorphically but the Blaschke invariants are no longer checked.
  bool allow_upper_half = false;
  SeriesConfig series{};
};

// The Chebyshev-Blaschke product of degree n,
//
//   f(z) = z^p prod_{i=1}^{n/2} (z^2 - b_i) / (1 - b_i z^2),   p = n mod 2,
//   b_i  = theta_2^2(x_i, tau) / theta_3^2(x_i, tau),          x_i = (2i-1) pi / 2n,
//
// together with the elementary symmetric polynomials S_j of the b_i, which
// give the expanded form
//
//   f(z) = z^p (z^2h + sum (-1)^j S_j z^(2h-2j)) / (1 + sum (-1)^j S_j z^2j).
class ChebyshevBlaschke {
 public:
  // Rebuild from stored squared zeros and coefficients (deserialization). The
  // theta-null caches are recomputed from tau.
  static ChebyshevBlaschke restore(int n, const UpperHalfPoint& tau, std::vector<Complex> b,
                                   std::vector<Complex> s, const SeriesConfig& series = {});

  int degree() const { return n_; }
  int parity() const { return n_ % 2; }
  int half_degree() const { return n_ / 2; }
  const UpperHalfPoint& tau() const { return tau_; }
  const SeriesConfig& series() const { return series_; }
  const std::vector<Complex>& squared_zeros() const { return b_; }
  const std::vector<Complex>& coefficients() const { return s_; }

  Complex sqrt_k() const { return sqrt_k_; }      // sqrt(k(tau))
  Complex sqrt_k_n() const { return sqrt_k_n_; }  // sqrt(k(n tau))
  Complex omega_ratio() const { return omega_ratio_; }  // omega1(n tau) / omega1(tau)

  // Product form. PoleError on a vanishing factor 1 - b_i z^2.
  Complex eval_product(Complex z) const;
  // Expanded form built from S. PoleError on a vanishing denominator.
  Complex eval_expanded(Complex z) const;
  // f(sqrt(k(tau)) x) / sqrt(k(n tau)); DomainError if sqrt(k) x leaves the closed disk.
  Complex elliptic_rational(Complex x) const;

  // Zeros 0 (odd n) and +-sqrt(b_i), constant 1. Imaginary-axis tau only.
  FiniteBlaschkeProduct as_blaschke_product() const;

  poly::Coeffs numerator() const;    // z^p prod (z^2 - b_i)
  poly::Coeffs denominator() const;  // prod (1 - b_i z^2)
  // Taylor coefficients c_0 .. c_{order-1} at 0 of the expanded form.
  poly::Coeffs taylor_series(int order) const;

 private:
  friend ChebyshevBlaschke build(int n, const UpperHalfPoint& tau, const BuildOptions& options);

  ChebyshevBlaschke(int n, UpperHalfPoint tau, SeriesConfig series);
  void cache_generators();

  int n_;
  UpperHalfPoint tau_;
  SeriesConfig series_;
  std::vector<Complex> b_;
  std::vector<Complex> s_;
  Complex sqrt_k_, sqrt_k_n_, omega_ratio_;
};

// DomainError for n < 1 or for tau off the imaginary axis unless allowed.
ChebyshevBlaschke build(int n, const UpperHalfPoint& tau, const BuildOptions& options = {});

// Elementary symmetric polynomials e_1..e_m of the values.
std::vector<Complex> elementary_symmetric(const std::vector<Complex>& values);

// T_n(x) by the three-term recurrence.
Complex chebyshev_poly(int n, Complex x);

struct CriticalValues {
  std::vector<Complex> points;  // critical points in the open disk
  std::vector<Complex> values;  // distinct critical values, ascending real part
};

// Roots of the numerator of f' inside |z| < 1 - 1e-10, mapped through f and
// deduplicated. n = 2 has the single critical point 0; every n >= 3 yields
// exactly the pair -sqrt(k(n tau)), +sqrt(k(n tau)).
// NoCriticalValues for n = 1; RootFindingError on an unexpected count or a
// value away from +-sqrt(k(n tau)).
CriticalValues critical_values(const ChebyshevBlaschke& cb);

struct ModulusLambda {
  double lambda;              // n pi Im(tau) / 4
  double normalized_modulus;  // n Im(tau) / 4, the (1/2pi) log(1/r) convention
};

ModulusLambda modulus_lambda(const ChebyshevBlaschke& cb);

struct ComposeReport {
  int m = 0;
  int n = 0;
  int samples = 0;
  double max_deviation = 0.0;
};

// max |f_{m, n tau}(f_{n, tau}(z)) - f_{mn, tau}(z)| over a fixed 50-point
// interior grid. Requires m, n >= 1 and m n <= 12.
ComposeReport compose_check(int m, int n, const UpperHalfPoint& tau,
                            const BuildOptions& options = {});

// |f(sqrt(k) cd(omega1 u, tau)) - sqrt(k(n tau)) cd(n omega1(n tau) u, n tau)|
double functional_definition_gap(const ChebyshevBlaschke& cb, double u);

}  // namespace cblab
