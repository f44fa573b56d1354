#pragma once

// Jacobi theta functions with the nome q = exp(2 pi i tau).
//
//   theta_1(v,tau) = sum_n i^(2n-1) q^((n+1/2)^2) e^((2n+1)iv)
//   theta_2(v,tau) = sum_n          q^((n+1/2)^2) e^((2n+1)iv)
//   theta_3(v,tau) = sum_n          q^(n^2)       e^(2niv)
//   theta_0(v,tau) = sum_n (-1)^n   q^(n^2)       e^(2niv)
//
// Every term is evaluated as exp(2 pi i tau w + i m v) with the real weight
// w = n^2 or (n+1/2)^2, so no fractional power of q is ever formed.

#include <complex>
#include <numbers>

#include <boost/math/constants/constants.hpp>

namespace cblab {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;

struct SeriesConfig {
  double rel_tol = 1e-15;
  int max_index = 64;

  // Throws DomainError unless rel_tol > 0 and max_index >= 8.
  void validate() const;
};

// A point of the open upper half plane. Construction rejects Im <= 0.
// Points below `floor` in imaginary part are accepted but flagged as degraded.
class UpperHalfPoint {
 public:
  static constexpr double kDefaultFloor = 0.05;

  explicit UpperHalfPoint(Complex value, double floor = kDefaultFloor);

  // tau = i*y.
  static UpperHalfPoint imaginary(double y, double floor = kDefaultFloor);

  Complex value() const { return value_; }
  double re() const { return value_.real(); }
  double im() const { return value_.imag(); }
  double floor() const { return floor_; }
  bool degraded() const { return value_.imag() < floor_; }
  bool on_imaginary_axis() const { return value_.real() == 0.0; }

  // n * tau, keeping the accuracy floor.
  UpperHalfPoint scaled(double factor) const;
  UpperHalfPoint shifted(double re_shift) const;

 private:
  Complex value_;
  double floor_;
};

Complex nome(const UpperHalfPoint& tau);

struct ThetaEval {
  Complex value;
  int terms = 0;  // largest |n| summed
  bool converged = false;
  bool degraded = false;
};

// Partial sum over n = -N..N, stopped once the magnitudes of the newest
// symmetric pair of terms fall below rel_tol times the accumulated absolute
// sum. Never throws on truncation.
ThetaEval theta_eval(int j, Complex v, const UpperHalfPoint& tau,
                     const SeriesConfig& cfg = {});

// As theta_eval but throws PrecisionError when max_index is exhausted.
Complex theta(int j, Complex v, const UpperHalfPoint& tau,
              const SeriesConfig& cfg = {});

// theta_j(0, iy) for j in {0, 2, 3} on the imaginary axis, in any real type
// (used with extended precision where double is not enough). The series is
// summed until the terms stop changing the total.
template <class Real>
Real theta_null_imag(int j, const Real& y) {
  using std::exp;
  const Real pi = boost::math::constants::pi<Real>();
  const Real two_pi_y = 2 * pi * y;
  Real sum = (j == 2) ? Real(0) : Real(1);
  for (int n = (j == 2) ? 0 : 1; n < 200; ++n) {
    const Real w = (j == 2) ? (Real(n) + Real(0.5)) * (Real(n) + Real(0.5))
                            : Real(n) * Real(n);
    Real term = 2 * exp(-two_pi_y * w);
    if (j == 0 && (n % 2) == 1) term = -term;
    const Real next = sum + term;
    if (next == sum) break;
    sum = next;
  }
  return sum;
}

}  // namespace cblab
