#include "cblab/theta.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "cblab/errors.hpp"

namespace cblab {

void SeriesConfig::validate() const {
  if (!(rel_tol > 0.0)) throw DomainError("series rel_tol must be positive");
  if (max_index < 8) throw DomainError("series max_index must be at least 8");
}

UpperHalfPoint::UpperHalfPoint(Complex value, double floor)
    : value_(value), floor_(floor) {
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag()))
    throw DomainError("tau must be finite");
  if (!(value.imag() > 0.0))
    throw DomainError("tau must lie in the open upper half plane, got Im(tau) = " +
                      std::to_string(value.imag()));
}

UpperHalfPoint UpperHalfPoint::imaginary(double y, double floor) {
  return UpperHalfPoint(Complex(0.0, y), floor);
}

UpperHalfPoint UpperHalfPoint::scaled(double factor) const {
  return UpperHalfPoint(value_ * factor, floor_);
}

UpperHalfPoint UpperHalfPoint::shifted(double re_shift) const {
  return UpperHalfPoint(value_ + re_shift, floor_);
}

Complex nome(const UpperHalfPoint& tau) {
  return std::exp(Complex(0.0, 2.0 * kPi) * tau.value());
}

namespace {

// exp(2 pi i tau w + i m v)
Complex series_term(const UpperHalfPoint& tau, double weight, double freq, Complex v) {
  return std::exp(Complex(0.0, 2.0 * kPi * weight) * tau.value() +
                  Complex(0.0, freq) * v);
}

}  // namespace

ThetaEval theta_eval(int j, Complex v, const UpperHalfPoint& tau,
                     const SeriesConfig& cfg) {
  if (j < 0 || j > 3) throw DomainError("theta index must be in {0,1,2,3}");
  cfg.validate();

  ThetaEval out;
  out.degraded = tau.degraded();
  const bool half_integer = (j == 1 || j == 2);

  Complex lead{0.0, 0.0};
  double magnitude = 0.0;
  int first = 0;
  if (!half_integer) {
    // n = 0 term of theta_3 / theta_0 is exactly 1.
    lead = 1.0;
    magnitude = 1.0;
    first = 1;
  }
  std::vector<Complex> pairs;

  for (int n = first; n <= cfg.max_index; ++n) {
    Complex a, b;
    if (half_integer) {
      // pair (n, -n-1) shares the weight (n+1/2)^2
      const double w = (n + 0.5) * (n + 0.5);
      a = series_term(tau, w, 2.0 * n + 1.0, v);
      b = series_term(tau, w, -(2.0 * n + 1.0), v);
      if (j == 1) {
        // i^(2n-1) = -i (-1)^n and i^(2(-n-1)-1) = i (-1)^n
        const double sign = (n % 2 == 0) ? 1.0 : -1.0;
        a *= Complex(0.0, -sign);
        b *= Complex(0.0, sign);
      }
    } else {
      const double w = double(n) * double(n);
      a = series_term(tau, w, 2.0 * n, v);
      b = series_term(tau, w, -2.0 * n, v);
      if (j == 0 && n % 2 == 1) {
        a = -a;
        b = -b;
      }
    }
    // Stop on the size of the terms, not of their sum: a pair can cancel at
    // special v while the next one does not.
    const double pair_size = std::abs(a) + std::abs(b);
    pairs.push_back(a + b);
    magnitude += pair_size;
    out.terms = half_integer ? n + 1 : n;
    if (pair_size < cfg.rel_tol * magnitude || magnitude == 0.0) {
      out.converged = true;
      break;
    }
  }
  // smallest terms first
  Complex sum{0.0, 0.0};
  for (auto it = pairs.rbegin(); it != pairs.rend(); ++it) sum += *it;
  out.value = sum + lead;
  return out;
}

Complex theta(int j, Complex v, const UpperHalfPoint& tau, const SeriesConfig& cfg) {
  const ThetaEval e = theta_eval(j, v, tau, cfg);
  if (!e.converged) {
    throw PrecisionError("theta_" + std::to_string(j) + " series did not reach rel_tol " +
                             "within max_index = " + std::to_string(cfg.max_index) +
                             (e.degraded ? " (Im(tau) below accuracy floor)" : ""),
                         e.degraded);
  }
  return e.value;
}

}  // namespace cblab
