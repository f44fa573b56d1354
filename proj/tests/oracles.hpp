#pragma once

// Reference implementations used only by the tests. They share no code with
// the library and take different routes to the same quantities.

#include <cmath>
#include <complex>
#include <vector>

namespace oracle {

using LComplex = std::complex<long double>;
using Complex = std::complex<double>;

inline constexpr long double kPiL = 3.141592653589793238462643383279502884L;

// Jacobi triple product with Q = exp(2 pi i tau), 400 factors.
inline Complex theta_product(int j, Complex v_in, Complex tau_in) {
  const LComplex tau(tau_in.real(), tau_in.imag());
  const LComplex v(v_in.real(), v_in.imag());
  const LComplex I(0.0L, 1.0L);
  const LComplex Q = std::exp(2.0L * kPiL * I * tau);
  const LComplex Q4 = std::exp(2.0L * kPiL * I * tau / 4.0L);  // Q^(1/4)
  const LComplex c = std::cos(2.0L * v);
  LComplex prod = 1.0L;
  LComplex Qm = Q;  // Q^m
  for (int m = 1; m <= 400; ++m, Qm *= Q) {
    const LComplex q2m = Qm * Qm;
    const LComplex q2m1 = q2m / Q;
    LComplex f = 1.0L - q2m;
    switch (j) {
      case 3: f *= 1.0L + 2.0L * q2m1 * c + q2m1 * q2m1; break;
      case 0: f *= 1.0L - 2.0L * q2m1 * c + q2m1 * q2m1; break;
      case 2: f *= 1.0L + 2.0L * q2m * c + q2m * q2m; break;
      default: f *= 1.0L - 2.0L * q2m * c + q2m * q2m; break;
    }
    prod *= f;
  }
  if (j == 2) prod *= 2.0L * Q4 * std::cos(v);
  if (j == 1) prod *= 2.0L * Q4 * std::sin(v);
  return Complex(static_cast<double>(prod.real()), static_cast<double>(prod.imag()));
}

// K(k) = int_0^{pi/2} (1 - k^2 sin^2 t)^(-1/2) dt by the trapezoid rule, which
// converges geometrically for this periodic integrand.
inline double elliptic_k_quadrature(double k, int panels = 4000) {
  const long double h = (kPiL / 2.0L) / panels;
  long double sum = 0.0L;
  for (int i = 0; i <= panels; ++i) {
    const long double s = std::sin(i * h);
    const long double f = 1.0L / std::sqrt(1.0L - (long double)k * k * s * s);
    sum += (i == 0 || i == panels) ? f / 2.0L : f;
  }
  return static_cast<double>(sum * h);
}

// Taylor coefficients of num/den by the schoolbook recurrence.
inline std::vector<Complex> long_division(const std::vector<Complex>& num,
                                          const std::vector<Complex>& den, int order) {
  std::vector<Complex> q(static_cast<std::size_t>(order));
  for (int i = 0; i < order; ++i) {
    Complex acc = i < (int)num.size() ? num[i] : Complex(0.0);
    for (int j = 1; j <= i && j < (int)den.size(); ++j) acc -= den[j] * q[i - j];
    q[i] = acc / den[0];
  }
  return q;
}

// e_1..e_m by summing over all subsets.
inline std::vector<Complex> symmetric_by_subsets(const std::vector<Complex>& x) {
  const int m = static_cast<int>(x.size());
  std::vector<Complex> e(static_cast<std::size_t>(m), 0.0);
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    Complex p = 1.0;
    int bits = 0;
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) {
        p *= x[i];
        ++bits;
      }
    e[bits - 1] += p;
  }
  return e;
}

inline double rel_err(Complex a, Complex b) {
  return std::abs(a - b) / std::max(std::abs(b), 1e-300);
}

}  // namespace oracle
