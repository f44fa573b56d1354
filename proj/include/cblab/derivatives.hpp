#pragma once

#include <span>
#include <vector>

#include "cblab/theta.hpp"

namespace cblab {

// The three quantities every derivative of f_{n,tau} at 0 is a rational
// function of: sqrt(k(tau)), sqrt(k(n tau)) and omega1(n tau) / omega1(tau).
struct FieldGenerators {
  Complex sqrt_k;
  Complex sqrt_k_n;
  Complex omega_ratio;
};

FieldGenerators field_generators(int n, const UpperHalfPoint& tau, const SeriesConfig& cfg = {});

// f^(order)(0) for 0 <= order <= 5 from the closed forms; zero when order and
// n have opposite parity. DomainError outside 0..5.
Complex derivative_at_zero_closed(const FieldGenerators& gens, int n, int order);

// Same, with the generators evaluated internally. On the imaginary axis the
// evaluation runs in 113-bit binary floating point before rounding to double.
Complex derivative_at_zero_closed(int n, const UpperHalfPoint& tau, int order,
                                  const SeriesConfig& cfg = {});

// f^(i+2)(0) from the ODE recurrence given f^(0)(0) .. f^(i)(0) in `lower`.
// Requires i >= 4 and i = n (mod 2); entries of opposite parity are read as 0.
Complex derivative_at_zero_recurrence(const FieldGenerators& gens, int n, int i,
                                      std::span<const Complex> lower);
Complex derivative_at_zero_recurrence(int n, const UpperHalfPoint& tau, int i,
                                      std::span<const Complex> lower, const SeriesConfig& cfg = {});

// f^(0)(0) .. f^(max_order)(0): closed forms up to 5, recurrence beyond.
// Extended precision on the imaginary axis, as above.
std::vector<Complex> derivatives_at_zero(int n, const UpperHalfPoint& tau, int max_order,
                                         const SeriesConfig& cfg = {});

// Solve for S_{n,1..h} from Taylor coefficients c_0.. c_{n+2h} at 0 by
// matching f * denominator = numerator in degrees n+2, n+4, .., n+2h.
// SingularSystemError when an equilibrated pivot drops below 1e-12.
std::vector<Complex> coefficients_from_taylor(int n, std::span<const Complex> taylor);

// S_{n,j} from the derivatives at 0 (closed forms + recurrence + linear system).
std::vector<Complex> coefficients_from_derivatives(int n, const UpperHalfPoint& tau,
                                                   const SeriesConfig& cfg = {});

}  // namespace cblab
