#pragma once

#include "cblab/theta.hpp"

namespace cblab {

// Theta nulls at a fixed tau and the Jacobi elliptic functions built on them:
//
//   omega1 = theta_3(0)^2,  sqrt(k) = theta_2(0)/theta_3(0),  k = sqrt(k)^2
//   sn(u) = theta_3(0)/theta_2(0) * theta_1(x)/theta_0(x)
//   cn(u) = theta_0(0)/theta_2(0) * theta_2(x)/theta_0(x)
//   dn(u) = theta_0(0)/theta_3(0) * theta_3(x)/theta_0(x)
//   cd(u) = cn(u)/dn(u)
//
// with x = u / omega1. Immutable after construction.
class EllipticContext {
 public:
  explicit EllipticContext(UpperHalfPoint tau, SeriesConfig cfg = {});

  const UpperHalfPoint& tau() const { return tau_; }
  const SeriesConfig& config() const { return cfg_; }

  Complex theta0_null() const { return theta0_; }
  Complex theta2_null() const { return theta2_; }
  Complex theta3_null() const { return theta3_; }

  Complex omega1() const { return theta3_ * theta3_; }
  Complex sqrt_k() const { return theta2_ / theta3_; }
  // Always sqrt_k() * sqrt_k(), bit for bit.
  Complex k_modulus() const {
    const Complex s = sqrt_k();
    return s * s;
  }

  // Throw PoleError when the denominator theta is negligible against the
  // numerator.
  Complex sn(Complex u) const;
  Complex cn(Complex u) const;
  Complex dn(Complex u) const;
  Complex cd(Complex u) const;

 private:
  Complex quotient(int num_index, int den_index, Complex u) const;

  UpperHalfPoint tau_;
  SeriesConfig cfg_;
  Complex theta0_, theta2_, theta3_;
};

}  // namespace cblab
