#include "cblab/elliptic.hpp"

#include <cmath>
#include <string>

#include "cblab/errors.hpp"

namespace cblab {

namespace {

constexpr double kNullFloor = 1e-300;
constexpr double kPoleRatio = 1e-12;

}  // namespace

EllipticContext::EllipticContext(UpperHalfPoint tau, SeriesConfig cfg)
    : tau_(tau), cfg_(cfg) {
  theta0_ = theta(0, 0.0, tau_, cfg_);
  theta2_ = theta(2, 0.0, tau_, cfg_);
  theta3_ = theta(3, 0.0, tau_, cfg_);
  if (std::abs(theta0_) < kNullFloor || std::abs(theta2_) < kNullFloor ||
      std::abs(theta3_) < kNullFloor)
    throw PrecisionError("theta null underflowed; tau too far up the imaginary axis",
                         tau_.degraded());
}

// theta_num(x) / theta_den(x) at x = u / omega1
Complex EllipticContext::quotient(int num_index, int den_index, Complex u) const {
  const Complex x = u / omega1();
  const Complex num = theta(num_index, x, tau_, cfg_);
  const Complex den = theta(den_index, x, tau_, cfg_);
  if (den == 0.0 || std::abs(den) < kPoleRatio * std::abs(num))
    throw PoleError("elliptic function has a pole at u = (" + std::to_string(u.real()) +
                    ", " + std::to_string(u.imag()) + ")");
  return num / den;
}

Complex EllipticContext::sn(Complex u) const {
  return theta3_ / theta2_ * quotient(1, 0, u);
}

Complex EllipticContext::cn(Complex u) const {
  return theta0_ / theta2_ * quotient(2, 0, u);
}

Complex EllipticContext::dn(Complex u) const {
  return theta0_ / theta3_ * quotient(3, 0, u);
}

// cn/dn with the common theta_0(x) cancelled: theta_3(0) theta_2(x) / (theta_2(0) theta_3(x)).
Complex EllipticContext::cd(Complex u) const {
  return theta3_ / theta2_ * quotient(2, 3, u);
}

}  // namespace cblab
