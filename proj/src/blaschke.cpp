#include "cblab/blaschke.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cblab/elliptic.hpp"
#include "cblab/errors.hpp"

namespace cblab {

namespace {

constexpr double kUnimodularTol = 1e-14;
constexpr double kPoleRatio = 1e-15;
constexpr double kInteriorMargin = 1e-10;
constexpr double kDedupTol = 1e-8;
constexpr double kCriticalValueTol = 1e-7;

bool negligible(Complex den, Complex num_scale) {
  return den == 0.0 || std::abs(den) < kPoleRatio * std::max(1.0, std::abs(num_scale));
}

}  // namespace

FiniteBlaschkeProduct::FiniteBlaschkeProduct(Complex unimodular_constant,
                                             std::vector<Complex> zeros)
    : constant_(unimodular_constant), zeros_(std::move(zeros)) {
  if (std::abs(std::abs(constant_) - 1.0) > kUnimodularTol)
    throw DomainError("Blaschke constant must be unimodular");
  for (const Complex& a : zeros_)
    if (!(std::abs(a) < 1.0)) throw DomainError("Blaschke zeros must lie in the open unit disk");
}

Complex FiniteBlaschkeProduct::operator()(Complex z) const {
  Complex acc = constant_;
  for (const Complex& a : zeros_) {
    const Complex den = 1.0 - std::conj(a) * z;
    if (negligible(den, z - a)) throw PoleError("Blaschke factor pole");
    acc *= (z - a) / den;
  }
  return acc;
}

ChebyshevBlaschke::ChebyshevBlaschke(int n, UpperHalfPoint tau, SeriesConfig series)
    : n_(n), tau_(tau), series_(series) {}

void ChebyshevBlaschke::cache_generators() {
  const EllipticContext base(tau_, series_);
  const EllipticContext multiple(tau_.scaled(n_), series_);
  sqrt_k_ = base.sqrt_k();
  sqrt_k_n_ = multiple.sqrt_k();
  omega_ratio_ = multiple.omega1() / base.omega1();
  if (tau_.on_imaginary_axis()) {
    sqrt_k_.imag(0.0);
    sqrt_k_n_.imag(0.0);
    omega_ratio_.imag(0.0);
  }
}

std::vector<Complex> elementary_symmetric(const std::vector<Complex>& values) {
  std::vector<Complex> e(values.size() + 1, Complex{0.0, 0.0});
  e[0] = 1.0;
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j >= 1; --j) e[j] += e[j - 1] * values[i];
  return std::vector<Complex>(e.begin() + 1, e.end());
}

ChebyshevBlaschke build(int n, const UpperHalfPoint& tau, const BuildOptions& options) {
  if (n < 1) throw DomainError("Chebyshev-Blaschke degree must be positive");
  options.series.validate();
  const bool on_axis = tau.on_imaginary_axis();
  if (!on_axis && !options.allow_upper_half)
    throw DomainError("tau must lie on the positive imaginary axis (set allow_upper_half to relax)");

  ChebyshevBlaschke cb(n, tau, options.series);
  const int h = n / 2;
  cb.b_.reserve(static_cast<std::size_t>(h));
  for (int i = 1; i <= h; ++i) {
    const double x = (2.0 * i - 1.0) * kPi / (2.0 * n);
    const Complex ratio = theta(2, x, tau, options.series) / theta(3, x, tau, options.series);
    Complex b = ratio * ratio;
    if (on_axis) {
      b.imag(0.0);
      if (!(b.real() > 0.0 && b.real() < 1.0))
        throw PrecisionError("squared zero b_" + std::to_string(i) + " fell outside (0,1)",
                             tau.degraded());
    }
    cb.b_.push_back(b);
  }
  cb.s_ = elementary_symmetric(cb.b_);
  cb.cache_generators();
  return cb;
}

ChebyshevBlaschke ChebyshevBlaschke::restore(int n, const UpperHalfPoint& tau,
                                             std::vector<Complex> b, std::vector<Complex> s,
                                             const SeriesConfig& series) {
  if (n < 1) throw DomainError("Chebyshev-Blaschke degree must be positive");
  if (b.size() != static_cast<std::size_t>(n / 2) || s.size() != b.size())
    throw DomainError("record must carry floor(n/2) squared zeros and coefficients");
  ChebyshevBlaschke cb(n, tau, series);
  cb.b_ = std::move(b);
  cb.s_ = std::move(s);
  cb.cache_generators();
  return cb;
}

Complex ChebyshevBlaschke::eval_product(Complex z) const {
  const Complex z2 = z * z;
  Complex acc = parity() == 1 ? z : Complex{1.0, 0.0};
  for (const Complex& b : b_) {
    const Complex den = 1.0 - b * z2;
    if (negligible(den, z2 - b)) throw PoleError("Chebyshev-Blaschke factor pole");
    acc *= (z2 - b) / den;
  }
  return acc;
}

Complex ChebyshevBlaschke::eval_expanded(Complex z) const {
  const Complex w = z * z;
  const int h = half_degree();
  // numerator in w: w^h + sum_j (-1)^j S_j w^(h-j); denominator: 1 + sum_j (-1)^j S_j w^j
  Complex num{1.0, 0.0};
  for (int j = 1; j <= h; ++j) {
    const Complex term = (j % 2 == 0 ? 1.0 : -1.0) * s_[static_cast<std::size_t>(j - 1)];
    num = num * w + term;
  }
  Complex den{0.0, 0.0};
  for (int j = h; j >= 1; --j) {
    const Complex term = (j % 2 == 0 ? 1.0 : -1.0) * s_[static_cast<std::size_t>(j - 1)];
    den = (den + term) * w;
  }
  den += 1.0;
  if (negligible(den, num)) throw PoleError("Chebyshev-Blaschke denominator vanishes");
  return (parity() == 1 ? z : Complex{1.0, 0.0}) * num / den;
}

Complex ChebyshevBlaschke::elliptic_rational(Complex x) const {
  const Complex z = sqrt_k_ * x;
  if (std::abs(z) > 1.0 + 1e-12)
    throw DomainError("sqrt(k(tau)) * x must lie in the closed unit disk");
  return eval_product(z) / sqrt_k_n_;
}

FiniteBlaschkeProduct ChebyshevBlaschke::as_blaschke_product() const {
  if (!tau_.on_imaginary_axis())
    throw DomainError("Blaschke factorization is only defined for tau on the imaginary axis");
  std::vector<Complex> zeros;
  if (parity() == 1) zeros.emplace_back(0.0, 0.0);
  for (const Complex& b : b_) {
    const double a = std::sqrt(b.real());
    zeros.emplace_back(a, 0.0);
    zeros.emplace_back(-a, 0.0);
  }
  return FiniteBlaschkeProduct(Complex{1.0, 0.0}, std::move(zeros));
}

poly::Coeffs ChebyshevBlaschke::numerator() const {
  poly::Coeffs p{Complex{1.0, 0.0}};
  if (parity() == 1) p = {Complex{0.0, 0.0}, Complex{1.0, 0.0}};
  for (const Complex& b : b_) {
    const poly::Coeffs factor{-b, Complex{0.0, 0.0}, Complex{1.0, 0.0}};
    p = poly::multiply(p, factor);
  }
  return p;
}

poly::Coeffs ChebyshevBlaschke::denominator() const {
  poly::Coeffs q{Complex{1.0, 0.0}};
  for (const Complex& b : b_) {
    const poly::Coeffs factor{Complex{1.0, 0.0}, Complex{0.0, 0.0}, -b};
    q = poly::multiply(q, factor);
  }
  return q;
}

poly::Coeffs ChebyshevBlaschke::taylor_series(int order) const {
  // expanded form: z^p (sum over S) / (1 + sum (-1)^j S_j z^2j)
  const int h = half_degree();
  poly::Coeffs num(static_cast<std::size_t>(n_ + 1), Complex{0.0, 0.0});
  poly::Coeffs den(static_cast<std::size_t>(2 * h + 1), Complex{0.0, 0.0});
  num[static_cast<std::size_t>(parity() + 2 * h)] = 1.0;
  den[0] = 1.0;
  for (int j = 1; j <= h; ++j) {
    const Complex term = (j % 2 == 0 ? 1.0 : -1.0) * s_[static_cast<std::size_t>(j - 1)];
    num[static_cast<std::size_t>(parity() + 2 * h - 2 * j)] += term;
    den[static_cast<std::size_t>(2 * j)] += term;
  }
  return poly::series_divide(num, den, order);
}

Complex chebyshev_poly(int n, Complex x) {
  if (n < 0) throw DomainError("Chebyshev degree must be non-negative");
  if (n == 0) return 1.0;
  Complex prev{1.0, 0.0};
  Complex cur = x;
  for (int k = 1; k < n; ++k) {
    const Complex next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

CriticalValues critical_values(const ChebyshevBlaschke& cb) {
  if (cb.degree() < 2) throw NoCriticalValues("degree-1 Chebyshev-Blaschke product is z");

  // f = P/Q, so f' vanishes where P'Q - PQ' does
  const poly::Coeffs p = cb.numerator();
  const poly::Coeffs q = cb.denominator();
  const poly::Coeffs w = poly::subtract(poly::multiply(poly::derivative(p), q),
                                        poly::multiply(p, poly::derivative(q)));

  CriticalValues out;
  for (const Complex& z : poly::roots(poly::trimmed(w, 1e-14))) {
    if (std::abs(z) >= 1.0 - kInteriorMargin) continue;
    out.points.push_back(z);
    const Complex value = cb.eval_product(z);
    const bool seen = std::any_of(out.values.begin(), out.values.end(), [&](const Complex& v) {
      return std::abs(v - value) <= kDedupTol;
    });
    if (!seen) out.values.push_back(value);
  }
  std::sort(out.values.begin(), out.values.end(),
            [](const Complex& a, const Complex& b) { return a.real() < b.real(); });
  std::sort(out.points.begin(), out.points.end(), [](const Complex& a, const Complex& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });

  const std::size_t expected = cb.degree() == 2 ? 1 : 2;
  if (out.values.size() != expected)
    throw RootFindingError("found " + std::to_string(out.values.size()) +
                           " distinct critical values, expected " + std::to_string(expected));
  const Complex target = cb.sqrt_k_n();
  for (const Complex& v : out.values) {
    if (std::min(std::abs(v - target), std::abs(v + target)) > kCriticalValueTol)
      throw RootFindingError("critical value is not +-sqrt(k(n tau))");
  }
  return out;
}

ModulusLambda modulus_lambda(const ChebyshevBlaschke& cb) {
  if (!cb.tau().on_imaginary_axis())
    throw DomainError("modulus is defined for tau on the imaginary axis");
  const double normalized = cb.degree() * cb.tau().im() / 4.0;
  return {kPi * normalized, normalized};
}

ComposeReport compose_check(int m, int n, const UpperHalfPoint& tau, const BuildOptions& options) {
  if (m < 1 || n < 1) throw DomainError("composition degrees must be positive");
  if (m * n > 12) throw DomainError("composition degree m*n must not exceed 12");
  const ChebyshevBlaschke inner = build(n, tau, options);
  const ChebyshevBlaschke outer = build(m, tau.scaled(n), options);
  const ChebyshevBlaschke whole = build(m * n, tau, options);

  ComposeReport report{m, n, 0, 0.0};
  constexpr int kRadii = 5;
  constexpr int kAngles = 10;
  for (int r = 0; r < kRadii; ++r) {
    const double radius = 0.15 + 0.2 * r;
    for (int a = 0; a < kAngles; ++a) {
      const double angle = 2.0 * kPi * (a + 0.25 * r) / kAngles;
      const Complex z = std::polar(radius, angle);
      const double gap = std::abs(outer.eval_product(inner.eval_product(z)) - whole.eval_product(z));
      report.max_deviation = std::max(report.max_deviation, gap);
      ++report.samples;
    }
  }
  return report;
}

double functional_definition_gap(const ChebyshevBlaschke& cb, double u) {
  const EllipticContext base(cb.tau(), cb.series());
  const EllipticContext multiple(cb.tau().scaled(cb.degree()), cb.series());
  const Complex z = base.sqrt_k() * base.cd(base.omega1() * u);
  const Complex expected =
      multiple.sqrt_k() * multiple.cd(double(cb.degree()) * multiple.omega1() * u);
  return std::abs(cb.eval_product(z) - expected);
}

}  // namespace cblab
