#include "cblab/derivatives.hpp"

#include <cmath>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "cblab/elliptic.hpp"
#include "cblab/errors.hpp"

namespace cblab {

namespace {

using Quad = boost::multiprecision::cpp_bin_float_quad;

constexpr double kPivotTol = 1e-12;

double magnitude(const Complex& x) { return std::abs(x); }
double magnitude(const Quad& x) { return static_cast<double>(boost::multiprecision::abs(x)); }

Complex to_complex(const Quad& x) { return Complex(static_cast<double>(x), 0.0); }

int sign_pow(int e) { return (e % 2 == 0) ? 1 : -1; }

template <class S>
struct Generators {
  S sqrt_k, sqrt_k_n, ratio;
};

template <class S>
S closed_form(const Generators<S>& g, int n, int order) {
  if (order < 0 || order > 5) throw DomainError("closed forms cover derivative orders 0..5");
  if ((order - n) % 2 != 0) return S(0.0);

  const S k = g.sqrt_k * g.sqrt_k;
  const S kn = g.sqrt_k_n * g.sqrt_k_n;
  const S nd = S(double(n));
  const S big = nd * nd * g.ratio * g.ratio;  // n^2 omega1^2(n tau) / omega1^2(tau)
  // n odd: the common prefactor n omega1(n tau) sqrt(k(n tau)) / (omega1(tau) sqrt(k(tau)))
  const S odd_pre = nd * g.ratio * g.sqrt_k_n / g.sqrt_k;
  const S one(1.0);

  switch (order) {
    case 0:
      return S(double(sign_pow(n / 2))) * g.sqrt_k_n;
    case 1:
      return S(double(sign_pow((n - 1) / 2))) * odd_pre;
    case 2:
      return S(double(sign_pow(n / 2))) * big * g.sqrt_k_n / k * (kn * kn - one);
    case 3:
      return S(double(sign_pow((n + 1) / 2))) * odd_pre / k *
             (big * (one + kn * kn) - (one + k * k));
    case 4:
      return S(double(sign_pow(n / 2))) * big * g.sqrt_k_n / (k * k) * (one - kn * kn) *
             (big * (one - S(5.0) * kn * kn) - S(4.0) * (one + k * k));
    default: {
      const S kn2 = kn * kn;
      const S k2 = k * k;
      return S(double(sign_pow((n - 1) / 2))) * odd_pre / (k * k) *
             (big * big * (kn2 * kn2 + S(14.0) * kn2 + one) -
              S(10.0) * big * (one + k2) * (one + kn2) +
              S(3.0) * (S(3.0) * k2 * k2 + S(2.0) * k2 + S(3.0)));
    }
  }
}

double binomial(int top, int bottom) {
  double out = 1.0;
  for (int t = 1; t <= bottom; ++t) out = out * double(top - bottom + t) / double(t);
  return std::round(out);
}

// f^(i+2)(0) from f^(0..i)(0); i >= 4 with the parity of n.
template <class S>
S recurrence_step(const Generators<S>& g, int n, int i, const std::vector<S>& d) {
  const S k = g.sqrt_k * g.sqrt_k;
  const S kn = g.sqrt_k_n * g.sqrt_k_n;
  const S nd = S(double(n));
  const S big = nd * nd * g.ratio * g.ratio;
  const S one(1.0);
  const S id = S(double(i));

  const S parity_factor = S(double(3 * sign_pow(n - 1) - 2));
  const S coef = big * (one + parity_factor * kn * kn) / k - id * id * (one / k + k);

  S cubic(0.0);
  for (int j = 1; j <= i - 1; ++j) {
    const double outer = binomial(i - 1, j);
    for (int m = 0; m <= j - 1; ++m) {
      const S c = S(outer * binomial(j - 1, m));
      cubic += c * d[static_cast<std::size_t>(m)] * d[static_cast<std::size_t>(j - m)] *
               d[static_cast<std::size_t>(i - j)];
    }
  }
  const S lower_coef = S(double(i) * double(i - 1) * double(i - 1) * double(i - 2));
  return -coef * d[static_cast<std::size_t>(i)] -
         lower_coef * d[static_cast<std::size_t>(i - 2)] +
         S(12.0) * big * kn / k * cubic;
}

template <class S>
std::vector<S> derivative_table(const Generators<S>& g, int n, int max_order) {
  std::vector<S> d;
  d.reserve(static_cast<std::size_t>(max_order + 1));
  for (int m = 0; m <= max_order; ++m) {
    if (m <= 5) {
      d.push_back(closed_form(g, n, m));
    } else if ((m - n) % 2 != 0) {
      d.push_back(S(0.0));
    } else {
      d.push_back(recurrence_step(g, n, m - 2, d));
    }
  }
  return d;
}

// Gaussian elimination with row/column equilibration and partial pivoting.
template <class S>
std::vector<S> solve_linear(std::vector<std::vector<S>> a, std::vector<S> rhs) {
  const std::size_t size = rhs.size();
  std::vector<double> col_scale(size, 0.0);
  for (std::size_t c = 0; c < size; ++c) {
    for (std::size_t r = 0; r < size; ++r) col_scale[c] = std::max(col_scale[c], magnitude(a[r][c]));
    if (col_scale[c] == 0.0) throw SingularSystemError("coefficient system has a zero column");
    for (std::size_t r = 0; r < size; ++r) a[r][c] /= S(col_scale[c]);
  }
  for (std::size_t r = 0; r < size; ++r) {
    double row = 0.0;
    for (std::size_t c = 0; c < size; ++c) row = std::max(row, magnitude(a[r][c]));
    if (row == 0.0) throw SingularSystemError("coefficient system has a zero row");
    for (std::size_t c = 0; c < size; ++c) a[r][c] /= S(row);
    rhs[r] /= S(row);
  }

  for (std::size_t col = 0; col < size; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < size; ++r)
      if (magnitude(a[r][col]) > magnitude(a[pivot][col])) pivot = r;
    if (magnitude(a[pivot][col]) < kPivotTol)
      throw SingularSystemError("coefficient system pivot below 1e-12; tau outside the validated regime");
    std::swap(a[pivot], a[col]);
    std::swap(rhs[pivot], rhs[col]);
    for (std::size_t r = col + 1; r < size; ++r) {
      const S factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c < size; ++c) a[r][c] -= factor * a[col][c];
      rhs[r] -= factor * rhs[col];
    }
  }
  std::vector<S> x(size, S(0.0));
  for (std::size_t r = size; r-- > 0;) {
    S acc = rhs[r];
    for (std::size_t c = r + 1; c < size; ++c) acc -= a[r][c] * x[c];
    x[r] = acc / a[r][r];
  }
  for (std::size_t c = 0; c < size; ++c) x[c] /= S(col_scale[c]);
  return x;
}

template <class S>
std::vector<S> solve_from_taylor(int n, const std::vector<S>& c) {
  const int h = n / 2;
  if (static_cast<int>(c.size()) < n + 2 * h + 1)
    throw DomainError("need Taylor coefficients through degree n + 2 floor(n/2)");
  std::vector<std::vector<S>> a(static_cast<std::size_t>(h), std::vector<S>(static_cast<std::size_t>(h)));
  std::vector<S> rhs(static_cast<std::size_t>(h));
  for (int r = 0; r < h; ++r) {
    const int degree = n + 2 + 2 * r;
    for (int j = 1; j <= h; ++j)
      a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j - 1)] =
          S(double(sign_pow(j))) * c[static_cast<std::size_t>(degree - 2 * j)];
    rhs[static_cast<std::size_t>(r)] = -c[static_cast<std::size_t>(degree)];
  }
  return solve_linear(std::move(a), std::move(rhs));
}

template <class S>
std::vector<S> taylor_from_derivatives(const std::vector<S>& d) {
  std::vector<S> c(d.size());
  S factorial(1.0);
  for (std::size_t m = 0; m < d.size(); ++m) {
    if (m > 0) factorial *= S(double(m));
    c[m] = d[m] / factorial;
  }
  return c;
}

Generators<Complex> as_generators(const FieldGenerators& g) {
  return {g.sqrt_k, g.sqrt_k_n, g.omega_ratio};
}

Generators<Quad> quad_generators(int n, const UpperHalfPoint& tau) {
  const Quad y(tau.im());
  const Quad yn = y * Quad(double(n));
  const Quad t3 = theta_null_imag<Quad>(3, y);
  const Quad t3n = theta_null_imag<Quad>(3, yn);
  return {theta_null_imag<Quad>(2, y) / t3, theta_null_imag<Quad>(2, yn) / t3n,
          (t3n * t3n) / (t3 * t3)};
}

void check_degree(int n) {
  if (n < 1) throw DomainError("Chebyshev-Blaschke degree must be positive");
}

template <class S>
std::vector<S> to_parity_table(int n, int i, std::span<const Complex> lower);

template <>
std::vector<Complex> to_parity_table<Complex>(int n, int i, std::span<const Complex> lower) {
  std::vector<Complex> d(lower.begin(), lower.begin() + i + 1);
  for (int m = 0; m <= i; ++m)
    if ((m - n) % 2 != 0) d[static_cast<std::size_t>(m)] = 0.0;
  return d;
}

void check_recurrence_args(int n, int i, std::span<const Complex> lower) {
  check_degree(n);
  if (i < 4) throw DomainError("recurrence needs i >= 4");
  if ((i - n) % 2 != 0)
    throw DomainError("recurrence index i = " + std::to_string(i) + " has the wrong parity for n = " +
                      std::to_string(n));
  if (static_cast<int>(lower.size()) < i + 1)
    throw DomainError("recurrence needs derivatives of order 0..i");
}

}  // namespace

FieldGenerators field_generators(int n, const UpperHalfPoint& tau, const SeriesConfig& cfg) {
  check_degree(n);
  const EllipticContext base(tau, cfg);
  const EllipticContext multiple(tau.scaled(n), cfg);
  return {base.sqrt_k(), multiple.sqrt_k(), multiple.omega1() / base.omega1()};
}

Complex derivative_at_zero_closed(const FieldGenerators& gens, int n, int order) {
  check_degree(n);
  if (n == 1) {
    if (order < 0 || order > 5) throw DomainError("closed forms cover derivative orders 0..5");
    return order == 1 ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
  }
  return closed_form(as_generators(gens), n, order);
}

Complex derivative_at_zero_closed(int n, const UpperHalfPoint& tau, int order,
                                  const SeriesConfig& cfg) {
  check_degree(n);
  if (n == 1) return derivative_at_zero_closed(FieldGenerators{}, n, order);
  if (tau.on_imaginary_axis()) return to_complex(closed_form(quad_generators(n, tau), n, order));
  return derivative_at_zero_closed(field_generators(n, tau, cfg), n, order);
}

Complex derivative_at_zero_recurrence(const FieldGenerators& gens, int n, int i,
                                      std::span<const Complex> lower) {
  check_recurrence_args(n, i, lower);
  if (n == 1) return 0.0;
  return recurrence_step(as_generators(gens), n, i, to_parity_table<Complex>(n, i, lower));
}

Complex derivative_at_zero_recurrence(int n, const UpperHalfPoint& tau, int i,
                                      std::span<const Complex> lower, const SeriesConfig& cfg) {
  check_recurrence_args(n, i, lower);
  if (n == 1) return 0.0;
  if (tau.on_imaginary_axis()) {
    std::vector<Quad> d(static_cast<std::size_t>(i + 1), Quad(0.0));
    for (int m = 0; m <= i; ++m)
      if ((m - n) % 2 == 0) d[static_cast<std::size_t>(m)] = Quad(lower[static_cast<std::size_t>(m)].real());
    return to_complex(recurrence_step(quad_generators(n, tau), n, i, d));
  }
  return derivative_at_zero_recurrence(field_generators(n, tau, cfg), n, i, lower);
}

std::vector<Complex> derivatives_at_zero(int n, const UpperHalfPoint& tau, int max_order,
                                         const SeriesConfig& cfg) {
  check_degree(n);
  if (max_order < 0) throw DomainError("max_order must be non-negative");
  std::vector<Complex> out(static_cast<std::size_t>(max_order + 1), Complex{0.0, 0.0});
  if (n == 1) {
    if (max_order >= 1) out[1] = 1.0;
    return out;
  }
  if (tau.on_imaginary_axis()) {
    const auto d = derivative_table(quad_generators(n, tau), n, max_order);
    for (std::size_t m = 0; m < d.size(); ++m) out[m] = to_complex(d[m]);
    return out;
  }
  return derivative_table(as_generators(field_generators(n, tau, cfg)), n, max_order);
}

std::vector<Complex> coefficients_from_taylor(int n, std::span<const Complex> taylor) {
  if (n < 1) throw DomainError("degree must be positive");
  if (n == 1) return {};  // f = z, no coefficients
  return solve_from_taylor(n, std::vector<Complex>(taylor.begin(), taylor.end()));
}

std::vector<Complex> coefficients_from_derivatives(int n, const UpperHalfPoint& tau,
                                                   const SeriesConfig& cfg) {
  if (n < 1) throw DomainError("degree must be positive");
  if (n == 1) return {};
  const int top = n + 2 * (n / 2);
  if (tau.on_imaginary_axis()) {
    const auto d = derivative_table(quad_generators(n, tau), n, top);
    const auto s = solve_from_taylor(n, taylor_from_derivatives(d));
    std::vector<Complex> out;
    out.reserve(s.size());
    for (const Quad& v : s) out.push_back(to_complex(v));
    return out;
  }
  const auto d = derivative_table(as_generators(field_generators(n, tau, cfg)), n, top);
  return solve_from_taylor(n, taylor_from_derivatives(d));
}

}  // namespace cblab
