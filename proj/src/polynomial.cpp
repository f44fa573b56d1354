#include "cblab/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "cblab/errors.hpp"

namespace cblab::poly {

Complex evaluate(std::span<const Complex> p, Complex z) {
  Complex acc{0.0, 0.0};
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Coeffs multiply(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.empty() || b.empty()) return {};
  Coeffs out(a.size() + b.size() - 1, Complex{0.0, 0.0});
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

Coeffs subtract(std::span<const Complex> a, std::span<const Complex> b) {
  Coeffs out(std::max(a.size(), b.size()), Complex{0.0, 0.0});
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return out;
}

Coeffs derivative(std::span<const Complex> p) {
  if (p.size() <= 1) return {Complex{0.0, 0.0}};
  Coeffs out(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) out[i - 1] = double(i) * p[i];
  return out;
}

Coeffs trimmed(std::span<const Complex> p, double rel_tol) {
  double scale = 0.0;
  for (const Complex& c : p) scale = std::max(scale, std::abs(c));
  std::size_t size = p.size();
  while (size > 1 && std::abs(p[size - 1]) <= rel_tol * scale) --size;
  return Coeffs(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(size));
}

std::vector<Complex> roots(std::span<const Complex> p) {
  const Coeffs q = trimmed(p);
  if (q.empty() || q.back() == 0.0) throw RootFindingError("zero polynomial has no finite root set");
  const auto degree = static_cast<Eigen::Index>(q.size()) - 1;
  if (degree < 1) return {};

  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(degree, degree);
  for (Eigen::Index i = 1; i < degree; ++i) companion(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < degree; ++i)
    companion(i, degree - 1) = -q[static_cast<std::size_t>(i)] / q.back();

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  if (solver.info() != Eigen::Success)
    throw RootFindingError("companion eigenvalue iteration did not converge");
  const auto& ev = solver.eigenvalues();
  return std::vector<Complex>(ev.data(), ev.data() + ev.size());
}

Coeffs series_divide(std::span<const Complex> num, std::span<const Complex> den, int order) {
  if (den.empty() || den[0] == 0.0)
    throw DomainError("series division needs a nonzero constant term in the divisor");
  Coeffs out(static_cast<std::size_t>(std::max(order, 0)));
  for (std::size_t m = 0; m < out.size(); ++m) {
    Complex acc = m < num.size() ? num[m] : Complex{0.0, 0.0};
    const std::size_t top = std::min(m, den.size() - 1);
    for (std::size_t t = 1; t <= top; ++t) acc -= den[t] * out[m - t];
    out[m] = acc / den[0];
  }
  return out;
}

}  // namespace cblab::poly
