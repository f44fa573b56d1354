#pragma once

#include <span>
#include <vector>

#include "cblab/theta.hpp"

namespace cblab::poly {

// Dense polynomials with ascending coefficients: p[0] + p[1] z + ...
using Coeffs = std::vector<Complex>;

Complex evaluate(std::span<const Complex> p, Complex z);
Coeffs multiply(std::span<const Complex> a, std::span<const Complex> b);
Coeffs subtract(std::span<const Complex> a, std::span<const Complex> b);
Coeffs derivative(std::span<const Complex> p);

// Drop leading coefficients whose magnitude is below rel_tol * max |p_i|.
Coeffs trimmed(std::span<const Complex> p, double rel_tol = 0.0);

// All roots via eigenvalues of the companion matrix. Leading zeros are trimmed
// first; a nonzero constant has no roots, the zero polynomial is a
// RootFindingError.
std::vector<Complex> roots(std::span<const Complex> p);

// First `order` Taylor coefficients at 0 of num/den by power-series long
// division. Requires den[0] != 0.
Coeffs series_divide(std::span<const Complex> num, std::span<const Complex> den,
                     int order);

}  // namespace cblab::poly
