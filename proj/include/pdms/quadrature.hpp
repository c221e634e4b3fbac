#pragma once

#include <vector>

namespace pdms::quadrature {

/// Gauss-Legendre nodes and weights on [-1, 1], Newton-refined from the
/// Chebyshev initial guess.
struct Rule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

Rule gauss_legendre(int n);

/// Rule mapped affinely onto [a, b].
Rule gauss_legendre(int n, double a, double b);

}  // namespace pdms::quadrature
