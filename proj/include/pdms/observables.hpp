#pragma once

#include "pdms/squeezed_state.hpp"

#include <complex>
#include <vector>

namespace pdms::obs {

/// Expectation values of the ladder operators in the undeformed
/// sqrt(n+1) matrix-element convention.
struct LadderMoments {
    std::complex<double> mean_a{0.0, 0.0};
    std::complex<double> mean_a2{0.0, 0.0};
    double mean_adag_a = 0.0;
    double mean_a_adag = 0.0;
};

LadderMoments ladder_moments(const state::CoefficientVector& st);

/// <x> = 2 sqrt(hbar/2 m0 omega) Re<a>, <p> = 2 sqrt(hbar m0 omega/2) Im<a>.
struct QuadratureMeans {
    double mean_x = 0.0;
    double mean_p = 0.0;
};

QuadratureMeans quadrature_means(const state::CoefficientVector& st);

struct QuadratureSecondMoments {
    double mean_x2 = 0.0;
    double mean_p2 = 0.0;
};

QuadratureSecondMoments quadrature_second_moments(const state::CoefficientVector& st);

double uncertainty_direct(const state::CoefficientVector& st);
double uncertainty_factored(const state::CoefficientVector& st);

/// P_n = |C~_n|^2.
std::vector<double> photon_distribution(const state::CoefficientVector& st);

/// Q = (<n^2> - <n>^2)/<n> - 1. Throws std::domain_error for <n> = 0.
double mandel_q(const state::CoefficientVector& st);

/// |sum_n C~_n exp(-i E_n t/hbar) phi_n(x)|^2 on the grid. Requires alpha > 0.
std::vector<double> position_density(const state::CoefficientVector& st, double t,
                                     const std::vector<double>& x_grid);

/// Deformed-number-operator diagnostic evaluated by q-variable quadrature:
///   <n_alpha> = m0 w0/(2 hbar) <(x+c)^2> + 1/(2 hbar m0 w0) <Pi^2>
///               - 1/2 (1 + alpha <x^2>),  Pi = (1 + alpha x^2) p.
struct NAlphaResult {
    double n_alpha = 0.0;
    double mean_x_shifted_sq = 0.0;  // <(x+c)^2>
    double mean_pi_sq = 0.0;         // <Pi^2>
    double mean_x_sq = 0.0;          // <x^2> (position-space)
    double richardson_delta = 0.0;   // |2048-node - 4096-node| on n_alpha
};

/// omega0 <= 0 selects the default omega0 = omega.
NAlphaResult n_alpha_quadrature(const state::CoefficientVector& st, double omega0 = -1.0);

/// Everything at once, for reporting.
struct ObservableReport {
    double mean_x = 0.0;
    double mean_p = 0.0;
    double mean_x2 = 0.0;
    double mean_p2 = 0.0;
    double var_x = 0.0;
    double var_p = 0.0;
    double uncertainty_product = 0.0;
    double uncertainty_product_factored = 0.0;
    double A = 0.0;  // sum (2n+1)|C~_n|^2
    double B = 0.0;  // 2 sum Re(C~_n* C~_{n+2}) sqrt((n+1)(n+2))
    double mean_n = 0.0;
    double mean_n2 = 0.0;
    double mandel_q = 0.0;  // NaN for the vacuum
};

ObservableReport report(const state::CoefficientVector& st);

}  // namespace pdms::obs
