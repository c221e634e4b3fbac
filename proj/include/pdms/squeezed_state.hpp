#pragma once

#include "pdms/pdm_model.hpp"

#include <complex>
#include <vector>

namespace pdms::state {

enum class Method { recurrence, closed_form, hermite_limit };

/// Labels of a squeezed coherent state: (a + gamma a^dag)|psi> = z|psi>.
struct StateSpec {
    std::complex<double> z{0.0, 0.0};
    double gamma = 0.0;
    int n_max = -1;  // -1 requests adaptive truncation
    Method method = Method::recurrence;
};

inline constexpr int kAdaptiveStart = 64;
inline constexpr int kAdaptiveCap = 512;
inline constexpr double kTailTol = 1e-10;

/// Normalized Fock-basis amplitudes of one state.
struct CoefficientVector {
    std::vector<std::complex<double>> amplitudes;  // C~_n, n = 0..n_max
    double norm_factor_log = 0.0;                  // ln N(z, gamma)
    double tail_weight = 0.0;                      // |C~_{nmax}|^2 + |C~_{nmax-1}|^2
    bool converged = false;                        // tail_weight < kTailTol
    StateSpec spec;
    model::DerivedConstants consts;

    int n_max() const { return static_cast<int>(amplitudes.size()) - 1; }
};

/// Normative construction: Z_{n+1} = z Z_n - gamma e_n Z_{n-1}, Z_0 = 1,
/// Z_1 = z, then C_n = Z_n/sqrt(rho_n), carried in log-scaled arithmetic.
/// n_max = -1 selects adaptive truncation (start 64, double to cap 512).
CoefficientVector coeffs_recurrence(const model::DerivedConstants& consts,
                                    std::complex<double> z, double gamma,
                                    int n_max = -1);

/// Verbatim closed-form amplitudes
///   C_n = (gamma a)^{n/2}/sqrt(n!) sqrt(Gamma(n+1+b/a)/Gamma(1+b/a))
///         2F1(-n, -1/2 + b/2a - z/(2 sqrt(a gamma)); 1+b/a; 2).
/// Secondary, report-only path; requires a > 0 and gamma > 0.
CoefficientVector coeffs_closed_form(const model::DerivedConstants& consts,
                                     std::complex<double> z, double gamma,
                                     int n_max = -1);

/// Undeformed limit (a = 0): C~_n propto (gamma/2)^{n/2} H_n(z/sqrt(2 gamma b))/sqrt(n!).
/// Requires a = 0, real z, gamma > 0.
CoefficientVector coeffs_hermite_limit(const model::DerivedConstants& consts,
                                       double z, double gamma, int n_max = -1);

/// Per-index deviation between the normalized recurrence and closed-form
/// amplitudes. Informational: the two constructions are not asserted equal.
struct ComparisonReport {
    std::vector<double> deviation;  // |rec_n - cf_n| / max(|rec_n|, |cf_n|, tiny)
    double max_deviation = 0.0;
    int first_exceeding = -1;  // first n with deviation > 1e-8, or -1
    int n_max = 0;
};

ComparisonReport compare_constructions(const model::DerivedConstants& consts,
                                       std::complex<double> z, double gamma,
                                       int n_max = -1);

/// Multiplies each amplitude by exp(-i E_n t / hbar).
CoefficientVector evolve(const CoefficientVector& state, double t);

/// sum_n conj(C1_n) C2_n; truncates to the common n_max.
/// Throws std::invalid_argument if the model constants differ.
std::complex<double> overlap(const CoefficientVector& s1, const CoefficientVector& s2);

/// Dispatch on spec.method.
CoefficientVector build(const model::DerivedConstants& consts, const StateSpec& spec);

}  // namespace pdms::state
