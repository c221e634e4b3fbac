#pragma once

#include "pdms/specialfn.hpp"

namespace pdms::model {

/// Physical inputs of the position-dependent-mass oscillator
/// m(x) = m0 / (1 + alpha x^2)^2. Defaults are the dimensionless unit
/// system hbar = m0 = omega = 1.
struct ModelParams {
    double m0 = 1.0;
    double omega = 1.0;
    double hbar = 1.0;
    double alpha = 0.0;

    void check() const;  // throws std::invalid_argument on bad values
};

/// Constants derived from ModelParams. kappa and lam are meaningful only
/// when deformed (alpha > 0); the undeformed limit has a = 0, b = hbar*omega.
struct DerivedConstants {
    double m0 = 1.0;
    double omega = 1.0;
    double hbar = 1.0;
    double alpha = 0.0;
    bool deformed = false;
    double kappa = 0.0;    // m0*omega/(alpha*hbar)
    double lam = 0.0;      // 1/2 + 1/2 sqrt(1+4 kappa^2)
    double a = 0.0;        // alpha*hbar^2/(2 m0)
    double b = 0.0;        // hbar*omega*sqrt(1+alpha^2 hbar^2/(4 m0^2 omega^2)) + alpha*hbar^2/m0
    double c_shift = 0.0;  // hbar*alpha/(2 m0 omega)
};

double mass_at(const ModelParams& params, double x);

DerivedConstants derive_constants(const ModelParams& params);

/// Exact energy spectrum E_n.
double energy(const ModelParams& params, int n);
double energy(const DerivedConstants& consts, int n);

/// e_n = E_n - E_0 = n(a n + b).
double dimensionless_energy(const DerivedConstants& consts, int n);

/// ln rho_n where rho_n = prod_{k=1..n} e_k. Direct (a,b) form is used by
/// cross-checks with arbitrary coefficients.
specialfn::LogSigned rho_log(double a, double b, int n);
specialfn::LogSigned rho_log(const DerivedConstants& consts, int n);

/// ln N for the n-th eigenfunction normalization.
double eigenfunction_norm_log(const DerivedConstants& consts, int n);

/// psi_n(q) = N cos^lam(q) C_n^lam(sin q) on q in (-pi/2, pi/2).
/// Requires alpha > 0; throws std::domain_error at or beyond the boundary.
double eigenfunction_q(const DerivedConstants& consts, int n, double q);

/// phi_n(x) = N (1+alpha x^2)^{-(lam+1)/2} C_n^lam(x sqrt(alpha)/sqrt(1+alpha x^2)).
double eigenfunction_x(const DerivedConstants& consts, int n, double x);

/// Analytic d phi_n/dx.
double eigenfunction_x_derivative(const DerivedConstants& consts, int n, double x);

}  // namespace pdms::model
