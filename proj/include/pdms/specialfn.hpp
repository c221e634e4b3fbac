#pragma once

#include <complex>

namespace pdms::specialfn {

/// Sign/log-magnitude split representation for quantities whose magnitude
/// exceeds double range (Gamma ratios, (gamma*a)^{n/2}, n!).
struct LogSigned {
    double log_mag = 0.0;  // natural log of |value|; ignored when sign == 0
    int sign = 0;          // -1, 0, +1

    static LogSigned from_value(double v);
    static LogSigned zero() { return {0.0, 0}; }
    static LogSigned one() { return {0.0, 1}; }

    bool is_zero() const { return sign == 0; }

    /// value() overflows for large log_mag; prefer value_scaled.
    double value() const;
    /// sign * exp(log_mag - log_offset)
    double value_scaled(double log_offset) const;

    LogSigned operator*(const LogSigned& rhs) const;
};

/// ln Gamma(x) for x > 0. Throws std::domain_error otherwise.
double log_gamma(double x);

/// ln[Gamma(n+1+c)/Gamma(1+c)] = sum_{j=1..n} ln(j+c), c > 0.
/// Telescoped directly, no cancellation.
double gamma_ratio_log(int n, double c);

/// Gegenbauer (ultraspherical) polynomial C_n^lam(s), lam > 0.
/// Three-term recurrence: n C_n = 2(n+lam-1) s C_{n-1} - (n+2lam-2) C_{n-2}.
double gegenbauer(int n, double lam, double s);

/// d/ds C_n^lam(s) = 2 lam C_{n-1}^{lam+1}(s); zero for n = 0.
double gegenbauer_derivative(int n, double lam, double s);

/// Physicists' Hermite polynomial H_n(x) (leading coefficient 2^n).
double hermite(int n, double x);

/// Terminating Gauss hypergeometric sum
///   2F1(-n, beta; c; z) = sum_{k=0}^{n} (-n)_k (beta)_k / ((c)_k k!) z^k
/// with compensated accumulation. For n > 80 the sum is re-evaluated in
/// 50-digit floating point (the z = 2 case alternates in sign and the
/// double-precision sum loses digits as n grows).
std::complex<double> hyp2f1_terminating(int n, std::complex<double> beta,
                                        double c, double zarg);

}  // namespace pdms::specialfn
