#include "pdms/specialfn.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <limits>
#include <stdexcept>

namespace pdms::specialfn {

LogSigned LogSigned::from_value(double v) {
    if (v == 0.0) return zero();
    return {std::log(std::abs(v)), v > 0 ? +1 : -1};
}

double LogSigned::value() const {
    if (sign == 0) return 0.0;
    return sign * std::exp(log_mag);
}

double LogSigned::value_scaled(double log_offset) const {
    if (sign == 0) return 0.0;
    return sign * std::exp(log_mag - log_offset);
}

LogSigned LogSigned::operator*(const LogSigned& rhs) const {
    if (sign == 0 || rhs.sign == 0) return zero();
    return {log_mag + rhs.log_mag, sign * rhs.sign};
}

double log_gamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("log_gamma: requires x > 0");
    return std::lgamma(x);
}

double gamma_ratio_log(int n, double c) {
    if (n < 0) throw std::domain_error("gamma_ratio_log: requires n >= 0");
    if (!(c > 0.0)) throw std::domain_error("gamma_ratio_log: requires c > 0");
    double acc = 0.0;
    for (int j = 1; j <= n; ++j) acc += std::log(j + c);
    return acc;
}

double gegenbauer(int n, double lam, double s) {
    if (n < 0) throw std::domain_error("gegenbauer: requires n >= 0");
    if (!(lam > 0.0)) throw std::domain_error("gegenbauer: requires lam > 0");
    if (n == 0) return 1.0;
    double cm1 = 1.0;
    double c0 = 2.0 * lam * s;
    for (int k = 2; k <= n; ++k) {
        double c1 = (2.0 * (k + lam - 1.0) * s * c0 - (k + 2.0 * lam - 2.0) * cm1) / k;
        cm1 = c0;
        c0 = c1;
    }
    return c0;
}

double gegenbauer_derivative(int n, double lam, double s) {
    if (n == 0) return 0.0;
    return 2.0 * lam * gegenbauer(n - 1, lam + 1.0, s);
}

double hermite(int n, double x) {
    if (n < 0) throw std::domain_error("hermite: requires n >= 0");
    if (n == 0) return 1.0;
    double hm1 = 1.0;
    double h0 = 2.0 * x;
    for (int k = 1; k < n; ++k) {
        double h1 = 2.0 * x * h0 - 2.0 * k * hm1;
        hm1 = h0;
        h0 = h1;
    }
    return h0;
}

namespace {

// Neumaier-compensated accumulator.
struct CompensatedSum {
    double sum = 0.0;
    double comp = 0.0;
    void add(double v) {
        double t = sum + v;
        if (std::abs(sum) >= std::abs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    }
    double result() const { return sum + comp; }
};

template <typename Real>
struct Cplx {
    Real re{}, im{};
    Cplx operator*(const Cplx& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    Cplx operator*(const Real& s) const { return {re * s, im * s}; }
    Cplx& operator+=(const Cplx& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
};

std::complex<double> hyp2f1_mp(int n, std::complex<double> beta, double c,
                               double zarg) {
    using Real = boost::multiprecision::cpp_bin_float_50;
    Cplx<Real> term{Real(1), Real(0)};
    Cplx<Real> total = term;
    Cplx<Real> beta_r{Real(beta.real()), Real(beta.imag())};
    for (int k = 0; k < n; ++k) {
        Cplx<Real> bk{beta_r.re + k, beta_r.im};
        Real ratio = Real(-(n - k)) * Real(zarg) / (Real(c + k) * Real(k + 1));
        term = term * bk * ratio;
        total += term;
    }
    return {static_cast<double>(total.re), static_cast<double>(total.im)};
}

}  // namespace

std::complex<double> hyp2f1_terminating(int n, std::complex<double> beta,
                                        double c, double zarg) {
    if (n < 0) throw std::domain_error("hyp2f1_terminating: requires n >= 0");
    for (int k = 0; k < n; ++k) {
        if (c + k == 0.0)
            throw std::domain_error("hyp2f1_terminating: Pochhammer zero in denominator");
    }
    if (n > 80) return hyp2f1_mp(n, beta, c, zarg);

    CompensatedSum re_sum, im_sum;
    std::complex<double> term{1.0, 0.0};
    re_sum.add(1.0);
    for (int k = 0; k < n; ++k) {
        // term_{k+1}/term_k = (-n+k)(beta+k) z / ((c+k)(k+1))
        double ratio = -(static_cast<double>(n - k)) * zarg / ((c + k) * (k + 1));
        term *= (beta + static_cast<double>(k)) * ratio;
        re_sum.add(term.real());
        im_sum.add(term.imag());
    }
    return {re_sum.result(), im_sum.result()};
}

}  // namespace pdms::specialfn
