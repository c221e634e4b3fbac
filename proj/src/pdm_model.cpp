#include "pdms/pdm_model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pdms::model {

using specialfn::LogSigned;

void ModelParams::check() const {
    if (!(m0 > 0.0)) throw std::invalid_argument("ModelParams: m0 must be > 0");
    if (!(omega > 0.0)) throw std::invalid_argument("ModelParams: omega must be > 0");
    if (!(hbar > 0.0)) throw std::invalid_argument("ModelParams: hbar must be > 0");
    if (alpha < 0.0) throw std::invalid_argument("ModelParams: alpha must be >= 0");
}

double mass_at(const ModelParams& params, double x) {
    double u = 1.0 + params.alpha * x * x;
    return params.m0 / (u * u);
}

DerivedConstants derive_constants(const ModelParams& params) {
    params.check();
    DerivedConstants c;
    c.m0 = params.m0;
    c.omega = params.omega;
    c.hbar = params.hbar;
    c.alpha = params.alpha;
    double h = params.hbar, m0 = params.m0, w = params.omega, al = params.alpha;
    double ratio = al * h / (2.0 * m0 * w);  // alpha*hbar/(2 m0 omega)
    c.b = h * w * std::sqrt(1.0 + ratio * ratio * 4.0 * 0.25) + al * h * h / m0;
    if (al > 0.0) {
        c.deformed = true;
        c.kappa = m0 * w / (al * h);
        c.lam = 0.5 + 0.5 * std::sqrt(1.0 + 4.0 * c.kappa * c.kappa);
        c.a = al * h * h / (2.0 * m0);
        c.c_shift = ratio;
    } else {
        c.deformed = false;
        c.a = 0.0;
        c.b = h * w;
        c.c_shift = 0.0;
    }
    return c;
}

double energy(const ModelParams& params, int n) {
    double h = params.hbar, m0 = params.m0, w = params.omega, al = params.alpha;
    double root = std::sqrt(1.0 + al * al * h * h / (4.0 * m0 * m0 * w * w));
    return h * w * (n + 0.5) * root +
           (al * h * h / (2.0 * m0)) * (double(n) * n + 2.0 * n + 0.5);
}

double energy(const DerivedConstants& consts, int n) {
    ModelParams p{consts.m0, consts.omega, consts.hbar, consts.alpha};
    return energy(p, n);
}

double dimensionless_energy(const DerivedConstants& consts, int n) {
    return n * (consts.a * n + consts.b);
}

LogSigned rho_log(double a, double b, int n) {
    if (n < 0) throw std::domain_error("rho_log: requires n >= 0");
    if (n == 0) return LogSigned::one();
    double lg;
    if (a > 0.0) {
        lg = n * std::log(a) + specialfn::log_gamma(n + 1.0) +
             specialfn::gamma_ratio_log(n, b / a);
    } else {
        lg = n * std::log(b) + specialfn::log_gamma(n + 1.0);
    }
    return {lg, +1};
}

LogSigned rho_log(const DerivedConstants& consts, int n) {
    return rho_log(consts.a, consts.b, n);
}

double eigenfunction_norm_log(const DerivedConstants& consts, int n) {
    double lam = consts.lam;
    return 0.5 * (specialfn::log_gamma(n + 1.0) + std::log(n + lam) +
                  2.0 * specialfn::log_gamma(lam) - std::log(std::numbers::pi) -
                  (1.0 - 2.0 * lam) * std::numbers::ln2 -
                  specialfn::log_gamma(n + 2.0 * lam));
}

namespace {

void require_deformed(const DerivedConstants& consts, const char* who) {
    if (!consts.deformed)
        throw std::domain_error(std::string(who) +
                                ": eigenfunctions require alpha > 0");
}

}  // namespace

double eigenfunction_q(const DerivedConstants& consts, int n, double q) {
    require_deformed(consts, "eigenfunction_q");
    if (!(std::abs(q) < std::numbers::pi / 2.0))
        throw std::domain_error("eigenfunction_q: requires |q| < pi/2");
    double lam = consts.lam;
    double log_env = eigenfunction_norm_log(consts, n) + lam * std::log(std::cos(q));
    return std::exp(log_env) * specialfn::gegenbauer(n, lam, std::sin(q));
}

double eigenfunction_x(const DerivedConstants& consts, int n, double x) {
    require_deformed(consts, "eigenfunction_x");
    double lam = consts.lam;
    double sa = std::sqrt(consts.alpha);
    double u = 1.0 + consts.alpha * x * x;
    double s = x * sa / std::sqrt(u);
    // alpha^{1/4} carries the q -> x measure change; phi_n is unit-normalized in dx
    double log_env = eigenfunction_norm_log(consts, n) + 0.25 * std::log(consts.alpha) -
                     0.5 * (lam + 1.0) * std::log(u);
    return std::exp(log_env) * specialfn::gegenbauer(n, lam, s);
}

double eigenfunction_x_derivative(const DerivedConstants& consts, int n, double x) {
    require_deformed(consts, "eigenfunction_x_derivative");
    double lam = consts.lam;
    double sa = std::sqrt(consts.alpha);
    double u = 1.0 + consts.alpha * x * x;
    double s = x * sa / std::sqrt(u);
    double norm =
        std::exp(eigenfunction_norm_log(consts, n) + 0.25 * std::log(consts.alpha));
    double cn = specialfn::gegenbauer(n, lam, s);
    double dcn = specialfn::gegenbauer_derivative(n, lam, s);
    // d/dx [ u^{-(lam+1)/2} C(s) ],  ds/dx = sqrt(alpha) u^{-3/2}
    double t1 = -(lam + 1.0) * consts.alpha * x * cn * std::pow(u, -0.5 * (lam + 3.0));
    double t2 = sa * dcn * std::pow(u, -0.5 * (lam + 4.0));
    return norm * (t1 + t2);
}

}  // namespace pdms::model
