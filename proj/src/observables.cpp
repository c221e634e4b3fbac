#include "pdms/observables.hpp"

#include "pdms/quadrature.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace pdms::obs {

using state::CoefficientVector;
using std::complex;

LadderMoments ladder_moments(const CoefficientVector& st) {
    LadderMoments lm;
    const auto& c = st.amplitudes;
    int m = st.n_max();
    for (int n = 0; n <= m; ++n) {
        double p = std::norm(c[n]);
        lm.mean_adag_a += p * n;
        lm.mean_a_adag += p * (n + 1.0);
        if (n + 1 <= m) lm.mean_a += std::conj(c[n]) * c[n + 1] * std::sqrt(n + 1.0);
        if (n + 2 <= m)
            lm.mean_a2 += std::conj(c[n]) * c[n + 2] * std::sqrt((n + 1.0) * (n + 2.0));
    }
    return lm;
}

namespace {

struct ABMoments {
    double A = 0.0, B = 0.0, x0 = 0.0, p0 = 0.0;
};

ABMoments ab_moments(const CoefficientVector& st) {
    LadderMoments lm = ladder_moments(st);
    ABMoments ab;
    ab.A = lm.mean_adag_a + lm.mean_a_adag;  // sum (2n+1)|C~_n|^2
    ab.B = 2.0 * lm.mean_a2.real();
    const auto& k = st.consts;
    ab.x0 = 2.0 * std::sqrt(k.hbar / (2.0 * k.m0 * k.omega)) * lm.mean_a.real();
    ab.p0 = 2.0 * std::sqrt(k.hbar * k.m0 * k.omega / 2.0) * lm.mean_a.imag();
    return ab;
}

double clamp_small_negative(double v, const char* who) {
    if (v < -1e-12)
        throw std::runtime_error(std::string(who) + ": negative beyond tolerance");
    return v < 0.0 ? 0.0 : v;
}

}  // namespace

QuadratureMeans quadrature_means(const CoefficientVector& st) {
    ABMoments ab = ab_moments(st);
    return {ab.x0, ab.p0};
}

QuadratureSecondMoments quadrature_second_moments(const CoefficientVector& st) {
    ABMoments ab = ab_moments(st);
    const auto& k = st.consts;
    return {k.hbar / (2.0 * k.m0 * k.omega) * (ab.A + ab.B),
            k.hbar * k.m0 * k.omega / 2.0 * (ab.A - ab.B)};
}

double uncertainty_direct(const CoefficientVector& st) {
    ABMoments ab = ab_moments(st);
    const auto& k = st.consts;
    double var_x = clamp_small_negative(
        k.hbar / (2.0 * k.m0 * k.omega) * (ab.A + ab.B) - ab.x0 * ab.x0,
        "uncertainty_direct[var_x]");
    double var_p = clamp_small_negative(
        k.hbar * k.m0 * k.omega / 2.0 * (ab.A - ab.B) - ab.p0 * ab.p0,
        "uncertainty_direct[var_p]");
    return std::sqrt(var_x) * std::sqrt(var_p);
}

double uncertainty_factored(const CoefficientVector& st) {
    ABMoments ab = ab_moments(st);
    const auto& k = st.consts;
    double h = k.hbar, mw = k.m0 * k.omega;
    double radicand = h * h / 4.0 * (ab.A * ab.A - ab.B * ab.B) -
                      h / (2.0 * mw) * (ab.A + ab.B) * ab.p0 * ab.p0 -
                      h * mw / 2.0 * (ab.A - ab.B) * ab.x0 * ab.x0 +
                      ab.x0 * ab.x0 * ab.p0 * ab.p0;
    radicand = clamp_small_negative(radicand, "uncertainty_factored");
    return std::sqrt(radicand);
}

std::vector<double> photon_distribution(const CoefficientVector& st) {
    std::vector<double> p(st.amplitudes.size());
    for (std::size_t n = 0; n < p.size(); ++n) p[n] = std::norm(st.amplitudes[n]);
    return p;
}

double mandel_q(const CoefficientVector& st) {
    double n1 = 0.0, n2 = 0.0;
    for (int n = 0; n <= st.n_max(); ++n) {
        double p = std::norm(st.amplitudes[n]);
        n1 += p * n;
        n2 += p * double(n) * n;
    }
    if (n1 <= 0.0) throw std::domain_error("mandel_q: undefined for the vacuum");
    return (n2 - n1 * n1) / n1 - 1.0;
}

std::vector<double> position_density(const CoefficientVector& st, double t,
                                     const std::vector<double>& x_grid) {
    const auto& k = st.consts;
    std::vector<complex<double>> phased(st.amplitudes.size());
    for (int n = 0; n <= st.n_max(); ++n)
        phased[n] = st.amplitudes[n] *
                    std::polar(1.0, -model::energy(k, n) * t / k.hbar);
    std::vector<double> out(x_grid.size());
    for (std::size_t i = 0; i < x_grid.size(); ++i) {
        complex<double> psi{0.0, 0.0};
        for (int n = 0; n <= st.n_max(); ++n)
            psi += phased[n] * model::eigenfunction_x(k, n, x_grid[i]);
        out[i] = std::norm(psi);
    }
    return out;
}

namespace {

// <(x+c)^2>, <Pi^2>, <x^2> on an m-node Gauss-Legendre grid in q.
struct RawExpectations {
    double x_shifted_sq, pi_sq, x_sq;
};

RawExpectations n_alpha_raw(const CoefficientVector& st, double omega0, int nodes) {
    const auto& k = st.consts;
    double sa = std::sqrt(k.alpha);
    double c = k.hbar * k.alpha / (2.0 * k.m0 * omega0);
    auto rule = quadrature::gauss_legendre(nodes, -std::numbers::pi / 2.0 * (1.0 - 1e-14),
                                           std::numbers::pi / 2.0 * (1.0 - 1e-14));
    RawExpectations r{0.0, 0.0, 0.0};
    for (int i = 0; i < nodes; ++i) {
        double q = rule.nodes[i];
        double x = std::tan(q) / sa;
        double u = 1.0 + k.alpha * x * x;
        double jac = rule.weights[i] * u / sa;  // dx = dq/(sqrt(alpha) cos^2 q)
        complex<double> psi{0.0, 0.0}, dpsi{0.0, 0.0};
        for (int n = 0; n <= st.n_max(); ++n) {
            psi += st.amplitudes[n] * model::eigenfunction_x(k, n, x);
            dpsi += st.amplitudes[n] * model::eigenfunction_x_derivative(k, n, x);
        }
        double dens = std::norm(psi);
        r.x_shifted_sq += jac * dens * (x + c) * (x + c);
        r.x_sq += jac * dens * x * x;
        // <Pi^2> = hbar^2 int conj((u psi)') (u psi') dx
        complex<double> left = u * dpsi + 2.0 * k.alpha * x * psi;
        complex<double> right = u * dpsi;
        r.pi_sq += jac * k.hbar * k.hbar * (std::conj(left) * right).real();
    }
    return r;
}

double assemble_n_alpha(const RawExpectations& r, const CoefficientVector& st,
                        double omega0) {
    const auto& k = st.consts;
    return k.m0 * omega0 / (2.0 * k.hbar) * r.x_shifted_sq +
           r.pi_sq / (2.0 * k.hbar * k.m0 * omega0) -
           0.5 * (1.0 + k.alpha * r.x_sq);
}

}  // namespace

NAlphaResult n_alpha_quadrature(const CoefficientVector& st, double omega0) {
    const auto& k = st.consts;
    if (!k.deformed)
        throw std::domain_error("n_alpha_quadrature: requires alpha > 0");
    if (omega0 <= 0.0) omega0 = k.omega;

    RawExpectations coarse = n_alpha_raw(st, omega0, 2048);
    RawExpectations fine = n_alpha_raw(st, omega0, 4096);
    double v_coarse = assemble_n_alpha(coarse, st, omega0);
    double v_fine = assemble_n_alpha(fine, st, omega0);
    double delta = std::abs(v_fine - v_coarse);
    if (delta > 1e-6 * (1.0 + std::abs(v_fine)))
        throw std::runtime_error("n_alpha_quadrature: quadrature did not converge");
    return {v_fine, fine.x_shifted_sq, fine.pi_sq, fine.x_sq, delta};
}

ObservableReport report(const CoefficientVector& st) {
    ObservableReport rep;
    ABMoments ab = ab_moments(st);
    const auto& k = st.consts;
    rep.mean_x = ab.x0;
    rep.mean_p = ab.p0;
    rep.A = ab.A;
    rep.B = ab.B;
    rep.mean_x2 = k.hbar / (2.0 * k.m0 * k.omega) * (ab.A + ab.B);
    rep.mean_p2 = k.hbar * k.m0 * k.omega / 2.0 * (ab.A - ab.B);
    rep.var_x = clamp_small_negative(rep.mean_x2 - ab.x0 * ab.x0, "report[var_x]");
    rep.var_p = clamp_small_negative(rep.mean_p2 - ab.p0 * ab.p0, "report[var_p]");
    rep.uncertainty_product = std::sqrt(rep.var_x) * std::sqrt(rep.var_p);
    rep.uncertainty_product_factored = uncertainty_factored(st);
    for (int n = 0; n <= st.n_max(); ++n) {
        double p = std::norm(st.amplitudes[n]);
        rep.mean_n += p * n;
        rep.mean_n2 += p * double(n) * n;
    }
    rep.mandel_q = rep.mean_n > 0.0
                       ? (rep.mean_n2 - rep.mean_n * rep.mean_n) / rep.mean_n - 1.0
                       : std::numeric_limits<double>::quiet_NaN();
    return rep;
}

}  // namespace pdms::obs
