#include "pdms/validate.hpp"

#include "pdms/observables.hpp"
#include "pdms/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

namespace pdms::validate {

using model::DerivedConstants;
using model::ModelParams;
using state::CoefficientVector;
using std::complex;

bool ValidationReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
}

namespace {

CheckResult make_check(const std::string& name, double observed, double threshold,
                       const std::string& detail = "") {
    return {name, observed < threshold, observed, threshold, detail};
}

CheckResult check_spectrum_limit() {
    ModelParams p{1.0, 1.0, 1.0, 1e-8};
    double worst = 0.0;
    for (int n = 0; n <= 20; ++n)
        worst = std::max(worst, std::abs(model::energy(p, n) - (n + 0.5)));
    return make_check("spectrum_limit_alpha_1e-8", worst, 1e-6);
}

CheckResult check_rho_consistency() {
    const double ab[][2] = {{0.05, 1.101}, {0.5, 2.0}, {0.0, 1.0}};
    double worst = 0.0;
    for (const auto& c : ab) {
        double a = c[0], b = c[1];
        double running = 0.0;
        for (int n = 1; n <= 200; ++n) {
            running += std::log(n * (a * n + b));
            worst = std::max(worst, std::abs(model::rho_log(a, b, n).log_mag - running));
        }
    }
    return make_check("rho_gamma_form_vs_product", worst, 1e-12);
}

CheckResult check_orthonormality() {
    double worst = 0.0;
    for (double alpha : {0.05, 0.3}) {
        DerivedConstants k = model::derive_constants({1.0, 1.0, 1.0, alpha});
        double sa = std::sqrt(alpha);
        auto rule = quadrature::gauss_legendre(
            2048, -std::numbers::pi / 2.0 * (1.0 - 1e-14),
            std::numbers::pi / 2.0 * (1.0 - 1e-14));
        const int nstates = 21;
        // tabulate phi_n at the quadrature abscissae with the dx Jacobian
        std::vector<std::vector<double>> vals(nstates,
                                              std::vector<double>(rule.nodes.size()));
        std::vector<double> jac(rule.nodes.size());
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            double q = rule.nodes[i];
            double x = std::tan(q) / sa;
            double u = 1.0 + alpha * x * x;
            jac[i] = rule.weights[i] * u / sa;
            for (int n = 0; n < nstates; ++n)
                vals[n][i] = model::eigenfunction_x(k, n, x);
        }
        for (int m = 0; m < nstates; ++m) {
            for (int n = m; n < nstates; ++n) {
                double g = 0.0;
                for (std::size_t i = 0; i < jac.size(); ++i)
                    g += jac[i] * vals[m][i] * vals[n][i];
                worst = std::max(worst, std::abs(g - (m == n ? 1.0 : 0.0)));
            }
        }
    }
    return make_check("eigenfunction_gram_identity", worst, 1e-6);
}

CheckResult check_schrodinger_residual() {
    ModelParams p{1.0, 1.0, 1.0, 0.1};
    DerivedConstants k = model::derive_constants(p);
    const double L = 30.0, h = 1e-4;
    const int npts = 801;
    double worst = 0.0;
    auto psi = [&](int n, double x) {
        double u = 1.0 + k.alpha * x * x;
        return std::sqrt(u) * model::eigenfunction_x(k, n, x);
    };
    auto g = [&](int n, double x) {
        // (1 + alpha x^2) d psi/dx, analytic
        double u = 1.0 + k.alpha * x * x;
        double phi = model::eigenfunction_x(k, n, x);
        double dphi = model::eigenfunction_x_derivative(k, n, x);
        double dpsi = k.alpha * x / std::sqrt(u) * phi + std::sqrt(u) * dphi;
        return u * dpsi;
    };
    for (int n = 0; n <= 10; ++n) {
        double en = model::energy(p, n);
        double num = 0.0, den = 0.0;
        for (int i = 0; i < npts; ++i) {
            double x = -L + 2.0 * L * i / (npts - 1);
            double u = 1.0 + k.alpha * x * x;
            double outer = (g(n, x + h) - g(n, x - h)) / (2.0 * h);
            double hpsi = -0.5 * k.hbar * k.hbar / k.m0 * u * outer +
                          0.5 * k.m0 * k.omega * k.omega * x * x * psi(n, x);
            double target = en * psi(n, x);
            num += (hpsi - target) * (hpsi - target);
            den += target * target;
        }
        worst = std::max(worst, std::sqrt(num / den));
    }
    return make_check("schrodinger_residual_l2", worst, 1e-4);
}

CheckResult check_hermite_equivalence() {
    DerivedConstants k = model::derive_constants({1.0, 1.0, 1.0, 0.0});
    double worst = 0.0;
    for (double z : {0.0, 0.5, -0.5, 1.5, -1.5}) {
        for (double gamma : {0.1, 0.3, 0.7}) {
            CoefficientVector rec = state::coeffs_recurrence(k, {z, 0.0}, gamma);
            CoefficientVector herm =
                state::coeffs_hermite_limit(k, z, gamma, rec.n_max());
            for (int n = 0; n <= rec.n_max(); ++n)
                worst = std::max(worst,
                                 std::abs(rec.amplitudes[n] - herm.amplitudes[n]));
        }
    }
    return make_check("hermite_limit_equivalence", worst, 1e-11);
}

std::vector<CoefficientVector> fixture_states() {
    std::vector<CoefficientVector> out;
    DerivedConstants k0 = model::derive_constants({1.0, 1.0, 1.0, 0.0});
    DerivedConstants k1 = model::derive_constants({1.0, 1.0, 1.0, 0.1});
    DerivedConstants k2 = model::derive_constants({1.0, 1.0, 1.0, 0.05});
    out.push_back(state::coeffs_recurrence(k1, {0.8, 0.0}, 0.2));
    out.push_back(state::coeffs_recurrence(k1, {1.1, 0.4}, 0.3));
    out.push_back(state::coeffs_recurrence(k0, {1.2, 0.0}, 0.3));
    out.push_back(state::coeffs_recurrence(k2, {0.5, 0.0}, 0.5));
    return out;
}

CheckResult check_normalization_and_phase_invariance() {
    double worst = 0.0;
    for (const auto& st : fixture_states()) {
        double s2 = 0.0;
        for (const auto& c : st.amplitudes) s2 += std::norm(c);
        worst = std::max(worst, std::abs(s2 - 1.0));
        auto p0 = obs::photon_distribution(st);
        for (double t : {0.3, 2.7}) {
            auto pt = obs::photon_distribution(state::evolve(st, t));
            for (std::size_t n = 0; n < p0.size(); ++n)
                worst = std::max(worst, std::abs(pt[n] - p0[n]));
        }
    }
    return make_check("normalization_and_evolve_invariance", worst, 1e-12);
}

std::vector<CheckResult> check_uncertainty_grid() {
    const complex<double> zs[] = {{0.0, 0.0}, {0.5, 0.0}, {-0.5, 0.0},
                                  {1.0, 0.5}, {-1.5, 0.8}};
    const double gammas[] = {0.0, 0.1, 0.3, 0.5, 0.7};
    const double alphas[] = {0.0, 0.05, 0.3};
    double worst_mismatch = 0.0;
    double worst_violation = 0.0;  // hbar/2 - product, positive means violation
    double vacuum_dev = 1.0;
    for (double alpha : alphas) {
        DerivedConstants k = model::derive_constants({1.0, 1.0, 1.0, alpha});
        for (const auto& z : zs) {
            for (double gamma : gammas) {
                CoefficientVector st = state::coeffs_recurrence(k, z, gamma);
                double d = obs::uncertainty_direct(st);
                double f = obs::uncertainty_factored(st);
                worst_mismatch = std::max(worst_mismatch, std::abs(d - f));
                worst_violation = std::max(worst_violation, 0.5 * k.hbar - d);
                if (z == complex<double>{0.0, 0.0} && gamma == 0.0)
                    vacuum_dev = std::min(vacuum_dev, std::abs(d - 0.5 * k.hbar));
            }
        }
    }
    return {make_check("uncertainty_direct_vs_factored", worst_mismatch, 1e-10),
            make_check("uncertainty_vacuum_saturation", vacuum_dev, 1e-12),
            make_check("uncertainty_heisenberg_bound", worst_violation, 1e-9)};
}

CheckResult check_coherent_mandel_q() {
    DerivedConstants k = model::derive_constants({1.0, 1.0, 1.0, 0.0});
    double worst = 0.0;
    for (double z : {0.5, 1.0, 2.0}) {
        CoefficientVector st = state::coeffs_recurrence(k, {z, 0.0}, 0.0);
        worst = std::max(worst, std::abs(obs::mandel_q(st)));
    }
    return make_check("coherent_mandel_q_zero", worst, 1e-9);
}

CheckResult check_truncation_stability() {
    double worst = 0.0;
    for (const auto& st : fixture_states()) {
        CoefficientVector fine = state::coeffs_recurrence(
            st.consts, st.spec.z, st.spec.gamma, 2 * st.n_max());
        obs::ObservableReport r0 = obs::report(st);
        obs::ObservableReport r1 = obs::report(fine);
        worst = std::max({worst, std::abs(r0.mean_x - r1.mean_x),
                          std::abs(r0.mean_p - r1.mean_p),
                          std::abs(r0.uncertainty_product - r1.uncertainty_product),
                          std::abs(r0.mean_n - r1.mean_n)});
    }
    return make_check("truncation_stability", worst, 1e-9);
}

std::vector<ComparisonRow> comparison_table() {
    std::vector<ComparisonRow> rows;
    DerivedConstants k = model::derive_constants({1.0, 1.0, 1.0, 0.1});
    for (double z : {0.5, 0.8, 1.1}) {
        for (double gamma : {0.1, 0.2, 0.4}) {
            auto rep = state::compare_constructions(k, {z, 0.0}, gamma, 40);
            rows.push_back({z, 0.0, gamma, 0.1, rep.max_deviation,
                            rep.first_exceeding, rep.n_max});
        }
    }
    return rows;
}

}  // namespace

ValidationReport run_all() {
    ValidationReport rep;
    rep.checks.push_back(check_spectrum_limit());
    rep.checks.push_back(check_rho_consistency());
    rep.checks.push_back(check_orthonormality());
    rep.checks.push_back(check_schrodinger_residual());
    rep.checks.push_back(check_hermite_equivalence());
    rep.checks.push_back(check_normalization_and_phase_invariance());
    for (auto& c : check_uncertainty_grid()) rep.checks.push_back(std::move(c));
    rep.checks.push_back(check_coherent_mandel_q());
    rep.checks.push_back(check_truncation_stability());
    rep.comparison = comparison_table();
    return rep;
}

}  // namespace pdms::validate
