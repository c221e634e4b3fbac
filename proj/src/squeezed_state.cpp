#include "pdms/squeezed_state.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace pdms::state {

using model::DerivedConstants;
using std::complex;

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// One amplitude in log-magnitude/phase form: value = phase * exp(log_mag),
// |phase| = 1, or phase = 0 for an exact zero.
struct LogAmp {
    double log_mag = kNegInf;
    complex<double> phase{0.0, 0.0};

    static LogAmp from(complex<double> v, double log_scale) {
        double m = std::abs(v);
        if (m == 0.0) return {};
        return {log_scale + std::log(m), v / m};
    }
};

// Normalizes a vector of log-amplitudes into a CoefficientVector.
CoefficientVector finalize(std::vector<LogAmp> amps, const DerivedConstants& consts,
                           const StateSpec& spec) {
    double peak = kNegInf;
    for (const auto& a : amps) peak = std::max(peak, a.log_mag);
    if (peak == kNegInf)
        throw std::runtime_error("squeezed_state: all amplitudes vanish");

    // ln N = ln sum exp(2 la_n), via the peak-shifted sum
    double acc = 0.0;
    for (const auto& a : amps)
        if (a.log_mag != kNegInf) acc += std::exp(2.0 * (a.log_mag - peak));
    double log_norm = 2.0 * peak + std::log(acc);

    CoefficientVector cv;
    cv.spec = spec;
    cv.consts = consts;
    cv.norm_factor_log = log_norm;
    cv.amplitudes.resize(amps.size());
    for (std::size_t n = 0; n < amps.size(); ++n) {
        if (amps[n].log_mag == kNegInf)
            cv.amplitudes[n] = 0.0;
        else
            cv.amplitudes[n] = amps[n].phase * std::exp(amps[n].log_mag - 0.5 * log_norm);
    }
    // final polish so that sum |C~_n|^2 = 1 to full double precision
    double s2 = 0.0;
    for (const auto& c : cv.amplitudes) s2 += std::norm(c);
    double r = 1.0 / std::sqrt(s2);
    for (auto& c : cv.amplitudes) c *= r;

    int m = cv.n_max();
    cv.tail_weight = std::norm(cv.amplitudes[m]);
    if (m >= 1) cv.tail_weight += std::norm(cv.amplitudes[m - 1]);
    cv.converged = cv.tail_weight < kTailTol;
    return cv;
}

// Z_n by the scaled three-term recurrence; returns log-amplitudes of
// C_n = Z_n / sqrt(rho_n).
std::vector<LogAmp> recurrence_amps(const DerivedConstants& consts, complex<double> z,
                                    double gamma, int n_max) {
    std::vector<LogAmp> out(n_max + 1);
    // scaled iterates: Z_n = zs_n * exp(ls_n), |zs_n| = 1 or 0
    complex<double> zs_prev{1.0, 0.0};
    double ls_prev = 0.0;  // Z_0 = 1
    out[0] = LogAmp::from(zs_prev, ls_prev);
    if (n_max == 0) return out;

    double m = std::abs(z);
    complex<double> zs_cur = m > 0.0 ? z / m : complex<double>{0.0, 0.0};
    double ls_cur = m > 0.0 ? std::log(m) : kNegInf;  // Z_1 = z
    {
        LogAmp a{ls_cur, zs_cur};
        if (m == 0.0) a = {};
        out[1] = a;
        out[1].log_mag -= 0.5 * model::rho_log(consts, 1).log_mag;
    }

    for (int n = 1; n < n_max; ++n) {
        double e_n = model::dimensionless_energy(consts, n);
        double scale = std::max(ls_cur, ls_prev);
        if (scale == kNegInf) {  // both iterates exactly zero
            zs_prev = zs_cur;
            ls_prev = ls_cur;
            zs_cur = {0.0, 0.0};
            ls_cur = kNegInf;
            out[n + 1] = {};
            continue;
        }
        complex<double> zc = ls_cur == kNegInf
                                 ? complex<double>{0.0, 0.0}
                                 : zs_cur * std::exp(ls_cur - scale);
        complex<double> zp = ls_prev == kNegInf
                                 ? complex<double>{0.0, 0.0}
                                 : zs_prev * std::exp(ls_prev - scale);
        complex<double> w = z * zc - gamma * e_n * zp;
        double wm = std::abs(w);
        zs_prev = zs_cur;
        ls_prev = ls_cur;
        if (wm == 0.0) {
            zs_cur = {0.0, 0.0};
            ls_cur = kNegInf;
            out[n + 1] = {};
        } else {
            zs_cur = w / wm;
            ls_cur = scale + std::log(wm);
            out[n + 1] = {ls_cur - 0.5 * model::rho_log(consts, n + 1).log_mag, zs_cur};
        }
    }
    return out;
}

std::vector<LogAmp> closed_form_amps(const DerivedConstants& consts, complex<double> z,
                                     double gamma, int n_max) {
    double a = consts.a, b = consts.b;
    complex<double> beta = -0.5 + b / (2.0 * a) - z / (2.0 * std::sqrt(a * gamma));
    double c = 1.0 + b / a;
    double log_ga = std::log(gamma * a);
    std::vector<LogAmp> out(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        complex<double> f = specialfn::hyp2f1_terminating(n, beta, c, 2.0);
        double fm = std::abs(f);
        if (fm == 0.0) {
            out[n] = {};
            continue;
        }
        double la = 0.5 * n * log_ga - 0.5 * specialfn::log_gamma(n + 1.0) +
                    0.5 * specialfn::gamma_ratio_log(n, b / a) + std::log(fm);
        out[n] = {la, f / fm};
    }
    return out;
}

std::vector<LogAmp> hermite_amps(const DerivedConstants& consts, double z,
                                 double gamma, int n_max) {
    double w = z / std::sqrt(2.0 * gamma * consts.b);
    double log_g2 = std::log(gamma / 2.0);
    std::vector<LogAmp> out(n_max + 1);
    // scaled Hermite recurrence: H_{n+1} = 2w H_n - 2n H_{n-1}
    double hs_prev = 1.0, ls_prev = 0.0;  // H_0
    out[0] = LogAmp::from({1.0, 0.0}, 0.0);
    double hs_cur, ls_cur;
    {
        double h1 = 2.0 * w;
        if (h1 == 0.0) {
            hs_cur = 0.0;
            ls_cur = kNegInf;
            out[1] = {};
        } else {
            ls_cur = std::log(std::abs(h1));
            hs_cur = h1 > 0 ? 1.0 : -1.0;
            out[1] = {0.5 * log_g2 - 0.5 * specialfn::log_gamma(2.0) + ls_cur,
                      {hs_cur, 0.0}};
        }
    }
    for (int n = 1; n < n_max; ++n) {
        double scale = std::max(ls_cur, ls_prev);
        double hv, lv;
        if (scale == kNegInf) {
            hv = 0.0;
            lv = kNegInf;
        } else {
            double hc = ls_cur == kNegInf ? 0.0 : hs_cur * std::exp(ls_cur - scale);
            double hp = ls_prev == kNegInf ? 0.0 : hs_prev * std::exp(ls_prev - scale);
            double hn = 2.0 * w * hc - 2.0 * n * hp;
            if (hn == 0.0) {
                hv = 0.0;
                lv = kNegInf;
            } else {
                hv = hn > 0 ? 1.0 : -1.0;
                lv = scale + std::log(std::abs(hn));
            }
        }
        hs_prev = hs_cur;
        ls_prev = ls_cur;
        hs_cur = hv;
        ls_cur = lv;
        if (lv == kNegInf) {
            out[n + 1] = {};
        } else {
            out[n + 1] = {0.5 * (n + 1) * log_g2 -
                              0.5 * specialfn::log_gamma(n + 2.0) + lv,
                          {hv, 0.0}};
        }
    }
    return out;
}

// Runs a fixed-n_max builder with adaptive truncation when requested.
template <typename Builder>
CoefficientVector build_adaptive(int n_max, Builder&& make) {
    if (n_max >= 0) return make(n_max);
    CoefficientVector cv;
    for (int m = kAdaptiveStart; m <= kAdaptiveCap; m *= 2) {
        cv = make(m);
        if (cv.converged) return cv;
    }
    return cv;  // non-converged; caller inspects the flag
}

}  // namespace

CoefficientVector coeffs_recurrence(const DerivedConstants& consts, complex<double> z,
                                    double gamma, int n_max) {
    if (gamma < 0.0) throw std::domain_error("coeffs_recurrence: requires gamma >= 0");
    StateSpec spec{z, gamma, n_max, Method::recurrence};
    return build_adaptive(n_max, [&](int m) {
        return finalize(recurrence_amps(consts, z, gamma, m), consts, spec);
    });
}

CoefficientVector coeffs_closed_form(const DerivedConstants& consts, complex<double> z,
                                     double gamma, int n_max) {
    if (!(consts.a > 0.0))
        throw std::domain_error("coeffs_closed_form: requires a > 0 (alpha > 0)");
    if (!(gamma > 0.0))
        throw std::domain_error("coeffs_closed_form: requires gamma > 0");
    StateSpec spec{z, gamma, n_max, Method::closed_form};
    return build_adaptive(n_max, [&](int m) {
        return finalize(closed_form_amps(consts, z, gamma, m), consts, spec);
    });
}

CoefficientVector coeffs_hermite_limit(const DerivedConstants& consts, double z,
                                       double gamma, int n_max) {
    if (consts.a != 0.0)
        throw std::domain_error("coeffs_hermite_limit: requires a = 0 (alpha = 0)");
    if (!(gamma > 0.0))
        throw std::domain_error("coeffs_hermite_limit: requires gamma > 0");
    StateSpec spec{{z, 0.0}, gamma, n_max, Method::hermite_limit};
    return build_adaptive(n_max, [&](int m) {
        return finalize(hermite_amps(consts, z, gamma, m), consts, spec);
    });
}

ComparisonReport compare_constructions(const DerivedConstants& consts,
                                       complex<double> z, double gamma, int n_max) {
    CoefficientVector rec = coeffs_recurrence(consts, z, gamma, n_max);
    CoefficientVector cf = coeffs_closed_form(consts, z, gamma, rec.n_max());

    ComparisonReport rep;
    rep.n_max = rec.n_max();
    rep.deviation.resize(rec.n_max() + 1);
    for (int n = 0; n <= rec.n_max(); ++n) {
        double scale = std::max({std::abs(rec.amplitudes[n]),
                                 std::abs(cf.amplitudes[n]), 1e-30});
        double dev = std::abs(rec.amplitudes[n] - cf.amplitudes[n]) / scale;
        rep.deviation[n] = dev;
        if (dev > rep.max_deviation) rep.max_deviation = dev;
        if (rep.first_exceeding < 0 && dev > 1e-8) rep.first_exceeding = n;
    }
    return rep;
}

CoefficientVector evolve(const CoefficientVector& state, double t) {
    CoefficientVector out = state;
    for (int n = 0; n <= state.n_max(); ++n) {
        double phase = -model::energy(state.consts, n) * t / state.consts.hbar;
        out.amplitudes[n] = state.amplitudes[n] * std::polar(1.0, phase);
    }
    return out;
}

std::complex<double> overlap(const CoefficientVector& s1, const CoefficientVector& s2) {
    const auto& c1 = s1.consts;
    const auto& c2 = s2.consts;
    if (c1.m0 != c2.m0 || c1.omega != c2.omega || c1.hbar != c2.hbar ||
        c1.alpha != c2.alpha)
        throw std::invalid_argument("overlap: states built from different constants");
    int m = std::min(s1.n_max(), s2.n_max());
    complex<double> acc{0.0, 0.0};
    for (int n = 0; n <= m; ++n)
        acc += std::conj(s1.amplitudes[n]) * s2.amplitudes[n];
    return acc;
}

CoefficientVector build(const DerivedConstants& consts, const StateSpec& spec) {
    switch (spec.method) {
        case Method::recurrence:
            return coeffs_recurrence(consts, spec.z, spec.gamma, spec.n_max);
        case Method::closed_form:
            return coeffs_closed_form(consts, spec.z, spec.gamma, spec.n_max);
        case Method::hermite_limit:
            if (spec.z.imag() != 0.0)
                throw std::domain_error("build: hermite_limit requires real z");
            return coeffs_hermite_limit(consts, spec.z.real(), spec.gamma, spec.n_max);
    }
    throw std::logic_error("build: unknown method");
}

}  // namespace pdms::state
