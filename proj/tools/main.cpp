// pdm-squeeze: command-line front end for the position-dependent-mass
// squeezed coherent state library. Emits CSV or JSON tables; no plotting.

#include "pdms/observables.hpp"
#include "pdms/pdm_model.hpp"
#include "pdms/squeezed_state.hpp"
#include "pdms/validate.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kFormatVersion = "pdm-squeeze-table v1";

constexpr int kExitValidationFailure = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitNonConvergence = 3;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct Table {
    std::vector<std::pair<std::string, std::string>> metadata;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    void meta(const std::string& k, const std::string& v) { metadata.emplace_back(k, v); }
    void meta(const std::string& k, double v) { metadata.emplace_back(k, fmt(v)); }

    void write_csv(std::ostream& os) const {
        os << "# " << kFormatVersion << "\n";
        for (const auto& [k, v] : metadata) os << "# " << k << " = " << v << "\n";
        for (std::size_t i = 0; i < columns.size(); ++i)
            os << columns[i] << (i + 1 < columns.size() ? "," : "");
        os << "\n";
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                os << fmt(row[i]) << (i + 1 < row.size() ? "," : "");
            os << "\n";
        }
    }

    void write_json(std::ostream& os) const {
        json j;
        j["format"] = kFormatVersion;
        j["metadata"] = json::object();
        for (const auto& [k, v] : metadata) j["metadata"][k] = v;
        j["columns"] = columns;
        j["rows"] = rows;
        os << j.dump(2) << "\n";
    }
};

struct CommonOpts {
    double m0 = 1.0, omega = 1.0, hbar = 1.0, alpha = 0.0;
    double z_re = 0.0, z_im = 0.0, gamma = 0.0;
    int n_max = -1;  // -1 = adaptive
    std::string method = "recurrence";
    std::string scan;    // VAR:START:STOP:STEPS
    std::string t_list;  // comma-separated times
    std::string x_grid = "-10:10:201";
    std::string format = "csv";
    std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--m0", o.m0, "Reference mass");
    cmd->add_option("--omega", o.omega, "Angular frequency");
    cmd->add_option("--hbar", o.hbar, "Reduced Planck constant");
    cmd->add_option("--alpha", o.alpha, "Mass deformation parameter (>= 0)");
    cmd->add_option("--z-re", o.z_re, "Re(z) of the coherence label");
    cmd->add_option("--z-im", o.z_im, "Im(z) of the coherence label");
    cmd->add_option("--gamma", o.gamma, "Squeeze parameter (>= 0)");
    cmd->add_option("--nmax", o.n_max, "Fock truncation (omit for adaptive)");
    cmd->add_flag_callback("--adaptive", [&o] { o.n_max = -1; },
                           "Adaptive truncation (default)");
    cmd->add_option("--method", o.method, "recurrence|closed|hermite")
        ->check(CLI::IsMember({"recurrence", "closed", "hermite"}));
    cmd->add_option("--scan", o.scan, "VAR:START:STOP:STEPS with VAR in z_re,z_im,gamma,alpha,t");
    cmd->add_option("--t-list", o.t_list, "Comma-separated evolution times");
    cmd->add_option("--x-grid", o.x_grid, "MIN:MAX:POINTS position grid");
    cmd->add_option("--format", o.format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", o.out, "Output path (default stdout)");
}

pdms::state::Method parse_method(const std::string& m) {
    if (m == "closed") return pdms::state::Method::closed_form;
    if (m == "hermite") return pdms::state::Method::hermite_limit;
    return pdms::state::Method::recurrence;
}

std::vector<std::string> split(const std::string& s, char delim) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, delim)) parts.push_back(item);
    return parts;
}

struct Scan {
    std::string var;
    double start, stop;
    int steps;
    double value(int i) const { return start + (stop - start) * i / (steps - 1); }
};

std::optional<Scan> parse_scan(const std::string& spec) {
    if (spec.empty()) return std::nullopt;
    auto p = split(spec, ':');
    if (p.size() != 4) throw std::invalid_argument("--scan expects VAR:START:STOP:STEPS");
    Scan s{p[0], std::stod(p[1]), std::stod(p[2]), std::stoi(p[3])};
    if (s.var != "z_re" && s.var != "z_im" && s.var != "gamma" && s.var != "alpha" &&
        s.var != "t")
        throw std::invalid_argument("--scan variable must be one of z_re,z_im,gamma,alpha,t");
    if (s.steps < 2) throw std::invalid_argument("--scan requires steps >= 2");
    if (!(s.start < s.stop)) throw std::invalid_argument("--scan requires start < stop");
    return s;
}

std::vector<double> parse_t_list(const std::string& s, double fallback = 0.0) {
    if (s.empty()) return {fallback};
    std::vector<double> ts;
    for (const auto& part : split(s, ',')) ts.push_back(std::stod(part));
    return ts;
}

std::vector<double> parse_x_grid(const std::string& s) {
    auto p = split(s, ':');
    if (p.size() != 3) throw std::invalid_argument("--x-grid expects MIN:MAX:POINTS");
    double lo = std::stod(p[0]), hi = std::stod(p[1]);
    int n = std::stoi(p[2]);
    if (n < 2 || !(lo < hi)) throw std::invalid_argument("--x-grid: bad range");
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i) g[i] = lo + (hi - lo) * i / (n - 1.0);
    return g;
}

void emit(const Table& t, const CommonOpts& o) {
    if (o.out.empty() || o.out == "stdout") {
        if (o.format == "json")
            t.write_json(std::cout);
        else
            t.write_csv(std::cout);
    } else {
        std::ofstream f(o.out, std::ios::binary);
        if (!f) throw std::invalid_argument("cannot open output path: " + o.out);
        if (o.format == "json")
            t.write_json(f);
        else
            t.write_csv(f);
    }
}

pdms::model::ModelParams params_of(const CommonOpts& o) {
    return {o.m0, o.omega, o.hbar, o.alpha};
}

void meta_params(Table& t, const CommonOpts& o) {
    t.meta("m0", o.m0);
    t.meta("omega", o.omega);
    t.meta("hbar", o.hbar);
    t.meta("alpha", o.alpha);
}

int cmd_spectrum(const CommonOpts& o) {
    auto params = params_of(o);
    auto k = pdms::model::derive_constants(params);
    int nmax = o.n_max < 0 ? 64 : o.n_max;
    Table t;
    t.meta("command", std::string("spectrum"));
    meta_params(t, o);
    t.columns = {"n", "E_n", "e_n", "rho_log_n"};
    for (int n = 0; n <= nmax; ++n)
        t.rows.push_back({double(n), pdms::model::energy(params, n),
                          pdms::model::dimensionless_energy(k, n),
                          pdms::model::rho_log(k, n).log_mag});
    emit(t, o);
    return 0;
}

int cmd_state(const CommonOpts& o) {
    auto k = pdms::model::derive_constants(params_of(o));
    pdms::state::StateSpec spec{{o.z_re, o.z_im}, o.gamma, o.n_max, parse_method(o.method)};
    auto st = pdms::state::build(k, spec);
    Table t;
    t.meta("command", std::string("state"));
    meta_params(t, o);
    t.meta("z_re", o.z_re);
    t.meta("z_im", o.z_im);
    t.meta("gamma", o.gamma);
    t.meta("method", o.method);
    t.meta("norm_factor_log", st.norm_factor_log);
    t.meta("tail_weight", st.tail_weight);
    t.meta("converged", st.converged ? "true" : "false");
    t.columns = {"n", "re_c", "im_c", "p_n"};
    for (int n = 0; n <= st.n_max(); ++n)
        t.rows.push_back({double(n), st.amplitudes[n].real(), st.amplitudes[n].imag(),
                          std::norm(st.amplitudes[n])});
    emit(t, o);
    if (o.n_max < 0 && !st.converged) return kExitNonConvergence;
    return 0;
}

int cmd_observables(const CommonOpts& o) {
    auto scan = parse_scan(o.scan);
    Table t;
    t.meta("command", std::string("observables"));
    meta_params(t, o);
    t.meta("z_re", o.z_re);
    t.meta("z_im", o.z_im);
    t.meta("gamma", o.gamma);
    t.meta("method", o.method);
    t.meta("scan", o.scan.empty() ? "none" : o.scan);
    t.columns = {"scan_value", "mean_x", "mean_p",  "delta_x", "delta_p", "product_direct",
                 "product_factored", "A", "B", "mean_n", "mandel_q"};
    int points = scan ? scan->steps : 1;
    for (int i = 0; i < points; ++i) {
        CommonOpts oi = o;
        double sv = 0.0, tval = 0.0;
        if (scan) {
            sv = scan->value(i);
            if (scan->var == "z_re") oi.z_re = sv;
            else if (scan->var == "z_im") oi.z_im = sv;
            else if (scan->var == "gamma") oi.gamma = sv;
            else if (scan->var == "alpha") oi.alpha = sv;
            else tval = sv;
        }
        auto k = pdms::model::derive_constants(params_of(oi));
        pdms::state::StateSpec spec{{oi.z_re, oi.z_im}, oi.gamma, oi.n_max,
                                    parse_method(oi.method)};
        auto st = pdms::state::build(k, spec);
        if (tval != 0.0) st = pdms::state::evolve(st, tval);
        auto rep = pdms::obs::report(st);
        t.rows.push_back({sv, rep.mean_x, rep.mean_p, std::sqrt(rep.var_x),
                          std::sqrt(rep.var_p), rep.uncertainty_product,
                          rep.uncertainty_product_factored, rep.A, rep.B, rep.mean_n,
                          rep.mandel_q});
    }
    emit(t, o);
    return 0;
}

int cmd_density(const CommonOpts& o) {
    if (!(o.alpha > 0.0))
        throw std::invalid_argument("density: requires alpha > 0");
    auto k = pdms::model::derive_constants(params_of(o));
    pdms::state::StateSpec spec{{o.z_re, o.z_im}, o.gamma, o.n_max, parse_method(o.method)};
    auto st = pdms::state::build(k, spec);
    auto grid = parse_x_grid(o.x_grid);
    auto times = parse_t_list(o.t_list);
    Table t;
    t.meta("command", std::string("density"));
    meta_params(t, o);
    t.meta("z_re", o.z_re);
    t.meta("z_im", o.z_im);
    t.meta("gamma", o.gamma);
    t.columns = {"x", "t", "density"};
    for (double tv : times) {
        auto dens = pdms::obs::position_density(st, tv, grid);
        for (std::size_t i = 0; i < grid.size(); ++i)
            t.rows.push_back({grid[i], tv, dens[i]});
    }
    emit(t, o);
    return 0;
}

int cmd_validate(const CommonOpts& o) {
    auto rep = pdms::validate::run_all();
    std::ostringstream human;
    for (const auto& c : rep.checks)
        human << (c.pass ? "PASS  " : "FAIL  ") << c.name
              << "  observed=" << fmt(c.observed) << "  threshold=" << fmt(c.threshold)
              << "\n";
    human << "\nClosed-form reconciliation (informational, never failing):\n";
    human << "  z_re   gamma  alpha  max_deviation        first_n>1e-8  n_max\n";
    for (const auto& r : rep.comparison) {
        char line[160];
        std::snprintf(line, sizeof(line), "  %-6g %-6g %-6g %-20.12g %-13d %d\n",
                      r.z_re, r.gamma, r.alpha, r.max_deviation, r.first_exceeding,
                      r.n_max);
        human << line;
    }
    human << (rep.all_pass() ? "\nRESULT: all hard invariants PASS\n"
                             : "\nRESULT: hard invariant FAILURE\n");

    if (o.format == "json") {
        json j;
        j["format"] = kFormatVersion;
        j["metadata"] = {{"command", "validate"}};
        j["checks"] = json::array();
        for (const auto& c : rep.checks)
            j["checks"].push_back({{"name", c.name},
                                   {"pass", c.pass},
                                   {"observed", c.observed},
                                   {"threshold", c.threshold}});
        j["comparison"] = json::array();
        for (const auto& r : rep.comparison)
            j["comparison"].push_back({{"z_re", r.z_re},
                                       {"z_im", r.z_im},
                                       {"gamma", r.gamma},
                                       {"alpha", r.alpha},
                                       {"max_deviation", r.max_deviation},
                                       {"first_exceeding", r.first_exceeding},
                                       {"n_max", r.n_max}});
        j["all_pass"] = rep.all_pass();
        if (o.out.empty() || o.out == "stdout") {
            std::cout << j.dump(2) << "\n";
        } else {
            std::ofstream f(o.out, std::ios::binary);
            f << j.dump(2) << "\n";
        }
        std::cerr << human.str();
    } else if (!o.out.empty() && o.out != "stdout") {
        std::ofstream f(o.out, std::ios::binary);
        f << human.str();
        std::cout << human.str();
    } else {
        std::cout << human.str();
    }
    return rep.all_pass() ? 0 : kExitValidationFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Squeezed coherent states of the position-dependent-mass oscillator"};
    app.require_subcommand(1);
    app.set_config("--config")->envname("PDM_SQUEEZE_CONFIG");

    CommonOpts o;
    auto* spectrum = app.add_subcommand("spectrum", "Energy spectrum and rho weights");
    auto* state = app.add_subcommand("state", "Fock amplitudes of one state");
    auto* observables = app.add_subcommand("observables", "Means, variances, uncertainty");
    auto* density = app.add_subcommand("density", "Position-space probability density");
    auto* validate = app.add_subcommand("validate", "Run the full invariant suite");
    for (auto* cmd : {spectrum, state, observables, density, validate})
        add_common(cmd, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitBadInput;
    }

    try {
        if (spectrum->parsed()) return cmd_spectrum(o);
        if (state->parsed()) return cmd_state(o);
        if (observables->parsed()) return cmd_observables(o);
        if (density->parsed()) return cmd_density(o);
        if (validate->parsed()) return cmd_validate(o);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNonConvergence;
    }
    return kExitBadInput;
}
