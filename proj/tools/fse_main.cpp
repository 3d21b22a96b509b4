// fse command line: scenario runner for the fractional evolution library.
// Links the C API only. Subcommands: ml, free, well, green, fracderiv.
// Exit codes: 0 success, 1 numerical failure, 2 usage error.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fse.h"
#include "json.hpp"

namespace {

using json = nlohmann::json;

struct RunConfig {
    std::string subcommand;
    double nu_re = 1.0, nu_im = 0.0;
    double n_m = 1.0, l_p = 1.0, t_p = 1.0;
    double t_min = 0.0, t_max = 1.0;
    std::size_t nt = 11;
    double x_min = -8.0, x_max = 8.0;
    std::size_t nx = 81;
    double k_min = -12.0, k_max = 12.0;
    std::size_t nk = 241;
    double tol = 1e-10;
    std::string output; // empty = stdout
    std::string format = "csv";
    std::string config_path;
    // ml
    double alpha_re = 1.0, alpha_im = 0.0, beta_re = 1.0, beta_im = 0.0;
    double z_re = 0.0, z_im = 0.0;
    // packet
    double k_center = 0.0, sigma_k = 1.0, x0 = 0.0;
    // well
    double width = 1.0;
    std::string modes = "1:1";
    // green
    std::string kind = "retarded";
    bool apply_packet = false;
    // fracderiv
    double lambda_re = 1.0, lambda_im = 0.0;
    double sigma_x = 0.70710678118654752440;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void check_status(fse_status st, const std::string& what) {
    if (st == FSE_OK) return;
    std::string msg = what + ": " + fse_status_name(st) + " (" + fse_last_error() + ")";
    if (st == FSE_ERR_NON_CONVERGENT || st == FSE_ERR_QUADRATURE_FAILURE ||
        st == FSE_ERR_SECTOR_UNSUPPORTED)
        throw NumericalError(msg);
    throw UsageError(msg);
}

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::vector<double> make_grid(double lo, double hi, std::size_t n) {
    std::vector<double> v(n);
    if (n == 1) {
        v[0] = lo;
        return v;
    }
    for (std::size_t i = 0; i < n; ++i)
        v[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    return v;
}

struct Table {
    std::string schema;
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

std::string render_csv(const Table& t) {
    std::string out;
    for (std::size_t i = 0; i < t.header.size(); ++i) {
        out += t.header[i];
        out += (i + 1 == t.header.size()) ? '\n' : ',';
    }
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out += fmt17(row[i]);
            out += (i + 1 == row.size()) ? '\n' : ',';
        }
    }
    return out;
}

std::string render_json(const Table& t) {
    json j;
    j["schema"] = t.schema;
    j["header"] = t.header;
    j["rows"] = t.rows;
    return j.dump() + "\n";
}

void write_atomic(const std::string& path, const std::string& payload) {
    if (path.empty() || path == "-") {
        std::fwrite(payload.data(), 1, payload.size(), stdout);
        return;
    }
    std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw UsageError("cannot open output file: " + tmp);
        f.write(payload.data(), static_cast<std::streamsize>(payload.size()));
        if (!f) throw UsageError("failed writing: " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw UsageError("failed to move output into place: " + path);
}

Table field_table(const fse_field* field) {
    Table t;
    t.schema = "field";
    t.header = {"t", "x", "re", "im", "abs2"};
    for (std::size_t it = 0; it < fse_field_nt(field); ++it)
        for (std::size_t ix = 0; ix < fse_field_nx(field); ++ix) {
            fse_complex v = fse_field_value(field, it, ix);
            t.rows.push_back({fse_field_t(field, it), fse_field_x(field, ix), v.re, v.im,
                              v.re * v.re + v.im * v.im});
        }
    return t;
}

std::vector<fse_complex> parse_modes(const std::string& text, std::size_t& n_modes) {
    // "n:re[:im]" items separated by commas, e.g. "1:1,3:0.5:-0.25"
    std::map<int, fse_complex> entries;
    std::stringstream ss(text);
    std::string item;
    int max_n = 0;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::stringstream fs(item);
        std::string part;
        std::vector<std::string> bits;
        while (std::getline(fs, part, ':')) bits.push_back(part);
        if (bits.size() < 2 || bits.size() > 3)
            throw UsageError("--modes items must be n:re[:im], got '" + item + "'");
        try {
            int n = std::stoi(bits[0]);
            double re = std::stod(bits[1]);
            double im = bits.size() == 3 ? std::stod(bits[2]) : 0.0;
            if (n < 1) throw UsageError("--modes indices start at 1");
            entries[n] = {re, im};
            max_n = std::max(max_n, n);
        } catch (const UsageError&) {
            throw;
        } catch (const std::exception&) {
            throw UsageError("cannot parse --modes item '" + item + "'");
        }
    }
    if (entries.empty()) throw UsageError("--modes must name at least one mode");
    std::vector<fse_complex> coeffs(static_cast<std::size_t>(max_n), fse_complex{0.0, 0.0});
    for (const auto& [n, c] : entries) coeffs[static_cast<std::size_t>(n - 1)] = c;
    n_modes = coeffs.size();
    return coeffs;
}

fse_green_kind parse_kind(const std::string& kind) {
    if (kind == "retarded") return FSE_GREEN_RETARDED;
    if (kind == "advanced") return FSE_GREEN_ADVANCED;
    if (kind == "wheeler") return FSE_GREEN_WHEELER;
    throw UsageError("--kind must be retarded, advanced or wheeler, got '" + kind + "'");
}

json resolved_json(const RunConfig& c) {
    json j;
    j["subcommand"] = c.subcommand;
    j["nu_re"] = c.nu_re;
    j["nu_im"] = c.nu_im;
    j["n_m"] = c.n_m;
    j["l_p"] = c.l_p;
    j["t_p"] = c.t_p;
    j["t_min"] = c.t_min;
    j["t_max"] = c.t_max;
    j["nt"] = c.nt;
    j["x_min"] = c.x_min;
    j["x_max"] = c.x_max;
    j["nx"] = c.nx;
    j["k_min"] = c.k_min;
    j["k_max"] = c.k_max;
    j["nk"] = c.nk;
    j["tol"] = c.tol;
    j["output"] = c.output.empty() ? "-" : c.output;
    j["format"] = c.format;
    if (c.subcommand == "ml") {
        j["alpha_re"] = c.alpha_re;
        j["alpha_im"] = c.alpha_im;
        j["beta_re"] = c.beta_re;
        j["beta_im"] = c.beta_im;
        j["z_re"] = c.z_re;
        j["z_im"] = c.z_im;
    }
    if (c.subcommand == "free" || (c.subcommand == "green" && c.apply_packet)) {
        j["k_center"] = c.k_center;
        j["sigma_k"] = c.sigma_k;
        j["x0"] = c.x0;
    }
    if (c.subcommand == "well") {
        j["width"] = c.width;
        j["modes"] = c.modes;
    }
    if (c.subcommand == "green") {
        j["kind"] = c.kind;
        j["apply"] = c.apply_packet;
    }
    if (c.subcommand == "fracderiv") {
        j["lambda_re"] = c.lambda_re;
        j["lambda_im"] = c.lambda_im;
        j["x0"] = c.x0;
        j["sigma_x"] = c.sigma_x;
    }
    return j;
}

void run_ml(const RunConfig& c) {
    fse_ml_result r;
    fse_status st = fse_ml({c.alpha_re, c.alpha_im}, {c.beta_re, c.beta_im}, {c.z_re, c.z_im},
                           c.tol, &r);
    check_status(st, "ml evaluation failed");
    const char* method = r.method == FSE_ML_TAYLOR_SERIES ? "taylor_series"
                         : r.method == FSE_ML_ASYMPTOTIC  ? "asymptotic"
                                                          : "quadrature";
    std::printf("%s %s %s %s\n", fmt17(r.value.re).c_str(), fmt17(r.value.im).c_str(),
                fmt17(r.error_bound).c_str(), method);
}

void run_free(const RunConfig& c) {
    if (c.t_min < 0.0) throw UsageError("--t-min must be >= 0 for the causal free scenario");
    fse_spectrum* spec = nullptr;
    check_status(fse_spectrum_gaussian(c.k_center, c.sigma_k, c.x0, c.k_min, c.k_max, c.nk, &spec),
                 "packet construction failed (check --k-min/--k-max/--nk)");
    std::vector<double> ts = make_grid(c.t_min, c.t_max, c.nt);
    std::vector<double> xs = make_grid(c.x_min, c.x_max, c.nx);
    fse_field* field = nullptr;
    fse_status st = fse_evolve_free(spec, {c.nu_re, c.nu_im}, {c.n_m, c.l_p, c.t_p}, ts.data(),
                                    ts.size(), xs.data(), xs.size(), c.tol, &field);
    fse_spectrum_free(spec);
    check_status(st, "free evolution failed");
    Table t = field_table(field);
    fse_field_free(field);
    write_atomic(c.output, c.format == "json" ? render_json(t) : render_csv(t));
}

void run_well(const RunConfig& c, bool x_range_given) {
    if (c.t_min < 0.0) throw UsageError("--t-min must be >= 0 for the causal well scenario");
    std::size_t n_modes = 0;
    std::vector<fse_complex> coeffs = parse_modes(c.modes, n_modes);
    std::vector<double> ts = make_grid(c.t_min, c.t_max, c.nt);
    std::vector<double> xs = x_range_given ? make_grid(c.x_min, c.x_max, c.nx)
                                           : make_grid(0.0, c.width, c.nx);
    fse_field* field = nullptr;
    fse_status st = fse_evolve_well(c.width, coeffs.data(), n_modes, {c.nu_re, c.nu_im},
                                    {c.n_m, c.l_p, c.t_p}, ts.data(), ts.size(), xs.data(),
                                    xs.size(), c.tol, &field);
    check_status(st, "well evolution failed");
    Table t = field_table(field);
    fse_field_free(field);
    write_atomic(c.output, c.format == "json" ? render_json(t) : render_csv(t));
}

void run_green(const RunConfig& c) {
    fse_green_kind kind = parse_kind(c.kind);
    std::vector<double> ts = make_grid(c.t_min, c.t_max, c.nt);
    if (c.apply_packet) {
        fse_spectrum* spec = nullptr;
        check_status(
            fse_spectrum_gaussian(c.k_center, c.sigma_k, c.x0, c.k_min, c.k_max, c.nk, &spec),
            "packet construction failed");
        std::vector<double> xs = make_grid(c.x_min, c.x_max, c.nx);
        fse_field* field = nullptr;
        fse_status st = fse_apply_green(kind, {c.nu_re, c.nu_im}, spec, {c.n_m, c.l_p, c.t_p},
                                        ts.data(), ts.size(), xs.data(), xs.size(), c.tol,
                                        &field);
        fse_spectrum_free(spec);
        check_status(st, "Green pairing failed");
        Table t = field_table(field);
        fse_field_free(field);
        write_atomic(c.output, c.format == "json" ? render_json(t) : render_csv(t));
        return;
    }
    std::vector<double> ks = make_grid(c.k_min, c.k_max, c.nk);
    Table t;
    t.schema = "kernel";
    t.header = {"t", "k", "re", "im"};
    for (double tv : ts)
        for (double kv : ks) {
            fse_complex g;
            check_status(fse_green_kernel(kind, {c.nu_re, c.nu_im}, tv, kv,
                                          {c.n_m, c.l_p, c.t_p}, c.tol, &g),
                         "Green kernel failed");
            t.rows.push_back({tv, kv, g.re, g.im});
        }
    write_atomic(c.output, c.format == "json" ? render_json(t) : render_csv(t));
}

void run_fracderiv(const RunConfig& c) {
    std::vector<double> xs = make_grid(c.x_min, c.x_max, c.nx);
    std::vector<double> ks = make_grid(c.k_min, c.k_max, c.nk);
    std::vector<fse_complex> f(xs.size()), out(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        double u = (xs[i] - c.x0) / c.sigma_x;
        f[i] = {std::exp(-0.5 * u * u), 0.0};
    }
    check_status(fse_frac_deriv_apply(xs.data(), f.data(), xs.size(), {c.lambda_re, c.lambda_im},
                                      ks.data(), ks.size(), out.data()),
                 "fractional derivative failed");
    Table t;
    t.schema = "samples";
    t.header = {"x", "re", "im", "abs2"};
    for (std::size_t i = 0; i < xs.size(); ++i)
        t.rows.push_back(
            {xs[i], out[i].re, out[i].im, out[i].re * out[i].re + out[i].im * out[i].im});
    write_atomic(c.output, c.format == "json" ? render_json(t) : render_csv(t));
}

// file values fill any option the command line left untouched; unknown keys
// are rejected so typos cannot silently change a run
void merge_config_file(CLI::App* sub, const std::string& path) {
    std::ifstream f(path);
    if (!f) throw UsageError("cannot read config file: " + path);
    json j;
    try {
        f >> j;
    } catch (const std::exception& e) {
        throw UsageError(std::string("config file is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw UsageError("config file must hold a JSON object");
    for (const auto& [key, value] : j.items()) {
        std::string opt_name = "--" + key;
        for (char& ch : opt_name)
            if (ch == '_') ch = '-';
        CLI::Option* opt = sub->get_option_no_throw(opt_name);
        if (!opt) throw UsageError("unknown config key: " + key);
        if (opt->count() > 0) continue; // flags override file values
        std::string text = value.is_string() ? value.get<std::string>() : value.dump();
        opt->add_result(text);
        opt->run_callback();
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"time-fractional Schroedinger evolution toolkit"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&](CLI::App* sub, bool causal_time) {
        sub->add_option("--nu,--nu-re", cfg.nu_re, "Re of the derivative order (must be > 0)");
        sub->add_option("--nu-im", cfg.nu_im, "Im of the derivative order");
        sub->add_option("--nm,--n-m", cfg.n_m, "mass ratio m / M_p");
        sub->add_option("--lp,--l-p", cfg.l_p, "length unit");
        sub->add_option("--tp,--t-p", cfg.t_p, "time unit");
        sub->add_option("--t-min", cfg.t_min);
        sub->add_option("--t-max", cfg.t_max);
        sub->add_option("--nt", cfg.nt);
        sub->add_option("--x-min", cfg.x_min);
        sub->add_option("--x-max", cfg.x_max);
        sub->add_option("--nx", cfg.nx);
        sub->add_option("--k-min", cfg.k_min);
        sub->add_option("--k-max", cfg.k_max);
        sub->add_option("--nk", cfg.nk);
        sub->add_option("--tol", cfg.tol, "kernel tolerance, in (0, 1e-2]");
        sub->add_option("--output", cfg.output, "output path ('-' or empty for stdout)");
        sub->add_option("--format", cfg.format)->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--config", cfg.config_path, "JSON config file (flags override it)");
        (void)causal_time;
    };

    CLI::App* ml = app.add_subcommand("ml", "evaluate the generalized Mittag-Leffler function");
    ml->add_option("--alpha,--alpha-re", cfg.alpha_re);
    ml->add_option("--alpha-im", cfg.alpha_im);
    ml->add_option("--beta,--beta-re", cfg.beta_re);
    ml->add_option("--beta-im", cfg.beta_im);
    ml->add_option("--z,--z-re", cfg.z_re);
    ml->add_option("--z-im", cfg.z_im);
    add_common(ml, false);

    CLI::App* fr = app.add_subcommand("free", "causal free-particle evolution of a packet");
    fr->add_option("--k-center", cfg.k_center);
    fr->add_option("--sigma-k", cfg.sigma_k);
    fr->add_option("--x0", cfg.x0);
    add_common(fr, true);

    CLI::App* we = app.add_subcommand("well", "causal infinite-well evolution");
    we->add_option("--width", cfg.width);
    we->add_option("--modes", cfg.modes, "mode list n:re[:im],...");
    CLI::Option* well_xmin;
    add_common(we, true);
    well_xmin = we->get_option("--x-min");

    CLI::App* gr = app.add_subcommand("green", "fractional Green kernels and pairings");
    gr->add_option("--kind", cfg.kind, "retarded | advanced | wheeler");
    gr->add_flag("--apply", cfg.apply_packet, "pair with a Gaussian packet (field output)");
    gr->add_option("--k-center", cfg.k_center);
    gr->add_option("--sigma-k", cfg.sigma_k);
    gr->add_option("--x0", cfg.x0);
    add_common(gr, false);

    CLI::App* fd = app.add_subcommand("fracderiv", "spectral fractional derivative of a Gaussian");
    fd->add_option("--lambda,--lambda-re", cfg.lambda_re);
    fd->add_option("--lambda-im", cfg.lambda_im);
    fd->add_option("--x0", cfg.x0);
    fd->add_option("--sigma-x", cfg.sigma_x);
    add_common(fd, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        CLI::App* sub = app.get_subcommands().front();
        cfg.subcommand = sub->get_name();
        if (!cfg.config_path.empty()) merge_config_file(sub, cfg.config_path);

        if (cfg.nu_re <= 0.0) throw UsageError("--nu-re: Re(nu) must be > 0");
        if (!(cfg.tol > 0.0 && cfg.tol <= 1e-2))
            throw UsageError("--tol must lie in (0, 1e-2]");
        if (cfg.nt < 2 && cfg.subcommand != "ml")
            throw UsageError("--nt must be >= 2");
        if (cfg.nx < 2 && cfg.subcommand != "ml")
            throw UsageError("--nx must be >= 2");
        if (cfg.nk < 2 && cfg.subcommand != "ml")
            throw UsageError("--nk must be >= 2");

        std::cerr << "resolved config: " << resolved_json(cfg).dump() << "\n";

        if (cfg.subcommand == "ml")
            run_ml(cfg);
        else if (cfg.subcommand == "free")
            run_free(cfg);
        else if (cfg.subcommand == "well")
            run_well(cfg, well_xmin->count() > 0);
        else if (cfg.subcommand == "green")
            run_green(cfg);
        else if (cfg.subcommand == "fracderiv")
            run_fracderiv(cfg);
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 1;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
