// Command-line front end over the nfx C interface.
//
//   nfx [--config PATH] [--out DIR] [--threads N] [--format csv|json] <command> ...
//
// Commands: dispersion, weights, spectrum, validate, sweep.
// Exit status: 0 success, 1 validation failure, 2 usage or input error.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nfx/nfx.h"

namespace fs = std::filesystem;
using ojson = nlohmann::ordered_json;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kHbarEvSeconds = 6.582119569e-16;

struct CliError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check(nfx_status status, const std::string& context) {
    if (status != NFX_OK)
        throw CliError(context + ": " + nfx_status_string(status) + ": " + nfx_last_error());
}

struct ParamsDeleter {
    void operator()(nfx_params* p) const { nfx_params_free(p); }
};
using ParamsPtr = std::unique_ptr<nfx_params, ParamsDeleter>;

struct SpectrumDeleter {
    void operator()(nfx_spectrum* s) const { nfx_spectrum_free(s); }
};

struct ValidationDeleter {
    void operator()(nfx_validation* v) const { nfx_validation_free(v); }
};

std::string read_string(nfx_status (*fn)(const nfx_params*, char*, size_t, size_t*), const nfx_params* p) {
    size_t needed = 0;
    check(fn(p, nullptr, 0, &needed), "reading parameters");
    std::string out(needed, '\0');
    check(fn(p, out.data(), needed + 1, &needed), "reading parameters");
    return out;
}

double param(const nfx_params* p, const char* key) {
    double v = 0;
    check(nfx_params_get(p, key, &v), std::string("reading ") + key);
    return v;
}

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

struct Globals {
    std::string config_path;
    std::string out_dir = ".";
    int threads = 1;
    std::string format = "csv";
};

struct Session {
    Globals globals;
    ParamsPtr params;
    std::vector<std::string> defaulted;
};

Session open_session(const Globals& g) {
    Session s{g, nullptr, {}};
    nfx_params* raw = nullptr;
    if (g.config_path.empty()) {
        check(nfx_params_default(&raw), "default parameters");
    } else {
        std::ifstream in(g.config_path);
        if (!in) throw CliError("cannot read config file '" + g.config_path + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        check(nfx_params_from_json(buf.str().c_str(), &raw), "config '" + g.config_path + "'");
    }
    s.params.reset(raw);
    std::string keys = read_string(nfx_params_defaulted_keys, raw);
    std::stringstream ks(keys);
    for (std::string k; std::getline(ks, k, ',');)
        if (!k.empty()) s.defaulted.push_back(k);
    std::error_code ec;
    fs::create_directories(g.out_dir, ec);
    if (ec) throw CliError("cannot create output directory '" + g.out_dir + "': " + ec.message());
    return s;
}

ojson manifest(const Session& s, const std::string& command, ojson grid) {
    ojson m;
    m["command"] = command;
    m["tool_version"] = nfx_version();
    m["timestamp"] = utc_timestamp();
    m["params"] = ojson::parse(read_string(nfx_params_to_json, s.params.get()));
    m["defaulted_keys"] = s.defaulted;
    m["grid"] = std::move(grid);
    return m;
}

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

// Rows are computed independently and assembled in index order.
template <class F>
std::vector<std::vector<double>> parallel_rows(int n, int threads, F row_at) {
    std::vector<std::vector<double>> rows(static_cast<size_t>(n));
    std::exception_ptr first_error;
    std::mutex error_mutex;
    const int workers = std::max(1, std::min(threads, n));
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (int i = w; i < n; i += workers) {
                try {
                    rows[static_cast<size_t>(i)] = row_at(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
    return rows;
}

void write_plot_recipe(const fs::path& data, const Table& table, const std::string& x, const std::string& title) {
    fs::path recipe = data;
    recipe.replace_extension(".plot.py");
    std::ofstream out(recipe);
    if (!out) throw CliError("cannot write '" + recipe.string() + "'");
    const bool json = data.extension() == ".json";
    out << "# Plot recipe for " << data.filename().string() << "; run with python3.\n"
        << "import json\nimport sys\nimport numpy as np\nimport matplotlib\nmatplotlib.use(\"Agg\")\n"
        << "import matplotlib.pyplot as plt\n\n"
        << "path = \"" << data.filename().string() << "\"\n";
    if (json) {
        out << "doc = json.load(open(path))\n"
            << "cols = doc[\"columns\"]\n"
            << "rows = np.array(doc[\"rows\"], dtype=float)\n"
            << "data = {c: rows[:, i] for i, c in enumerate(cols)}\n";
    } else {
        out << "raw = np.genfromtxt(path, delimiter=\",\", names=True, skip_header=1)\n"
            << "data = {c: raw[c] for c in raw.dtype.names}\n";
    }
    out << "x = \"" << x << "\"\n"
        << "fig, ax = plt.subplots()\n"
        << "for name in [";
    bool first = true;
    for (const auto& c : table.columns) {
        if (c == x) continue;
        out << (first ? "" : ", ") << '"' << c << '"';
        first = false;
    }
    out << "]:\n"
        << "    ax.plot(data[x], data[name], label=name)\n"
        << "ax.set_xlabel(x)\nax.set_title(\"" << title << "\")\nax.legend()\n"
        << "fig.savefig(sys.argv[1] if len(sys.argv) > 1 else path.rsplit(\".\", 1)[0] + \".png\", dpi=150)\n";
}

fs::path write_table(const Session& s, const std::string& stem, ojson meta, const Table& table, const std::string& x,
                     const std::string& title) {
    const bool json = s.globals.format == "json";
    const fs::path path = fs::path(s.globals.out_dir) / (stem + (json ? ".json" : ".csv"));
    meta["outputs"] = {path.filename().string()};
    std::ofstream out(path);
    if (!out) throw CliError("cannot write '" + path.string() + "'");
    if (json) {
        // Numbers go through the same 17-digit formatting as the CSV body.
        out << "{\n  \"manifest\": " << meta.dump() << ",\n  \"columns\": " << ojson(table.columns).dump()
            << ",\n  \"rows\": [";
        for (size_t i = 0; i < table.rows.size(); ++i) {
            out << (i ? ",\n    [" : "\n    [");
            for (size_t j = 0; j < table.rows[i].size(); ++j) out << (j ? ", " : "") << format_number(table.rows[i][j]);
            out << "]";
        }
        out << "\n  ]\n}\n";
    } else {
        out << "# " << meta.dump() << "\n";
        for (size_t j = 0; j < table.columns.size(); ++j) out << (j ? "," : "") << table.columns[j];
        out << "\n";
        for (const auto& row : table.rows) {
            for (size_t j = 0; j < row.size(); ++j) out << (j ? "," : "") << format_number(row[j]);
            out << "\n";
        }
    }
    if (!out) throw CliError("error while writing '" + path.string() + "'");
    write_plot_recipe(path, table, x, title);
    return path;
}

std::vector<double> linear_grid(double lo, double hi, int n, const char* what) {
    if (n < 1) throw CliError(std::string(what) + ": n-points must be at least 1");
    if (!std::isfinite(lo) || !std::isfinite(hi)) throw CliError(std::string(what) + ": range must be finite");
    if (n > 1 && !(hi > lo)) throw CliError(std::string(what) + ": range must satisfy min < max");
    std::vector<double> out(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) out[static_cast<size_t>(i)] = n == 1 ? lo : (i + 1 == n ? hi : lo + (hi - lo) * i / (n - 1));
    return out;
}

nfx_method parse_method(const std::string& name) {
    if (name == "direct") return NFX_METHOD_DIRECT;
    if (name == "bessel") return NFX_METHOD_BESSEL;
    if (name == "asymptotic") return NFX_METHOD_ASYMPTOTIC;
    throw CliError("unknown method '" + name + "' (direct|bessel|asymptotic)");
}

std::string theta_tag(double deg) {
    std::string s = format_number(deg);
    std::replace(s.begin(), s.end(), '.', 'p');
    std::replace(s.begin(), s.end(), '-', 'm');
    return s;
}

// ---- dispersion -----------------------------------------------------------

struct DispersionArgs {
    double k_min = 0;
    double k_max = -1;  // negative: twice the critical wave number
    int n_points = 201;
    std::vector<double> theta_deg;
    std::string method = "bessel";
    bool relative = false;
};

int run_dispersion(const Session& s, const DispersionArgs& a) {
    const nfx_params* p = s.params.get();
    const double e_a = param(p, "E_A_eV");
    const nfx_method method = parse_method(a.method);
    std::vector<double> thetas = a.theta_deg;
    if (thetas.empty()) thetas.push_back(param(p, "theta_deg"));
    for (double deg : thetas) {
        const double theta = deg * kPi / 180.0;
        double k_max = a.k_max;
        if (k_max < 0) {
            double kc = 0;
            check(nfx_critical_wavenumber(p, theta, NFX_METHOD_BESSEL, &kc), "critical wave number");
            k_max = 2.0 * kc;
        }
        if (a.k_min < 0) throw CliError("dispersion: k-min must be non-negative");
        const auto ks = linear_grid(a.k_min, k_max, a.n_points, "dispersion");
        const double offset = a.relative ? e_a : 0.0;
        Table t;
        t.columns = {"k", "E_ph", "E_ex_s", "E_ex_a", "E_pol_plus", "E_pol_minus"};
        t.rows = parallel_rows(a.n_points, s.globals.threads, [&](int i) {
            nfx_polariton pt;
            check(nfx_polariton_point(p, ks[static_cast<size_t>(i)], theta, method, &pt), "polariton point");
            if (a.relative) {
                return std::vector<double>{pt.k, pt.photon_energy - offset, pt.exciton_symmetric - offset,
                                           pt.exciton_antisymmetric - offset, pt.shift_plus, pt.shift_minus};
            }
            return std::vector<double>{pt.k, pt.photon_energy, pt.exciton_symmetric, pt.exciton_antisymmetric,
                                       pt.omega_plus, pt.omega_minus};
        });
        ojson grid = {{"k_min", a.k_min}, {"k_max", k_max}, {"n_points", a.n_points}, {"theta_deg", deg},
                      {"method", a.method}, {"energies_relative_to_E_A", a.relative}};
        const auto path = write_table(s, "dispersion_theta" + theta_tag(deg), manifest(s, "dispersion", grid), t, "k",
                                      "dispersion, theta = " + format_number(deg) + " deg");
        std::cout << path.string() << "\n";
    }
    return 0;
}

// ---- weights --------------------------------------------------------------

struct WeightsArgs {
    double k_min = 0;
    double k_max = 1e-3;
    int n_points = 201;
    double theta_deg = NAN;
};

int run_weights(const Session& s, const WeightsArgs& a) {
    const nfx_params* p = s.params.get();
    const double deg = std::isnan(a.theta_deg) ? param(p, "theta_deg") : a.theta_deg;
    const double theta = deg * kPi / 180.0;
    if (a.k_min < 0) throw CliError("weights: k-min must be non-negative");
    const auto ks = linear_grid(a.k_min, a.k_max, a.n_points, "weights");
    Table t;
    t.columns = {"k", "X2_minus", "Y2_minus", "X2_plus", "Y2_plus"};
    t.rows = parallel_rows(a.n_points, s.globals.threads, [&](int i) {
        nfx_polariton pt;
        check(nfx_polariton_point(p, ks[static_cast<size_t>(i)], theta, NFX_METHOD_BESSEL, &pt), "polariton point");
        return std::vector<double>{pt.k, pt.X2_minus, pt.Y2_minus, pt.X2_plus, pt.Y2_plus};
    });
    ojson grid = {{"k_min", a.k_min}, {"k_max", a.k_max}, {"n_points", a.n_points}, {"theta_deg", deg}};
    const auto path = write_table(s, "weights", manifest(s, "weights", grid), t, "k", "Hopfield weights");
    std::cout << path.string() << "\n";
    return 0;
}

// ---- spectrum -------------------------------------------------------------

struct SpectrumArgs {
    int figure = 0;
    double k = 1e-6;
    double gamma = NAN;
    double omega_center = NAN;
    double omega_span = NAN;
    int n_points = 20001;
    double theta_deg = NAN;
    bool relative = false;
};

int run_spectrum(const Session& s, const SpectrumArgs& a) {
    const nfx_params* p = s.params.get();
    const double deg = std::isnan(a.theta_deg) ? param(p, "theta_deg") : a.theta_deg;
    const double theta = deg * kPi / 180.0;
    const double e_a = param(p, "E_A_eV");
    double k = a.k, gamma = std::isnan(a.gamma) ? param(p, "hbar_gamma_eV") : a.gamma, lo = 0, hi = 0;
    if (a.figure != 0) {
        check(nfx_figure_preset(p, a.figure, theta, &k, &gamma, &lo, &hi), "figure preset");
    } else {
        check(nfx_default_window(p, k, theta, gamma, &lo, &hi), "spectrum window");
    }
    if (!std::isnan(a.omega_span) && !(a.omega_span > 0)) throw CliError("spectrum: omega-span must be positive");
    const double center = std::isnan(a.omega_center) ? 0.5 * (lo + hi) : a.omega_center;
    const double span = std::isnan(a.omega_span) ? hi - lo : a.omega_span;
    lo = center - 0.5 * span;
    hi = center + 0.5 * span;

    nfx_spectrum* raw = nullptr;
    check(nfx_spectrum_sweep(p, k, theta, gamma, lo, hi, a.n_points, &raw), "spectrum");
    std::unique_ptr<nfx_spectrum, SpectrumDeleter> spec(raw);

    Table t;
    t.columns = {a.relative ? "omega_minus_E_A" : "omega", "R", "T", "A", "omega_rad_s"};
    const size_t n = nfx_spectrum_size(raw);
    t.rows.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        nfx_spectrum_row r;
        check(nfx_spectrum_row_at(raw, i, &r), "spectrum row");
        t.rows.push_back({a.relative ? r.omega - e_a : r.omega, r.R, r.T, r.A, r.omega / kHbarEvSeconds});
    }
    const std::string stem = a.figure ? "spectrum_fig" + std::to_string(a.figure) : "spectrum";
    ojson grid = {{"figure", a.figure}, {"k", k}, {"hbar_gamma_eV", gamma}, {"theta_deg", deg},
                  {"omega_lo", lo}, {"omega_hi", hi}, {"n_points", a.n_points},
                  {"energies_relative_to_E_A", a.relative}};
    ojson meta = manifest(s, "spectrum", grid);
    const auto path = write_table(s, stem, meta, t, t.columns[0], "transmission spectrum");

    nfx_polariton pt;
    check(nfx_spectrum_polariton(raw, &pt), "spectrum polariton");
    ojson side;
    side["data"] = path.filename().string();
    side["omega_plus"] = pt.omega_plus;
    side["omega_minus"] = pt.omega_minus;
    side["gamma_plus"] = pt.gamma_plus;
    side["gamma_minus"] = pt.gamma_minus;
    side["exciton_symmetric"] = pt.exciton_symmetric;
    side["coupling"] = pt.coupling;
    side["bands"] = nfx_spectrum_band_count(raw);
    side["peaks"] = ojson::array();
    for (size_t i = 0; i < nfx_spectrum_peak_count(raw); ++i) {
        nfx_peak pk;
        check(nfx_spectrum_peak_at(raw, i, &pk), "peak");
        side["peaks"].push_back({{"branch", pk.branch == NFX_UPPER ? "upper" : "lower"},
                                 {"omega", pk.omega},
                                 {"T", pk.T},
                                 {"fwhm", std::isnan(pk.fwhm) ? ojson(nullptr) : ojson(pk.fwhm)}});
    }
    side["dips"] = ojson::array();
    for (size_t i = 0; i < nfx_spectrum_dip_count(raw); ++i) {
        nfx_dip d;
        check(nfx_spectrum_dip_at(raw, i, &d), "dip");
        side["dips"].push_back({{"omega", d.omega}, {"T", d.T}});
    }
    side["diagnostics"] = ojson::array();
    for (size_t i = 0; i < nfx_spectrum_diagnostic_count(raw); ++i) {
        const char* msg = nfx_spectrum_diagnostic(raw, i);
        side["diagnostics"].push_back(msg);
        std::cerr << "diagnostic: " << msg << "\n";
    }
    const fs::path side_path = fs::path(s.globals.out_dir) / (stem + "_peaks.json");
    std::ofstream out(side_path);
    if (!out) throw CliError("cannot write '" + side_path.string() + "'");
    out << side.dump(2) << "\n";
    std::cout << path.string() << "\n" << side_path.string() << "\n";
    return 0;
}

// ---- validate -------------------------------------------------------------

struct ValidateArgs {
    std::vector<int> n_sites{32};
    double hbar_c_scale = 0;
};

int run_validate(const Session& s, const ValidateArgs& a) {
    nfx_validation_options opts{a.n_sites.data(), a.n_sites.size(), a.hbar_c_scale};
    nfx_validation* raw = nullptr;
    check(nfx_validate(s.params.get(), &opts, &raw), "validate");
    std::unique_ptr<nfx_validation, ValidationDeleter> v(raw);

    for (size_t i = 0; i < nfx_validation_check_count(raw); ++i) {
        nfx_check c;
        check(nfx_validation_check_at(raw, i, &c), "validation check");
        std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << ": measured " << format_number(c.measured)
                  << ", expected " << format_number(c.expected) << ", tolerance " << format_number(c.tolerance);
        if (c.detail && *c.detail) std::cout << " (" << c.detail << ")";
        std::cout << "\n";
    }
    size_t needed = 0;
    check(nfx_validation_to_json(raw, nullptr, 0, &needed), "validation report");
    std::string body(needed, '\0');
    check(nfx_validation_to_json(raw, body.data(), needed + 1, &needed), "validation report");

    ojson doc;
    doc["manifest"] = manifest(s, "validate", {{"n_sites", a.n_sites}});
    doc["report"] = ojson::parse(body);
    const fs::path path = fs::path(s.globals.out_dir) / "validation.json";
    std::ofstream out(path);
    if (!out) throw CliError("cannot write '" + path.string() + "'");
    out << doc.dump(2) << "\n";
    const bool passed = nfx_validation_passed(raw) != 0;
    std::cout << (passed ? "validation PASSED" : "validation FAILED") << "\n";
    return passed ? 0 : 1;
}

// ---- sweep ----------------------------------------------------------------

struct SweepArgs {
    std::string key;
    double from = 0, to = 0;
    int n_points = 11;
    double k = 1e-6;
};

int run_sweep(const Session& s, const SweepArgs& a) {
    const auto values = linear_grid(a.from, a.to, a.n_points, "sweep");
    Table t;
    t.columns = {a.key, "E_ph", "E_ex_s", "E_ex_a", "E_pol_plus", "E_pol_minus",
                 "X2_plus", "X2_minus", "gamma_ex_s", "delta_sa", "coupling"};
    t.rows = parallel_rows(a.n_points, s.globals.threads, [&](int i) {
        const double v = values[static_cast<size_t>(i)];
        nfx_params* raw = nullptr;
        check(nfx_params_with(s.params.get(), a.key.c_str(), v, &raw), "sweep value " + format_number(v));
        ParamsPtr local(raw);
        const double theta = param(raw, "theta_deg") * kPi / 180.0;
        nfx_polariton pt;
        check(nfx_polariton_point(raw, a.k, theta, NFX_METHOD_BESSEL, &pt), "polariton point");
        nfx_exciton sym, anti;
        check(nfx_exciton_branch(raw, a.k, theta, NFX_SYMMETRIC, NFX_METHOD_BESSEL, &sym), "exciton");
        check(nfx_exciton_branch(raw, a.k, theta, NFX_ANTISYMMETRIC, NFX_METHOD_BESSEL, &anti), "exciton");
        return std::vector<double>{v, pt.photon_energy, pt.exciton_symmetric, pt.exciton_antisymmetric,
                                   pt.omega_plus, pt.omega_minus, pt.X2_plus, pt.X2_minus, pt.gamma_ex_s,
                                   sym.shift - anti.shift, pt.coupling};
    });
    ojson grid = {{"key", a.key}, {"from", a.from}, {"to", a.to}, {"n_points", a.n_points}, {"k", a.k}};
    const auto path = write_table(s, "sweep_" + a.key, manifest(s, "sweep", grid), t, a.key, "sweep of " + a.key);
    std::cout << path.string() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Excitons and polaritons of two atom chains beside a nanofiber"};
    app.set_version_flag("--version", std::string(nfx_version()));
    app.require_subcommand(1);

    Globals g;
    app.add_option("--config", g.config_path, "JSON parameter file (flat object)")->check(CLI::ExistingFile);
    app.add_option("--out", g.out_dir, "output directory")->capture_default_str();
    app.add_option("--threads", g.threads, "worker threads for grid sweeps")->check(CLI::Range(1, 1024));
    app.add_option("--format", g.format, "table format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

    DispersionArgs da;
    auto* disp = app.add_subcommand("dispersion", "photon, exciton and polariton bands versus k");
    disp->add_option("--k-min", da.k_min, "1/Angstrom")->capture_default_str();
    disp->add_option("--k-max", da.k_max, "1/Angstrom (default: twice the critical wave number)");
    disp->add_option("--n-points", da.n_points)->capture_default_str();
    disp->add_option("--theta", da.theta_deg, "dipole angles in degrees, comma separated")->delimiter(',');
    disp->add_option("--method", da.method, "interchain sum: direct|bessel|asymptotic")->capture_default_str();
    disp->add_flag("--relative", da.relative, "report energies minus E_A");

    WeightsArgs wa;
    auto* weights = app.add_subcommand("weights", "Hopfield weights versus k");
    weights->add_option("--k-min", wa.k_min)->capture_default_str();
    weights->add_option("--k-max", wa.k_max)->capture_default_str();
    weights->add_option("--n-points", wa.n_points)->capture_default_str();
    weights->add_option("--theta", wa.theta_deg, "degrees (default: config)");

    SpectrumArgs sa;
    auto* spec = app.add_subcommand("spectrum", "fiber reflection, transmission and absorption");
    auto* fig = spec->add_option("--figure", sa.figure, "preset for figures 4..9")->check(CLI::Range(4, 9));
    spec->add_option("--k", sa.k, "1/Angstrom")->capture_default_str()->excludes(fig);
    spec->add_option("--gamma", sa.gamma, "edge coupling hbar gamma, eV (default: config)")->excludes(fig);
    spec->add_option("--omega-center", sa.omega_center, "eV");
    spec->add_option("--omega-span", sa.omega_span, "eV");
    spec->add_option("--n-points", sa.n_points)->capture_default_str();
    spec->add_option("--theta", sa.theta_deg, "degrees (default: config)");
    spec->add_flag("--relative", sa.relative, "report omega minus E_A");

    ValidateArgs va;
    auto* val = app.add_subcommand("validate", "oracle, method agreement and golden-number checks");
    val->add_option("--n", va.n_sites, "sites per chain, comma separated")->delimiter(',')->capture_default_str();
    val->add_option("--hbar-c-scale", va.hbar_c_scale, "scale the golden-number hbar c (test hook)")
        ->group("");

    SweepArgs wsa;
    auto* sweep = app.add_subcommand("sweep", "vary one config key and tabulate the bands at fixed k");
    sweep->add_option("--key", wsa.key, "config key")->required();
    sweep->add_option("--from", wsa.from)->required();
    sweep->add_option("--to", wsa.to)->required();
    sweep->add_option("--n-points", wsa.n_points)->capture_default_str();
    sweep->add_option("--k", wsa.k, "1/Angstrom")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Session s = open_session(g);
        if (*disp) return run_dispersion(s, da);
        if (*weights) return run_weights(s, wa);
        if (*spec) return run_spectrum(s, sa);
        if (*val) return run_validate(s, va);
        if (*sweep) return run_sweep(s, wsa);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
