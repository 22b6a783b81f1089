#include "nfx/nfx.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <vector>

#include "error.hpp"
#include "excitons.hpp"
#include "fiber_polaritons.hpp"
#include "lattice_sums.hpp"
#include "params.hpp"
#include "spectra.hpp"
#include "validation.hpp"

struct nfx_params {
    nfx::ModelParams model;
    std::vector<std::string> defaulted;
};

struct nfx_spectrum {
    nfx::SpectrumTable table;
};

struct nfx_validation {
    nfx::ValidationReport report;
};

namespace {

thread_local std::string g_last_error;

nfx_status fail(nfx_status status, const std::string& message) {
    g_last_error = message;
    return status;
}

template <class F>
nfx_status guarded(F&& body) {
    try {
        body();
        return NFX_OK;
    } catch (const nfx::Error& e) {
        return fail(static_cast<nfx_status>(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(NFX_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(NFX_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(NFX_ERR_INTERNAL, "unknown exception");
    }
}

void require(bool ok, const char* what) {
    if (!ok) throw nfx::Error(nfx::ErrorCode::InvalidArgument, what);
}

nfx::SumMethod to_method(nfx_method m) {
    switch (m) {
    case NFX_METHOD_DIRECT: return nfx::SumMethod::Direct;
    case NFX_METHOD_BESSEL: return nfx::SumMethod::BesselSeries;
    case NFX_METHOD_ASYMPTOTIC: return nfx::SumMethod::Asymptotic;
    case NFX_METHOD_LONG_WAVELENGTH: return nfx::SumMethod::LongWavelengthLimit;
    }
    throw nfx::Error(nfx::ErrorCode::InvalidArgument, "unknown summation method");
}

nfx::ExcitonLabel to_label(nfx_label l) {
    if (l == NFX_SYMMETRIC) return nfx::ExcitonLabel::Symmetric;
    if (l == NFX_ANTISYMMETRIC) return nfx::ExcitonLabel::Antisymmetric;
    throw nfx::Error(nfx::ErrorCode::InvalidArgument, "unknown exciton label");
}

void copy_string(const std::string& s, char* buf, size_t cap, size_t* needed) {
    require(needed != nullptr, "needed must not be null");
    *needed = s.size();
    if (buf && cap > s.size()) std::memcpy(buf, s.c_str(), s.size() + 1);
}

nfx_coupling to_c(const nfx::CouplingValue& v) {
    return {v.value, v.imag, v.est_error, v.regime_ok ? 1 : 0};
}

nfx_polariton to_c(const nfx::PolaritonPoint& p) {
    nfx_polariton o;
    o.k = p.k;
    o.theta = p.theta;
    o.omega_plus = p.omega_plus;
    o.omega_minus = p.omega_minus;
    o.X2_plus = p.X2_plus;
    o.Y2_plus = p.Y2_plus;
    o.X2_minus = p.X2_minus;
    o.Y2_minus = p.Y2_minus;
    o.gamma_plus = p.gamma_plus;
    o.gamma_minus = p.gamma_minus;
    o.delta = p.delta;
    o.coupling = p.coupling;
    o.photon_energy = p.photon_energy;
    o.exciton_symmetric = p.exciton_symmetric;
    o.exciton_antisymmetric = p.exciton_antisymmetric;
    o.gamma_ex_s = p.gamma_ex_s;
    o.shift_plus = p.shift_plus;
    o.shift_minus = p.shift_minus;
    return o;
}

}  // namespace

extern "C" {

const char* nfx_version(void) { return NFX_VERSION; }

const char* nfx_last_error(void) { return g_last_error.c_str(); }

const char* nfx_status_string(nfx_status status) {
    switch (status) {
    case NFX_OK: return "ok";
    case NFX_ERR_INVALID_ARGUMENT: return "invalid argument";
    case NFX_ERR_PARSE: return "parse error";
    case NFX_ERR_CONSTRAINT: return "constraint violated";
    case NFX_ERR_DOMAIN: return "domain error";
    case NFX_ERR_NONCONVERGENCE: return "no convergence";
    case NFX_ERR_ROOT_NOT_FOUND: return "root not found";
    case NFX_ERR_POLE: return "pole evaluation";
    case NFX_ERR_IO: return "i/o error";
    case NFX_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

nfx_status nfx_params_default(nfx_params** out) {
    return guarded([&] {
        require(out, "out must not be null");
        *out = new nfx_params{nfx::ModelParams{}, nfx::config_keys()};
    });
}

nfx_status nfx_params_from_json(const char* text, nfx_params** out) {
    return guarded([&] {
        require(text && out, "text and out must not be null");
        nfx::LoadedConfig loaded = nfx::load_config(text);
        *out = new nfx_params{std::move(loaded.params), std::move(loaded.defaulted_keys)};
    });
}

nfx_status nfx_params_with(const nfx_params* params, const char* key, double value, nfx_params** out) {
    return guarded([&] {
        require(params && key && out, "arguments must not be null");
        nfx::ModelParams changed(nfx::with_config_value(params->model.config(), key, value));
        std::vector<std::string> defaulted;
        for (const auto& k : params->defaulted)
            if (k != key) defaulted.push_back(k);
        *out = new nfx_params{std::move(changed), std::move(defaulted)};
    });
}

void nfx_params_free(nfx_params* params) { delete params; }

nfx_status nfx_params_get(const nfx_params* params, const char* key, double* out) {
    return guarded([&] {
        require(params && key && out, "arguments must not be null");
        *out = nfx::config_value(params->model.config(), key);
    });
}

nfx_status nfx_params_to_json(const nfx_params* params, char* buf, size_t cap, size_t* needed) {
    return guarded([&] {
        require(params, "params must not be null");
        copy_string(nfx::serialize_config(params->model), buf, cap, needed);
    });
}

nfx_status nfx_params_defaulted_keys(const nfx_params* params, char* buf, size_t cap, size_t* needed) {
    return guarded([&] {
        require(params, "params must not be null");
        std::string joined;
        for (const auto& k : params->defaulted) {
            if (!joined.empty()) joined += ',';
            joined += k;
        }
        copy_string(joined, buf, cap, needed);
    });
}

size_t nfx_config_key_count(void) { return nfx::config_keys().size(); }

const char* nfx_config_key(size_t index) {
    const auto& keys = nfx::config_keys();
    return index < keys.size() ? keys[index].c_str() : nullptr;
}

nfx_status nfx_intra_coupling(const nfx_params* params, double k, nfx_method method, nfx_coupling* out) {
    return guarded([&] {
        require(params && out, "arguments must not be null");
        *out = to_c(nfx::intra_dynamical_matrix(k, params->model, to_method(method)));
    });
}

nfx_status nfx_inter_coupling(const nfx_params* params, double k, nfx_method method, nfx_coupling* out) {
    return guarded([&] {
        require(params && out, "arguments must not be null");
        *out = to_c(nfx::inter_dynamical_matrix(k, params->model, to_method(method)));
    });
}

nfx_status nfx_s_function(const nfx_params* params, double k, nfx_method method, nfx_coupling* out) {
    return guarded([&] {
        require(params && out, "arguments must not be null");
        *out = to_c(nfx::s_function(k, params->model.geometry, to_method(method), params->model.numerics));
    });
}

nfx_status nfx_exciton_branch(const nfx_params* params, double k, double theta, nfx_label label, nfx_method method,
                              nfx_exciton* out) {
    return guarded([&] {
        require(params && out, "arguments must not be null");
        const auto b = nfx::exciton_energy(k, theta, to_label(label), params->model, to_method(method));
        *out = {b.k, b.theta, b.energy, b.shift, b.damping};
    });
}

nfx_status nfx_exciton_damping(const nfx_params* params, double k, double theta, nfx_label label, double* out) {
    return guarded([&] {
        require(params && out, "arguments must not be null");
        *out = nfx::exciton_damping(k, theta, to_label(label), params->model);
    });
}

nfx_status nfx_single_atom_damping(const nfx_params* params, double* out) {
    return guarded([&] {
        require(params && out, "arguments must not be null");
        *out = nfx::single_atom_damping(params->model);
    });
}

nfx_status nfx_critical_wavenumber(const nfx_params* params, double theta, nfx_method method, double* out) {
    return guarded([&] {
        require(params && out, "arguments must not be null");
        *out = nfx::critical_wavenumber(theta, params->model, to_method(method));
    });
}

nfx_status nfx_photon_energy(const nfx_params* params, double k, double* out) {
    return guarded([&] {
        require(params && out, "arguments must not be null");
        *out = nfx::photon_energy(k, params->model.fiber);
    });
}

nfx_status nfx_coupling_strength(const nfx_params* params, double k, double* out) {
    return guarded([&] {
        require(params && out, "arguments must not be null");
        *out = nfx::coupling_strength(k, params->model);
    });
}

nfx_status nfx_polariton_point(const nfx_params* params, double k, double theta, nfx_method method,
                               nfx_polariton* out) {
    return guarded([&] {
        require(params && out, "arguments must not be null");
        *out = to_c(nfx::polariton_branches(k, theta, params->model, to_method(method)));
    });
}

nfx_status nfx_spectrum_sweep(const nfx_params* params, double k, double theta, double gamma, double omega_lo,
                              double omega_hi, int n_points, nfx_spectrum** out) {
    return guarded([&] {
        require(params && out, "arguments must not be null");
        require(gamma > 0, "gamma must be positive");
        const auto point = nfx::polariton_branches(k, theta, params->model);
        *out = new nfx_spectrum{nfx::spectrum_sweep(point, gamma, omega_lo, omega_hi, n_points)};
    });
}

nfx_status nfx_default_window(const nfx_params* params, double k, double theta, double gamma, double* omega_lo,
                              double* omega_hi) {
    return guarded([&] {
        require(params && omega_lo && omega_hi, "arguments must not be null");
        const auto w = nfx::default_window(nfx::polariton_branches(k, theta, params->model), gamma);
        *omega_lo = w.lo;
        *omega_hi = w.hi;
    });
}

nfx_status nfx_figure_preset(const nfx_params* params, int figure, double theta, double* k, double* gamma,
                             double* omega_lo, double* omega_hi) {
    return guarded([&] {
        require(params && k && gamma && omega_lo && omega_hi, "arguments must not be null");
        const auto preset = nfx::figure_preset(figure, params->model.edge_coupling);
        const auto point = nfx::polariton_branches(preset.k, theta, params->model);
        nfx::OmegaWindow w;
        switch (preset.window) {
        case nfx::WindowKind::Both: w = nfx::default_window(point, preset.gamma); break;
        case nfx::WindowKind::Upper: w = nfx::branch_window(point, preset.gamma, nfx::Branch::Upper); break;
        case nfx::WindowKind::Lower: w = nfx::branch_window(point, preset.gamma, nfx::Branch::Lower); break;
        case nfx::WindowKind::Dip: w = nfx::dip_window(point); break;
        }
        *k = preset.k;
        *gamma = preset.gamma;
        *omega_lo = w.lo;
        *omega_hi = w.hi;
    });
}

void nfx_spectrum_free(nfx_spectrum* spectrum) { delete spectrum; }

size_t nfx_spectrum_size(const nfx_spectrum* spectrum) { return spectrum ? spectrum->table.rows.size() : 0; }

nfx_status nfx_spectrum_row_at(const nfx_spectrum* spectrum, size_t index, nfx_spectrum_row* out) {
    return guarded([&] {
        require(spectrum && out, "arguments must not be null");
        require(index < spectrum->table.rows.size(), "row index out of range");
        const auto& r = spectrum->table.rows[index];
        *out = {r.omega, r.R, r.T, r.A};
    });
}

size_t nfx_spectrum_peak_count(const nfx_spectrum* spectrum) { return spectrum ? spectrum->table.peaks.size() : 0; }

nfx_status nfx_spectrum_peak_at(const nfx_spectrum* spectrum, size_t index, nfx_peak* out) {
    return guarded([&] {
        require(spectrum && out, "arguments must not be null");
        require(index < spectrum->table.peaks.size(), "peak index out of range");
        const auto& p = spectrum->table.peaks[index];
        *out = {p.branch == nfx::Branch::Upper ? NFX_UPPER : NFX_LOWER, p.omega, p.T, p.fwhm};
    });
}

size_t nfx_spectrum_dip_count(const nfx_spectrum* spectrum) { return spectrum ? spectrum->table.dips.size() : 0; }

nfx_status nfx_spectrum_dip_at(const nfx_spectrum* spectrum, size_t index, nfx_dip* out) {
    return guarded([&] {
        require(spectrum && out, "arguments must not be null");
        require(index < spectrum->table.dips.size(), "dip index out of range");
        *out = {spectrum->table.dips[index].omega, spectrum->table.dips[index].T};
    });
}

int nfx_spectrum_band_count(const nfx_spectrum* spectrum) { return spectrum ? spectrum->table.bands : 0; }

nfx_status nfx_spectrum_polariton(const nfx_spectrum* spectrum, nfx_polariton* out) {
    return guarded([&] {
        require(spectrum && out, "arguments must not be null");
        *out = to_c(spectrum->table.point);
    });
}

size_t nfx_spectrum_diagnostic_count(const nfx_spectrum* spectrum) {
    return spectrum ? spectrum->table.diagnostics.size() : 0;
}

const char* nfx_spectrum_diagnostic(const nfx_spectrum* spectrum, size_t index) {
    if (!spectrum || index >= spectrum->table.diagnostics.size()) return nullptr;
    return spectrum->table.diagnostics[index].c_str();
}

nfx_status nfx_validate(const nfx_params* params, const nfx_validation_options* options, nfx_validation** out) {
    return guarded([&] {
        require(params && out, "arguments must not be null");
        nfx::ValidationOptions opts;
        if (options) {
            if (options->n_sites) opts.n_sites.assign(options->n_sites, options->n_sites + options->n_count);
            if (options->hbar_c_scale != 0) {
                require(options->hbar_c_scale > 0, "hbar_c_scale must be positive");
                opts.units.hbar_c *= options->hbar_c_scale;
            }
        }
        *out = new nfx_validation{nfx::run_validation(params->model, opts)};
    });
}

void nfx_validation_free(nfx_validation* validation) { delete validation; }

int nfx_validation_passed(const nfx_validation* validation) {
    return validation && validation->report.passed() ? 1 : 0;
}

size_t nfx_validation_check_count(const nfx_validation* validation) {
    return validation ? validation->report.checks.size() : 0;
}

nfx_status nfx_validation_check_at(const nfx_validation* validation, size_t index, nfx_check* out) {
    return guarded([&] {
        require(validation && out, "arguments must not be null");
        require(index < validation->report.checks.size(), "check index out of range");
        const auto& c = validation->report.checks[index];
        *out = {c.name.c_str(), c.measured, c.expected, c.tolerance, c.passed ? 1 : 0, c.detail.c_str()};
    });
}

nfx_status nfx_validation_to_json(const nfx_validation* validation, char* buf, size_t cap, size_t* needed) {
    return guarded([&] {
        require(validation, "validation must not be null");
        copy_string(nfx::report_to_json(validation->report), buf, cap, needed);
    });
}

}  // extern "C"
