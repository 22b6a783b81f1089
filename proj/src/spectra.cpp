#include "spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "error.hpp"

namespace nfx {

const char* to_string(Branch branch) { return branch == Branch::Upper ? "upper" : "lower"; }

namespace {

// Offsets from the reference energy keep omega - omega_pol exact near resonance.
std::complex<double> lambda_relative(double rel, const PolaritonPoint& p, double g_plus, double g_minus) {
    const double dp = rel - p.shift_plus;
    const double dm = rel - p.shift_minus;
    if ((g_plus == 0 && dp == 0 && p.Y2_plus != 0) || (g_minus == 0 && dm == 0 && p.Y2_minus != 0))
        throw Error(ErrorCode::Pole, "response_lambda: probe energy sits on an undamped pole");
    using C = std::complex<double>;
    C out{0.0, 0.0};
    if (p.Y2_plus != 0) out += p.Y2_plus / C(dp, g_plus);
    if (p.Y2_minus != 0) out += p.Y2_minus / C(dm, g_minus);
    return out;
}

SpectrumPoint point_from_lambda(double omega, std::complex<double> lambda, double gamma) {
    const std::complex<double> denom = 1.0 + std::complex<double>(0.0, gamma) * lambda;
    const double norm = std::norm(denom);
    SpectrumPoint s;
    s.omega = omega;
    s.R = 1.0 / norm;
    s.T = gamma * gamma * std::norm(lambda) / norm;
    s.A = 1.0 - s.R - s.T;
    return s;
}

void check_dampings(double g_plus, double g_minus) {
    if (!(g_plus >= 0) || !(g_minus >= 0))
        throw Error(ErrorCode::InvalidArgument, "response_lambda: dampings must be non-negative");
}

double half_max_crossing(const std::vector<SpectrumPoint>& rows, std::size_t peak, int step) {
    const double half = 0.5 * rows[peak].T;
    std::size_t i = peak;
    while (true) {
        if ((step < 0 && i == 0) || (step > 0 && i + 1 == rows.size()))
            return std::numeric_limits<double>::quiet_NaN();
        const std::size_t j = step < 0 ? i - 1 : i + 1;
        if (rows[j].T < half) {
            const double t = (rows[i].T - half) / (rows[i].T - rows[j].T);
            return rows[i].omega + t * (rows[j].omega - rows[i].omega);
        }
        i = j;
    }
}

int count_bands(const std::vector<Peak>& peaks) {
    int bands = peaks.empty() ? 0 : 1;
    for (std::size_t i = 1; i < peaks.size(); ++i) {
        const double separation = peaks[i].omega - peaks[i - 1].omega;
        const double width = std::max(peaks[i].fwhm, peaks[i - 1].fwhm);
        // An unknown width (NaN) compares false and keeps the peaks apart.
        if (!(separation < width)) ++bands;
    }
    return bands;
}

}  // namespace

std::complex<double> response_lambda(double omega, const PolaritonPoint& point, std::pair<double, double> dampings) {
    check_dampings(dampings.first, dampings.second);
    // The relative offset can round away from zero exactly at the absolute pole.
    if ((dampings.first == 0 && omega == point.omega_plus && point.Y2_plus != 0)
        || (dampings.second == 0 && omega == point.omega_minus && point.Y2_minus != 0))
        throw Error(ErrorCode::Pole, "response_lambda: probe energy sits on an undamped pole");
    return lambda_relative(omega - point.reference, point, dampings.first, dampings.second);
}

SpectrumPoint spectrum_point(double omega, const PolaritonPoint& point, double gamma) {
    if (!(gamma > 0)) throw Error(ErrorCode::InvalidArgument, "spectrum_point: requires hbar gamma > 0");
    check_dampings(point.gamma_plus, point.gamma_minus);
    const auto lambda = lambda_relative(omega - point.reference, point, point.gamma_plus, point.gamma_minus);
    return point_from_lambda(omega, lambda, gamma);
}

SpectrumPoint spectrum_point(double omega, double k, double theta, const ModelParams& params) {
    return spectrum_point(omega, polariton_branches(k, theta, params), params.edge_coupling);
}

SpectrumTable spectrum_sweep(const PolaritonPoint& point, double gamma, double omega_lo, double omega_hi,
                             int n_points) {
    if (n_points < 2) throw Error(ErrorCode::InvalidArgument, "spectrum_sweep: requires n_points >= 2");
    if (!std::isfinite(omega_lo) || !std::isfinite(omega_hi))
        throw Error(ErrorCode::InvalidArgument, "spectrum_sweep: omega range must be finite");
    if (!(omega_lo < omega_hi))
        throw Error(ErrorCode::InvalidArgument, "spectrum_sweep: omega range must be increasing (omega_lo < omega_hi)");

    SpectrumTable table;
    table.k = point.k;
    table.theta = point.theta;
    table.gamma = gamma;
    table.point = point;
    table.rows.resize(static_cast<std::size_t>(n_points));
    const double step = (omega_hi - omega_lo) / (n_points - 1);
    for (int i = 0; i < n_points; ++i) {
        const double omega = i + 1 == n_points ? omega_hi : omega_lo + i * step;
        table.rows[static_cast<std::size_t>(i)] = spectrum_point(omega, point, gamma);
    }
    for (std::size_t i = 1; i < table.rows.size(); ++i) {
        if (!(table.rows[i].omega > table.rows[i - 1].omega))
            throw Error(ErrorCode::InvalidArgument,
                        "spectrum_sweep: grid spacing is below floating-point resolution");
    }

    for (const auto& row : table.rows) {
        if (row.A < -1e-12 || row.T > 1.0 + 1e-12 || row.R > 1.0 + 1e-12) {
            std::ostringstream os;
            os.precision(17);
            os << "unphysical point omega=" << row.omega << " R=" << row.R << " T=" << row.T << " A=" << row.A;
            table.diagnostics.push_back(os.str());
        }
    }

    const auto& rows = table.rows;
    for (std::size_t i = 1; i + 1 < rows.size(); ++i) {
        if (rows[i].T > rows[i - 1].T && rows[i].T >= rows[i + 1].T) {
            Peak peak;
            peak.omega = rows[i].omega;
            peak.T = rows[i].T;
            peak.branch = std::abs(peak.omega - point.omega_plus) <= std::abs(peak.omega - point.omega_minus)
                              ? Branch::Upper
                              : Branch::Lower;
            peak.fwhm = half_max_crossing(rows, i, +1) - half_max_crossing(rows, i, -1);
            table.peaks.push_back(peak);
        }
        if (rows[i].T < rows[i - 1].T && rows[i].T <= rows[i + 1].T) table.dips.push_back({rows[i].omega, rows[i].T});
    }
    table.bands = count_bands(table.peaks);
    return table;
}

SpectrumTable spectrum_sweep(double k, double theta, const ModelParams& params, double omega_lo, double omega_hi,
                             int n_points) {
    return spectrum_sweep(polariton_branches(k, theta, params), params.edge_coupling, omega_lo, omega_hi, n_points);
}

OmegaWindow default_window(const PolaritonPoint& point, double gamma) {
    const double w_plus = point.gamma_plus + gamma * point.Y2_plus;
    const double w_minus = point.gamma_minus + gamma * point.Y2_minus;
    return {point.omega_minus - 10.0 * w_minus, point.omega_plus + 10.0 * w_plus};
}

OmegaWindow branch_window(const PolaritonPoint& point, double gamma, Branch branch) {
    const bool upper = branch == Branch::Upper;
    const double center = upper ? point.omega_plus : point.omega_minus;
    const double width = upper ? point.gamma_plus + gamma * point.Y2_plus : point.gamma_minus + gamma * point.Y2_minus;
    return {center - 10.0 * width, center + 10.0 * width};
}

OmegaWindow dip_window(const PolaritonPoint& point) {
    const double half_span = 10.0 * point.gamma_ex_s;
    return {point.exciton_symmetric - half_span, point.exciton_symmetric + half_span};
}

FigurePreset figure_preset(int figure, double default_gamma) {
    switch (figure) {
    case 4: return {4, 1e-6, 1e-6, WindowKind::Both};
    case 5: return {5, 1e-6, 1e-4, WindowKind::Both};
    case 6: return {6, 1e-6, 1e-4, WindowKind::Dip};
    case 7: return {7, 1e-5, default_gamma, WindowKind::Both};
    case 8: return {8, 5e-5, default_gamma, WindowKind::Upper};
    case 9: return {9, 5e-5, default_gamma, WindowKind::Lower};
    default:
        throw Error(ErrorCode::InvalidArgument, "figure preset must be one of 4..9, got " + std::to_string(figure));
    }
}

}  // namespace nfx
