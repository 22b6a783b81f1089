#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "fiber_polaritons.hpp"
#include "params.hpp"

namespace nfx {

struct SpectrumPoint {
    double omega = 0;  // probe energy, eV
    double R = 0, T = 0, A = 0;
};

enum class Branch { Upper, Lower };

const char* to_string(Branch branch);

struct Peak {
    Branch branch = Branch::Upper;  // nearest polariton energy
    double omega = 0;
    double T = 0;
    double fwhm = 0;  // NaN when a half-maximum crossing lies outside the grid
};

struct Dip {
    double omega = 0;
    double T = 0;
};

struct SpectrumTable {
    double k = 0;
    double theta = 0;
    double gamma = 0;  // hbar gamma, eV
    PolaritonPoint point;
    std::vector<SpectrumPoint> rows;
    std::vector<Peak> peaks;
    std::vector<Dip> dips;
    int bands = 0;  // peaks closer than a linewidth count as one band
    std::vector<std::string> diagnostics;  // physicality violations, if any
};

// Lambda = sum over branches of Y2 / (omega - omega_bar), omega_bar = omega_pol - i Gamma.
std::complex<double> response_lambda(double omega, const PolaritonPoint& point,
                                     std::pair<double, double> dampings);

SpectrumPoint spectrum_point(double omega, const PolaritonPoint& point, double gamma);
SpectrumPoint spectrum_point(double omega, double k, double theta, const ModelParams& params);

// Uniform grid over [omega_lo, omega_hi]; gamma is the edge-coupling bandwidth.
SpectrumTable spectrum_sweep(const PolaritonPoint& point, double gamma, double omega_lo, double omega_hi,
                             int n_points);
SpectrumTable spectrum_sweep(double k, double theta, const ModelParams& params, double omega_lo,
                             double omega_hi, int n_points);

struct OmegaWindow {
    double lo = 0, hi = 0;
};

// Both polariton energies with 10 dressed half-widths of margin on either side.
OmegaWindow default_window(const PolaritonPoint& point, double gamma);
OmegaWindow branch_window(const PolaritonPoint& point, double gamma, Branch branch);
// Narrow window on the symmetric exciton energy, spanning 20 exciton linewidths.
OmegaWindow dip_window(const PolaritonPoint& point);

enum class WindowKind { Both, Upper, Lower, Dip };

struct FigurePreset {
    int figure = 0;
    double k = 0;
    double gamma = 0;
    WindowKind window = WindowKind::Both;
};

// Figures 4 to 9. Presets without their own bandwidth take default_gamma.
FigurePreset figure_preset(int figure, double default_gamma);

}  // namespace nfx
