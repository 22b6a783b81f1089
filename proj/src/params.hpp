#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "units.hpp"

namespace nfx {

struct LatticeGeometry {
    double a = 0;       // lattice constant
    double d = 0;       // separation between the two chains
    double b = 0;       // chain to fiber surface, informational only
    int n_sites = 0;    // finite size used by the brute-force oracle

    bool operator==(const LatticeGeometry&) const = default;
};

// mu_y is carried separately; the remaining in-plane magnitude is split
// between the lattice axis (x) and the interchain axis (z) by theta.
struct DipoleOrientation {
    double mu = 0;
    double theta = 0;   // radians, measured from the lattice axis
    double mu_y = 0;

    static DipoleOrientation in_plane(double mu, double theta) { return {mu, theta, 0.0}; }

    double in_plane_magnitude() const;
    double mu_x() const;
    double mu_z() const;

    bool operator==(const DipoleOrientation&) const = default;
};

struct FiberParams {
    double epsilon = 0;
    double k0 = 0;          // transverse-confinement wave number, 1/Angstrom
    double mode_area_S = 0; // Angstrom^2
    double u_b = 0;
    double gamma_ph = 0;    // hbar Gamma_ph, eV

    bool operator==(const FiberParams&) const = default;
};

struct Numerics {
    double sum_tol = 1e-10;
    long max_terms = 1'000'000;
    int bessel_n_max = 64;
    double root_tol = 1e-12;
    // The exponential interlattice form is flagged outside kd >= regime_kd, ka <= regime_ka.
    double regime_kd = 5.0;
    double regime_ka = 0.1;

    bool operator==(const Numerics&) const = default;
};

// Flat record mirroring the configuration document one-to-one.
struct ConfigValues {
    double a_angstrom = 1000.0;
    double d_over_a = 10.0;
    double b_angstrom = 0.0;
    int n_sites = 32;
    double mu_eA = 1.0;
    double theta_deg = 90.0;
    double mu_y_eA = 0.0;
    double E_A_eV = 1.0;
    double epsilon = 3.0;
    double S_over_4pi_a2 = 1.0;
    double u_b = 0.1;
    double hbar_gamma_ph_eV = 1e-10;
    double hbar_gamma_eV = 1e-6;
    double sum_tol = 1e-10;
    long max_terms = 1'000'000;
    int bessel_n_max = 64;
    double root_tol = 1e-12;

    bool operator==(const ConfigValues&) const = default;
};

class ModelParams {
public:
    // Defaults are the reference system: a = 1000 A, d = 10 a, E_A = 1 eV,
    // mu = 1 eA at 90 deg, eps = 3, S = 4 pi a^2, u(b) = 0.1, hbar Gamma_ph = 1e-10 eV.
    ModelParams() : ModelParams(ConfigValues{}) {}
    explicit ModelParams(const ConfigValues& values);

    LatticeGeometry geometry;
    DipoleOrientation dipole;
    FiberParams fiber;
    double atom_energy = 0;    // E_A, eV
    double edge_coupling = 0;  // hbar gamma, eV
    Numerics numerics;

    const ConfigValues& config() const { return config_; }

    // Copy with the dipole replaced by an in-plane dipole at angle theta.
    ModelParams with_theta(double theta) const;

    bool operator==(const ModelParams&) const = default;

private:
    ConfigValues config_;
};

double resonance_k0(double atom_energy, double epsilon);

struct LoadedConfig {
    ModelParams params;
    std::vector<std::string> defaulted_keys;
};

// Parses a flat JSON object. Absent keys keep their defaults and are listed in
// defaulted_keys; unknown keys and violated invariants throw nfx::Error.
LoadedConfig load_config(std::string_view text);

std::string serialize_config(const ModelParams& params);

const std::vector<std::string>& config_keys();

// Returns a copy of the config with one key overwritten; used by parameter sweeps.
ConfigValues with_config_value(ConfigValues values, std::string_view key, double value);
double config_value(const ConfigValues& values, std::string_view key);

}  // namespace nfx
