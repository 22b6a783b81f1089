#pragma once

#include <optional>
#include <utility>

#include "excitons.hpp"
#include "lattice_sums.hpp"
#include "params.hpp"

namespace nfx {

struct PolaritonPoint {
    double k = 0;
    double theta = 0;
    double omega_plus = 0;
    double omega_minus = 0;
    double X2_plus = 0, Y2_plus = 0;
    double X2_minus = 0, Y2_minus = 0;
    double gamma_plus = 0;
    double gamma_minus = 0;
    double delta = 0;     // (E_ph - E_ex^s) / 2
    double coupling = 0;  // hbar |f_k|

    // Band energies carried for output tables.
    double photon_energy = 0;
    double exciton_symmetric = 0;
    double exciton_antisymmetric = 0;
    double gamma_ex_s = 0;

    // Branch energies relative to E_A, free of cancellation.
    double reference = 0;
    double shift_plus = 0;
    double shift_minus = 0;
};

double photon_energy(double k, const FiberParams& fiber);

// photon_energy(k) - E_A evaluated without subtracting nearly equal numbers.
double photon_shift(double k, const FiberParams& fiber, double atom_energy);

double coupling_strength(double k, const ModelParams& params);

PolaritonPoint polariton_branches(double k, double theta, const ModelParams& params,
                                  SumMethod method = SumMethod::BesselSeries);

std::pair<double, double> polariton_damping(const PolaritonPoint& point, double gamma_ex_s, double gamma_ph);

// Wave number where the detuning changes sign, if it does on (0, k_max].
std::optional<double> resonance_crossing(double theta, const ModelParams& params, double k_max,
                                         SumMethod method = SumMethod::BesselSeries);

}  // namespace nfx
