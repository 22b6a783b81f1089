#pragma once

#include "lattice_sums.hpp"
#include "params.hpp"

namespace nfx {

enum class ExcitonLabel { Symmetric, Antisymmetric };

struct ExcitonBranch {
    double k = 0;
    double theta = 0;
    ExcitonLabel label = ExcitonLabel::Symmetric;
    double energy = 0;   // eV
    double shift = 0;    // energy - E_A, kept separately to avoid cancellation
    double damping = 0;  // hbar Gamma, eV
};

struct SplittingReport {
    double delta_sa = 0;            // E_s - E_a = 2 J'(k)
    double symmetric_damping = 0;
    bool oscillation_possible = false;
};

// Dispersion uses an in-plane dipole at angle theta (mu_y = 0). method selects
// how J'(k) is evaluated; Asymptotic also switches J(k) to its long-wavelength
// limit so the result matches the closed-form dispersion.
ExcitonBranch exciton_energy(double k, double theta, ExcitonLabel label, const ModelParams& params,
                             SumMethod method = SumMethod::BesselSeries);

SplittingReport sa_splitting(double k, double theta, const ModelParams& params,
                             SumMethod method = SumMethod::BesselSeries);

// Single-chain radiative rate before clamping; negative values are possible.
double exciton_damping_formula(double k, double theta, const ModelParams& params,
                               const UnitSystem& units = kUnits);

// Single-chain rate with the metastability clamp: zero once hbar c k > E_ex
// or when the bracket goes negative.
double single_chain_damping(double k, double theta, const ModelParams& params,
                            const UnitSystem& units = kUnits);

// Symmetric excitons radiate at twice the single-chain rate; antisymmetric ones are dark.
double exciton_damping(double k, double theta, ExcitonLabel label, const ModelParams& params,
                       const UnitSystem& units = kUnits);

double single_atom_damping(const ModelParams& params, const UnitSystem& units = kUnits);

// k_c with E_ex^s(k_c) = hbar c k_c, by bisection to root_tol (relative).
double critical_wavenumber(double theta, const ModelParams& params,
                           SumMethod method = SumMethod::BesselSeries);

}  // namespace nfx
