#include "fiber_polaritons.hpp"

#include <cmath>

#include "error.hpp"

namespace nfx {

double photon_energy(double k, const FiberParams& fiber) {
    return kUnits.hbar_c / std::sqrt(fiber.epsilon) * std::hypot(fiber.k0, k);
}

double photon_shift(double k, const FiberParams& fiber, double atom_energy) {
    const double scale = kUnits.hbar_c / std::sqrt(fiber.epsilon);
    const double rise = k * k / (std::hypot(fiber.k0, k) + fiber.k0);
    return scale * rise + (scale * fiber.k0 - atom_energy);
}

double coupling_strength(double k, const ModelParams& params) {
    const double mu = params.dipole.mu;
    const double energy = photon_energy(k, params.fiber);
    return params.fiber.u_b
           * std::sqrt(4.0 * kPi * kUnits.coulomb_factor * mu * mu * energy
                       / (params.fiber.mode_area_S * params.geometry.a));
}

namespace {

struct Mixing {
    double delta, half_split;
    double upper_photon;  // Y2_plus = X2_minus
    double upper_exciton; // X2_plus = Y2_minus
};

Mixing mix(double detuning2, double f) {
    const double delta = 0.5 * detuning2;
    const double half = std::hypot(delta, f);
    if (half == 0) return {delta, half, 0.5, 0.5};
    // Delta + delta and Delta - delta, the smaller one through f^2 / larger.
    double plus, minus;
    if (delta >= 0) {
        plus = half + delta;
        minus = f * f / plus;
    } else {
        minus = half - delta;
        plus = f * f / minus;
    }
    return {delta, half, plus / (2.0 * half), minus / (2.0 * half)};
}

}  // namespace

PolaritonPoint polariton_branches(double k, double theta, const ModelParams& params, SumMethod method) {
    if (!(k >= 0) || !std::isfinite(k)) throw Error(ErrorCode::Domain, "polariton_branches: requires finite k >= 0");
    const ExcitonBranch sym = exciton_energy(k, theta, ExcitonLabel::Symmetric, params, method);
    const ExcitonBranch anti = exciton_energy(k, theta, ExcitonLabel::Antisymmetric, params, method);
    const double ph_shift = photon_shift(k, params.fiber, params.atom_energy);

    PolaritonPoint p;
    p.k = k;
    p.theta = theta;
    p.reference = params.atom_energy;
    p.coupling = coupling_strength(k, params);
    p.photon_energy = photon_energy(k, params.fiber);
    p.exciton_symmetric = sym.energy;
    p.exciton_antisymmetric = anti.energy;
    p.gamma_ex_s = sym.damping;

    const Mixing m = mix(ph_shift - sym.shift, p.coupling);
    p.delta = m.delta;
    const double mean_shift = 0.5 * (ph_shift + sym.shift);
    p.shift_plus = mean_shift + m.half_split;
    p.shift_minus = mean_shift - m.half_split;
    p.omega_plus = p.reference + p.shift_plus;
    p.omega_minus = p.reference + p.shift_minus;
    p.Y2_plus = m.upper_photon;
    p.X2_plus = m.upper_exciton;
    p.X2_minus = m.upper_photon;
    p.Y2_minus = m.upper_exciton;

    const auto [gp, gm] = polariton_damping(p, p.gamma_ex_s, params.fiber.gamma_ph);
    p.gamma_plus = gp;
    p.gamma_minus = gm;
    return p;
}

std::pair<double, double> polariton_damping(const PolaritonPoint& point, double gamma_ex_s, double gamma_ph) {
    return {gamma_ex_s * point.X2_plus + gamma_ph * point.Y2_plus,
            gamma_ex_s * point.X2_minus + gamma_ph * point.Y2_minus};
}

std::optional<double> resonance_crossing(double theta, const ModelParams& params, double k_max, SumMethod method) {
    if (!(k_max > 0)) throw Error(ErrorCode::InvalidArgument, "resonance_crossing: k_max must be positive");
    auto detuning = [&](double k) {
        const ExcitonBranch sym = exciton_energy(k, theta, ExcitonLabel::Symmetric, params, method);
        return photon_shift(k, params.fiber, params.atom_energy) - sym.shift;
    };
    double lo = 0.0, hi = k_max;
    const double f_lo = detuning(lo);
    const double f_hi = detuning(hi);
    if (f_lo == 0) return 0.0;
    if ((f_lo > 0) == (f_hi > 0)) return std::nullopt;
    for (int iter = 0; iter < 200 && (hi - lo) > params.numerics.root_tol * hi; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if ((detuning(mid) > 0) == (f_lo > 0)) lo = mid;
        else hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace nfx
