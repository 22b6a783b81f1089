#include "excitons.hpp"

#include <cmath>

#include "error.hpp"

namespace nfx {

namespace {

struct Couplings {
    double intra;
    double inter;
};

Couplings couplings(double k, const ModelParams& params, SumMethod method) {
    const SumMethod intra_method =
        method == SumMethod::Asymptotic ? SumMethod::LongWavelengthLimit : SumMethod::Direct;
    return {intra_dynamical_matrix(k, params, intra_method).value,
            inter_dynamical_matrix(k, params, method).value};
}

double intra_shift(double k, const ModelParams& params) {
    return intra_dynamical_matrix(k, params, SumMethod::Direct).value;
}

}  // namespace

ExcitonBranch exciton_energy(double k, double theta, ExcitonLabel label, const ModelParams& params,
                             SumMethod method) {
    if (!(k >= 0)) throw Error(ErrorCode::Domain, "exciton_energy: requires k >= 0");
    const ModelParams local = params.with_theta(theta);
    const Couplings c = couplings(k, local, method);
    ExcitonBranch out;
    out.k = k;
    out.theta = theta;
    out.label = label;
    out.shift = label == ExcitonLabel::Symmetric ? c.intra + c.inter : c.intra - c.inter;
    out.energy = params.atom_energy + out.shift;
    out.damping = exciton_damping(k, theta, label, params);
    return out;
}

SplittingReport sa_splitting(double k, double theta, const ModelParams& params, SumMethod method) {
    if (!(k >= 0)) throw Error(ErrorCode::Domain, "sa_splitting: requires k >= 0");
    const ModelParams local = params.with_theta(theta);
    SplittingReport out;
    out.delta_sa = 2.0 * inter_dynamical_matrix(k, local, method).value;
    out.symmetric_damping = exciton_damping(k, theta, ExcitonLabel::Symmetric, params);
    out.oscillation_possible = std::abs(out.delta_sa) > out.symmetric_damping;
    return out;
}

double exciton_damping_formula(double k, double theta, const ModelParams& params, const UnitSystem& units) {
    const ModelParams local = params.with_theta(theta);
    // E_ex = E_A + J(k); the interchain part is neglected here.
    const double e_ex = params.atom_energy + intra_shift(std::abs(k), local);
    const double mu = params.dipole.mu;
    const double c2 = std::cos(theta) * std::cos(theta);
    const double s2 = std::sin(theta) * std::sin(theta);
    const double light = units.hbar_c * k / e_ex;
    // mu^2 E^2 / (4 eps0 a (hbar c)^2) with 1/eps0 = 4 pi (e^2/4 pi eps0) in eV*A units.
    const double scale = kPi * units.coulomb_factor * mu * mu * e_ex * e_ex
                         / (params.geometry.a * units.hbar_c * units.hbar_c);
    return scale * (1.0 + c2 - light * light * (2.0 * c2 - s2));
}

double single_chain_damping(double k, double theta, const ModelParams& params, const UnitSystem& units) {
    const ModelParams local = params.with_theta(theta);
    const double e_ex = params.atom_energy + intra_shift(std::abs(k), local);
    if (units.hbar_c * std::abs(k) > e_ex) return 0.0;
    return std::max(0.0, exciton_damping_formula(k, theta, params, units));
}

double exciton_damping(double k, double theta, ExcitonLabel label, const ModelParams& params,
                       const UnitSystem& units) {
    if (label == ExcitonLabel::Antisymmetric) return 0.0;
    return 2.0 * single_chain_damping(k, theta, params, units);
}

double single_atom_damping(const ModelParams& params, const UnitSystem& units) {
    // mu^2 E_A^3 / (3 pi eps0 (hbar c)^3) = (4/3) (e^2/4 pi eps0) mu^2 E_A^3 / (hbar c)^3
    const double mu = params.dipole.mu;
    const double e = params.atom_energy;
    const double hc = units.hbar_c;
    return 4.0 / 3.0 * units.coulomb_factor * mu * mu * e * e * e / (hc * hc * hc);
}

double critical_wavenumber(double theta, const ModelParams& params, SumMethod method) {
    const ModelParams local = params.with_theta(theta);
    auto balance = [&](double k) {
        const Couplings c = couplings(k, local, method);
        return (params.atom_energy + c.intra + c.inter) - kUnits.hbar_c * k;
    };
    double lo = 0.0;
    double hi = 2.0 * params.atom_energy / kUnits.hbar_c;
    double f_lo = balance(lo);
    const double f_hi = balance(hi);
    if (!(f_lo > 0) || !(f_hi < 0))
        throw Error(ErrorCode::RootNotFound, "critical_wavenumber: no sign change of E_ex^s(k) - hbar c k");
    for (int iter = 0; iter < 200 && (hi - lo) > params.numerics.root_tol * hi; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = balance(mid);
        if (f_mid > 0) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace nfx
