#include <doctest.h>

#include <cmath>

#include "error.hpp"
#include "excitons.hpp"

using namespace nfx;

namespace {

// Single-atom rate from SI constants: hbar Gamma = omega^3 mu^2 / (3 pi eps0 c^3) in joules.
double single_atom_si(double energy_ev, double mu_e_angstrom) {
    const double e = 1.602176634e-19, hbar = 1.054571817e-34, c = 299792458.0, eps0 = 8.8541878128e-12;
    const double omega = energy_ev * e / hbar;
    const double mu = mu_e_angstrom * e * 1e-10;
    const double gamma = omega * omega * omega * mu * mu / (3 * kPi * eps0 * hbar * c * c * c);
    return hbar * gamma / e;
}

}  // namespace

TEST_SUITE("excitons") {

TEST_CASE("single-atom line width") {
    const ModelParams p;
    CHECK(single_atom_damping(p) == doctest::Approx(2.5e-9).epsilon(0.01));
    CHECK(single_atom_damping(p) == doctest::Approx(single_atom_si(1.0, 1.0)).epsilon(1e-6));
    const UnitSystem off{kUnits.hbar_c * 1.01, kUnits.coulomb_factor};
    CHECK(single_atom_damping(p, off) == doctest::Approx(single_atom_damping(p) / std::pow(1.01, 3)));
}

TEST_CASE("symmetric excitons radiate at twice the chain rate, antisymmetric ones are dark") {
    const ModelParams p;
    const double gs = exciton_damping(1e-6, kPi / 2, ExcitonLabel::Symmetric, p);
    CHECK(gs == doctest::Approx(2.32e-8).epsilon(0.01));
    CHECK(gs == doctest::Approx(2 * single_chain_damping(1e-6, kPi / 2, p)));
    CHECK(exciton_damping(1e-6, kPi / 2, ExcitonLabel::Antisymmetric, p) == 0.0);
}

TEST_CASE("superradiant enhancement over a free atom") {
    const ModelParams p;
    const double ratio = exciton_damping(1e-9, kPi / 2, ExcitonLabel::Symmetric, p) / (2 * single_atom_damping(p));
    const double expected = 0.75 * kPi * kUnits.hbar_c / (p.geometry.a * p.atom_energy);
    CHECK(ratio == doctest::Approx(expected).epsilon(1e-3));
}

TEST_CASE("damping bracket at both orientation limits") {
    const ModelParams p;
    const double k = 3e-4;
    const double e_ex = p.atom_energy + intra_dynamical_matrix(k, p.with_theta(0), SumMethod::Direct).value;
    const double light = kUnits.hbar_c * k / e_ex;
    const double scale = kPi * kUnits.coulomb_factor * e_ex * e_ex / (p.geometry.a * kUnits.hbar_c * kUnits.hbar_c);
    CHECK(exciton_damping_formula(k, 0.0, p) == doctest::Approx(scale * (2 - 2 * light * light)).epsilon(1e-12));
    const double e90 = p.atom_energy + intra_dynamical_matrix(k, p, SumMethod::Direct).value;
    const double light90 = kUnits.hbar_c * k / e90;
    const double scale90 = kPi * kUnits.coulomb_factor * e90 * e90 / (p.geometry.a * kUnits.hbar_c * kUnits.hbar_c);
    CHECK(exciton_damping_formula(k, kPi / 2, p) == doctest::Approx(scale90 * (1 + light90 * light90)).epsilon(1e-12));
}

TEST_CASE("excitons beyond the light line do not radiate") {
    const ModelParams p;
    for (double deg : {0.0, 45.0, 90.0}) {
        const double theta = deg * kPi / 180;
        const double kc = critical_wavenumber(theta, p);
        CHECK(kc == doctest::Approx(p.atom_energy / kUnits.hbar_c).epsilon(1e-6));
        CHECK(exciton_damping(kc * 1.01, theta, ExcitonLabel::Symmetric, p) == 0.0);
        CHECK(exciton_damping(kc * 0.99, theta, ExcitonLabel::Symmetric, p) > 0.0);
    }
    // At 90 degrees the formula itself stays finite at k_c; only the clamp removes it.
    const double kc = critical_wavenumber(kPi / 2, p);
    CHECK(exciton_damping_formula(kc * 1.01, kPi / 2, p) > 0.0);
}

TEST_CASE("critical wave number root satisfies the crossing condition") {
    const ModelParams p;
    const double kc = critical_wavenumber(kPi / 2, p);
    const ExcitonBranch s = exciton_energy(kc, kPi / 2, ExcitonLabel::Symmetric, p);
    CHECK(std::abs(s.energy - kUnits.hbar_c * kc) < 1e-10);
}

TEST_CASE("symmetric and antisymmetric energies") {
    const ModelParams p;
    for (double deg : {0.0, 30.0, 90.0}) {
        const double theta = deg * kPi / 180;
        for (double k : {1e-6, 2e-4, 8e-4}) {
            const ExcitonBranch s = exciton_energy(k, theta, ExcitonLabel::Symmetric, p);
            const ExcitonBranch a = exciton_energy(k, theta, ExcitonLabel::Antisymmetric, p);
            const ModelParams local = p.with_theta(theta);
            const double jp = inter_dynamical_matrix(k, local, SumMethod::BesselSeries).value;
            const double j = intra_dynamical_matrix(k, local, SumMethod::Direct).value;
            CHECK(std::abs((s.energy - a.energy) - 2 * jp) <= 1e-14 * s.energy);
            CHECK(std::abs((s.shift - a.shift) - 2 * jp) <= 1e-12 * std::abs(j));
            CHECK(0.5 * (s.shift + a.shift) == doctest::Approx(j).epsilon(1e-14));
            CHECK(a.damping == 0.0);
        }
    }
}

TEST_CASE("long-wavelength dispersion at the interlattice magic angle") {
    const ModelParams p;
    const double theta = kPi / 4;
    const ExcitonBranch s = exciton_energy(1e-3, theta, ExcitonLabel::Symmetric, p, SumMethod::Asymptotic);
    const ExcitonBranch a = exciton_energy(1e-3, theta, ExcitonLabel::Antisymmetric, p, SumMethod::Asymptotic);
    CHECK(s.energy == a.energy);
    const double zeta3 = 1.2020569031595942854;
    CHECK(s.shift == doctest::Approx(-zeta3 * kUnits.coulomb_factor / 1e9).epsilon(1e-12));
}

TEST_CASE("splitting report") {
    const ModelParams p;
    const SplittingReport asym = sa_splitting(1e-3, kPi / 2, p, SumMethod::Asymptotic);
    CHECK(asym.delta_sa == doctest::Approx(-1.0364e-12).epsilon(1e-4));
    const SplittingReport exact = sa_splitting(1e-3, kPi / 2, p);
    CHECK(exact.delta_sa == doctest::Approx(-1.13152e-12).epsilon(1e-4));
    // Beyond k_c the symmetric exciton is metastable, so any splitting wins.
    CHECK(exact.symmetric_damping == 0.0);
    CHECK(exact.oscillation_possible);
    const SplittingReport small = sa_splitting(1e-6, kPi / 2, p);
    CHECK(small.symmetric_damping == doctest::Approx(2.32e-8).epsilon(0.01));
    CHECK_FALSE(small.oscillation_possible);
    const SplittingReport magic = sa_splitting(1e-3, kPi / 4, p, SumMethod::Asymptotic);
    CHECK(std::abs(magic.delta_sa) < 1e-15 * std::abs(asym.delta_sa));
}

TEST_CASE("negative wave numbers are rejected") {
    const ModelParams p;
    CHECK_THROWS_AS(exciton_energy(-1e-6, 0.0, ExcitonLabel::Symmetric, p), Error);
    CHECK_THROWS_AS(sa_splitting(-1e-6, 0.0, p), Error);
}

}
