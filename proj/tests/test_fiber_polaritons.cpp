#include <doctest.h>

#include <chrono>
#include <cmath>

#include "error.hpp"
#include "fiber_polaritons.hpp"

using namespace nfx;

TEST_SUITE("fiber_polaritons") {

TEST_CASE("photon dispersion") {
    const ModelParams p;
    CHECK(photon_energy(0.0, p.fiber) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(photon_shift(0.0, p.fiber, p.atom_energy)) < 1e-15);
    CHECK(photon_energy(1e-3, p.fiber) == doctest::Approx(1.515892883593917).epsilon(1e-12));
    CHECK(photon_energy(-1e-3, p.fiber) == photon_energy(1e-3, p.fiber));
    const double big = 10.0;
    const double light_line = kUnits.hbar_c * big / std::sqrt(3.0);
    CHECK(photon_energy(big, p.fiber) / light_line - 1 == doctest::Approx(0.5 * std::pow(p.fiber.k0 / big, 2)).epsilon(1e-6));
    for (double k : {1e-7, 1e-5, 1e-3}) {
        CHECK(photon_shift(k, p.fiber, p.atom_energy)
              == doctest::Approx(photon_energy(k, p.fiber) - p.atom_energy).epsilon(1e-6));
    }
}

TEST_CASE("exciton-photon coupling") {
    const ModelParams p;
    const double f0 = coupling_strength(0.0, p);
    CHECK(f0 == doctest::Approx(0.1 * std::sqrt(14.399645 / 1e9)).epsilon(1e-10));
    CHECK(f0 == doctest::Approx(1.19998e-5).epsilon(1e-5));
    CHECK(coupling_strength(1e-3, p) / f0 == doctest::Approx(std::sqrt(photon_energy(1e-3, p.fiber))).epsilon(1e-12));
    ConfigValues c;
    c.u_b = 0.05;
    CHECK(coupling_strength(0.0, ModelParams(c)) == doctest::Approx(0.5 * f0));
}

TEST_CASE("Hopfield invariants on a k grid") {
    const ModelParams p;
    for (double deg : {0.0, 45.0, 54.7, 90.0}) {
        const double theta = deg * kPi / 180;
        for (int i = 0; i < 200; ++i) {
            const double k = 1e-3 * i / 199.0;
            const PolaritonPoint pt = polariton_branches(k, theta, p);
            CAPTURE(deg);
            CAPTURE(k);
            CHECK(std::abs(pt.X2_plus + pt.Y2_plus - 1) <= 1e-12);
            CHECK(std::abs(pt.X2_minus + pt.Y2_minus - 1) <= 1e-12);
            CHECK(std::abs(pt.X2_plus + pt.X2_minus - 1) <= 1e-12);
            CHECK(std::abs(pt.Y2_plus + pt.Y2_minus - 1) <= 1e-12);
            CHECK(pt.omega_plus - pt.omega_minus >= 2 * pt.coupling * (1 - 1e-15));
            CHECK(std::abs((pt.omega_plus + pt.omega_minus) - (pt.photon_energy + pt.exciton_symmetric))
                  <= 1e-12 * (pt.omega_plus + pt.omega_minus));
            CHECK(pt.omega_plus >= std::max(pt.photon_energy, pt.exciton_symmetric));
            CHECK(pt.omega_minus <= std::min(pt.photon_energy, pt.exciton_symmetric));
            CHECK(std::abs(pt.gamma_plus + pt.gamma_minus - (pt.gamma_ex_s + p.fiber.gamma_ph))
                  <= 1e-12 * (pt.gamma_ex_s + p.fiber.gamma_ph));
        }
    }
}

TEST_CASE("equal mixing at the resonance crossing") {
    const ModelParams p;
    const auto kr = resonance_crossing(kPi / 2, p, 1e-3);
    REQUIRE(kr.has_value());
    CHECK(*kr == doctest::Approx(2.3e-7).epsilon(0.05));
    const PolaritonPoint pt = polariton_branches(*kr, kPi / 2, p);
    CHECK(pt.X2_plus == doctest::Approx(0.5).epsilon(1e-5));
    CHECK(pt.Y2_minus == doctest::Approx(0.5).epsilon(1e-5));
    CHECK(pt.omega_plus - pt.omega_minus == doctest::Approx(2 * pt.coupling).epsilon(1e-8));
    CHECK(pt.omega_plus - pt.omega_minus == doctest::Approx(2.4e-5).epsilon(1e-3));
    const auto [gp, gm] = polariton_damping(pt, pt.gamma_ex_s, p.fiber.gamma_ph);
    CHECK(gp == doctest::Approx(0.5 * (pt.gamma_ex_s + p.fiber.gamma_ph)).epsilon(1e-4));
    CHECK(gm == doctest::Approx(gp).epsilon(1e-4));
}

TEST_CASE("dressed branches separate into photon and exciton far from resonance") {
    const ModelParams p;
    const PolaritonPoint pt = polariton_branches(5e-4, kPi / 2, p);
    CHECK(pt.delta > 100 * pt.coupling);
    CHECK(pt.Y2_plus > 0.9999);
    CHECK(pt.X2_minus > 0.9999);
    const auto [gp, gm] = polariton_damping(pt, pt.gamma_ex_s, 0.0);
    CHECK(gm == doctest::Approx(pt.gamma_ex_s).epsilon(1e-4));
    CHECK(gp < 1e-4 * pt.gamma_ex_s);
}

TEST_CASE("damping sum rule at small k") {
    const ModelParams p;
    const PolaritonPoint pt = polariton_branches(1e-6, kPi / 2, p);
    CHECK(pt.gamma_plus + pt.gamma_minus == doctest::Approx(2.32e-8 + 1e-10).epsilon(0.01));
}

TEST_CASE("upper branch is continuous and nondecreasing") {
    const ModelParams p;
    double prev = polariton_branches(0.0, kPi / 2, p).omega_plus;
    for (int i = 1; i <= 400; ++i) {
        const double k = 1e-3 * i / 400.0;
        const PolaritonPoint pt = polariton_branches(k, kPi / 2, p);
        CHECK(pt.omega_plus >= prev);
        CHECK(pt.omega_plus - prev < 0.01);
        prev = pt.omega_plus;
    }
}

TEST_CASE("decoupled lattices keep bare energies") {
    ConfigValues c;
    c.u_b = 1e-300;
    const ModelParams p(c);
    const PolaritonPoint pt = polariton_branches(5e-4, kPi / 2, p);
    CHECK(pt.omega_plus == doctest::Approx(pt.photon_energy).epsilon(1e-15));
    CHECK(pt.omega_minus == doctest::Approx(pt.exciton_symmetric).epsilon(1e-15));
}

TEST_CASE("no crossing when the exciton starts below the photon") {
    const ModelParams p;
    CHECK_FALSE(resonance_crossing(0.0, p, 1e-3).has_value());
    CHECK_THROWS_AS(polariton_branches(-1.0, 0.0, p), Error);
}

}
