#pragma once

#include <numbers>

namespace nfx {

// Every public quantity is in eV, Angstrom, e*Angstrom or dimensionless.
struct UnitSystem {
    double hbar_c;          // eV * Angstrom
    double coulomb_factor;  // e^2 / (4 pi eps0), eV * Angstrom
};

inline constexpr UnitSystem kUnits{1973.2698, 14.399645};

// hbar in eV * s, used only to emit angular-frequency columns.
inline constexpr double kHbarEvSeconds = 6.582119569e-16;

inline constexpr double kPi = std::numbers::pi;

}  // namespace nfx
