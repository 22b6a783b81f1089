#pragma once

#include <string>
#include <string_view>

#include "params.hpp"

namespace nfx {

enum class SumMethod { Direct, BesselSeries, Asymptotic, LongWavelengthLimit };

const char* to_string(SumMethod method);
SumMethod parse_sum_method(std::string_view name);

// value is the real part of the lattice Fourier sum. imag carries the
// imaginary part: zero for even kernels, and for the interchain sum the
// contribution of the odd x-z cross term (exact methods only).
struct CouplingValue {
    double value = 0;
    double imag = 0;
    SumMethod method = SumMethod::Direct;
    double est_error = 0;
    bool regime_ok = true;
    std::string warning;
};

struct Vec3 {
    double x = 0, y = 0, z = 0;
};

Vec3 dipole_vector(const DipoleOrientation& dipole);

// Static near-field dipole-dipole energy (eV) for separation R (Angstrom) and
// identical transition dipoles (e*Angstrom).
double dipole_coupling_free(const Vec3& separation, const Vec3& dipole);
double dipole_coupling_free(const Vec3& separation, const DipoleOrientation& dipole);

// |R| < lambda_A = 2 pi hbar c / E_A, where the static kernel applies.
bool within_near_field(const Vec3& separation, double atom_energy);

enum class Axis { X = 0, Y = 1, Z = 2 };

// Interchain geometric tensor D_ij(l) for a site offset l, in 1/Angstrom^3.
double d_tensor_element(Axis i, Axis j, long l, const LatticeGeometry& geometry);

// J(k): Direct (cosine lattice series) or LongWavelengthLimit (2 zeta(3)).
CouplingValue intra_dynamical_matrix(double k, const ModelParams& params, SumMethod method);

// S(k) = sum_l exp(i k a l) / (a^2 l^2 + d^2)^(5/2), in 1/Angstrom^5.
CouplingValue s_function(double k, const LatticeGeometry& geometry, SumMethod method,
                         const Numerics& numerics = {});

// S and its first two k-derivatives from the Bessel representation.
struct SSeries {
    double s = 0;
    double ds = 0;
    double d2s = 0;
    double est_error = 0;  // bound on the truncated tail of s
    int terms_used = 0;
};
SSeries s_bessel_series(double k, const LatticeGeometry& geometry, const Numerics& numerics = {});

// J'(k): Direct, BesselSeries, or the exponential Asymptotic form.
CouplingValue inter_dynamical_matrix(double k, const ModelParams& params, SumMethod method);

}  // namespace nfx
