#include "lattice_sums.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <sstream>

#include "error.hpp"
#include "specialfn.hpp"
#include "summation.hpp"

namespace nfx {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double r_squared(long l, const LatticeGeometry& g) {
    const double x = g.a * static_cast<double>(l);
    return x * x + g.d * g.d;
}

void require_nonnegative_k(double k, const char* who) {
    if (!(k >= 0) || !std::isfinite(k))
        throw Error(ErrorCode::Domain, std::string(who) + ": requires finite k >= 0 (the sum is even in k)");
}

// Relative tolerance with a floor at the rounding noise of the accumulated terms.
bool converged(double bound, double tol, double value, double magnitude) {
    return bound <= std::max(tol * std::abs(value), 64.0 * kEps * magnitude);
}

CouplingValue s_direct(double k, const LatticeGeometry& g, const Numerics& num) {
    const double a = g.a;
    auto kernel = [&](long l) {
        const double r2 = r_squared(l, g);
        return 1.0 / (r2 * r2 * std::sqrt(r2));
    };
    auto tail = [&](long terms) {
        const double big_l = static_cast<double>(terms);
        return 1.0 / (2.0 * std::pow(a, 5) * std::pow(big_l, 4));
    };
    CompensatedSum re, im;
    re.add(kernel(0));
    PhaseWalker walker(k * a);
    long l = 1;
    for (; l <= num.max_terms; ++l) {
        const std::complex<double> phase = walker.next();
        const double w = kernel(l);
        // exp(+ikal) w + exp(-ikal) w, paired so the sine parts cancel term by term.
        const std::complex<double> pair = phase * w + std::conj(phase) * w;
        re.add(pair.real());
        im.add(pair.imag());
        if ((l & 63) == 0 && converged(tail(l), num.sum_tol, re.value(), re.magnitude())) break;
    }
    const long used = std::min(l, num.max_terms);
    const double bound = tail(used);
    if (!converged(bound, num.sum_tol, re.value(), re.magnitude()))
        throw NonConvergenceError("s_function: direct sum did not converge", re.value(), bound);
    return {re.value(), im.value(), SumMethod::Direct, bound, true, {}};
}

}  // namespace

const char* to_string(SumMethod method) {
    switch (method) {
    case SumMethod::Direct: return "direct";
    case SumMethod::BesselSeries: return "bessel";
    case SumMethod::Asymptotic: return "asymptotic";
    case SumMethod::LongWavelengthLimit: return "long-wavelength";
    }
    return "unknown";
}

SumMethod parse_sum_method(std::string_view name) {
    if (name == "direct") return SumMethod::Direct;
    if (name == "bessel") return SumMethod::BesselSeries;
    if (name == "asymptotic") return SumMethod::Asymptotic;
    if (name == "long-wavelength") return SumMethod::LongWavelengthLimit;
    throw Error(ErrorCode::InvalidArgument, "unknown sum method '" + std::string(name) + "'");
}

Vec3 dipole_vector(const DipoleOrientation& dipole) { return {dipole.mu_x(), dipole.mu_y, dipole.mu_z()}; }

double dipole_coupling_free(const Vec3& r, const Vec3& mu) {
    const double r2 = r.x * r.x + r.y * r.y + r.z * r.z;
    if (!(r2 > 0)) throw Error(ErrorCode::Domain, "dipole_coupling_free: zero separation");
    const double mu2 = mu.x * mu.x + mu.y * mu.y + mu.z * mu.z;
    const double mu_dot_r = mu.x * r.x + mu.y * r.y + mu.z * r.z;
    const double r5 = r2 * r2 * std::sqrt(r2);
    return kUnits.coulomb_factor * (r2 * mu2 - 3.0 * mu_dot_r * mu_dot_r) / r5;
}

double dipole_coupling_free(const Vec3& separation, const DipoleOrientation& dipole) {
    return dipole_coupling_free(separation, dipole_vector(dipole));
}

bool within_near_field(const Vec3& r, double atom_energy) {
    const double lambda = 2.0 * kPi * kUnits.hbar_c / atom_energy;
    return std::sqrt(r.x * r.x + r.y * r.y + r.z * r.z) < lambda;
}

double d_tensor_element(Axis i, Axis j, long l, const LatticeGeometry& g) {
    if (static_cast<int>(i) > static_cast<int>(j)) std::swap(i, j);
    const double r2 = r_squared(l, g);
    const double r3 = r2 * std::sqrt(r2);
    const double r5 = r3 * r2;
    const double x = g.a * static_cast<double>(l);
    if (i == Axis::X && j == Axis::X) return 1.0 / r3 - 3.0 * x * x / r5;
    if (i == Axis::Y && j == Axis::Y) return 1.0 / r3;
    if (i == Axis::Z && j == Axis::Z) return 1.0 / r3 - 3.0 * g.d * g.d / r5;
    if (i == Axis::X && j == Axis::Z) return -3.0 * x * g.d / r5;
    return 0.0;
}

CouplingValue intra_dynamical_matrix(double k, const ModelParams& params, SumMethod method) {
    const Vec3 mu = dipole_vector(params.dipole);
    const double a = params.geometry.a;
    const double prefactor =
        kUnits.coulomb_factor * (mu.y * mu.y + mu.z * mu.z - 2.0 * mu.x * mu.x) / (a * a * a);
    const double phase = k * a;
    CouplingValue out;
    out.method = method;
    switch (method) {
    case SumMethod::Direct: {
        const SeriesResult series = cos_cubed_series(phase, params.numerics.sum_tol, params.numerics.max_terms);
        out.value = prefactor * series.value;
        out.est_error = std::abs(prefactor) * series.est_error;
        return out;
    }
    case SumMethod::LongWavelengthLimit: {
        out.value = prefactor * 2.0 * zeta3();
        // Leading small-phase deviation: |sum 2(1 - cos(l x))/l^3| ~ x^2 (3/2 - ln x).
        const double x = std::abs(std::remainder(phase, 2.0 * kPi));
        out.est_error = x > 0 ? std::abs(prefactor) * x * x * (1.5 + std::abs(std::log(x))) : 0.0;
        out.regime_ok = x <= params.numerics.regime_ka;
        if (!out.regime_ok) out.warning = "long-wavelength limit used outside ka << 1";
        return out;
    }
    default:
        throw Error(ErrorCode::InvalidArgument,
                    std::string("intra_dynamical_matrix: method '") + to_string(method) + "' not supported");
    }
}

CouplingValue s_function(double k, const LatticeGeometry& geometry, SumMethod method, const Numerics& numerics) {
    require_nonnegative_k(k, "s_function");
    if (method == SumMethod::Direct) return s_direct(k, geometry, numerics);
    if (method == SumMethod::BesselSeries) {
        const SSeries series = s_bessel_series(k, geometry, numerics);
        return {series.s, 0.0, SumMethod::BesselSeries, series.est_error, true, {}};
    }
    throw Error(ErrorCode::InvalidArgument,
                std::string("s_function: method '") + to_string(method) + "' not supported");
}

SSeries s_bessel_series(double k, const LatticeGeometry& g, const Numerics& numerics) {
    require_nonnegative_k(k, "s_bessel_series");
    const double a = g.a, d = g.d;
    const double beta = 2.0 * d / a;
    const double prefactor = 8.0 / (3.0 * a * a * a * d * d);
    const double half_phase = 0.5 * k * a;

    // Terms of sum_n G(q_n), G(q) = q^2 K2(beta |q|), q_n = n pi + ka/2, with
    // dG/dq = -sgn(q) x^2 K1(x) / beta and d2G/dq2 = x^2 K0(x) - x K1(x), x = beta |q|.
    CompensatedSum g0, g1, g2;
    auto add_term = [&](long n) {
        const double q = static_cast<double>(n) * kPi + half_phase;
        const double x = beta * std::abs(q);
        if (x > 745.0) return 0.0;  // below the smallest subnormal
        const double t0 = x2_k2(x) / (beta * beta);
        const double t1 = (q < 0 ? 1.0 : (q > 0 ? -1.0 : 0.0)) * x2_k1(x) / beta;
        const double t2 = x2_k0(x) - x_k1(x);
        g0.add(t0);
        g1.add(t1);
        g2.add(t2);
        return std::abs(t0);
    };

    SSeries out;
    add_term(0);
    out.terms_used = 1;
    const long n_max = numerics.bessel_n_max;
    for (long n = 1; n <= n_max; ++n) {
        const double last = add_term(n) + add_term(-n);
        out.terms_used += 2;
        if (last == 0.0) break;
    }
    // Tail: the first omitted pair bounds the remainder up to a geometric factor
    // exp(-2 pi d / a) per step, which is < 1 since d > 0.
    const auto omitted = [&](long n) {
        const double q = static_cast<double>(n) * kPi + half_phase;
        const double x = beta * std::abs(q);
        return x > 745.0 ? 0.0 : x2_k2(x) / (beta * beta);
    };
    const double ratio = std::exp(-2.0 * kPi * d / a);
    const double first_omitted = omitted(n_max + 1) + omitted(-(n_max + 1));
    out.s = prefactor * g0.value();
    out.ds = prefactor * 0.5 * a * g1.value();
    out.d2s = prefactor * 0.25 * a * a * g2.value();
    out.est_error = prefactor * first_omitted / (1.0 - ratio);
    return out;
}

CouplingValue inter_dynamical_matrix(double k, const ModelParams& params, SumMethod method) {
    require_nonnegative_k(k, "inter_dynamical_matrix");
    const LatticeGeometry& g = params.geometry;
    const Numerics& num = params.numerics;
    const Vec3 mu = dipole_vector(params.dipole);
    const double a = g.a, d = g.d;
    const double cf = kUnits.coulomb_factor;
    CouplingValue out;
    out.method = method;

    switch (method) {
    case SumMethod::Direct: {
        auto kernel = [&](long l) {
            return mu.x * mu.x * d_tensor_element(Axis::X, Axis::X, l, g)
                   + mu.y * mu.y * d_tensor_element(Axis::Y, Axis::Y, l, g)
                   + mu.z * mu.z * d_tensor_element(Axis::Z, Axis::Z, l, g)
                   + 2.0 * mu.x * mu.z * d_tensor_element(Axis::X, Axis::Z, l, g);
        };
        // Tail envelope from the parts of the kernel that decrease monotonically
        // once a l >= d: mu^2/R^3, 3 mu_x^2 (al)^2/R^5, 3 mu_z^2 d^2/R^5, 6|mu_x mu_z| a l d/R^5.
        const double mu2 = mu.x * mu.x + mu.y * mu.y + mu.z * mu.z;
        const long monotone_from = static_cast<long>(std::ceil(d / a)) + 1;
        const double half_sin = std::abs(std::sin(0.5 * std::remainder(k * a, 2.0 * kPi)));
        // At ka = 0 (mod 2 pi) the 1/l^3 tail does not oscillate. Its leading
        // part (mu^2 - 3 mu_x^2)/(a l)^3 is summed exactly through zeta(3), and
        // the bound covers the 1/l^5 remainder.
        const bool aligned = half_sin == 0.0;
        const double lead = mu2 - 3.0 * mu.x * mu.x;
        const double remainder_coeff = (1.5 * mu2 + 7.5 * mu.x * mu.x + 3.0 * mu.z * mu.z) * d * d;
        auto tail = [&](long terms) {
            if (terms < monotone_from) return std::numeric_limits<double>::infinity();
            const double big_l = static_cast<double>(terms);
            const double a3 = a * a * a;
            if (aligned) return 2.0 * remainder_coeff / (4.0 * a3 * a * a * std::pow(big_l, 4));
            double smooth = 2.0 * (mu2 / (2.0 * a3 * big_l * big_l)
                                   + 3.0 * mu.x * mu.x / (2.0 * a3 * big_l * big_l)
                                   + 3.0 * mu.z * mu.z * d * d / (4.0 * a3 * a * a * std::pow(big_l, 4))
                                   + 2.0 * std::abs(mu.x * mu.z) * d / (a3 * a * std::pow(big_l, 3)));
            if (half_sin > 0) {
                const long next = terms + 1;
                const double r2 = r_squared(next, g);
                const double r3 = r2 * std::sqrt(r2);
                const double r5 = r3 * r2;
                const double x = a * static_cast<double>(next);
                const double envelope = mu2 / r3 + 3.0 * mu.x * mu.x * x * x / r5
                                        + 3.0 * mu.z * mu.z * d * d / r5 + 6.0 * std::abs(mu.x * mu.z) * x * d / r5;
                smooth = std::min(smooth, 2.0 * envelope / half_sin);
            }
            return smooth;
        };
        CompensatedSum re, im;
        re.add(kernel(0));
        PhaseWalker walker(k * a);
        long l = 1;
        for (; l <= num.max_terms; ++l) {
            const std::complex<double> phase = walker.next();
            const double plus = kernel(l);
            const double minus = kernel(-l);
            re.add(phase.real() * (plus + minus));
            im.add(phase.imag() * (plus - minus));
            if ((l & 63) == 0
                && converged(tail(l), num.sum_tol, std::hypot(re.value(), im.value()),
                             re.magnitude() + im.magnitude()))
                break;
        }
        const long used = std::min(l, num.max_terms);
        if (aligned) {
            // 2 * lead / a^3 * sum_{l > used} 1/l^3
            double partial = 0;
            for (long m = used; m >= 1; --m) {
                const double dm = static_cast<double>(m);
                partial += 1.0 / (dm * dm * dm);
            }
            re.add(2.0 * lead / (a * a * a) * (zeta3() - partial));
        }
        const double bound = tail(used);
        const double magnitude = std::hypot(re.value(), im.value());
        if (!converged(bound, num.sum_tol, magnitude, re.magnitude() + im.magnitude()))
            throw NonConvergenceError("inter_dynamical_matrix: direct sum did not converge", cf * re.value(),
                                      cf * bound);
        out.value = cf * re.value();
        out.imag = cf * im.value();
        out.est_error = cf * bound;
        return out;
    }
    case SumMethod::BesselSeries: {
        const SSeries s = s_bessel_series(k, g, num);
        const double dxx = 2.0 * s.d2s + d * d * s.s;
        const double dyy = -s.d2s + d * d * s.s;
        const double dzz = -s.d2s - 2.0 * d * d * s.s;
        // D_xz(k) = D_zx(k) = 3 i d S'(k): purely imaginary.
        const double dxz_imag = 3.0 * d * s.ds;
        out.value = cf * (mu.x * mu.x * dxx + mu.y * mu.y * dyy + mu.z * mu.z * dzz);
        out.imag = cf * 2.0 * mu.x * mu.z * dxz_imag;
        out.est_error = cf * (3.0 * d * d) * (mu.x * mu.x + mu.y * mu.y + mu.z * mu.z) * s.est_error;
        return out;
    }
    case SumMethod::Asymptotic: {
        const double kd = k * d;
        const double ka = k * a;
        if (kd > 0) {
            const double amplitude =
                std::sqrt(2.0 * kPi) / (a * d * d) * std::pow(kd, 1.5) * cf * std::exp(-kd);
            out.value = amplitude * (mu.x * mu.x - mu.z * mu.z + (4.0 / 3.0) * mu.y * mu.y / kd);
            out.est_error = std::abs(out.value) * std::min(1.0, 15.0 / (8.0 * kd));
        }
        out.regime_ok = kd >= num.regime_kd && ka <= num.regime_ka;
        if (!out.regime_ok) {
            std::ostringstream os;
            os << "asymptotic interlattice form outside its regime (kd = " << kd << ", ka = " << ka
               << "; needs kd >= " << num.regime_kd << " and ka <= " << num.regime_ka << ")";
            out.warning = os.str();
        }
        return out;
    }
    default:
        throw Error(ErrorCode::InvalidArgument,
                    std::string("inter_dynamical_matrix: method '") + to_string(method) + "' not supported");
    }
}

}  // namespace nfx
