#include "specialfn.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include "error.hpp"
#include "summation.hpp"
#include "units.hpp"

namespace nfx {

namespace {

constexpr double kEulerGamma = 0.57721566490153286061;

struct K01 {
    double k0;
    double x_k1;  // x * K1(x), finite at x -> 0
};

// Power series about x = 0, good to ~1e-15 for x <= 2.
K01 k01_series(double x) {
    const double y = 0.25 * x * x;
    const double log_term = std::log(0.5 * x) + kEulerGamma;
    double k0 = 0, k1_tail = 0;
    double t0 = 1.0;        // y^k / (k!)^2
    double t1 = 1.0;        // y^k / (k! (k+1)!)
    double harmonic = 0.0;  // H_k
    for (int k = 0; k < 40; ++k) {
        const double harmonic_next = harmonic + 1.0 / (k + 1);
        const double d0 = t0 * (harmonic - log_term);
        const double d1 = t1 * (log_term - 0.5 * (harmonic + harmonic_next));
        k0 += d0;
        k1_tail += d1;
        if (std::abs(d0) < 1e-18 * std::abs(k0) && std::abs(d1) < 1e-18 * std::abs(k1_tail) && k > 2) break;
        t0 *= y / ((k + 1.0) * (k + 1.0));
        t1 *= y / ((k + 1.0) * (k + 2.0));
        harmonic = harmonic_next;
    }
    return {k0, 1.0 + 0.5 * x * x * k1_tail};
}

// Steed's continued fraction (Temme's CF2) for x > 2, order 0 and 1.
K01 k01_continued_fraction(double x) {
    const double a1 = 0.25;
    double b = 2.0 * (1.0 + x);
    double d = 1.0 / b;
    double h = d, delh = d;
    double q1 = 0.0, q2 = 1.0;
    double q = a1, c = a1;
    double a = -a1;
    double s = 1.0 + q * delh;
    for (int i = 2; i <= 10000; ++i) {
        a -= 2 * (i - 1);
        c = -a * c / i;
        const double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const double dels = q * delh;
        s += dels;
        if (std::abs(dels / s) < 1e-16) break;
    }
    h *= a1;
    const double k0 = std::sqrt(kPi / (2.0 * x)) * std::exp(-x) / s;
    const double k1 = k0 * (x + 0.5 - h) / x;
    return {k0, x * k1};
}

K01 k01(double x) { return x <= 2.0 ? k01_series(x) : k01_continued_fraction(x); }

}  // namespace

double bessel_k(int order, double x) {
    if (order < 0 || order > 3)
        throw Error(ErrorCode::InvalidArgument, "bessel_k: unsupported order " + std::to_string(order));
    if (!(x > 0)) throw Error(ErrorCode::Domain, "bessel_k: requires x > 0");
    if (std::isinf(x)) return 0.0;
    const K01 k = k01(x);
    const double k0 = k.k0;
    const double k1 = k.x_k1 / x;
    if (order == 0) return k0;
    if (order == 1) return k1;
    const double k2 = k0 + 2.0 / x * k1;
    if (order == 2) return k2;
    return k1 + 4.0 / x * k2;
}

double x_k1(double x) {
    if (x < 0) throw Error(ErrorCode::Domain, "x_k1: requires x >= 0");
    if (x == 0) return 1.0;
    return k01(x).x_k1;
}

double x2_k1(double x) { return x * x_k1(x); }

double x2_k0(double x) {
    if (x < 0) throw Error(ErrorCode::Domain, "x2_k0: requires x >= 0");
    if (x == 0) return 0.0;
    return x * x * k01(x).k0;
}

double x2_k2(double x) {
    // x^2 K2 = x^2 K0 + 2 x K1
    return x2_k0(x) + 2.0 * x_k1(x);
}

double zeta3() {
    // Partial sum to N-1 plus the Euler-Maclaurin tail at N.
    constexpr int n = 64;
    double sum = 0;
    for (int l = n - 1; l >= 1; --l) {
        const double dl = l;
        sum += 1.0 / (dl * dl * dl);
    }
    const double dn = n;
    const double n2 = dn * dn;
    const double tail = 1.0 / (2.0 * n2) + 1.0 / (2.0 * n2 * dn) + 1.0 / (4.0 * n2 * n2)
                        - 1.0 / (12.0 * n2 * n2 * n2) + 1.0 / (12.0 * n2 * n2 * n2 * n2);
    return sum + tail;
}

SeriesResult cos_cubed_series(double x, double tol, long max_terms) {
    if (!std::isfinite(x)) throw Error(ErrorCode::Domain, "cos_cubed_series: non-finite phase");
    if (!(tol > 0)) throw Error(ErrorCode::InvalidArgument, "cos_cubed_series: tol must be positive");
    // Reduce to [0, pi]; the series is even and 2 pi periodic.
    double phase = std::remainder(std::abs(x), 2.0 * kPi);
    phase = std::abs(phase);
    const double half_sin = std::abs(std::sin(0.5 * phase));

    auto tail_bound = [&](long terms) {
        const double big_l = static_cast<double>(terms);
        double bound = 1.0 / (big_l * big_l);
        if (half_sin > 0) {
            const double next = big_l + 1.0;
            bound = std::min(bound, 2.0 / (next * next * next * half_sin));
        }
        return bound;
    };

    CompensatedSum sum;
    PhaseWalker walker(phase);
    long l = 1;
    for (; l <= max_terms; ++l) {
        const double dl = static_cast<double>(l);
        sum.add(2.0 * walker.next().real() / (dl * dl * dl));
        if ((l & 63) == 0 && tail_bound(l) <= tol) break;
    }
    const long used = std::min(l, max_terms);
    const double bound = tail_bound(used);
    if (bound > tol) {
        throw NonConvergenceError("cos_cubed_series: tolerance not reached within max_terms",
                                  sum.value(), bound);
    }
    return {sum.value(), bound, used};
}

}  // namespace nfx
