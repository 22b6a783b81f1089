#pragma once

namespace nfx {

struct SeriesResult {
    double value = 0;
    double est_error = 0;
    long terms_used = 0;
};

// Modified Bessel function of the second kind K_n(x), n in 0..3, x > 0.
// K0/K1 come from the small-x power series (x <= 2) or Steed's continued
// fraction (x > 2); K2, K3 follow by upward recurrence.
double bessel_k(int order, double x);

// Scaled combinations that stay finite as x -> 0, used by the Bessel
// lattice series:  x^2 K2(x) -> 2,  x^2 K1(x) -> 0,  x K1(x) -> 1,  x^2 K0(x) -> 0.
double x2_k2(double x);
double x2_k1(double x);
double x_k1(double x);
double x2_k0(double x);

double zeta3();

// sum_{l>=1} 2 cos(l x) / l^3, summed directly until the analytic tail bound
// drops below tol. Throws NonConvergenceError if max_terms is exhausted.
SeriesResult cos_cubed_series(double x, double tol = 1e-10, long max_terms = 1'000'000);

}  // namespace nfx
