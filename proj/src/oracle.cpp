#include "oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "error.hpp"

namespace nfx {

namespace {

void require_sites(int n_sites) {
    if (n_sites < 4)
        throw Error(ErrorCode::InvalidArgument, "oracle: requires N >= 4 sites per chain, got " + std::to_string(n_sites));
}

// Minimum-image couplings for offset l in [-N/2 + 1, N/2]. At l = N/2 on an
// even ring the two images are equidistant and their couplings are averaged.
double intra_kernel(long l, const ModelParams& p, int n) {
    const double a = p.geometry.a;
    if (2 * l == n) {
        return 0.5 * (dipole_coupling_free(Vec3{l * a, 0, 0}, p.dipole)
                      + dipole_coupling_free(Vec3{-l * a, 0, 0}, p.dipole));
    }
    return dipole_coupling_free(Vec3{l * a, 0, 0}, p.dipole);
}

double inter_kernel(long l, const ModelParams& p, int n) {
    const double a = p.geometry.a;
    const double d = p.geometry.d;
    if (2 * l == n) {
        return 0.5 * (dipole_coupling_free(Vec3{l * a, 0, d}, p.dipole)
                      + dipole_coupling_free(Vec3{-l * a, 0, d}, p.dipole));
    }
    return dipole_coupling_free(Vec3{l * a, 0, d}, p.dipole);
}

long minimum_image(long offset, int n) {
    long o = ((offset % n) + n) % n;
    return 2 * o <= n ? o : o - n;
}

long lowest_offset(int n) { return -((n - 1) / 2); }
long highest_offset(int n) { return n / 2; }

}  // namespace

double FiniteHamiltonian::at(int i, int j) const {
    const int dim = dimension();
    if (i < 0 || j < 0 || i >= dim || j >= dim) throw Error(ErrorCode::InvalidArgument, "FiniteHamiltonian: index out of range");
    return couplings[static_cast<std::size_t>(i) * dim + j] + (i == j ? diagonal : 0.0);
}

std::vector<double> FiniteHamiltonian::dense() const {
    std::vector<double> out = couplings;
    const int dim = dimension();
    for (int i = 0; i < dim; ++i) out[static_cast<std::size_t>(i) * dim + i] += diagonal;
    return out;
}

FiniteHamiltonian build_finite_hamiltonian(const ModelParams& params, int n_sites) {
    require_sites(n_sites);
    if (!(params.geometry.d > 0)) throw Error(ErrorCode::InvalidArgument, "oracle: requires d > 0");
    const int n = n_sites;
    const int dim = 2 * n;

    std::vector<double> intra(static_cast<std::size_t>(n), 0.0), inter(static_cast<std::size_t>(n), 0.0);
    for (int o = 0; o < n; ++o) {
        const long l = minimum_image(o, n);
        if (o != 0) intra[static_cast<std::size_t>(o)] = intra_kernel(l, params, n);
        inter[static_cast<std::size_t>(o)] = inter_kernel(l, params, n);
    }

    FiniteHamiltonian h;
    h.n_sites = n;
    h.diagonal = params.atom_energy;
    h.couplings.assign(static_cast<std::size_t>(dim) * dim, 0.0);
    auto set = [&](int i, int j, double v) { h.couplings[static_cast<std::size_t>(i) * dim + j] = v; };
    for (int row = 0; row < n; ++row) {
        for (int col = 0; col < n; ++col) {
            const auto o = static_cast<std::size_t>(((col - row) % n + n) % n);
            set(row, col, intra[o]);
            set(n + row, n + col, intra[o]);
            // Site col of the second chain seen from site row of the first.
            set(row, n + col, inter[o]);
            set(n + col, row, inter[o]);
        }
    }
    return h;
}

std::vector<double> diagonalize_symmetric(const std::vector<double>& matrix, int n, int max_sweeps) {
    if (n <= 0 || matrix.size() != static_cast<std::size_t>(n) * n)
        throw Error(ErrorCode::InvalidArgument, "diagonalize_symmetric: matrix size does not match n");
    std::vector<double> a = matrix;
    auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };

    double scale = 0;
    for (double v : a) {
        if (!std::isfinite(v)) throw Error(ErrorCode::InvalidArgument, "diagonalize_symmetric: non-finite entry");
        scale = std::max(scale, std::abs(v));
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(at(i, j) - at(j, i)) > 1e-14 * scale)
                throw Error(ErrorCode::InvalidArgument, "diagonalize_symmetric: matrix is not symmetric");

    double frob = 0;
    for (double v : a) frob += v * v;
    const double target = std::numeric_limits<double>::epsilon() * std::sqrt(frob);

    bool done = n == 1;
    for (int sweep = 0; sweep < max_sweeps && !done; ++sweep) {
        double off = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += at(i, j) * at(i, j);
        if (std::sqrt(off) <= target) {
            done = true;
            break;
        }
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (apq == 0) continue;
                const double app = at(p, p), aqq = at(q, q);
                const double theta = (aqq - app) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int r = 0; r < n; ++r) {
                    const double arp = at(r, p), arq = at(r, q);
                    at(r, p) = c * arp - s * arq;
                    at(r, q) = s * arp + c * arq;
                }
                for (int r = 0; r < n; ++r) {
                    const double apr = at(p, r), aqr = at(q, r);
                    at(p, r) = c * apr - s * aqr;
                    at(q, r) = s * apr + c * aqr;
                }
                at(p, q) = 0.0;
                at(q, p) = 0.0;
            }
        }
    }
    if (!done) {
        double off = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += at(i, j) * at(i, j);
        if (std::sqrt(off) > target)
            throw Error(ErrorCode::NonConvergence, "diagonalize_symmetric: iteration cap exceeded");
    }
    std::vector<double> eig(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) eig[static_cast<std::size_t>(i)] = at(i, i);
    std::sort(eig.begin(), eig.end());
    return eig;
}

double finite_intra_sum(double k, const ModelParams& params, int n_sites) {
    require_sites(n_sites);
    double sum = 0;
    for (long l = lowest_offset(n_sites); l <= highest_offset(n_sites); ++l) {
        if (l == 0) continue;
        sum += std::cos(k * params.geometry.a * l) * intra_kernel(l, params, n_sites);
    }
    return sum;
}

std::complex<double> finite_inter_sum(double k, const ModelParams& params, int n_sites) {
    require_sites(n_sites);
    std::complex<double> sum{0.0, 0.0};
    for (long l = lowest_offset(n_sites); l <= highest_offset(n_sites); ++l)
        sum += std::polar(inter_kernel(l, params, n_sites), k * params.geometry.a * l);
    return sum;
}

DispersionMatchReport compare_dispersion(const ModelParams& params, int n_sites, SumMethod method, double tolerance) {
    require_sites(n_sites);
    if (method != SumMethod::Direct)
        throw Error(ErrorCode::InvalidArgument, "compare_dispersion: only the direct finite sum is comparable to a finite lattice");
    const int n = n_sites;
    const FiniteHamiltonian h = build_finite_hamiltonian(params, n);
    // Shifted by E_A so eigenvalues keep the precision of the couplings.
    const std::vector<double> eig = diagonalize_symmetric(h.couplings, h.dimension());

    struct Entry {
        double value;
        int row;
        bool upper;
    };
    DispersionMatchReport report;
    report.n_sites = n;
    report.theta = params.dipole.theta;
    report.tolerance = tolerance;
    std::vector<Entry> analytic;
    for (long p = lowest_offset(n); p <= highest_offset(n); ++p) {
        DispersionRow row;
        row.k = 2.0 * kPi * static_cast<double>(p) / (n * params.geometry.a);
        row.intra = finite_intra_sum(row.k, params, n);
        row.inter = finite_inter_sum(row.k, params, n);
        const int index = static_cast<int>(report.rows.size());
        analytic.push_back({row.intra + std::abs(row.inter), index, true});
        analytic.push_back({row.intra - std::abs(row.inter), index, false});
        report.rows.push_back(row);
    }
    std::sort(analytic.begin(), analytic.end(), [](const Entry& x, const Entry& y) { return x.value < y.value; });

    for (std::size_t i = 0; i < analytic.size(); ++i) {
        const Entry& e = analytic[i];
        DispersionRow& row = report.rows[static_cast<std::size_t>(e.row)];
        const double err = std::abs(eig[i] - e.value);
        if (e.upper) {
            row.analytic_upper = params.atom_energy + e.value;
            row.eigen_upper = params.atom_energy + eig[i];
        } else {
            row.analytic_lower = params.atom_energy + e.value;
            row.eigen_lower = params.atom_energy + eig[i];
        }
        row.abs_error = std::max(row.abs_error, err);
        ++report.eigenvalues_consumed;
    }
    for (const auto& row : report.rows) {
        if (row.abs_error >= report.max_error) {
            report.max_error = row.abs_error;
            report.worst_k = row.k;
        }
    }
    report.passed = report.eigenvalues_consumed == h.dimension() && report.max_error < tolerance;
    return report;
}

}  // namespace nfx
