#pragma once

#include <complex>
#include <vector>

#include "lattice_sums.hpp"
#include "params.hpp"

namespace nfx {

// Two periodic chains of n_sites atoms each, minimum-image couplings.
// Rows 0..N-1 belong to the chain at z = 0, rows N..2N-1 to the chain at z = d.
struct FiniteHamiltonian {
    int n_sites = 0;
    double diagonal = 0;           // E_A
    std::vector<double> couplings; // 2N x 2N row-major, zero diagonal

    int dimension() const { return 2 * n_sites; }
    double at(int i, int j) const;
    std::vector<double> dense() const;  // couplings plus E_A on the diagonal
};

FiniteHamiltonian build_finite_hamiltonian(const ModelParams& params, int n_sites);

// Cyclic Jacobi rotations; returns ascending eigenvalues.
std::vector<double> diagonalize_symmetric(const std::vector<double>& matrix, int n, int max_sweeps = 100);

// Finite-lattice analogues of J(k) and J'(k) over the same minimum-image range as the Hamiltonian.
double finite_intra_sum(double k, const ModelParams& params, int n_sites);
std::complex<double> finite_inter_sum(double k, const ModelParams& params, int n_sites);

struct DispersionRow {
    double k = 0;
    double intra = 0;                 // J_N(k)
    std::complex<double> inter;       // J'_N(k)
    double analytic_upper = 0;        // E_A + J_N + |J'_N|
    double analytic_lower = 0;        // E_A + J_N - |J'_N|
    double eigen_upper = 0;
    double eigen_lower = 0;
    double abs_error = 0;
};

struct DispersionMatchReport {
    int n_sites = 0;
    double theta = 0;
    double tolerance = 0;
    std::vector<DispersionRow> rows;
    double max_error = 0;
    double worst_k = 0;
    int eigenvalues_consumed = 0;
    bool passed = false;
};

DispersionMatchReport compare_dispersion(const ModelParams& params, int n_sites,
                                         SumMethod method = SumMethod::Direct, double tolerance = 1e-10);

}  // namespace nfx
