#pragma once

#include <complex>
#include <string>
#include <vector>

#include "pho/classical.hpp"
#include "pho/measures.hpp"

namespace pho::oracle {

// Uniform grid with hard walls at both ends. For a > 0 the wall sits at
// x_min = 1e-3 x_z, where the potential exceeds any sought eigenvalue by
// orders of magnitude; at a = 0 the x = 0 wall is exact.
struct GridSpec {
    double x_min = 0.0;
    double x_max = 10.0;
    int points = 4096;  // interior points

    static GridSpec standard(const classical::PhoModel& model, int n_max,
                             int points = 4096);
    double step() const { return (x_max - x_min) / (points + 1); }
    double x_at(int i) const { return x_min + (i + 1) * step(); }
};

struct EigenState {
    double energy;             // hbar omega units
    std::vector<double> psi;   // interior samples, trapezoid-normalized
};

// Lowest n_max+1 bound states of the three-point discretized Hamiltonian
// (bisection on the Sturm sequence + inverse iteration). Deliberately
// independent of the analytic solver: only the potential enters.
std::vector<EigenState> fd_eigensolve(const classical::PhoModel& model,
                                      int n_max, const GridSpec& grid);

// Richardson step over the grid and its half-step refinement; the
// returned energies converge as O(h^4). max_residual reports the
// per-level |E_2h - E_h|/3 step, a bound on the remaining error.
std::vector<double> fd_energies_richardson(const classical::PhoModel& model,
                                           int n_max, const GridSpec& grid,
                                           double* max_residual = nullptr);

// Direct quadrature of the half-line Fourier integral on the grid
// (composite Simpson per k; endpoint contributions vanish at the walls).
std::vector<std::complex<double>> numeric_fourier(
    const std::vector<double>& psi_grid, const GridSpec& grid,
    const std::vector<double>& k_grid);

// Grid-based recomputation of the measure set for one orbital, touching
// none of the analytic closed forms.
measures::MeasureReport report_from_grid(const classical::PhoModel& model,
                                         int n, const GridSpec& grid);

struct FieldCheck {
    std::string field;
    double analytic = 0.0;
    double oracle = 0.0;
    double rel_diff = 0.0;
    double tol = 0.0;
    bool pass = true;
};

struct TolProfile {
    double deviations = 1e-5;
    double entropies = 1e-5;
    double fisher = 1e-5;
    double onicescu = 1e-5;
    double nongaussianity = 5e-5;
};

struct Discrepancy {
    std::vector<FieldCheck> fields;
    bool pass = true;
    double worst_rel = 0.0;
    std::string worst_field;
};

Discrepancy compare_report(const measures::MeasureReport& analytic,
                           const measures::MeasureReport& oracle,
                           const TolProfile& profile = {});

}
