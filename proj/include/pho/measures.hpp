#pragma once

#include <limits>

#include "pho/quantum.hpp"

namespace pho::measures {

// Every quantity below is reported in the dimensionless conventions used
// throughout: lengths in units of x_2omega, wave vectors in 1/x_2omega,
// entropies with the -+ ln x_2omega shift folded in. The ground-state
// position Renyi entropy is additionally available in x_omega units
// (renyi_x0_closed_form).

struct MeasureReport {
    double a = 0.0;
    int n = 0;
    double mean_x = 0.0;
    double sigma_x = 0.0;
    double sigma_k = 0.0;
    double heisenberg_product = 0.0;  // >= 1/2
    double shannon_x = 0.0;
    double shannon_k = 0.0;
    double shannon_sum = 0.0;         // >= 1 + ln(pi)
    double fisher_x = 0.0;
    double fisher_k = 0.0;
    double onicescu_x = 0.0;
    double onicescu_k = 0.0;
    // non-Gaussianities are defined for the ground level; NaN otherwise
    double ng_x = std::numeric_limits<double>::quiet_NaN();
    double ng_k = std::numeric_limits<double>::quiet_NaN();
    double ng_q = std::numeric_limits<double>::quiet_NaN();
};

// Entropy order together with its Sobolev conjugate and the momentum
// convergence threshold of this model.
struct RenyiQuery {
    double alpha = 1.0;
    double beta = std::numeric_limits<double>::quiet_NaN();  // alpha/(2alpha-1)
    double threshold = 0.25;
    bool has_conjugate = false;        // alpha >= 1/2
    bool momentum_converges = false;   // alpha > threshold

    static RenyiQuery make(const classical::PhoModel& model, double alpha);
};

// --- moments and deviations -------------------------------------------

double mean_x(const quantum::Orbital& orb, const quad::QuadratureSpec& spec = {});
// Exact terminating sum over the squared Laguerre expansion;
// quadrature-free cross-check of mean_x.
double mean_x_series(const quantum::Orbital& orb);
// <x^2> = 2(2n + eta + 1), exact.
double mean_x2(const quantum::Orbital& orb);
// <1/x^2> = 1/(2 eta), exact.
double mean_inv_x2(const quantum::Orbital& orb);

double variance_x(const quantum::Orbital& orb, const quad::QuadratureSpec& spec = {});
double variance_x0_closed_form(const classical::PhoModel& model);
// sigma_k^2 = (2n + 1 + 1/(4 eta)) / 2 for every orbital, exact.
double variance_k(const quantum::Orbital& orb);

// --- Shannon entropies and non-Gaussianities ---------------------------

double shannon_x(const quantum::Orbital& orb, const quad::QuadratureSpec& spec = {});
double shannon_k(const quantum::Orbital& orb, const quad::QuadratureSpec& spec = {});
double shannon_x0_closed_form(const classical::PhoModel& model);

// Kullback-Leibler divergence from the moment-matched Gaussian (n = 0).
double nongaussianity_x(const quantum::Orbital& orb, const quad::QuadratureSpec& spec = {});
double nongaussianity_x_closed_form(const classical::PhoModel& model);
double nongaussianity_k(const quantum::Orbital& orb, const quad::QuadratureSpec& spec = {});

// Covariance-matrix (von Neumann style) variant delta_q = h(sqrt(det sigma)).
double nongaussianity_q(const quantum::Orbital& orb);
double h_function(double x);  // (x+1/2)ln(x+1/2) - (x-1/2)ln(x-1/2), x >= 1/2
// Off-diagonal covariance integral; vanishes for these (real) orbitals.
double covariance_cross_term(const quantum::Orbital& orb,
                             const quad::QuadratureSpec& spec = {});

// --- Fisher informations ------------------------------------------------

// Closed form 2(2n + 1 + 1/(4 eta)).
double fisher_x(const quantum::Orbital& orb);
double fisher_x_quadrature(const quantum::Orbital& orb,
                           const quad::QuadratureSpec& spec = {});
double fisher_k(const quantum::Orbital& orb, const quad::QuadratureSpec& spec = {});

// --- Onicescu energies ---------------------------------------------------

double onicescu_x(const quantum::Orbital& orb, const quad::QuadratureSpec& spec = {});
double onicescu_x0_closed_form(const classical::PhoModel& model);
double onicescu_k(const quantum::Orbital& orb, const quad::QuadratureSpec& spec = {});

// --- Renyi / Tsallis ------------------------------------------------------

// alpha_TH = 1/(3 + sqrt(1+4a)); level-independent.
double alpha_threshold(const classical::PhoModel& model);

// Sobolev conjugate beta = alpha/(2 alpha - 1), alpha > 1/2.
double conjugate_beta(double alpha);

double renyi_x(const quantum::Orbital& orb, double alpha,
               const quad::QuadratureSpec& spec = {});
// Ground-state closed form in x_omega units (add ln 2 / 2 for the
// x_2omega convention).
double renyi_x0_closed_form(const classical::PhoModel& model, double alpha);
// alpha -> infinity limits via the density maximum.
double renyi_x_sup(const quantum::Orbital& orb);
double renyi_k_sup(const quantum::Orbital& orb);

double renyi_k(const quantum::Orbital& orb, double alpha,
               const quad::QuadratureSpec& spec = {});

double tsallis_x(const quantum::Orbital& orb, double alpha,
                 const quad::QuadratureSpec& spec = {});
double tsallis_k(const quantum::Orbital& orb, double alpha,
                 const quad::QuadratureSpec& spec = {});

// Dimensionless sides of the Sobolev/Tsallis inequality,
// (alpha/pi)^{1/(4 alpha)} [int rho^alpha]^{1/(2 alpha)} and the momentum
// mirror; beta = +infinity routes through the density maximum.
double tsallis_side_x(const quantum::Orbital& orb, double alpha,
                      const quad::QuadratureSpec& spec = {});
double tsallis_side_k(const quantum::Orbital& orb, double beta,
                      const quad::QuadratureSpec& spec = {});

struct UncertaintyGaps {
    double delta_renyi = 0.0;    // lhs - rhs of the Renyi relation, >= 0
    double delta_tsallis = 0.0;  // side difference of the Tsallis relation
};
UncertaintyGaps uncertainty_gaps(const quantum::Orbital& orb, double alpha,
                                 const quad::QuadratureSpec& spec = {});

// --- aggregate ------------------------------------------------------------

MeasureReport measure_report(const quantum::Orbital& orb,
                             const quad::QuadratureSpec& spec = {});

}
