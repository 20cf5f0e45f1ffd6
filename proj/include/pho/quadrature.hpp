#pragma once

#include <functional>

namespace pho::quad {

// Tolerances and budgets for the adaptive integrators. Integration stops
// once |err_est| <= max(abs_tol, rel_tol * |value|).
struct QuadratureSpec {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    int max_subdivisions = 4000;
    double tail_cutoff_sigma = 12.0;

    void validate() const;  // throws std::invalid_argument on bad fields
};

struct QuadResult {
    double value = 0.0;
    double err_est = 0.0;
};

enum class Symmetry { none, even, odd };

// Where the integrand lives: tails are cut at
// center + tail_cutoff_sigma * width (Gaussian-type decay assumed, declared
// by the caller).
struct ScaleHint {
    double center = 0.0;
    double width = 1.0;
};

using Integrand = std::function<double(double)>;

// Adaptive Gauss-Kronrod (G7/K15) on a finite interval. max_panel > 0
// seeds the subdivision so no initial panel exceeds that width (needed
// for many-period oscillatory integrands, which can alias the error
// estimate of a single panel).
QuadResult integrate(const Integrand& f, double lo, double hi,
                     const QuadratureSpec& spec = {}, double max_panel = 0.0);

// Integral over (0, inf) of a function with Gaussian-type decay beyond
// the hinted scale; an analytic tail bound is folded into err_est.
QuadResult integrate_half_line(const Integrand& f, const QuadratureSpec& spec,
                               const ScaleHint& hint);

// Integral over (-inf, inf); declared even/odd symmetry halves the work
// (odd integrands return exactly zero).
QuadResult integrate_real_line(const Integrand& f, const QuadratureSpec& spec,
                               const ScaleHint& hint,
                               Symmetry sym = Symmetry::none);

// Integral with integrable inverse-square-root endpoint singularities:
// x = x_lo + (x_hi - x_lo) sin^2(theta) turns them into a smooth integrand.
QuadResult integrate_endpoint_singular(const Integrand& f, double x_lo,
                                       double x_hi,
                                       const QuadratureSpec& spec = {});

// Integral over [lo, inf) of a slowly decaying integrand: doubling windows
// [lo, 2 lo], [2 lo, 4 lo], ... accumulated until a window drops below
// abs_tol (the last window doubles as the tail bound in err_est).
QuadResult integrate_half_line_from(const Integrand& f, double lo,
                                    const QuadratureSpec& spec = {},
                                    double max_panel = 0.0);

}
