#pragma once

#include <utility>

#include "pho/quadrature.hpp"

namespace pho::classical {

// Unit convention used everywhere: hbar = m = omega = 1, so
// x_omega = 1, x_{2omega} = 1/sqrt(2), D_omega = 1/2. Reported
// dimensionless quantities follow the paper-style scalings.
inline constexpr double kXOmega = 1.0;
inline constexpr double kX2Omega = 0.70710678118654752440084436210484904;
inline constexpr double kDOmega = 0.5;
inline constexpr double kOmega = 1.0;

// Physical configuration of the oscillator: repulsion parameter a >= 0
// and the derived shape parameter eta = sqrt(1+4a)/2 >= 1/2 (equality
// iff a = 0). x_z = a^{1/4} x_omega locates the potential minimum.
struct PhoModel {
    double a;
    double eta;
    double x_z;

    explicit PhoModel(double a_value);
};

// A model plus a positive classical energy, in units of D_omega.
struct ClassicalState {
    PhoModel model;
    double energy;

    ClassicalState(PhoModel m, double energy_over_d);
};

// V(x)/D_omega = (x/x_omega - sqrt(a) x_omega/x)^2, x > 0.
double potential(const PhoModel& model, double x);

// Left and right turning points, V(x_pm) = E; 0 <= x_- < x_z < x_+.
std::pair<double, double> turning_points(const ClassicalState& state);

// Symmetry factor r = |x_- - x_z| / |x_+ - x_z| in [0, 1]; the E -> 0
// limit is defined as 1.
double symmetry_ratio(const ClassicalState& state);

// Closed-form periodic time pi/omega; independent of a and E (isochrony).
double period(const PhoModel& model);

// The same period from the singular action integral, for cross-checking.
double period_numeric(const ClassicalState& state,
                      const quad::QuadratureSpec& spec = {});

// (2/pi) sqrt(2E/m); equals twice the diameter over the period.
double average_speed(const ClassicalState& state);

}
