#include "pho/classical.hpp"

#include <cmath>
#include <string>

#include "pho/errors.hpp"

namespace pho::classical {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
}

PhoModel::PhoModel(double a_value) : a(a_value) {
    if (!(a_value >= 0.0) || !std::isfinite(a_value))
        throw domain_error("PhoModel: repulsion parameter must satisfy a >= 0");
    eta = 0.5 * std::sqrt(1.0 + 4.0 * a_value);
    x_z = std::pow(a_value, 0.25) * kXOmega;
}

ClassicalState::ClassicalState(PhoModel m, double energy_over_d)
    : model(m), energy(energy_over_d) {
    if (!(energy_over_d > 0.0))
        throw domain_error("ClassicalState: energy must be positive");
}

double potential(const PhoModel& model, double x) {
    if (!(x > 0.0)) throw domain_error("potential: requires x > 0");
    double u = x / kXOmega - std::sqrt(model.a) * kXOmega / x;
    return u * u;
}

std::pair<double, double> turning_points(const ClassicalState& state) {
    double e = state.energy;
    double sa = std::sqrt(state.model.a);
    double inner = std::sqrt(0.25 * e * e + e * sa);
    double x_plus = kXOmega * std::sqrt(0.5 * e + sa + inner);
    // x_- from the product x_+ x_- = sqrt(a) x_omega^2 (avoids cancellation);
    // at a = 0 the left turning point merges with the wall.
    double x_minus = sa > 0.0 ? sa * kXOmega * kXOmega / x_plus : 0.0;
    return {x_minus, x_plus};
}

double symmetry_ratio(const ClassicalState& state) {
    auto [x_minus, x_plus] = turning_points(state);
    double x_z = state.model.x_z;
    double d_minus = std::fabs(x_minus - x_z);
    double d_plus = std::fabs(x_plus - x_z);
    if (d_plus == 0.0) return 1.0;  // E -> 0 limit
    return d_minus / d_plus;
}

double period(const PhoModel&) { return kPi / kOmega; }

double period_numeric(const ClassicalState& state,
                      const quad::QuadratureSpec& spec) {
    auto [x_minus, x_plus] = turning_points(state);
    double e = state.energy;
    const PhoModel& model = state.model;
    auto integrand = [&](double x) {
        if (x <= 0.0) return 0.0;
        double diff = (e - potential(model, x)) * kDOmega;  // absolute units
        if (diff <= 0.0) return 0.0;
        return 1.0 / std::sqrt(diff);
    };
    // sqrt(2m) = sqrt(2) with m = 1
    auto r = quad::integrate_endpoint_singular(integrand, x_minus, x_plus, spec);
    return std::sqrt(2.0) * r.value;
}

double average_speed(const ClassicalState& state) {
    double e_abs = state.energy * kDOmega;
    return (2.0 / kPi) * std::sqrt(2.0 * e_abs);
}

}
