#include <doctest.h>

#include <cmath>
#include <limits>

#include "pho/errors.hpp"
#include "pho/quadrature.hpp"

using namespace pho;
namespace qd = pho::quad;

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kSqrtPi = 1.77245385090551602729816748334114518;
}

TEST_CASE("spec validation") {
    qd::QuadratureSpec s;
    CHECK_NOTHROW(s.validate());
    s.rel_tol = 0.0;
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
    s = {};
    s.max_subdivisions = 0;
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
}

TEST_CASE("half line: Gaussian integral") {
    qd::QuadratureSpec spec;
    auto r = qd::integrate_half_line([](double x) { return std::exp(-x * x); },
                                     spec, {0.0, 1.0});
    CHECK(r.value == doctest::Approx(kSqrtPi / 2.0).epsilon(1e-12));
    CHECK(r.err_est <= 1e-9);
}

TEST_CASE("half line: x^2 weighted Gaussian") {
    qd::QuadratureSpec spec;
    auto r = qd::integrate_half_line(
        [](double x) { return x * x * std::exp(-x * x); }, spec, {0.0, 1.0});
    CHECK(r.value == doctest::Approx(kSqrtPi / 4.0).epsilon(1e-12));
}

TEST_CASE("real line symmetry handling") {
    qd::QuadratureSpec spec;
    auto even = qd::integrate_real_line([](double x) { return std::exp(-x * x); },
                                        spec, {0.0, 1.0}, qd::Symmetry::even);
    CHECK(even.value == doctest::Approx(kSqrtPi).epsilon(1e-12));
    // declared odd symmetry is exact
    auto odd = qd::integrate_real_line([](double x) { return x * std::exp(-x * x); },
                                       spec, {0.0, 1.0}, qd::Symmetry::odd);
    CHECK(odd.value == 0.0);
    CHECK(odd.err_est == 0.0);
    auto general = qd::integrate_real_line(
        [](double x) { return std::exp(-(x - 0.7) * (x - 0.7)); }, spec,
        {0.7, 1.0}, qd::Symmetry::none);
    CHECK(general.value == doctest::Approx(kSqrtPi).epsilon(1e-11));
}

TEST_CASE("endpoint singular: beta-function case") {
    auto r = qd::integrate_endpoint_singular(
        [](double x) { return 1.0 / std::sqrt(x * (1.0 - x)); }, 0.0, 1.0);
    CHECK(r.value == doctest::Approx(kPi).epsilon(1e-12));
}

TEST_CASE("halving rel_tol stays within the previous error estimate") {
    auto f = [](double x) { return std::exp(-x * x) * std::cos(5.0 * x); };
    qd::QuadratureSpec loose;
    loose.rel_tol = 1e-6;
    loose.abs_tol = 1e-9;
    for (int i = 0; i < 8; ++i) {
        qd::QuadratureSpec tight = loose;
        tight.rel_tol = loose.rel_tol / 2.0;
        auto a = qd::integrate_half_line(f, loose, {0.0, 1.0});
        auto b = qd::integrate_half_line(f, tight, {0.0, 1.0});
        CHECK(std::fabs(a.value - b.value) <= a.err_est + 1e-15);
        loose = tight;
    }
}

TEST_CASE("entropy-style integrand with a density node does not NaN") {
    // rho has a zero at x = 1; 0 ln 0 := 0 by the underflow-floor convention
    auto integrand = [](double x) {
        double amp = (x - 1.0) * std::exp(-0.5 * x * x);
        double rho = amp * amp;
        if (rho <= 1e-300) return 0.0;
        return -rho * std::log(rho);
    };
    qd::QuadratureSpec spec;
    auto r = qd::integrate_half_line(integrand, spec, {0.0, 1.5});
    CHECK(std::isfinite(r.value));
    CHECK(r.value > 0.0);
}

TEST_CASE("NaN integrand raises") {
    qd::QuadratureSpec spec;
    CHECK_THROWS_AS(qd::integrate([](double) {
        return std::numeric_limits<double>::quiet_NaN(); }, 0.0, 1.0, spec),
        convergence_error);
}

TEST_CASE("nonconvergence raises after max_subdivisions") {
    qd::QuadratureSpec spec;
    spec.max_subdivisions = 4;
    spec.rel_tol = 1e-14;
    spec.abs_tol = 1e-300;
    CHECK_THROWS_AS(
        qd::integrate([](double x) { return std::cos(200.0 * x) /
                                            (1e-4 + std::fabs(x - 0.37)); },
                      0.0, 1.0, spec),
        convergence_error);
}

TEST_CASE("reversed and degenerate limits") {
    qd::QuadratureSpec spec;
    auto zero = qd::integrate([](double) { return 1.0; }, 2.0, 2.0, spec);
    CHECK(zero.value == 0.0);
    auto fwd = qd::integrate([](double x) { return x; }, 0.0, 1.0, spec);
    auto rev = qd::integrate([](double x) { return x; }, 1.0, 0.0, spec);
    CHECK(fwd.value == doctest::Approx(0.5));
    CHECK(rev.value == doctest::Approx(-0.5));
}
