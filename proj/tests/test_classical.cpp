#include <doctest.h>

#include <cmath>

#include "pho/classical.hpp"
#include "pho/errors.hpp"

using namespace pho;
namespace cl = pho::classical;

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;

// Independent oracle: turning points by bisection on V(x) - E.
double bisect_turning(const cl::PhoModel& model, double e, double lo, double hi) {
    auto f = [&](double x) { return cl::potential(model, x) - e; };
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        if (f(lo) * f(mid) <= 0.0)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}
}

TEST_CASE("model invariants") {
    CHECK(cl::PhoModel(0.0).eta == doctest::Approx(0.5));
    CHECK(cl::PhoModel(0.0).x_z == 0.0);
    CHECK(cl::PhoModel(6.0).eta == doctest::Approx(2.5));
    double prev = -1.0;
    for (double a : {0.0, 0.1, 1.0, 10.0, 1e4}) {
        cl::PhoModel m(a);
        CHECK(m.eta >= 0.5);
        CHECK(m.x_z >= prev);
        prev = m.x_z;
    }
    CHECK_THROWS_AS(cl::PhoModel(-0.1), domain_error);
    CHECK_THROWS_AS(cl::ClassicalState(cl::PhoModel(1.0), 0.0), domain_error);
}

TEST_CASE("potential anchors") {
    cl::PhoModel m1(1.0);
    CHECK(cl::potential(m1, 2.0) == doctest::Approx(2.25));  // (2 - 1/2)^2
    // zero minimum at x_z for any a
    for (double a : {0.5, 1.0, 100.0}) {
        cl::PhoModel m(a);
        CHECK(cl::potential(m, m.x_z) == doctest::Approx(0.0).epsilon(1e-14));
    }
    // half-harmonic limit
    cl::PhoModel m0(0.0);
    for (double x : {0.3, 1.0, 2.5})
        CHECK(cl::potential(m0, x) == doctest::Approx(x * x));
    CHECK_THROWS_AS(cl::potential(m1, 0.0), domain_error);
    CHECK_THROWS_AS(cl::potential(m1, -1.0), domain_error);
}

TEST_CASE("potential Taylor expansion is cubic-correct near the minimum") {
    // V - 4 D (x - x_z)^2/x_w^2 should scale as (x - x_z)^3 at a = 100
    cl::PhoModel m(100.0);
    double prev_ratio = 0.0;
    bool first = true;
    for (double d : {0.1, 0.05, 0.025, 0.0125}) {
        double x = m.x_z + d;
        double lead = 4.0 * d * d;  // in D_omega units
        double resid = std::fabs(cl::potential(m, x) - lead);
        double ratio = resid / (d * d * d);
        if (!first) CHECK(ratio == doctest::Approx(prev_ratio).epsilon(0.15));
        prev_ratio = ratio;
        first = false;
    }
}

TEST_CASE("turning points") {
    // E -> 0: both coalesce at x_z
    cl::PhoModel m(4.0);
    auto [lo0, hi0] = cl::turning_points({m, 1e-14});
    CHECK(lo0 == doctest::Approx(m.x_z).epsilon(1e-6));
    CHECK(hi0 == doctest::Approx(m.x_z).epsilon(1e-6));

    // HHO at E = D: [0, x_w]
    auto [lo1, hi1] = cl::turning_points({cl::PhoModel(0.0), 1.0});
    CHECK(lo1 == 0.0);
    CHECK(hi1 == doctest::Approx(1.0));

    // a=1, E=D against the bisection oracle
    cl::PhoModel m1(1.0);
    auto [lo2, hi2] = cl::turning_points({m1, 1.0});
    CHECK(lo2 == doctest::Approx(bisect_turning(m1, 1.0, 0.05, m1.x_z)).epsilon(1e-12));
    CHECK(hi2 == doctest::Approx(bisect_turning(m1, 1.0, m1.x_z, 10.0)).epsilon(1e-12));
    CHECK(cl::potential(m1, lo2) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(cl::potential(m1, hi2) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(lo2 < m1.x_z);
    CHECK(hi2 > m1.x_z);
}

TEST_CASE("square-root diameter law") {
    for (double a : {0.0, 1.0, 100.0, 1e4})
        for (double e : {0.5, 1.0, 2.0, 5.0}) {
            auto [lo, hi] = cl::turning_points({cl::PhoModel(a), e});
            double d = hi - lo;
            CHECK(d * d == doctest::Approx(e).epsilon(1e-12));
        }
}

TEST_CASE("symmetry ratio limits") {
    // E -> 0 limit is defined as 1
    CHECK(cl::symmetry_ratio({cl::PhoModel(3.0), 1e-300}) == doctest::Approx(1.0));
    // HHO: left point merges with x_z = 0
    CHECK(cl::symmetry_ratio({cl::PhoModel(0.0), 2.0}) == doctest::Approx(0.0));
    // large-a expansion: r = 1 - (E/D)^{1/2}/(2 a^{1/4}) + (E/D)/(8 sqrt(a))
    double r = cl::symmetry_ratio({cl::PhoModel(1e4), 1.0});
    CHECK(r == doctest::Approx(1.0 - 0.05 + 1.0 / 800.0).epsilon(1e-4));
}

TEST_CASE("symmetry ratio monotonicity") {
    for (double e : {0.5, 1.0, 3.0}) {
        double prev = -1.0;
        for (double a : {0.0, 0.5, 2.0, 20.0, 500.0, 1e4}) {
            double r = cl::symmetry_ratio({cl::PhoModel(a), e});
            CHECK(r >= prev - 1e-13);
            CHECK(r <= 1.0 + 1e-12);
            prev = r;
        }
    }
    for (double a : {0.5, 2.0, 100.0}) {
        double prev = 2.0;
        for (double e : {0.25, 0.5, 1.0, 2.0, 4.0}) {
            double r = cl::symmetry_ratio({cl::PhoModel(a), e});
            CHECK(r <= prev + 1e-13);
            prev = r;
        }
    }
}

TEST_CASE("isochronous period") {
    CHECK(cl::period(cl::PhoModel(0.0)) == doctest::Approx(kPi));
    CHECK(cl::period(cl::PhoModel(123.0)) == doctest::Approx(kPi));
    for (double a : {0.0, 1.0, 100.0, 1e4})
        for (double e : {0.5, 1.0, 2.0, 5.0}) {
            double t = cl::period_numeric({cl::PhoModel(a), e});
            CHECK(t == doctest::Approx(kPi).epsilon(1e-8));
        }
}

TEST_CASE("average speed") {
    // E = D_omega: (2/pi) omega x_omega
    CHECK(cl::average_speed({cl::PhoModel(2.0), 1.0}) ==
          doctest::Approx(2.0 / kPi));
    // consistency with 2 (x+ - x-) / T
    cl::ClassicalState s{cl::PhoModel(1.0), 2.0};
    auto [lo, hi] = cl::turning_points(s);
    CHECK(cl::average_speed(s) ==
          doctest::Approx(2.0 * (hi - lo) / cl::period(s.model)).epsilon(1e-13));
    // E -> 0
    CHECK(cl::average_speed({cl::PhoModel(1.0), 1e-30}) ==
          doctest::Approx(0.0).epsilon(1e-14));
}
