#pragma once

#include <cmath>

namespace pho::detail {

// Minimal double-double arithmetic (Dekker/Knuth error-free transforms).
// Used where a power series must survive heavy cancellation: the pair
// carries ~31 significant digits.
struct dd {
    double hi = 0.0;
    double lo = 0.0;
    dd() = default;
    constexpr dd(double h) : hi(h), lo(0.0) {}
    constexpr dd(double h, double l) : hi(h), lo(l) {}
    explicit operator double() const { return hi + lo; }
};

inline dd two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

// Requires |a| >= |b|.
inline dd quick_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
}

inline dd two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline dd add(dd a, dd b) {
    dd s = two_sum(a.hi, b.hi);
    double lo = s.lo + a.lo + b.lo;
    return quick_two_sum(s.hi, lo);
}

inline dd add(dd a, double b) { return add(a, dd(b)); }

inline dd mul(dd a, dd b) {
    dd p = two_prod(a.hi, b.hi);
    double lo = p.lo + a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, lo);
}

inline dd mul(dd a, double b) {
    dd p = two_prod(a.hi, b);
    double lo = p.lo + a.lo * b;
    return quick_two_sum(p.hi, lo);
}

inline dd div(dd a, dd b) {
    double q1 = a.hi / b.hi;
    dd r = add(a, mul(b, -q1));
    double q2 = r.hi / b.hi;
    r = add(r, mul(b, -q2));
    double q3 = r.hi / b.hi;
    return add(add(dd(q1), dd(q2)), q3);
}

inline dd neg(dd a) { return {-a.hi, -a.lo}; }

inline double abs_hi(dd a) { return std::fabs(a.hi); }

}
