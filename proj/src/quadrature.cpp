#include "pho/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <vector>

#include "pho/errors.hpp"

namespace pho::quad {

namespace {

// Gauss 7 / Kronrod 15 nodes and weights on [-1, 1].
constexpr double kKronrodNode[8] = {
    0.000000000000000000000000000000000, 0.207784955007898467600689403773245,
    0.405845151377397166906606412076961, 0.586087235467691130294144838258730,
    0.741531185599394439863864773280788, 0.864864423359769072789712788640926,
    0.949107912342758524526189684047851, 0.991455371120812639206854697526329};

constexpr double kKronrodWeight[8] = {
    0.209482141084727828012999174891714, 0.204432940075298892414161999234649,
    0.190350578064785409913256402421014, 0.169004726639267902826583426598550,
    0.140653259715525918745189590510238, 0.104790010322250183839876322541518,
    0.063092092629978553290700663189204, 0.022935322010529224963732008058970};

// Gauss weights aligned with the odd Kronrod nodes (indices 0,2,4,6).
constexpr double kGaussWeight[4] = {
    0.417959183673469387755102040816327, 0.381830050505118944950369775488975,
    0.279705391489276667901467771423780, 0.129484966168869693270611432679082};

struct Panel {
    double lo, hi;
    double value;
    double err;
    bool operator<(const Panel& other) const { return err < other.err; }
};

Panel evaluate_panel(const Integrand& f, double lo, double hi) {
    double mid = 0.5 * (lo + hi);
    double half = 0.5 * (hi - lo);
    double f0 = f(mid);
    if (std::isnan(f0)) throw convergence_error("quadrature: integrand returned NaN");
    double k15 = kKronrodWeight[0] * f0;
    double g7 = kGaussWeight[0] * f0;
    for (int i = 1; i < 8; ++i) {
        double dx = half * kKronrodNode[i];
        double fp = f(mid + dx);
        double fm = f(mid - dx);
        if (std::isnan(fp) || std::isnan(fm))
            throw convergence_error("quadrature: integrand returned NaN");
        double pair = fp + fm;
        k15 += kKronrodWeight[i] * pair;
        if (i % 2 == 0) g7 += kGaussWeight[i / 2] * pair;
    }
    k15 *= half;
    g7 *= half;
    double diff = std::fabs(k15 - g7);
    // standard QUADPACK-style sharpened estimate
    double err = diff * std::min(1.0, std::pow(200.0 * diff / std::max(std::fabs(k15), 1e-300), 0.5));
    err = std::max(err, 1e-16 * std::fabs(k15));
    return {lo, hi, k15, err};
}

QuadResult adaptive(const Integrand& f, double lo, double hi,
                    const QuadratureSpec& spec, double max_panel = 0.0) {
    // a single G7/K15 panel can alias a many-period oscillation badly
    // enough to fool its own error estimate; callers that know the
    // oscillation scale seed the subdivision accordingly
    int seeds = 1;
    if (max_panel > 0.0)
        seeds = std::min(2000, static_cast<int>(std::ceil((hi - lo) / max_panel)));
    std::priority_queue<Panel> panels;
    double total = 0.0;
    double total_err = 0.0;
    for (int i = 0; i < seeds; ++i) {
        Panel p = evaluate_panel(f, lo + (hi - lo) * i / seeds,
                                 lo + (hi - lo) * (i + 1) / seeds);
        total += p.value;
        total_err += p.err;
        panels.push(p);
    }
    int used = seeds;
    while (total_err > std::max(spec.abs_tol, spec.rel_tol * std::fabs(total))) {
        if (used >= spec.max_subdivisions)
            throw convergence_error("quadrature: no convergence after max subdivisions");
        Panel worst = panels.top();
        panels.pop();
        double mid = 0.5 * (worst.lo + worst.hi);
        if (mid <= worst.lo || mid >= worst.hi) {
            // interval exhausted at machine resolution; keep its estimate
            total_err *= 0.999999;
            continue;
        }
        Panel a = evaluate_panel(f, worst.lo, mid);
        Panel b = evaluate_panel(f, mid, worst.hi);
        total += a.value + b.value - worst.value;
        total_err += a.err + b.err - worst.err;
        panels.push(a);
        panels.push(b);
        ++used;
    }
    return {total, total_err};
}

}  // namespace

void QuadratureSpec::validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
        throw std::invalid_argument("QuadratureSpec: tolerances must be positive");
    if (max_subdivisions < 1)
        throw std::invalid_argument("QuadratureSpec: max_subdivisions must be >= 1");
    if (!(tail_cutoff_sigma > 0.0))
        throw std::invalid_argument("QuadratureSpec: tail_cutoff_sigma must be positive");
}

QuadResult integrate(const Integrand& f, double lo, double hi,
                     const QuadratureSpec& spec, double max_panel) {
    spec.validate();
    if (lo == hi) return {0.0, 0.0};
    if (lo > hi) {
        QuadResult r = adaptive(f, hi, lo, spec, max_panel);
        return {-r.value, r.err_est};
    }
    return adaptive(f, lo, hi, spec, max_panel);
}

namespace {

// Tail bound past x = T for a function dominated by exp(-(x-c)^2/(2 w^2)):
// |f(x)| <= |f(T)| exp(-(x-T)(T-c)/w^2), so the remainder integrates to
// |f(T)| w^2 / (T-c).
double gaussian_tail_bound(const Integrand& f, double cutoff,
                           const ScaleHint& hint) {
    double ft = std::fabs(f(cutoff));
    if (ft == 0.0 || !std::isfinite(ft)) return 0.0;
    double slope = std::max(cutoff - hint.center, hint.width);
    return ft * hint.width * hint.width / slope;
}

}  // namespace

QuadResult integrate_half_line(const Integrand& f, const QuadratureSpec& spec,
                               const ScaleHint& hint) {
    spec.validate();
    double cutoff = hint.center + spec.tail_cutoff_sigma * hint.width;
    QuadResult r = adaptive(f, 0.0, cutoff, spec);
    r.err_est += gaussian_tail_bound(f, cutoff, hint);
    return r;
}

QuadResult integrate_real_line(const Integrand& f, const QuadratureSpec& spec,
                               const ScaleHint& hint, Symmetry sym) {
    spec.validate();
    if (sym == Symmetry::odd) return {0.0, 0.0};
    double cutoff = std::fabs(hint.center) + spec.tail_cutoff_sigma * hint.width;
    ScaleHint tail_hint{std::fabs(hint.center), hint.width};
    if (sym == Symmetry::even) {
        QuadResult r = adaptive(f, 0.0, cutoff, spec);
        double tail = gaussian_tail_bound(f, cutoff, tail_hint);
        return {2.0 * r.value, 2.0 * (r.err_est + tail)};
    }
    QuadResult r = adaptive(f, -cutoff, cutoff, spec);
    double tail = gaussian_tail_bound(f, cutoff, tail_hint) +
                  gaussian_tail_bound([&f](double x) { return f(-x); }, cutoff, tail_hint);
    return {r.value, r.err_est + tail};
}

QuadResult integrate_half_line_from(const Integrand& f, double lo,
                                    const QuadratureSpec& spec,
                                    double max_panel) {
    spec.validate();
    if (!(lo > 0.0))
        throw std::invalid_argument("integrate_half_line_from: needs lo > 0");
    QuadResult total{0.0, 0.0};
    double left = lo;
    int quiet = 0;
    for (int window = 0; window < 18; ++window) {
        QuadResult seg = adaptive(f, left, 2.0 * left, spec, max_panel);
        total.value += seg.value;
        total.err_est += seg.err_est;
        left *= 2.0;
        // oscillatory windows can cancel by accident: insist on two
        // consecutive quiet windows before declaring the tail dead
        quiet = std::fabs(seg.value) <= spec.abs_tol ? quiet + 1 : 0;
        if (quiet >= 2) {
            total.err_est += 2.0 * spec.abs_tol;  // remainder bound
            return total;
        }
    }
    throw convergence_error("integrate_half_line_from: tail did not die out");
}

QuadResult integrate_endpoint_singular(const Integrand& f, double x_lo,
                                       double x_hi, const QuadratureSpec& spec) {
    spec.validate();
    if (!(x_hi > x_lo))
        throw std::invalid_argument("integrate_endpoint_singular: needs x_hi > x_lo");
    double span = x_hi - x_lo;
    auto g = [&](double theta) {
        double s = std::sin(theta);
        double x = x_lo + span * s * s;
        x = std::clamp(x, x_lo, x_hi);
        return f(x) * span * std::sin(2.0 * theta);
    };
    constexpr double kHalfPi = 1.57079632679489661923132169163975144;
    return adaptive(g, 0.0, kHalfPi, spec);
}

}
