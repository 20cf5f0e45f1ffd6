#include "pho/measures.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pho/errors.hpp"
#include "pho/special_functions.hpp"

namespace pho::measures {

namespace {

namespace sp = pho::special;
namespace cl = pho::classical;
namespace qm = pho::quantum;

constexpr double kPi = sp::kPi;
constexpr double kLn2 = 0.69314718055994530941723212145817657;
constexpr double kLnPi = 1.14472988584940017414342735135305871;
constexpr double kLn2Pi = 1.83787706640934548356065947281123527;
constexpr double kX2 = cl::kX2Omega;
constexpr double kLnX2 = -0.34657359027997265470861606072908828;  // ln(1/sqrt 2)
constexpr double kDensityFloor = 1e-300;

// Dimensionless position density rho_bar(xi) = x_2w * rho(x_2w * xi).
double rho_bar(const qm::Orbital& orb, double xi) {
    double v = qm::psi(orb, kX2 * xi);
    return kX2 * v * v;
}

// Dimensionless momentum density gamma_bar(kappa) = gamma(kappa/x_2w)/x_2w.
double gamma_bar(const qm::MomentumWaveform& wf, double kappa) {
    return wf.density(kappa / kX2) / kX2;
}

double log_gamma_bar_tail(const qm::MomentumWaveform& wf, double log_kappa) {
    return wf.log_density_tail_from_log(log_kappa - kLnX2) - kLnX2;
}

quad::ScaleHint position_hint(const qm::Orbital& orb, double alpha) {
    double center = std::sqrt(2.0 * orb.n + orb.model.eta + 0.5) / kX2;
    double width = std::sqrt(2.0 * (2.0 * orb.n + 2.0)) / std::sqrt(std::min(alpha, 1.0));
    return {center, width};
}

quad::ScaleHint momentum_hint(const qm::Orbital& orb, double alpha) {
    double sigma = std::sqrt((2.0 * orb.n + 1.0 + 0.25 / orb.model.eta) / 2.0);
    return {0.0, sigma / std::sqrt(std::min(alpha, 1.0))};
}

// Tighter kernel tolerances near the Shannon limit so that
// ln(I)/(1-alpha) keeps its digits.
quad::QuadratureSpec kernel_spec(const quad::QuadratureSpec& spec, double alpha) {
    quad::QuadratureSpec s = spec;
    if (std::fabs(1.0 - alpha) < 1e-2) {
        s.rel_tol = std::min(s.rel_tol, 1e-13);
        s.abs_tol = std::min(s.abs_tol, 1e-14);
        s.max_subdivisions = std::max(s.max_subdivisions, 8000);
    }
    return s;
}

void require_ground(const qm::Orbital& orb, const char* what) {
    if (orb.n != 0)
        throw domain_error(std::string(what) + ": defined for the ground level only");
}

void check_alpha(double alpha) {
    if (!(alpha > 0.0))
        throw domain_error("Renyi/Tsallis order must be positive");
    if (std::fabs(alpha - 1.0) <= 1e-12)
        throw std::invalid_argument(
            "alpha = 1 is the Shannon limit; call shannon_x/shannon_k");
}

// Coarse grid plus golden-section refinement of a unimodal-enough density.
double maximize(const std::function<double(double)>& f, double lo, double hi) {
    const int grid = 400;
    double best_x = lo;
    double best = -std::numeric_limits<double>::infinity();
    for (int i = 0; i <= grid; ++i) {
        double x = lo + (hi - lo) * i / grid;
        double v = f(x);
        if (v > best) {
            best = v;
            best_x = x;
        }
    }
    double step = (hi - lo) / grid;
    double a = std::max(lo, best_x - step);
    double b = std::min(hi, best_x + step);
    const double gr = 0.61803398874989484820458683436563812;
    double c = b - gr * (b - a);
    double d = a + gr * (b - a);
    double fc = f(c), fd = f(d);
    for (int it = 0; it < 200 && (b - a) > 1e-13 * (1.0 + std::fabs(a)); ++it) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = f(d);
        }
    }
    return std::max(fc, fd);
}

double shannon_k_impl(const qm::Orbital& orb, const qm::MomentumWaveform& wf,
                      const quad::QuadratureSpec& spec);
double renyi_k_impl(const qm::Orbital& orb, const qm::MomentumWaveform& wf,
                    double alpha, const quad::QuadratureSpec& spec);
double momentum_power_integral(const qm::Orbital& orb,
                               const qm::MomentumWaveform& wf, double alpha,
                               const quad::QuadratureSpec& spec);

}  // namespace

RenyiQuery RenyiQuery::make(const classical::PhoModel& model, double alpha) {
    if (!(alpha > 0.0)) throw domain_error("RenyiQuery: alpha must be positive");
    RenyiQuery q;
    q.alpha = alpha;
    q.threshold = alpha_threshold(model);
    q.momentum_converges = alpha > q.threshold;
    if (alpha > 0.5) {
        q.beta = alpha / (2.0 * alpha - 1.0);
        q.has_conjugate = true;
    } else if (alpha == 0.5) {
        q.beta = std::numeric_limits<double>::infinity();
        q.has_conjugate = true;
    }
    return q;
}

double mean_x(const qm::Orbital& orb, const quad::QuadratureSpec& spec) {
    auto r = quad::integrate_half_line(
        [&](double xi) { return xi * rho_bar(orb, xi); }, spec,
        position_hint(orb, 1.0));
    return r.value;
}

double mean_x_series(const qm::Orbital& orb) {
    // <x> = n!/Gamma(n+eta+1) int t^{eta+1/2} e^{-t} [L_n^{(eta)}(t)]^2 dt:
    // expanding the squared polynomial gives the exact terminating sum
    // sum_{j,l} c_j c_l Gamma(eta + 3/2 + j + l) over the signed power
    // coefficients c_j of L_n^{(eta)}. No quadrature anywhere.
    int n = orb.n;
    double eta = orb.model.eta;
    double log_norm = sp::ln_gamma(n + 1.0).value - sp::ln_gamma(n + eta + 1.0).value;
    std::vector<double> log_c(n + 1);
    for (int j = 0; j <= n; ++j)
        log_c[j] = sp::ln_gamma(n + eta + 1.0).value -
                   sp::ln_gamma(eta + j + 1.0).value -
                   sp::ln_gamma(n - j + 1.0).value - sp::ln_gamma(j + 1.0).value;
    double sum = 0.0;
    for (int j = 0; j <= n; ++j)
        for (int l = 0; l <= n; ++l) {
            double term = std::exp(log_norm + log_c[j] + log_c[l] +
                                   sp::ln_gamma(eta + 1.5 + j + l).value);
            sum += ((j + l) % 2 == 0) ? term : -term;
        }
    return sum / kX2;
}

double mean_x2(const qm::Orbital& orb) {
    return 2.0 * (2.0 * orb.n + orb.model.eta + 1.0);
}

double mean_inv_x2(const qm::Orbital& orb) { return 0.5 / orb.model.eta; }

double variance_x(const qm::Orbital& orb, const quad::QuadratureSpec& spec) {
    double m = mean_x(orb, spec);
    return mean_x2(orb) - m * m;
}

double variance_x0_closed_form(const classical::PhoModel& model) {
    double eta = model.eta;
    double ratio = std::exp(2.0 * (sp::ln_gamma(eta + 1.5).value -
                                   sp::ln_gamma(eta + 1.0).value));
    return 2.0 * (eta + 1.0 - ratio);
}

double variance_k(const qm::Orbital& orb) {
    return (2.0 * orb.n + 1.0 + 0.25 / orb.model.eta) / 2.0;
}

double shannon_x(const qm::Orbital& orb, const quad::QuadratureSpec& spec) {
    auto r = quad::integrate_half_line(
        [&](double xi) {
            double d = rho_bar(orb, xi);
            if (d <= kDensityFloor) return 0.0;
            return -d * std::log(d);
        },
        spec, position_hint(orb, 1.0));
    return r.value;
}

double shannon_x0_closed_form(const classical::PhoModel& model) {
    double eta = model.eta;
    return 0.5 * kLn2 + sp::ln_gamma(eta + 1.0).value - kLn2 -
           (eta + 0.5) * sp::digamma(eta).value + eta - 0.5 / eta;
}

namespace {

// The momentum density decays algebraically, gamma_bar ~ C kappa^-(2eta+3),
// so functionals of it can pick up slowly-converging tails. The far region
// is mapped onto (0,1] by kappa = kappa0 v^{-1/s}, with s chosen so the
// known decay flattens to an O(1) integrand; the density enters through
// its asymptotic log form, immune to underflow.
// log_f maps ln(gamma_bar) to the log of the (positive) integrand factor,
// so the exponentials combine before any exp is taken.
double momentum_tail(const qm::MomentumWaveform& wf, double kappa0, double s,
                     const std::function<double(double)>& log_f,
                     const quad::QuadratureSpec& spec) {
    double log_kappa0 = std::log(kappa0);
    auto g = [&](double v) {
        double log_kappa = log_kappa0 - std::log(v) / s;
        double lg = log_gamma_bar_tail(wf, log_kappa);
        double expo = log_f(lg) - std::log(s) - (1.0 + 1.0 / s) * std::log(v);
        return expo < -700.0 ? 0.0 : std::exp(expo);
    };
    auto r = quad::integrate(g, 0.0, 1.0, spec);
    return r.value * kappa0;
}

// Can the plain quadrature region reach the start of the asymptotic tail?
bool tail_bridged(const qm::MomentumWaveform& wf, double kappa_asym) {
    double z_bridge = 0.5 * std::pow(kappa_asym / kX2, 2);
    return wf.kummer_alive(z_bridge) ||
           log_gamma_bar_tail(wf, std::log(kappa_asym)) > -46.0;
}

void require_bridge(const qm::Orbital& orb, const qm::MomentumWaveform& wf,
                    double kappa_asym) {
    if (!tail_bridged(wf, kappa_asym))
        throw near_threshold_error(
            "momentum functional: algebraic tail cannot be bridged at eta = " +
            std::to_string(orb.model.eta));
}

// 2 * int_0^inf gamma_bar^alpha dkappa with the algebraic tail appended
// whenever it is not negligible. Shared by Renyi, Tsallis and Onicescu.
double momentum_power_integral(const qm::Orbital& orb,
                               const qm::MomentumWaveform& wf, double alpha,
                               const quad::QuadratureSpec& spec) {
    double s = (2.0 * orb.model.eta + 3.0) * alpha - 1.0;
    if (s <= 0.0)
        throw below_threshold_error(
            "momentum power integral diverges at order " + std::to_string(alpha));
    double kappa_asym = wf.tail_min_k() * kX2;
    quad::ScaleHint hint = momentum_hint(orb, alpha);
    double kappa_c = spec.tail_cutoff_sigma * hint.width;

    auto kernel = [&](double kappa) {
        double d = gamma_bar(wf, kappa);
        if (d <= kDensityFloor) return 0.0;
        return std::pow(d, alpha);
    };
    auto tail_f = [alpha](double lg) { return alpha * lg; };

    if (kappa_asym <= kappa_c) {
        // algebraic regime inside the window: integrate the tail exactly
        require_bridge(orb, wf, kappa_asym);
        auto plain = quad::integrate(kernel, 0.0, kappa_asym, spec);
        double tail = momentum_tail(wf, kappa_asym, s, tail_f, spec);
        return 2.0 * (plain.value + tail);
    }

    auto plain = quad::integrate(kernel, 0.0, kappa_c, spec);
    double value = 2.0 * plain.value;
    // beyond the cutoff: bound the band up to kappa_asym by a flat
    // extension of the integrand (the density decreases out there), and
    // the far region by the algebraic form where it is actually valid
    double log_gbar_asym = log_gamma_bar_tail(wf, std::log(kappa_asym));
    double band_bound = (kappa_asym - kappa_c) * kernel(kappa_c);
    double tail_est = std::exp(std::min(alpha * log_gbar_asym, 700.0)) * kappa_asym / s;
    double tol = std::max(spec.abs_tol, spec.rel_tol * value);
    if (band_bound + tail_est > 0.1 * tol) {
        require_bridge(orb, wf, kappa_asym);
        auto mid = quad::integrate(kernel, kappa_c, kappa_asym, spec);
        double tail = momentum_tail(wf, kappa_asym, s, tail_f, spec);
        value += 2.0 * (mid.value + tail);
    }
    return value;
}

double shannon_k_impl(const qm::Orbital& orb, const qm::MomentumWaveform& wf,
                      const quad::QuadratureSpec& spec) {
    quad::ScaleHint hint = momentum_hint(orb, 1.0);
    double kappa_c = spec.tail_cutoff_sigma * hint.width;
    double kappa_asym = wf.tail_min_k() * kX2;
    auto kernel = [&](double kappa) {
        double d = gamma_bar(wf, kappa);
        if (d <= kDensityFloor) return 0.0;
        return -d * std::log(d);
    };
    auto tail_f = [](double lg) {
        return lg >= 0.0 ? -std::numeric_limits<double>::infinity()
                         : std::log(-lg) + lg;
    };
    double s = 2.0 * orb.model.eta + 2.0;

    if (kappa_asym <= kappa_c) {
        require_bridge(orb, wf, kappa_asym);
        auto plain = quad::integrate(kernel, 0.0, kappa_asym, spec);
        double tail = momentum_tail(wf, kappa_asym, s, tail_f, spec);
        return 2.0 * (plain.value + tail);
    }
    auto plain = quad::integrate(kernel, 0.0, kappa_c, spec);
    double value = 2.0 * plain.value;
    double log_gbar_asym = log_gamma_bar_tail(wf, std::log(kappa_asym));
    double band_bound = (kappa_asym - kappa_c) * kernel(kappa_c);
    double tail_est = log_gbar_asym >= 0.0
                          ? 0.0
                          : std::exp(std::min(log_gbar_asym, 0.0)) *
                                (-log_gbar_asym) * kappa_asym / s;
    double tol = std::max(spec.abs_tol, spec.rel_tol * std::fabs(value));
    if (band_bound + tail_est > 0.1 * tol) {
        require_bridge(orb, wf, kappa_asym);
        auto mid = quad::integrate(kernel, kappa_c, kappa_asym, spec);
        double tail = momentum_tail(wf, kappa_asym, s, tail_f, spec);
        value += 2.0 * (mid.value + tail);
    }
    return value;
}

}  // namespace

double shannon_k(const qm::Orbital& orb, const quad::QuadratureSpec& spec) {
    qm::MomentumWaveform wf(orb, spec);
    return shannon_k_impl(orb, wf, spec);
}

double h_function(double x) {
    if (x < 0.5 - 1e-12)
        throw domain_error("h_function: argument below 1/2");
    double a = (x + 0.5) * std::log(x + 0.5);
    double d = x - 0.5;
    double b = d <= 0.0 ? 0.0 : d * std::log(d);
    return a - b;
}

double nongaussianity_x(const qm::Orbital& orb, const quad::QuadratureSpec& spec) {
    require_ground(orb, "nongaussianity_x");
    double sigma2 = variance_x(orb, spec);
    double s_ref = 0.5 * (1.0 + kLn2Pi) + 0.5 * std::log(sigma2);
    return s_ref - shannon_x(orb, spec);
}

double nongaussianity_x_closed_form(const classical::PhoModel& model) {
    double eta = model.eta;
    double ratio = std::exp(2.0 * (sp::ln_gamma(eta + 1.5).value -
                                   sp::ln_gamma(eta + 1.0).value));
    return 0.5 * (1.0 + kLnPi) + 1.5 * kLn2 + 0.5 * std::log(eta + 1.0 - ratio) -
           sp::ln_gamma(eta + 1.0).value + (eta + 0.5) * sp::digamma(eta).value -
           eta + 0.5 / eta;
}

double nongaussianity_k(const qm::Orbital& orb, const quad::QuadratureSpec& spec) {
    require_ground(orb, "nongaussianity_k");
    double sigma2 = variance_k(orb);
    double s_ref = 0.5 * (1.0 + kLn2Pi) + 0.5 * std::log(sigma2);
    return s_ref - shannon_k(orb, spec);
}

double nongaussianity_q(const qm::Orbital& orb) {
    require_ground(orb, "nongaussianity_q");
    double s11 = variance_x0_closed_form(orb.model);
    double s22 = variance_k(orb);
    return h_function(std::sqrt(s11 * s22));
}

double covariance_cross_term(const qm::Orbital& orb,
                             const quad::QuadratureSpec& spec) {
    // integral of x psi psi' + psi^2/2 = [x psi^2 / 2] at the boundary = 0
    auto r = quad::integrate_half_line(
        [&](double x) {
            if (x <= 0.0) return 0.0;
            double v = qm::psi(orb, x);
            return x * v * qm::psi_derivative(orb, x) + 0.5 * v * v;
        },
        spec, {std::sqrt(2.0 * orb.n + orb.model.eta + 0.5), std::sqrt(2.0 * orb.n + 2.0)});
    return r.value;
}

double fisher_x(const qm::Orbital& orb) {
    return 2.0 * (2.0 * orb.n + 1.0 + 0.25 / orb.model.eta);
}

double fisher_x_quadrature(const qm::Orbital& orb, const quad::QuadratureSpec& spec) {
    // I_x = 4 int psi'^2 dx; dimensionless factor x_2w^2 = 1/2
    auto r = quad::integrate_half_line(
        [&](double x) {
            if (x <= 0.0) return 0.0;
            double d = qm::psi_derivative(orb, x);
            return d * d;
        },
        spec, {std::sqrt(2.0 * orb.n + orb.model.eta + 0.5), std::sqrt(2.0 * orb.n + 2.0)});
    return 2.0 * r.value;
}

namespace {
double fisher_k_impl(const qm::Orbital& orb, const qm::MomentumWaveform& wf,
                     const quad::QuadratureSpec& spec) {
    auto r = quad::integrate_real_line(
        [&](double k) {
            double g = wf.density(k);
            if (g <= 1e-280) return 0.0;
            double d = wf.density_derivative(k);
            return d * d / g;
        },
        spec, {0.0, std::sqrt(variance_k(orb)) / kX2}, quad::Symmetry::even);
    // x_2w^{-2} I_k with I_k in natural units
    return 2.0 * r.value;
}
}  // namespace

double fisher_k(const qm::Orbital& orb, const quad::QuadratureSpec& spec) {
    qm::MomentumWaveform wf(orb, spec);
    return fisher_k_impl(orb, wf, spec);
}

double onicescu_x(const qm::Orbital& orb, const quad::QuadratureSpec& spec) {
    auto r = quad::integrate_half_line(
        [&](double xi) {
            double d = rho_bar(orb, xi);
            return d * d;
        },
        spec, position_hint(orb, 1.0));
    return r.value;
}

double onicescu_x0_closed_form(const classical::PhoModel& model) {
    double eta = model.eta;
    return std::exp(sp::ln_gamma(2.0 * eta + 1.5).value -
                    (2.0 * eta + 1.0) * kLn2 - 2.0 * sp::ln_gamma(eta + 1.0).value);
}

namespace {
double onicescu_k_impl(const qm::Orbital& orb, const qm::MomentumWaveform& wf,
                       const quad::QuadratureSpec& spec) {
    return momentum_power_integral(orb, wf, 2.0, spec);
}
}  // namespace

double onicescu_k(const qm::Orbital& orb, const quad::QuadratureSpec& spec) {
    qm::MomentumWaveform wf(orb, spec);
    return onicescu_k_impl(orb, wf, spec);
}

double alpha_threshold(const classical::PhoModel& model) {
    return 1.0 / (3.0 + 2.0 * model.eta);
}

double conjugate_beta(double alpha) {
    if (alpha < 0.5)
        throw domain_error("conjugate_beta: needs alpha >= 1/2");
    if (alpha == 0.5) return std::numeric_limits<double>::infinity();
    return alpha / (2.0 * alpha - 1.0);
}

double renyi_x(const qm::Orbital& orb, double alpha, const quad::QuadratureSpec& spec) {
    check_alpha(alpha);
    quad::QuadratureSpec ks = kernel_spec(spec, alpha);
    auto r = quad::integrate_half_line(
        [&](double xi) {
            double d = rho_bar(orb, xi);
            if (d <= kDensityFloor) return 0.0;
            return std::pow(d, alpha);
        },
        ks, position_hint(orb, alpha));
    return std::log(r.value) / (1.0 - alpha);
}

double renyi_x0_closed_form(const classical::PhoModel& model, double alpha) {
    check_alpha(alpha);
    double eta = model.eta;
    double arg = alpha * (eta + 0.5) + 0.5;
    double num = sp::ln_gamma(arg).value - alpha * sp::ln_gamma(eta + 1.0).value -
                 arg * std::log(alpha);
    return -kLn2 + num / (1.0 - alpha);
}

double renyi_x_sup(const qm::Orbital& orb) {
    double hi = position_hint(orb, 1.0).center + 10.0 * position_hint(orb, 1.0).width;
    double m = maximize([&](double xi) { return rho_bar(orb, xi); }, 0.0, hi);
    return -std::log(m);
}

double renyi_k_sup(const qm::Orbital& orb) {
    qm::MomentumWaveform wf(orb);
    quad::ScaleHint hint = momentum_hint(orb, 1.0);
    double hi = 12.0 * hint.width;
    double m = maximize([&](double kappa) { return gamma_bar(wf, kappa); }, 0.0, hi);
    return -std::log(m);
}

namespace {

double renyi_k_impl(const qm::Orbital& orb, const qm::MomentumWaveform& wf,
                    double alpha, const quad::QuadratureSpec& spec) {
    check_alpha(alpha);
    double th = alpha_threshold(orb.model);
    if (alpha <= th * (1.0 + 1e-12))
        throw below_threshold_error(
            "renyi_k: order " + std::to_string(alpha) +
            " at or below the convergence threshold " + std::to_string(th));
    quad::QuadratureSpec ks = kernel_spec(spec, alpha);
    double value = momentum_power_integral(orb, wf, alpha, ks);
    return std::log(value) / (1.0 - alpha);
}

}  // namespace

double renyi_k(const qm::Orbital& orb, double alpha, const quad::QuadratureSpec& spec) {
    qm::MomentumWaveform wf(orb, spec);
    return renyi_k_impl(orb, wf, alpha, spec);
}

namespace {
double renyi_or_shannon_x(const qm::Orbital& orb, double t,
                          const quad::QuadratureSpec& spec) {
    if (std::fabs(t - 1.0) <= 1e-9) return shannon_x(orb, spec);
    return renyi_x(orb, t, spec);
}

double renyi_or_shannon_k(const qm::Orbital& orb, const qm::MomentumWaveform& wf,
                          double t, const quad::QuadratureSpec& spec) {
    if (std::isinf(t)) return renyi_k_sup(orb);
    if (std::fabs(t - 1.0) <= 1e-9) return shannon_k_impl(orb, wf, spec);
    return renyi_k_impl(orb, wf, t, spec);
}
}  // namespace

double tsallis_x(const qm::Orbital& orb, double alpha, const quad::QuadratureSpec& spec) {
    check_alpha(alpha);
    double r = renyi_x(orb, alpha, spec);
    return (1.0 - std::exp((1.0 - alpha) * r)) / (alpha - 1.0);
}

double tsallis_k(const qm::Orbital& orb, double alpha, const quad::QuadratureSpec& spec) {
    check_alpha(alpha);
    double r = renyi_k(orb, alpha, spec);
    return (1.0 - std::exp((1.0 - alpha) * r)) / (alpha - 1.0);
}

double tsallis_side_x(const qm::Orbital& orb, double alpha,
                      const quad::QuadratureSpec& spec) {
    if (!(alpha > 0.0)) throw domain_error("tsallis_side_x: alpha must be positive");
    double r = renyi_or_shannon_x(orb, alpha, spec);
    return std::pow(alpha / kPi, 0.25 / alpha) *
           std::exp(0.5 * (1.0 - alpha) / alpha * r);
}

double tsallis_side_k(const qm::Orbital& orb, double beta,
                      const quad::QuadratureSpec& spec) {
    if (std::isinf(beta)) return std::exp(-0.5 * renyi_k_sup(orb));
    if (!(beta > 0.0)) throw domain_error("tsallis_side_k: beta must be positive");
    qm::MomentumWaveform wf(orb, spec);
    double r = renyi_or_shannon_k(orb, wf, beta, spec);
    return std::pow(beta / kPi, 0.25 / beta) *
           std::exp(0.5 * (1.0 - beta) / beta * r);
}

namespace {
// (1/2)[ln(alpha/pi)/(1-alpha) + ln(beta/pi)/(1-beta)] with conjugate
// beta; the two divergences at alpha -> 1 cancel against each other.
double renyi_rhs_term(double alpha) {
    if (std::fabs(alpha - 1.0) <= 1e-6) return -1.0 - kLnPi;
    if (alpha == 0.5) return -kLn2Pi;
    double beta = conjugate_beta(alpha);
    double num = std::log(alpha) - (2.0 * alpha - 1.0) * std::log(beta);
    return 0.5 * (num / (1.0 - alpha) - 2.0 * kLnPi);
}
}  // namespace

UncertaintyGaps uncertainty_gaps(const qm::Orbital& orb, double alpha,
                                 const quad::QuadratureSpec& spec) {
    if (!(alpha >= 0.5))
        throw domain_error("uncertainty_gaps: needs alpha >= 1/2 for a conjugate");
    double beta = conjugate_beta(alpha);
    qm::MomentumWaveform wf(orb, spec);
    double rx = renyi_or_shannon_x(orb, alpha, spec);
    double rk = renyi_or_shannon_k(orb, wf, beta, spec);
    UncertaintyGaps g;
    g.delta_renyi = rx + rk + renyi_rhs_term(alpha);
    double side_x = std::fabs(alpha - 1.0) <= 1e-9
                        ? std::pow(kPi, -0.25)
                        : std::pow(alpha / kPi, 0.25 / alpha) *
                              std::exp(0.5 * (1.0 - alpha) / alpha * rx);
    double side_k;
    if (std::isinf(beta)) {
        side_k = std::exp(-0.5 * rk);
    } else if (std::fabs(beta - 1.0) <= 1e-9) {
        side_k = std::pow(kPi, -0.25);
    } else {
        side_k = std::pow(beta / kPi, 0.25 / beta) *
                 std::exp(0.5 * (1.0 - beta) / beta * rk);
    }
    g.delta_tsallis = side_x - side_k;
    return g;
}

MeasureReport measure_report(const qm::Orbital& orb, const quad::QuadratureSpec& spec) {
    qm::MomentumWaveform wf(orb, spec);
    MeasureReport r;
    r.a = orb.model.a;
    r.n = orb.n;
    r.mean_x = mean_x(orb, spec);
    r.sigma_x = std::sqrt(mean_x2(orb) - r.mean_x * r.mean_x);
    r.sigma_k = std::sqrt(variance_k(orb));
    r.heisenberg_product = r.sigma_x * r.sigma_k;
    r.shannon_x = shannon_x(orb, spec);
    r.shannon_k = shannon_k_impl(orb, wf, spec);
    r.shannon_sum = r.shannon_x + r.shannon_k;
    r.fisher_x = fisher_x(orb);
    r.fisher_k = fisher_k_impl(orb, wf, spec);
    r.onicescu_x = onicescu_x(orb, spec);
    r.onicescu_k = onicescu_k_impl(orb, wf, spec);
    if (orb.n == 0) {
        double s_ref_x = 0.5 * (1.0 + kLn2Pi) + std::log(r.sigma_x);
        double s_ref_k = 0.5 * (1.0 + kLn2Pi) + std::log(r.sigma_k);
        r.ng_x = s_ref_x - r.shannon_x;
        r.ng_k = s_ref_k - r.shannon_k;
        r.ng_q = h_function(r.heisenberg_product);
    }
    return r;
}

}
