#include "pho/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pho/errors.hpp"
#include "pho/special_functions.hpp"

namespace pho::quantum {

namespace {

constexpr double kPi = special::kPi;
constexpr double kLn2 = 0.69314718055994530941723212145817657;
constexpr double kHalfLnPi = 0.57236494292470008707171367567652936;

double log_psi_prefactor(int n, double eta) {
    // sqrt(2 n! / Gamma(n+eta+1))
    return 0.5 * (kLn2 + special::ln_gamma(n + 1.0).value -
                  special::ln_gamma(n + eta + 1.0).value);
}

bool nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

// Signed log-magnitude accumulator for sums whose terms span hundreds of
// orders of magnitude.
struct SignedLogSum {
    double max_log = -std::numeric_limits<double>::infinity();
    std::vector<std::pair<double, double>> entries;  // (log, sign)

    void add(double log_mag, double sign) {
        if (sign == 0.0 || log_mag == -std::numeric_limits<double>::infinity())
            return;
        entries.emplace_back(log_mag, sign);
        max_log = std::max(max_log, log_mag);
    }

    // returns (log|sum|, sign)
    std::pair<double, double> result() const {
        if (entries.empty())
            return {-std::numeric_limits<double>::infinity(), 0.0};
        double acc = 0.0;
        for (const auto& [lg, sg] : entries) acc += sg * std::exp(lg - max_log);
        if (acc == 0.0) return {-std::numeric_limits<double>::infinity(), 0.0};
        return {max_log + std::log(std::fabs(acc)), acc > 0.0 ? 1.0 : -1.0};
    }
};

}  // namespace

Orbital::Orbital(classical::PhoModel m, int level) : model(m), n(level) {
    if (level < 0) throw domain_error("Orbital: quantum index must be >= 0");
}

double energy(const Orbital& orb) {
    return 2.0 * orb.n + 1.0 + orb.model.eta - std::sqrt(orb.model.a);
}

double psi(const Orbital& orb, double x) {
    if (x < 0.0) throw domain_error("psi: requires x >= 0");
    if (x == 0.0) return 0.0;
    double eta = orb.model.eta;
    double lg = log_psi_prefactor(orb.n, eta) + (eta + 0.5) * std::log(x) -
                0.5 * x * x;
    return special::laguerre(orb.n, eta, x * x) * std::exp(lg);
}

double psi_derivative(const Orbital& orb, double x) {
    if (x <= 0.0) throw domain_error("psi_derivative: requires x > 0");
    double eta = orb.model.eta;
    double lg = log_psi_prefactor(orb.n, eta) + (eta + 0.5) * std::log(x) -
                0.5 * x * x;
    double scale = std::exp(lg);
    double value = special::laguerre(orb.n, eta, x * x) * scale *
                   ((eta + 0.5) / x - x);
    if (orb.n >= 1) {
        // d/dz L_n^{(eta)}(z) = -L_{n-1}^{(eta+1)}(z)
        value -= 2.0 * x * special::laguerre(orb.n - 1, eta + 1.0, x * x) * scale;
    }
    return value;
}

double rho(const Orbital& orb, double x) {
    double v = psi(orb, x);
    return v * v;
}

MomentumWaveform::MomentumWaveform(const Orbital& orb, quad::QuadratureSpec spec)
    : orb_(orb), spec_(spec) {
    spec_.validate();
    int n = orb.n;
    double eta = orb.model.eta;
    double log_norm = 0.5 * (special::ln_gamma(n + 1.0).value - std::log(kPi) -
                             special::ln_gamma(n + eta + 1.0).value);
    log_norm_ = log_norm;

    terms_.reserve(n + 1);
    double max_ab = 0.0;
    for (int j = 0; j <= n; ++j) {
        // c_j = (-1)^j binom(n+eta, n-j) / j!
        double log_c = special::ln_gamma(n + eta + 1.0).value -
                       special::ln_gamma(eta + j + 1.0).value -
                       special::ln_gamma(n - j + 1.0).value -
                       special::ln_gamma(j + 1.0).value;
        double half = 0.5 * (eta + 2.0 * j);
        Term t;
        t.coeff = (j % 2 == 0) ? 1.0 : -1.0;
        t.p_re = -half - 0.25;
        t.p_im = -half + 0.25;
        t.log_abs_re = log_c + (half - 0.25) * kLn2 +
                       special::ln_gamma(half + 0.75).value + log_norm;
        t.log_abs_im = log_c + (half + 0.25) * kLn2 +
                       special::ln_gamma(half + 1.25).value + log_norm;
        terms_.push_back(t);

        // asymptotic-branch start for both Kummer chains of this term
        double a1 = (0.5 - t.p_re) * (1.0 - t.p_re);
        double a2 = (1.5 - t.p_im) * (1.0 - t.p_im);
        double b1 = std::fabs(t.p_re * (t.p_re + 0.5));
        double b2 = std::fabs(t.p_im * (t.p_im - 0.5));
        max_ab = std::max({max_ab, a1, a2, b1, b2});
    }
    max_q_minus_p_ = eta / 2.0 + 1.25 + n;
    z_asym_ = std::max(special::kKummerAsymptoticMinZ, 2.5 * max_ab);
}

bool MomentumWaveform::kummer_ok(double z) const {
    if (z <= 0.0) return true;
    double pa = max_q_minus_p_;  // |p| and q-p agree to within one here
    double osc = std::min(2.0 * std::sqrt(pa * z), 2.0 * pa);
    double tail = std::max(0.0, pa * std::log(z / std::max(pa, 1.0)));
    return osc + tail <= 50.0;
}

PhiMethod MomentumWaveform::method_for(double k) const {
    double z = 0.5 * k * k;
    if (kummer_ok(z)) return PhiMethod::kummer_series;
    if (z >= z_asym_) return PhiMethod::kummer_asymptotic;
    return PhiMethod::fourier_quadrature;
}

Complex2 MomentumWaveform::eval_kummer(double k) const {
    double z = 0.5 * k * k;
    double re = 0.0, im = 0.0;
    double err = 0.0;
    double mag = 0.0;
    for (const Term& t : terms_) {
        auto mr = special::kummer_m_scaled(t.p_re, 0.5, z);
        auto mi = special::kummer_m_scaled(t.p_im, 1.5, z);
        double wr = t.coeff * std::exp(t.log_abs_re);
        double wi = t.coeff * std::exp(t.log_abs_im);
        re += wr * mr.value;
        im -= wi * mi.value * k;
        err += std::fabs(wr) * mr.est_abs_error +
               std::fabs(wi) * mi.est_abs_error * std::fabs(k);
        mag = std::max({mag, std::fabs(wr * mr.value), std::fabs(wi * mi.value * k)});
    }
    double scale = std::max({std::fabs(re), std::fabs(im), 1e-300});
    if (err + mag * 1e-15 > 3e-9 * scale)
        throw accuracy_loss_error("phi: Kummer sum lost too many digits");
    return {re, im};
}

Complex2 MomentumWaveform::eval_quadrature(double k) const {
    int n = orb_.n;
    double eta = orb_.model.eta;
    quad::ScaleHint hint{std::sqrt(2.0 * n + eta + 0.5), std::sqrt(2.0 * n + 2.0)};
    double log_pref = log_psi_prefactor(n, eta);
    auto wave = [&](double x) {
        if (x <= 0.0) return 0.0;
        double lg = log_pref + (eta + 0.5) * std::log(x) - 0.5 * x * x;
        return special::laguerre(n, eta, x * x) * std::exp(lg);
    };
    const double inv_sqrt_2pi = 1.0 / std::sqrt(2.0 * kPi);
    auto re_part = quad::integrate_half_line(
        [&](double x) { return wave(x) * std::cos(k * x); }, spec_, hint);
    auto im_part = quad::integrate_half_line(
        [&](double x) { return wave(x) * std::sin(k * x); }, spec_, hint);
    return {inv_sqrt_2pi * re_part.value, -inv_sqrt_2pi * im_part.value};
}

Complex2 MomentumWaveform::eval(double k) const {
    double z = 0.5 * k * k;
    if (kummer_ok(z) || z >= z_asym_) {
        try {
            return eval_kummer(k);
        } catch (const accuracy_loss_error&) {
            // fall through to the direct Fourier integral
        }
    }
    return eval_quadrature(k);
}

Complex2 MomentumWaveform::derivative_kummer(double k) const {
    double z = 0.5 * k * k;
    double dre = 0.0, dim = 0.0;
    double err = 0.0;
    for (const Term& t : terms_) {
        auto mr = special::kummer_m_scaled(t.p_re, 0.5, z);
        auto mr1 = special::kummer_m_scaled(t.p_re + 1.0, 1.5, z);
        auto mi = special::kummer_m_scaled(t.p_im, 1.5, z);
        auto mi1 = special::kummer_m_scaled(t.p_im + 1.0, 2.5, z);
        double wr = t.coeff * std::exp(t.log_abs_re);
        double wi = t.coeff * std::exp(t.log_abs_im);
        // d/dk [e^{-z} M(p,1/2,z)]     = k e^{-z} (2p M(p+1,3/2,z) - M(p,1/2,z))
        // d/dk [k e^{-z} M(r,3/2,z)]   = e^{-z} [M (1 - k^2) + k^2 (2r/3) M(r+1,5/2,z)]
        dre += wr * k * (2.0 * t.p_re * mr1.value - mr.value);
        dim -= wi * (mi.value * (1.0 - k * k) +
                     k * k * (2.0 * t.p_im / 3.0) * mi1.value);
        err += std::fabs(wr) * (mr.est_abs_error + 2.0 * std::fabs(t.p_re) * mr1.est_abs_error) *
                   std::max(std::fabs(k), 1.0) +
               std::fabs(wi) * (mi.est_abs_error * (1.0 + k * k) +
                                k * k * std::fabs(t.p_im) * mi1.est_abs_error);
    }
    double scale = std::max({std::fabs(dre), std::fabs(dim), 1e-300});
    if (err > 3e-8 * scale)
        throw accuracy_loss_error("phi derivative: Kummer sum lost too many digits");
    return {dre, dim};
}

Complex2 MomentumWaveform::derivative_quadrature(double k) const {
    int n = orb_.n;
    double eta = orb_.model.eta;
    quad::ScaleHint hint{std::sqrt(2.0 * n + eta + 0.5), std::sqrt(2.0 * n + 2.0)};
    double log_pref = log_psi_prefactor(n, eta);
    auto wave = [&](double x) {
        if (x <= 0.0) return 0.0;
        double lg = log_pref + (eta + 0.5) * std::log(x) - 0.5 * x * x;
        return special::laguerre(n, eta, x * x) * std::exp(lg);
    };
    const double inv_sqrt_2pi = 1.0 / std::sqrt(2.0 * kPi);
    auto dre = quad::integrate_half_line(
        [&](double x) { return x * wave(x) * std::sin(k * x); }, spec_, hint);
    auto dim = quad::integrate_half_line(
        [&](double x) { return x * wave(x) * std::cos(k * x); }, spec_, hint);
    return {-inv_sqrt_2pi * dre.value, -inv_sqrt_2pi * dim.value};
}

Complex2 MomentumWaveform::eval_derivative(double k) const {
    double z = 0.5 * k * k;
    if (kummer_ok(z) || z >= z_asym_) {
        try {
            return derivative_kummer(k);
        } catch (const accuracy_loss_error&) {
        }
    }
    return derivative_quadrature(k);
}

double MomentumWaveform::density(double k) const {
    Complex2 v = eval(k);
    return v.re * v.re + v.im * v.im;
}

double MomentumWaveform::density_derivative(double k) const {
    Complex2 v = eval(k);
    Complex2 d = eval_derivative(k);
    return 2.0 * (v.re * d.re + v.im * d.im);
}

double MomentumWaveform::tail_min_k() const { return std::sqrt(2.0 * z_asym_); }

double MomentumWaveform::log_density_tail(double k) const {
    return log_density_tail_from_log(std::log(std::fabs(k)));
}

double MomentumWaveform::log_density_tail_from_log(double log_k) const {
    double log_z = 2.0 * log_k - kLn2;
    if (log_z < std::log(z_asym_) - 1e-12)
        throw std::invalid_argument("log_density_tail: |k| below the asymptotic regime");
    double w = log_z > 709.0 ? 0.0 : 1.0 / std::exp(log_z);  // 1/z
    bool recessive = log_z < 6.55;  // e^{-z} branch dead past z ~ 700
    double z = recessive ? std::exp(log_z) : 0.0;
    SignedLogSum re_sum, im_sum;
    for (const Term& t : terms_) {
        // real-part chain: prefactor * e^{-z} M(p, 1/2, z)
        for (int chain = 0; chain < 2; ++chain) {
            double p = chain == 0 ? t.p_re : t.p_im;
            double q = chain == 0 ? 0.5 : 1.5;
            double log_w = chain == 0 ? t.log_abs_re : t.log_abs_im;
            SignedLogSum& dst = chain == 0 ? re_sum : im_sum;
            double extra = chain == 0 ? 0.0 : log_k;  // k factor
            auto lq = special::log_abs_gamma(q);
            // dominant branch: Gamma(q)/Gamma(p) z^{p-q} S1; dies entirely
            // when p is a non-positive integer (terminating M, no tail)
            if (!nonpositive_integer(p)) {
                auto s1 = special::kummer_asymptotic_sum(q - p, 1.0 - p, w);
                auto lp = special::log_abs_gamma(p);
                dst.add(log_w + extra + lq.log_abs - lp.log_abs + (p - q) * log_z +
                            std::log(std::fabs(s1.sum)),
                        t.coeff * lq.sign * lp.sign * (s1.sum > 0 ? 1.0 : -1.0));
            }
            // recessive branch: e^{-z} cos(pi p) Gamma(q)/Gamma(q-p) z^{-p} S2
            if (recessive) {
                auto s2 = special::kummer_asymptotic_sum(p, p - q + 1.0, -w);
                auto lqp = special::log_abs_gamma(q - p);
                double c = std::cos(kPi * p);
                if (c != 0.0 && s2.sum != 0.0)
                    dst.add(log_w + extra + lq.log_abs - lqp.log_abs - p * log_z - z +
                                std::log(std::fabs(c)) + std::log(std::fabs(s2.sum)),
                            t.coeff * lq.sign * lqp.sign *
                                (c > 0 ? 1.0 : -1.0) * (s2.sum > 0 ? 1.0 : -1.0));
            }
        }
    }
    auto [lr, sr] = re_sum.result();
    auto [li, si] = im_sum.result();
    // the imaginary part carries an overall minus sign; irrelevant squared
    double m = std::max(lr, li);
    if (m == -std::numeric_limits<double>::infinity()) return m;
    double a = sr == 0.0 ? 0.0 : std::exp(lr - m);
    double b = si == 0.0 ? 0.0 : std::exp(li - m);
    return 2.0 * m + std::log(a * a + b * b);
}

double MomentumWaveform::density_tail_coefficient() const {
    // gamma(k) -> C k^{-(2 eta + 3)}; log C from the j = 0 dominant branch
    const Term& t = terms_.front();
    double eta = orb_.model.eta;
    const double neg_inf = -std::numeric_limits<double>::infinity();
    double log_cr = neg_inf, log_ci = neg_inf;
    if (!nonpositive_integer(t.p_re))
        log_cr = t.log_abs_re + kHalfLnPi - special::log_abs_gamma(t.p_re).log_abs +
                 (eta / 2.0 + 0.75) * kLn2;
    if (!nonpositive_integer(t.p_im))
        log_ci = t.log_abs_im + std::log(0.5) + kHalfLnPi -
                 special::log_abs_gamma(t.p_im).log_abs + (eta / 2.0 + 1.25) * kLn2;
    // C = C_r^2 + C_i^2, combined in log space
    double m = std::max(log_cr, log_ci);
    if (m == neg_inf) return neg_inf;
    double a = log_cr == neg_inf ? 0.0 : std::exp(log_cr - m);
    double b = log_ci == neg_inf ? 0.0 : std::exp(log_ci - m);
    return 2.0 * m + std::log(a * a + b * b);
}

Complex2 phi(const Orbital& orb, double k) {
    thread_local std::unique_ptr<MomentumWaveform> cache;
    thread_local double cache_a = -1.0;
    thread_local int cache_n = -1;
    if (!cache || cache_a != orb.model.a || cache_n != orb.n) {
        cache = std::make_unique<MomentumWaveform>(orb);
        cache_a = orb.model.a;
        cache_n = orb.n;
    }
    return cache->eval(k);
}

double gamma_density(const Orbital& orb, double k) {
    Complex2 v = phi(orb, k);
    return v.re * v.re + v.im * v.im;
}

}
