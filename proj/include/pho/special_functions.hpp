#pragma once

namespace pho::special {

// Value together with an estimate of the absolute error committed by the
// algorithm that produced it. est_abs_error is finite and non-negative;
// in-domain values are always finite (poles throw pho::domain_error).
struct SpecialFnResult {
    double value = 0.0;
    double est_abs_error = 0.0;
};

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

// Gamma(z) for real z away from the poles at 0, -1, -2, ...
// Lanczos approximation, reflection below 1/2.
SpecialFnResult gamma(double z);

// ln Gamma(z), z > 0; stays finite up to z ~ 1e6 and beyond.
SpecialFnResult ln_gamma(double z);

// ln|Gamma(z)| and sign(Gamma(z)) for any non-pole real z.
struct LogGamma {
    double log_abs;
    int sign;
};
LogGamma log_abs_gamma(double z);

// psi(z) and psi'(z), z > 0: upward recurrence into the asymptotic
// (Bernoulli) series.
SpecialFnResult digamma(double z);
SpecialFnResult trigamma(double z);

// Associated Laguerre polynomial L_n^{(eta)}(z) by the three-term
// recurrence. Degree budget n <= 200.
double laguerre(int n, double eta, double z);

// Physicists' Hermite polynomial H_n(z) by recurrence, n <= 200.
double hermite(int n, double z);

// Kummer confluent hypergeometric M(p, q, z).
//
// Strategy: compensated (double-double) power series while the predicted
// cancellation stays inside the extended-precision budget, otherwise the
// large-z asymptotic expansion; negative z is routed through the Kummer
// transformation M(p,q,z) = e^z M(q-p,q,-z). The crossover is pinned by
// kKummerAsymptoticMinZ below. Cancellation is reported through
// est_abs_error; a result with no trustworthy digits throws
// pho::accuracy_loss_error.
SpecialFnResult kummer_m(double p, double q, double z);

// e^{-z} M(p, q, z) for z >= 0 without forming the (possibly huge) M.
SpecialFnResult kummer_m_scaled(double p, double q, double z);

// Lowest z at which the asymptotic branch is considered; chosen
// empirically to minimise est_abs_error across the momentum-waveform
// parameter set and pinned by a test.
inline constexpr double kKummerAsymptoticMinZ = 40.0;

// Truncated 2F0-type asymptotic sum  sum_s (A)_s (B)_s / s! * w^s
// (w = +-1/z), cut at the smallest term; min_term_rel is that term's
// size relative to the sum.
struct AsymptoticSum {
    double sum;
    double min_term_rel;
    bool usable;
};
AsymptoticSum kummer_asymptotic_sum(double A, double B, double w);

// sin(pi x) with exact argument reduction (exact zeros at integers).
double sinpi(double x);

}
