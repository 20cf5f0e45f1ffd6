#pragma once

#include <vector>

#include "pho/classical.hpp"
#include "pho/quadrature.hpp"

namespace pho::quantum {

// Bound orbital of the oscillator. The spectrum is equidistant in n with
// spacing 2 hbar omega at every a.
struct Orbital {
    classical::PhoModel model;
    int n;

    Orbital(classical::PhoModel m, int level);
};

// E_n / (hbar omega) = 2n + 1 + eta - sqrt(a); exact closed form.
double energy(const Orbital& orb);

// Position waveform, positive as x -> 0+, unit-normalized on (0, inf).
double psi(const Orbital& orb, double x);

// d psi / dx from the analytic Laguerre derivative.
double psi_derivative(const Orbital& orb, double x);

// |psi|^2.
double rho(const Orbital& orb, double x);

struct Complex2 {
    double re = 0.0;
    double im = 0.0;
};

// Which evaluation route the momentum waveform takes at a given k.
enum class PhiMethod { kummer_series, kummer_asymptotic, fourier_quadrature };

// Momentum waveform Phi_n(k): a finite Kummer-function sum obtained by
// pushing the Laguerre power expansion through the half-line Fourier
// transform. Where the Kummer route runs out of digits the evaluation
// falls back to direct quadrature of the oscillatory Fourier integral;
// method_for(k) reports the boundary. The coefficient table is immutable
// after construction.
class MomentumWaveform {
  public:
    explicit MomentumWaveform(const Orbital& orb,
                              quad::QuadratureSpec spec = {});

    Complex2 eval(double k) const;
    Complex2 eval_derivative(double k) const;

    double density(double k) const;             // |Phi(k)|^2, even in k
    double density_derivative(double k) const;  // d|Phi|^2/dk

    PhiMethod method_for(double k) const;

    // log of the density in the algebraic tail, valid for
    // |k| >= tail_min_k(); usable far beyond double underflow. The
    // second form takes ln|k| so the square never overflows.
    double log_density_tail(double k) const;
    double log_density_tail_from_log(double log_k) const;
    double tail_min_k() const;

    // whether the compensated Kummer series still has digits at this z
    bool kummer_alive(double z) const { return kummer_ok(z); }

    // log of the coefficient C in the leading tail
    // gamma(k) -> C k^{-(2 eta + 3)}.
    double density_tail_coefficient() const;

    const Orbital& orbital() const { return orb_; }

  private:
    struct Term {
        double coeff;        // signed Laguerre expansion coefficient c_j
        double log_abs_re;   // log prefactor of the q = 1/2 Kummer term
        double log_abs_im;   // log prefactor of the q = 3/2 Kummer term
        double p_re;         // Kummer first parameter, real part chain
        double p_im;         // Kummer first parameter, imaginary part chain
    };

    Complex2 eval_kummer(double k) const;
    Complex2 eval_quadrature(double k) const;
    Complex2 derivative_kummer(double k) const;
    Complex2 derivative_quadrature(double k) const;
    bool kummer_ok(double z) const;

    Orbital orb_;
    quad::QuadratureSpec spec_;
    std::vector<Term> terms_;
    double log_norm_;        // log of the overall Fourier-sum prefactor
    double max_q_minus_p_;   // worst cancellation exponent across terms
    double z_asym_;          // where the asymptotic tail becomes trustworthy
};

// Convenience wrappers (a fresh coefficient table per call).
Complex2 phi(const Orbital& orb, double k);
double gamma_density(const Orbital& orb, double k);

}
