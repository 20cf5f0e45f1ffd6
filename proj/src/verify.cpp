#include "pho/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "pho/classical.hpp"
#include "pho/measures.hpp"
#include "pho/oracle.hpp"
#include "pho/quantum.hpp"
#include "pho/special_functions.hpp"

namespace pho::verify {

namespace {

namespace cl = pho::classical;
namespace qm = pho::quantum;
namespace ms = pho::measures;

constexpr double kPi = special::kPi;
constexpr double kLnPi = 1.14472988584940017414342735135305871;

struct Collector {
    VerifyReport report;
    double tol_override;

    void run(const std::string& name, double tolerance,
             const std::function<double(std::string&)>& worst_residual) {
        CheckResult c;
        c.name = name;
        c.tolerance = tol_override > 0.0 ? tol_override : tolerance;
        try {
            c.worst = worst_residual(c.detail);
            c.pass = c.worst <= c.tolerance;
        } catch (const std::exception& e) {
            c.pass = false;
            c.worst = std::numeric_limits<double>::infinity();
            c.detail = e.what();
        }
        if (!c.pass) {
            report.all_pass = false;
            ++report.failed;
        }
        report.checks.push_back(std::move(c));
    }
};

double quad_overlap(const qm::Orbital& a, const qm::Orbital& b) {
    quad::QuadratureSpec spec;
    spec.rel_tol = 1e-11;
    double center = std::sqrt(2.0 * std::max(a.n, b.n) + a.model.eta + 0.5);
    double width = std::sqrt(2.0 * std::max(a.n, b.n) + 2.0);
    auto r = quad::integrate_half_line(
        [&](double x) { return qm::psi(a, x) * qm::psi(b, x); }, spec,
        {center, width});
    return r.value;
}

double momentum_overlap(const qm::MomentumWaveform& wa,
                        const qm::MomentumWaveform& wb, double width) {
    quad::QuadratureSpec spec;
    spec.rel_tol = 1e-10;
    spec.abs_tol = 1e-11;
    auto f = [&](double k) {
        auto va = wa.eval(k);
        auto vb = wb.eval(k);
        return va.re * vb.re + va.im * vb.im;  // real part of conj(a)*b
    };
    double cutoff = spec.tail_cutoff_sigma * width;
    auto core = quad::integrate(f, -cutoff, cutoff, spec);
    // the densities decay algebraically: chase the tail explicitly
    quad::QuadratureSpec tail_spec = spec;
    tail_spec.abs_tol = 1e-10;
    auto tail = quad::integrate_half_line_from(
        [&](double k) { return f(k) + f(-k); }, cutoff, tail_spec);
    return core.value + tail.value;
}

}  // namespace

VerifyReport run_verification(const VerifyOptions& options) {
    Collector c;
    c.tol_override = options.tol_override;
    const bool quick = options.quick;

    const std::vector<double> a_grid =
        quick ? std::vector<double>{0.0, 1.0} : std::vector<double>{0.0, 1.0, 100.0, 1e4};
    const std::vector<double> a_small =
        quick ? std::vector<double>{0.0, 1.0} : std::vector<double>{0.0, 1.0, 100.0};

    // --- oracle: finite-difference eigenvalues against the closed form
    c.run("fd-eigenvalues", 1e-6, [&](std::string& detail) {
        double worst = 0.0;
        int n_max = quick ? 3 : 5;
        for (double a : a_grid) {
            cl::PhoModel model(a);
            auto grid = oracle::GridSpec::standard(model, n_max, quick ? 2048 : 4096);
            auto energies = oracle::fd_energies_richardson(model, n_max, grid);
            for (int n = 0; n <= n_max; ++n) {
                double exact = qm::energy({model, n});
                double rel = std::fabs(energies[n] - exact) / std::fabs(exact);
                if (rel > worst) {
                    worst = rel;
                    detail = "a=" + std::to_string(a) + " n=" + std::to_string(n);
                }
            }
        }
        return worst;
    });

    // --- oracle: direct Fourier transform against the Kummer-sum waveform
    c.run("numeric-fourier-vs-kummer", 1e-6, [&](std::string& detail) {
        double worst = 0.0;
        int n_max = quick ? 2 : 4;
        for (double a : (quick ? std::vector<double>{1.0} : a_grid)) {
            cl::PhoModel model(a);
            for (int n = 0; n <= n_max; n += 2) {
                qm::Orbital orb{model, n};
                auto grid = oracle::GridSpec::standard(model, n, 8192);
                std::vector<double> psi(grid.points);
                for (int i = 0; i < grid.points; ++i)
                    psi[i] = qm::psi(orb, grid.x_at(i));
                std::vector<double> ks;
                for (double k = -8.0; k <= 8.01; k += 0.5) ks.push_back(k);
                auto numeric = oracle::numeric_fourier(psi, grid, ks);
                qm::MomentumWaveform wf(orb);
                for (size_t i = 0; i < ks.size(); ++i) {
                    auto v = wf.eval(ks[i]);
                    double err = std::max(std::fabs(v.re - numeric[i].real()),
                                          std::fabs(v.im - numeric[i].imag()));
                    if (err > worst) {
                        worst = err;
                        detail = "a=" + std::to_string(a) + " n=" + std::to_string(n) +
                                 " k=" + std::to_string(ks[i]);
                    }
                }
            }
        }
        return worst;
    });

    // --- oracle: grid-based measure recomputation
    c.run("oracle-measures", quick ? 5e-5 : 2e-4, [&](std::string& detail) {
        double worst = 0.0;
        for (double a : a_small) {
            cl::PhoModel model(a);
            for (int n = 0; n <= (quick ? 1 : 3); ++n) {
                auto grid = oracle::GridSpec::standard(model, n, quick ? 4096 : 8192);
                auto rep_o = oracle::report_from_grid(model, n, grid);
                auto rep_a = ms::measure_report({model, n});
                auto d = oracle::compare_report(rep_a, rep_o);
                if (d.worst_rel > worst) {
                    worst = d.worst_rel;
                    detail = "a=" + std::to_string(a) + " n=" + std::to_string(n) +
                             " field=" + d.worst_field;
                }
            }
        }
        return worst;
    });

    // --- quantum invariants
    c.run("orthonormality-position", 1e-8, [&](std::string& detail) {
        double worst = 0.0;
        int n_max = quick ? 3 : 6;
        for (double a : a_grid) {
            cl::PhoModel model(a);
            for (int i = 0; i <= n_max; ++i)
                for (int j = i; j <= n_max; ++j) {
                    double v = quad_overlap({model, i}, {model, j});
                    double err = std::fabs(v - (i == j ? 1.0 : 0.0));
                    if (err > worst) {
                        worst = err;
                        detail = "a=" + std::to_string(a) + " (" +
                                 std::to_string(i) + "," + std::to_string(j) + ")";
                    }
                }
        }
        return worst;
    });

    c.run("orthonormality-momentum", 1e-7, [&](std::string& detail) {
        double worst = 0.0;
        int n_max = quick ? 2 : 6;
        for (double a : (quick ? std::vector<double>{0.0, 1.0} : a_grid)) {
            cl::PhoModel model(a);
            std::vector<qm::MomentumWaveform> wfs;
            for (int n = 0; n <= n_max; ++n) wfs.emplace_back(qm::Orbital{model, n});
            double width = std::sqrt(2.0 * n_max + 1.5) / cl::kX2Omega;
            for (int i = 0; i <= n_max; ++i)
                for (int j = i; j <= n_max; ++j) {
                    double v = momentum_overlap(wfs[i], wfs[j], width);
                    double err = std::fabs(v - (i == j ? 1.0 : 0.0));
                    if (err > worst) {
                        worst = err;
                        detail = "a=" + std::to_string(a) + " (" +
                                 std::to_string(i) + "," + std::to_string(j) + ")";
                    }
                }
        }
        return worst;
    });

    c.run("fourier-round-trip", 1e-6, [&](std::string& detail) {
        double worst = 0.0;
        quad::QuadratureSpec spec;
        spec.max_subdivisions = 40000;
        for (double a : (quick ? std::vector<double>{1.0} : a_small)) {
            cl::PhoModel model(a);
            for (int n : {0, 2}) {
                qm::Orbital orb{model, n};
                qm::MomentumWaveform wf(orb);
                double width = std::sqrt(2.0 * n + 1.5) / cl::kX2Omega;
                for (double x = 0.25; x <= 10.0; x += (quick ? 2.0 : 0.75)) {
                    auto f = [&](double k) {
                        auto v = wf.eval(k);
                        return v.re * std::cos(x * k) - v.im * std::sin(x * k);
                    };
                    double cutoff = spec.tail_cutoff_sigma * width;
                    double panel = 2.0 * kPi / std::max(x, 0.5);
                    auto core = quad::integrate(f, -cutoff, cutoff, spec, panel);
                    quad::QuadratureSpec tail_spec = spec;
                    tail_spec.abs_tol = 2e-8;  // oscillatory windows die slowly
                    auto tail = quad::integrate_half_line_from(
                        [&](double k) { return f(k) + f(-k); }, cutoff, tail_spec,
                        panel);
                    double back = (core.value + tail.value) / std::sqrt(2.0 * kPi);
                    double err = std::fabs(back - qm::psi(orb, x));
                    if (err > worst) {
                        worst = err;
                        detail = "a=" + std::to_string(a) + " n=" + std::to_string(n) +
                                 " x=" + std::to_string(x);
                    }
                }
            }
        }
        return worst;
    });

    c.run("psi-node-counts", 0.0, [&](std::string& detail) {
        int bad = 0;
        for (double a : a_small) {
            cl::PhoModel model(a);
            for (int n = 0; n <= 5; ++n) {
                qm::Orbital orb{model, n};
                int nodes = 0;
                double prev = qm::psi(orb, 0.01);
                double hi = std::sqrt(2.0 * n + model.eta + 0.5) + 8.0;
                for (double x = 0.02; x <= hi; x += 0.002) {
                    double v = qm::psi(orb, x);
                    if (prev != 0.0 && v * prev < 0.0) ++nodes;
                    prev = v;
                }
                if (nodes != n) {
                    ++bad;
                    detail = "a=" + std::to_string(a) + " n=" + std::to_string(n) +
                             " nodes=" + std::to_string(nodes);
                }
            }
        }
        return static_cast<double>(bad);
    });

    // --- classical invariants
    c.run("classical-isochrony", 1e-8, [&](std::string& detail) {
        double worst = 0.0;
        for (double a : {0.0, 1.0, 100.0, 1e4})
            for (double e : {0.5, 1.0, 2.0, 5.0}) {
                cl::ClassicalState s{cl::PhoModel(a), e};
                double rel = std::fabs(cl::period_numeric(s) - kPi) / kPi;
                if (rel > worst) {
                    worst = rel;
                    detail = "a=" + std::to_string(a) + " E=" + std::to_string(e);
                }
            }
        return worst;
    });

    c.run("classical-diameter-law", 1e-12, [&](std::string&) {
        double worst = 0.0;
        for (double a : {0.0, 1.0, 100.0, 1e4})
            for (double e : {0.5, 1.0, 2.0, 5.0}) {
                auto [xm, xp] = cl::turning_points({cl::PhoModel(a), e});
                double d = xp - xm;
                worst = std::max(worst, std::fabs(d * d / e - 1.0));
            }
        return worst;
    });

    c.run("classical-symmetry-monotonicity", 0.0, [&](std::string& detail) {
        int bad = 0;
        std::vector<double> as{0.0, 0.5, 1.0, 5.0, 100.0, 1e4};
        std::vector<double> es{0.25, 0.5, 1.0, 2.0, 5.0};
        for (double e : es) {
            double prev = -1.0;
            for (double a : as) {
                double r = cl::symmetry_ratio({cl::PhoModel(a), e});
                if (r < prev - 1e-12) {
                    ++bad;
                    detail = "r not increasing in a at E=" + std::to_string(e);
                }
                prev = r;
            }
        }
        for (double a : as) {
            double prev = 2.0;
            for (double e : es) {
                double r = cl::symmetry_ratio({cl::PhoModel(a), e});
                if (r > prev + 1e-12) {
                    ++bad;
                    detail = "r not decreasing in E at a=" + std::to_string(a);
                }
                prev = r;
            }
        }
        return static_cast<double>(bad);
    });

    // --- inequality suite
    c.run("heisenberg-inequality", 0.0, [&](std::string& detail) {
        int bad = 0;
        for (double a : {0.0, 0.5, 1.0, 10.0, 100.0, 1e4})
            for (int n : {0, 1, 3}) {
                qm::Orbital orb{cl::PhoModel(a), n};
                double m = ms::mean_x(orb);
                double sx = std::sqrt(ms::mean_x2(orb) - m * m);
                double sk = std::sqrt(ms::variance_k(orb));
                if (sx * sk < 0.5) {
                    ++bad;
                    detail = "a=" + std::to_string(a) + " n=" + std::to_string(n);
                }
            }
        return static_cast<double>(bad);
    });

    c.run("shannon-inequality", 0.0, [&](std::string& detail) {
        int bad = 0;
        for (double a : a_small)
            for (int n : {0, 1}) {
                qm::Orbital orb{cl::PhoModel(a), n};
                double sum = ms::shannon_x(orb) + ms::shannon_k(orb);
                if (sum < 1.0 + kLnPi - 1e-10) {
                    ++bad;
                    detail = "a=" + std::to_string(a) + " n=" + std::to_string(n);
                }
            }
        return static_cast<double>(bad);
    });

    c.run("renyi-tsallis-uncertainty", 0.0, [&](std::string& detail) {
        int bad = 0;
        for (double a : (quick ? std::vector<double>{0.0, 1.0} : a_small))
            for (int n : {0, 1})
                for (double alpha : {0.5, 0.6, 0.8, 1.0, 1.5, 3.0}) {
                    qm::Orbital orb{cl::PhoModel(a), n};
                    auto g = ms::uncertainty_gaps(orb, alpha);
                    if (g.delta_renyi < -1e-8) {
                        ++bad;
                        detail = "Renyi gap negative at a=" + std::to_string(a) +
                                 " n=" + std::to_string(n) + " alpha=" + std::to_string(alpha);
                    }
                    if (n == 0 && alpha <= 1.0 && g.delta_tsallis < -1e-10) {
                        ++bad;
                        detail = "Tsallis side violated in [1/2,1] at a=" + std::to_string(a);
                    }
                }
        // the Tsallis relation must fail somewhere above alpha = 1
        auto g = ms::uncertainty_gaps({cl::PhoModel(0.0), 0}, 1.05);
        if (g.delta_tsallis >= 0.0) {
            ++bad;
            detail = "expected Tsallis violation at alpha=1.05 not observed";
        }
        return static_cast<double>(bad);
    });

    c.run("limit-web-identities", 1e-8, [&](std::string& detail) {
        double worst = 0.0;
        for (double a : (quick ? std::vector<double>{1.0} : a_small)) {
            qm::Orbital orb{cl::PhoModel(a), 0};
            double shan = ms::shannon_x(orb);
            double near1 = 0.5 * (ms::renyi_x(orb, 1.0 + 1e-6) +
                                  ms::renyi_x(orb, 1.0 - 1e-6));
            double e1 = std::fabs(near1 - shan);
            double ox = ms::onicescu_x(orb);
            double e2 = std::fabs(std::exp(-ms::renyi_x(orb, 2.0)) - ox);
            double e3 = std::fabs(1.0 - ms::tsallis_x(orb, 2.0) - ox);
            double e4 = std::fabs(std::exp(-ms::renyi_k(orb, 2.0)) - ms::onicescu_k(orb));
            double e = std::max({e1, e2, e3, e4});
            if (e > worst) {
                worst = e;
                detail = "a=" + std::to_string(a);
            }
        }
        return worst;
    });

    c.run("analytic-numeric-duality", 1e-8, [&](std::string& detail) {
        double worst = 0.0;
        auto track = [&](double err, const std::string& what) {
            if (err > worst) {
                worst = err;
                detail = what;
            }
        };
        for (double a : (quick ? std::vector<double>{0.0, 1.0} : a_small)) {
            cl::PhoModel model(a);
            qm::Orbital orb{model, 0};
            double scale;
            // mean: quadrature vs terminating series (n = 0 and 2)
            for (int n : {0, 2}) {
                qm::Orbital o{model, n};
                scale = std::fabs(ms::mean_x_series(o));
                track(std::fabs(ms::mean_x(o) - ms::mean_x_series(o)) / scale,
                      "mean_x a=" + std::to_string(a) + " n=" + std::to_string(n));
            }
            track(std::fabs(ms::variance_x(orb) - ms::variance_x0_closed_form(model)) /
                      ms::variance_x0_closed_form(model),
                  "variance_x0 a=" + std::to_string(a));
            track(std::fabs(ms::shannon_x(orb) - ms::shannon_x0_closed_form(model)) /
                      std::fabs(ms::shannon_x0_closed_form(model)),
                  "shannon_x0 a=" + std::to_string(a));
            track(std::fabs(ms::nongaussianity_x(orb) -
                            ms::nongaussianity_x_closed_form(model)),
                  "ng_x a=" + std::to_string(a));
            track(std::fabs(ms::fisher_x(orb) - ms::fisher_x_quadrature(orb)) /
                      ms::fisher_x(orb),
                  "fisher_x a=" + std::to_string(a));
            track(std::fabs(ms::onicescu_x(orb) - ms::onicescu_x0_closed_form(model)) /
                      ms::onicescu_x0_closed_form(model),
                  "onicescu_x0 a=" + std::to_string(a));
            double r2 = ms::renyi_x(orb, 2.0);
            double r2c = ms::renyi_x0_closed_form(model, 2.0) + 0.5 * std::log(2.0);
            track(std::fabs(r2 - r2c), "renyi_x0(2) a=" + std::to_string(a));
            track(std::fabs(ms::covariance_cross_term(orb)), "covariance a=" + std::to_string(a));
        }
        return worst;
    });

    c.run("measure-monotonicity", 0.0, [&](std::string& detail) {
        int bad = 0;
        std::vector<double> as{0.0, 0.05, 0.2, 1.0, 5.0, 20.0, 100.0};
        double p_sx = -1.0, p_sk = 2.0, p_ix = 1e9, p_ik = -1.0, p_nx = 1e9, p_nk = 1e9;
        for (double a : as) {
            qm::Orbital orb{cl::PhoModel(a), 0};
            double m = ms::mean_x(orb);
            double sx = std::sqrt(ms::mean_x2(orb) - m * m);
            double sk = std::sqrt(ms::variance_k(orb));
            double ix = ms::fisher_x(orb);
            double ik = ms::fisher_k(orb);
            double nx = ms::nongaussianity_x(orb);
            double nk = ms::nongaussianity_k(orb);
            if (sx < p_sx || sk > p_sk || ix > p_ix || ik < p_ik ||
                nx > p_nx + 1e-12 || nk > p_nk + 1e-9) {
                ++bad;
                detail = "ordering broken at a=" + std::to_string(a);
            }
            p_sx = sx; p_sk = sk; p_ix = ix; p_ik = ik; p_nx = nx; p_nk = nk;
        }
        return static_cast<double>(bad);
    });

    if (!quick) {
        c.run("asymptote-conformance", 0.0, [&](std::string& detail) {
            int bad = 0;
            double a = 1e4;
            double sq = std::sqrt(a);
            qm::Orbital orb{cl::PhoModel(a), 0};
            auto expect = [&](double value, double leading, double next,
                              const std::string& what) {
                // deviation from the leading asymptote must stay below the
                // magnitude of the first omitted term
                if (std::fabs(value - leading) > std::fabs(next)) {
                    ++bad;
                    detail = what;
                }
            };
            double m = ms::mean_x(orb);
            double sx2 = ms::mean_x2(orb) - m * m;
            // omitted-term magnitudes pinned against 40-digit evaluations
            expect(sx2, 0.5 * (1.0 - 1.0 / (8.0 * sq)), 1.15 * 3.0 / (64.0 * a),
                   "sigma_x^2");
            double heis = std::sqrt(sx2 * ms::variance_k(orb));
            expect(heis, 0.5 * (1.0 + 1.0 / (16.0 * sq)), 1.5 * 15.0 / (1024.0 * a),
                   "heisenberg");
            expect(ms::shannon_x(orb), 0.5 * (1.0 + kLnPi) - 1.0 / (12.0 * sq),
                   1.0 / (24.0 * a), "shannon_x");
            expect(ms::nongaussianity_x(orb), 1.0 / (48.0 * sq), 17.0 / (768.0 * a), "ng_x");
            // next order carries another a^{-1/2} and one more log factor
            expect(ms::nongaussianity_q(orb),
                   (0.5 * std::log(a) + 5.0 * std::log(2.0) + 1.0) / (32.0 * sq),
                   std::log(a) / (16.0 * a), "ng_q");
            expect(ms::alpha_threshold(orb.model), 1.0 / (2.0 * sq), 0.75 / a, "alpha_th");
            return static_cast<double>(bad);
        });
    }

    return c.report;
}

}
