#include "pho/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "pho/errors.hpp"

namespace pho::oracle {

namespace {

namespace cl = pho::classical;

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kX2 = cl::kX2Omega;
constexpr double kLnX2 = -0.34657359027997265470861606072908828;

double potential_abs(const cl::PhoModel& model, double x) {
    return cl::kDOmega * cl::potential(model, x);
}

// Number of eigenvalues of the symmetric tridiagonal (d, e) below lambda,
// via the Sturm sequence of the LDL^T pivots.
int sturm_count(const std::vector<double>& d, double e2, double lambda) {
    int count = 0;
    double q = d[0] - lambda;
    if (q < 0.0) ++count;
    for (size_t i = 1; i < d.size(); ++i) {
        double denom = q;
        if (std::fabs(denom) < 1e-300) denom = denom < 0.0 ? -1e-300 : 1e-300;
        q = (d[i] - lambda) - e2 / denom;
        if (q < 0.0) ++count;
    }
    return count;
}

// Inverse iteration for the eigenvector at an isolated eigenvalue.
// Tridiagonal LU with partial pivoting; the swap step creates one extra
// superdiagonal of fill.
std::vector<double> inverse_iteration(const std::vector<double>& d_in, double e,
                                      double lambda) {
    int n = static_cast<int>(d_in.size());
    std::vector<double> dd(n), du(n, e), du2(n, 0.0), l(n, 0.0);
    std::vector<char> pivot(n, 0);
    for (int i = 0; i < n; ++i) dd[i] = d_in[i] - lambda;
    du[n - 1] = 0.0;

    for (int i = 0; i < n - 1; ++i) {
        if (std::fabs(dd[i]) >= std::fabs(e)) {
            double piv = dd[i] != 0.0 ? dd[i] : 1e-300;
            double m = e / piv;
            l[i] = m;
            dd[i + 1] -= m * du[i];
            if (du2[i] != 0.0) du[i + 1] -= m * du2[i];
        } else {
            // swap rows i and i+1, then eliminate
            double m = dd[i] / e;
            l[i] = m;
            pivot[i] = 1;
            double old_u = du[i];
            double old_u2 = du2[i];
            dd[i] = e;
            du[i] = dd[i + 1];
            du2[i] = du[i + 1];
            dd[i + 1] = old_u - m * du[i];
            du[i + 1] = old_u2 - m * du2[i];
        }
    }
    if (dd[n - 1] == 0.0) dd[n - 1] = 1e-300;

    std::vector<double> v(n);
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> uni(0.1, 1.0);
    for (double& x : v) x = uni(rng);

    for (int iter = 0; iter < 3; ++iter) {
        for (int i = 0; i < n - 1; ++i) {
            if (pivot[i]) std::swap(v[i], v[i + 1]);
            v[i + 1] -= l[i] * v[i];
        }
        v[n - 1] /= dd[n - 1];
        if (n >= 2) v[n - 2] = (v[n - 2] - du[n - 2] * v[n - 1]) / dd[n - 2];
        for (int i = n - 3; i >= 0; --i)
            v[i] = (v[i] - du[i] * v[i + 1] - du2[i] * v[i + 2]) / dd[i];
        double norm = std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
        for (double& x : v) x /= norm;
    }
    return v;
}

std::vector<double> simpson_weights(int n_points, double h) {
    // composite Simpson over samples that include both (zero) walls,
    // with a 3/8 patch when the interval count is odd; the wall weights
    // are dropped since psi vanishes there.
    int total = n_points + 2;
    std::vector<double> w(total, 0.0);
    bool leftover = ((total - 1) % 2) != 0;
    int simpson_end = leftover ? total - 4 : total - 1;
    for (int s = 0; s + 2 <= simpson_end; s += 2) {
        w[s] += h / 3.0;
        w[s + 1] += 4.0 * h / 3.0;
        w[s + 2] += h / 3.0;
    }
    if (leftover) {
        int s = total - 4;
        w[s] += 3.0 * h / 8.0;
        w[s + 1] += 9.0 * h / 8.0;
        w[s + 2] += 9.0 * h / 8.0;
        w[s + 3] += 3.0 * h / 8.0;
    }
    return std::vector<double>(w.begin() + 1, w.end() - 1);
}

}  // namespace

GridSpec GridSpec::standard(const cl::PhoModel& model, int n_max, int points) {
    GridSpec g;
    g.points = points;
    g.x_min = model.a > 0.0 ? 1e-3 * model.x_z : 0.0;
    double e_top = 2.0 * (2.0 * (n_max + 2) + 1.0 + model.eta - std::sqrt(model.a));
    cl::ClassicalState top{model, std::max(e_top, 1.0)};
    auto [xm, xp] = cl::turning_points(top);
    (void)xm;
    g.x_max = xp + 8.0;
    return g;
}

std::vector<EigenState> fd_eigensolve(const cl::PhoModel& model, int n_max,
                                      const GridSpec& grid) {
    if (n_max < 0 || n_max > 10)
        throw domain_error("fd_eigensolve: supports 0 <= n_max <= 10");
    if (grid.points < 64) throw grid_error("fd_eigensolve: grid too coarse");
    int n = grid.points;
    double h = grid.step();
    double e = -0.5 / (h * h);
    double e2 = e * e;
    std::vector<double> d(n);
    for (int i = 0; i < n; ++i)
        d[i] = 1.0 / (h * h) + potential_abs(model, grid.x_at(i));

    double dmin = *std::min_element(d.begin(), d.end());
    double dmax = *std::max_element(d.begin(), d.end());
    std::vector<EigenState> states;
    states.reserve(n_max + 1);
    for (int level = 0; level <= n_max; ++level) {
        double lo = dmin + 2.0 * e;  // e < 0
        double hi = dmax - 2.0 * e;
        // bisection on the Sturm count
        for (int it = 0; it < 200 && (hi - lo) > 1e-15 * std::max(1.0, std::fabs(hi)); ++it) {
            double mid = 0.5 * (lo + hi);
            if (sturm_count(d, e2, mid) >= level + 1)
                hi = mid;
            else
                lo = mid;
        }
        double lambda = 0.5 * (lo + hi);
        std::vector<double> v = inverse_iteration(d, e, lambda);
        // trapezoid normalization (walls are zero)
        double norm = std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0) * h);
        for (double& x : v) x /= norm;
        // sign convention: positive on the inner flank
        double lead = 0.0;
        for (int i = 0; i < n / 8 + 1; ++i) lead += v[i];
        if (lead < 0.0)
            for (double& x : v) x = -x;
        states.push_back({lambda, std::move(v)});
    }
    return states;
}

std::vector<double> fd_energies_richardson(const cl::PhoModel& model, int n_max,
                                           const GridSpec& grid,
                                           double* max_residual) {
    GridSpec fine = grid;
    fine.points = 2 * grid.points + 1;
    auto coarse_states = fd_eigensolve(model, n_max, grid);
    auto fine_states = fd_eigensolve(model, n_max, fine);
    std::vector<double> energies(n_max + 1);
    double worst = 0.0;
    for (int i = 0; i <= n_max; ++i) {
        double eh = coarse_states[i].energy;
        double eh2 = fine_states[i].energy;
        energies[i] = (4.0 * eh2 - eh) / 3.0;
        double res = std::fabs(eh2 - eh) / 3.0;
        worst = std::max(worst, res / std::max(1.0, std::fabs(energies[i])));
    }
    if (max_residual) *max_residual = worst;
    if (worst > 1e-4)
        throw grid_error("fd_energies_richardson: residual above tolerance; refine the grid");
    return energies;
}

std::vector<std::complex<double>> numeric_fourier(
    const std::vector<double>& psi_grid, const GridSpec& grid,
    const std::vector<double>& k_grid) {
    int n = static_cast<int>(psi_grid.size());
    if (n != grid.points)
        throw domain_error("numeric_fourier: grid/psi size mismatch");
    double h = grid.step();
    std::vector<double> w = simpson_weights(n, h);
    const double pref = 1.0 / std::sqrt(2.0 * kPi);
    std::vector<std::complex<double>> out;
    out.reserve(k_grid.size());
    for (double k : k_grid) {
        double re = 0.0, im = 0.0;
        for (int i = 0; i < n; ++i) {
            double x = grid.x_at(i);
            double wf = w[i] * psi_grid[i];
            re += wf * std::cos(k * x);
            im -= wf * std::sin(k * x);
        }
        out.emplace_back(pref * re, pref * im);
    }
    return out;
}

measures::MeasureReport report_from_grid(const cl::PhoModel& model, int n,
                                         const GridSpec& grid) {
    auto states = fd_eigensolve(model, n, grid);
    const std::vector<double>& psi = states[n].psi;
    int m = grid.points;
    double h = grid.step();
    std::vector<double> w = simpson_weights(m, h);

    auto x_at = [&](int i) { return grid.x_at(i); };
    double mean = 0.0, x2 = 0.0, sx = 0.0, ox = 0.0;
    for (int i = 0; i < m; ++i) {
        double r = psi[i] * psi[i];
        mean += w[i] * x_at(i) * r;
        x2 += w[i] * x_at(i) * x_at(i) * r;
        if (r > 1e-300) sx -= w[i] * r * std::log(r);
        ox += w[i] * r * r;
    }

    // int psi'^2 dx: central differences inside, one-sided at the left
    // wall where psi' need not vanish (it does not at a = 0)
    double dpsi2 = 0.0;
    for (int i = 0; i < m; ++i) {
        double up = i + 1 < m ? psi[i + 1] : 0.0;
        double dn = i >= 1 ? psi[i - 1] : 0.0;
        double der = (up - dn) / (2.0 * h);
        dpsi2 += w[i] * der * der;
    }
    double der_wall = (4.0 * psi[0] - psi[1]) / (2.0 * h);
    dpsi2 += (h / 3.0) * der_wall * der_wall;  // Simpson wall weight
    double ix = 4.0 * dpsi2;                   // position Fisher, natural units
    double k2 = dpsi2;                         // <k^2> via the position identity

    // momentum side from the discrete Fourier transform; the density
    // derivative comes from a second transform (of x psi), not from
    // finite differences in k
    double k_span = 14.0 * std::sqrt(k2);
    int nk = 4097;
    std::vector<double> k_grid(nk);
    double hk = 2.0 * k_span / (nk - 1);
    for (int i = 0; i < nk; ++i) k_grid[i] = -k_span + i * hk;
    auto phi = numeric_fourier(psi, grid, k_grid);
    std::vector<double> xpsi(m);
    for (int i = 0; i < m; ++i) xpsi[i] = x_at(i) * psi[i];
    auto phid = numeric_fourier(xpsi, grid, k_grid);

    auto wk = [&](int i) {
        if (i == 0 || i == nk - 1) return hk / 3.0;
        return (i % 2 == 1) ? 4.0 * hk / 3.0 : 2.0 * hk / 3.0;
    };
    double sk = 0.0, okk = 0.0, ik = 0.0;
    for (int i = 0; i < nk; ++i) {
        double g = std::norm(phi[i]);
        if (g > 1e-300) sk -= wk(i) * g * std::log(g);
        okk += wk(i) * g * g;
        double dr = phid[i].imag();   // dPhi_re/dk = -pref int x psi sin
        double di = -phid[i].real();  // dPhi_im/dk = -pref int x psi cos
        double dg = 2.0 * (phi[i].real() * dr + phi[i].imag() * di);
        if (g > 1e-280) ik += wk(i) * dg * dg / g;
    }

    // beyond the window the density follows gamma ~ C k^-(2eta+3); fit C
    // at the edge and append the closed-form tails (both sides)
    double mpow = 2.0 * model.eta + 3.0;
    double g_edge = 0.5 * (std::norm(phi[0]) + std::norm(phi[nk - 1]));
    double c_fit = g_edge * std::pow(k_span, mpow);
    if (c_fit > 0.0 && k_span > 1.0) {
        double km1 = mpow - 1.0;
        double kpow = std::pow(k_span, 1.0 - mpow);
        double lnK = std::log(k_span);
        // -g ln g = C k^-m (m ln k - ln C)
        sk += 2.0 * c_fit * kpow *
              (mpow * (lnK / km1 + 1.0 / (km1 * km1)) - std::log(c_fit) / km1);
        okk += 2.0 * c_fit * c_fit * std::pow(k_span, 1.0 - 2.0 * mpow) /
               (2.0 * mpow - 1.0);
        ik += 2.0 * mpow * mpow * c_fit * kpow / (km1 + 2.0) /
              (k_span * k_span);
    }

    measures::MeasureReport r;
    r.a = model.a;
    r.n = n;
    r.mean_x = mean / kX2;
    r.sigma_x = std::sqrt(x2 - mean * mean) / kX2;
    r.sigma_k = std::sqrt(k2) * kX2;
    r.heisenberg_product = r.sigma_x * r.sigma_k;
    r.shannon_x = sx - kLnX2;
    r.shannon_k = sk + kLnX2;
    r.shannon_sum = r.shannon_x + r.shannon_k;
    r.fisher_x = ix * kX2 * kX2;
    r.fisher_k = ik / (kX2 * kX2);
    r.onicescu_x = ox * kX2;
    r.onicescu_k = okk / kX2;
    if (n == 0) {
        const double ln2pi = 1.83787706640934548356065947281123527;
        r.ng_x = 0.5 * (1.0 + ln2pi) + std::log(r.sigma_x) - r.shannon_x;
        r.ng_k = 0.5 * (1.0 + ln2pi) + std::log(r.sigma_k) - r.shannon_k;
        r.ng_q = measures::h_function(r.heisenberg_product);
    }
    return r;
}

namespace {
void push_check(Discrepancy& d, const std::string& name, double a, double b,
                double tol, double scale_floor = 1e-3) {
    if (std::isnan(a) && std::isnan(b)) return;
    FieldCheck c;
    c.field = name;
    c.analytic = a;
    c.oracle = b;
    double scale = std::max({std::fabs(a), std::fabs(b), scale_floor});
    c.rel_diff = std::fabs(a - b) / scale;
    c.tol = tol;
    c.pass = c.rel_diff <= tol && !std::isnan(a) && !std::isnan(b);
    if (!c.pass) d.pass = false;
    if (c.rel_diff > d.worst_rel) {
        d.worst_rel = c.rel_diff;
        d.worst_field = name;
    }
    d.fields.push_back(std::move(c));
}
}  // namespace

Discrepancy compare_report(const measures::MeasureReport& analytic,
                           const measures::MeasureReport& oracle,
                           const TolProfile& profile) {
    if (analytic.a != oracle.a || analytic.n != oracle.n)
        throw domain_error("compare_report: reports describe different orbitals");
    Discrepancy d;
    push_check(d, "mean_x", analytic.mean_x, oracle.mean_x, profile.deviations);
    push_check(d, "sigma_x", analytic.sigma_x, oracle.sigma_x, profile.deviations);
    push_check(d, "sigma_k", analytic.sigma_k, oracle.sigma_k, profile.deviations);
    push_check(d, "heisenberg_product", analytic.heisenberg_product,
               oracle.heisenberg_product, profile.deviations);
    push_check(d, "shannon_x", analytic.shannon_x, oracle.shannon_x, profile.entropies);
    push_check(d, "shannon_k", analytic.shannon_k, oracle.shannon_k, profile.entropies);
    push_check(d, "fisher_x", analytic.fisher_x, oracle.fisher_x, profile.fisher);
    push_check(d, "fisher_k", analytic.fisher_k, oracle.fisher_k, profile.fisher);
    push_check(d, "onicescu_x", analytic.onicescu_x, oracle.onicescu_x, profile.onicescu);
    push_check(d, "onicescu_k", analytic.onicescu_k, oracle.onicescu_k, profile.onicescu);
    // non-Gaussianities are small entropy differences: compare on an
    // absolute footing with the entropies' own error budget
    push_check(d, "ng_x", analytic.ng_x, oracle.ng_x, profile.nongaussianity, 1.0);
    push_check(d, "ng_k", analytic.ng_k, oracle.ng_k, profile.nongaussianity, 1.0);
    push_check(d, "ng_q", analytic.ng_q, oracle.ng_q, profile.nongaussianity, 1.0);
    return d;
}

}
