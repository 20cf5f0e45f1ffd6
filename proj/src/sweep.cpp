#include "pho/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "pho/classical.hpp"
#include "pho/errors.hpp"
#include "pho/measures.hpp"
#include "pho/quantum.hpp"

namespace pho::sweep {

namespace {

namespace cl = pho::classical;
namespace qm = pho::quantum;
namespace ms = pho::measures;

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// Deterministic parallel map: worker pool fills a pre-sized row vector,
// so completion order never shows in the output.
template <typename Fn>
std::vector<std::vector<Cell>> parallel_rows(int count, Fn&& fn) {
    std::vector<std::vector<Cell>> rows(count);
    std::atomic<int> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    int workers = std::max(1u, std::min(std::thread::hardware_concurrency(),
                                        static_cast<unsigned>(count)));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            for (;;) {
                int i = next.fetch_add(1);
                if (i >= count || failed.load()) return;
                try {
                    rows[i] = fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                    failed.store(true);
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    return rows;
}

void require_axis(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(std::string("sweep config: ") + what);
}

void validate_common(const SweepConfig& config) {
    require_axis(!config.a_values.empty(), "need at least one a value");
    for (double a : config.a_values)
        require_axis(a >= 0.0 && std::isfinite(a), "a values must be finite and >= 0");
    require_axis(config.format == "csv" || config.format == "json",
                 "format must be csv or json");
}

std::vector<std::string> base_meta(const SweepConfig& config) {
    std::vector<std::string> meta;
    meta.push_back(std::string("schema ") + kSchemaVersion);
    meta.push_back("units hbar=m=omega=1; lengths in x_2omega unless noted");
    std::ostringstream echo;
    echo << "config a=[";
    for (size_t i = 0; i < config.a_values.size(); ++i)
        echo << (i ? "," : "") << format_number(config.a_values[i]);
    echo << "] n=[";
    for (size_t i = 0; i < config.n_values.size(); ++i)
        echo << (i ? "," : "") << config.n_values[i];
    echo << "] rel_tol=" << format_number(config.quad.rel_tol);
    meta.push_back(echo.str());
    return meta;
}

}  // namespace

std::vector<double> parse_log_range(const std::string& text) {
    double lo, hi;
    int count;
    if (std::sscanf(text.c_str(), "%lf:%lf:%d", &lo, &hi, &count) != 3 ||
        count < 1 || lo <= 0.0 || hi < lo)
        throw std::invalid_argument("log range must be lo:hi:count with 0 < lo <= hi");
    std::vector<double> v;
    if (count == 1) return {lo};
    double step = (std::log(hi) - std::log(lo)) / (count - 1);
    for (int i = 0; i < count; ++i) v.push_back(std::exp(std::log(lo) + i * step));
    return v;
}

std::vector<double> parse_linear_range(const std::string& text) {
    double lo, hi;
    int count;
    if (std::sscanf(text.c_str(), "%lf:%lf:%d", &lo, &hi, &count) != 3 || count < 1 ||
        hi < lo)
        throw std::invalid_argument("range must be lo:hi:count");
    if (count == 1) return {lo};
    std::vector<double> v;
    double step = (hi - lo) / (count - 1);
    for (int i = 0; i < count; ++i) v.push_back(lo + i * step);
    return v;
}

std::vector<std::pair<std::string, std::string>> read_flat_config(
    const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open config file " + path);
    std::vector<std::pair<std::string, std::string>> entries;
    std::string line;
    int line_no = 0;
    auto trim = [](std::string s) {
        size_t b = s.find_first_not_of(" \t\r");
        size_t e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    while (std::getline(f, line)) {
        ++line_no;
        std::string t = trim(line.substr(0, line.find('#')));
        if (t.empty()) continue;
        size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument(path + ":" + std::to_string(line_no) +
                                        ": expected key = value");
        std::string key = trim(t.substr(0, eq));
        std::string value = trim(t.substr(eq + 1));
        if (key.empty())
            throw std::invalid_argument(path + ":" + std::to_string(line_no) +
                                        ": empty key");
        entries.emplace_back(key, value);
    }
    return entries;
}

Table spectrum_table(const SweepConfig& config) {
    validate_common(config);
    require_axis(!config.n_values.empty(), "need at least one n value");
    for (int n : config.n_values) require_axis(n >= 0, "n values must be >= 0");
    Table t;
    t.name = "spectrum";
    t.columns = {"a", "n", "energy_hw"};
    t.meta = base_meta(config);
    t.meta.push_back("energy_hw: E_n in units of hbar*omega (exact closed form)");
    for (double a : config.a_values) {
        cl::PhoModel model(a);
        for (int n : config.n_values)
            t.rows.push_back({Cell::num(a), Cell::num(n),
                              Cell::num(qm::energy({model, n}))});
    }
    return t;
}

Table classical_table(const SweepConfig& config) {
    validate_common(config);
    require_axis(!config.energy_values.empty(), "need at least one energy value");
    for (double e : config.energy_values)
        require_axis(e > 0.0, "energies must be positive (units of D_omega)");
    Table t;
    t.name = "classical";
    t.columns = {"a", "energy_d", "x_minus", "x_plus", "symmetry_r", "period",
                 "avg_speed"};
    t.meta = base_meta(config);
    t.meta.push_back("x in x_omega units; energy in D_omega units");
    for (double a : config.a_values) {
        cl::PhoModel model(a);
        for (double e : config.energy_values) {
            cl::ClassicalState s{model, e};
            auto [xm, xp] = cl::turning_points(s);
            t.rows.push_back({Cell::num(a), Cell::num(e), Cell::num(xm), Cell::num(xp),
                              Cell::num(cl::symmetry_ratio(s)),
                              Cell::num(cl::period(model)),
                              Cell::num(cl::average_speed(s))});
        }
    }
    return t;
}

Table measures_table(const SweepConfig& config) {
    validate_common(config);
    require_axis(!config.n_values.empty(), "need at least one n value");
    for (int n : config.n_values) require_axis(n >= 0, "n values must be >= 0");
    Table t;
    t.name = "measures";
    t.columns = {"a",          "n",          "mean_x",     "sigma_x",
                 "sigma_k",    "heisenberg", "shannon_x",  "shannon_k",
                 "shannon_sum", "fisher_x",  "fisher_k",   "fisher_product",
                 "onicescu_x", "onicescu_k", "onicescu_product",
                 "ng_x",       "ng_k",       "ng_q"};
    t.meta = base_meta(config);
    t.meta.push_back("dimensionless per x_2omega scalings; ng_* ground level only");

    struct Key {
        double a;
        int n;
    };
    std::vector<Key> keys;
    for (double a : config.a_values)
        for (int n : config.n_values) keys.push_back({a, n});

    t.rows = parallel_rows(static_cast<int>(keys.size()), [&](int i) {
        auto [a, n] = keys[i];
        qm::Orbital orb{cl::PhoModel(a), n};
        auto r = ms::measure_report(orb, config.quad);
        auto opt = [](double v) {
            return std::isnan(v) ? Cell::none() : Cell::num(v);
        };
        return std::vector<Cell>{
            Cell::num(a), Cell::num(n), Cell::num(r.mean_x), Cell::num(r.sigma_x),
            Cell::num(r.sigma_k), Cell::num(r.heisenberg_product),
            Cell::num(r.shannon_x), Cell::num(r.shannon_k), Cell::num(r.shannon_sum),
            Cell::num(r.fisher_x), Cell::num(r.fisher_k),
            Cell::num(r.fisher_x * r.fisher_k), Cell::num(r.onicescu_x),
            Cell::num(r.onicescu_k), Cell::num(r.onicescu_x * r.onicescu_k),
            opt(r.ng_x), opt(r.ng_k), opt(r.ng_q)};
    });
    return t;
}

Table renyi_table(const SweepConfig& config) {
    validate_common(config);
    require_axis(!config.n_values.empty(), "need at least one n value");
    require_axis(!config.alpha_values.empty(), "need at least one alpha value");
    for (double al : config.alpha_values)
        require_axis(al > 0.0, "alpha values must be positive");
    Table t;
    t.name = "renyi";
    t.columns = {"a",        "n",        "alpha",    "beta",      "alpha_th",
                 "renyi_x",  "renyi_k",  "tsallis_x", "tsallis_k", "delta_renyi",
                 "delta_tsallis", "flags"};
    t.meta = base_meta(config);
    t.meta.push_back(
        "renyi_k/tsallis_k at the conjugate beta when alpha >= 1/2, at alpha "
        "otherwise; momentum cells empty when the integral diverges");

    struct Key {
        double a;
        int n;
        double alpha;
    };
    std::vector<Key> keys;
    for (double a : config.a_values)
        for (int n : config.n_values)
            for (double al : config.alpha_values) keys.push_back({a, n, al});

    t.rows = parallel_rows(static_cast<int>(keys.size()), [&](int i) {
        auto [a, n, alpha] = keys[i];
        cl::PhoModel model(a);
        qm::Orbital orb{model, n};
        auto q = ms::RenyiQuery::make(model, alpha);
        std::string flags;
        auto add_flag = [&](const char* f) {
            if (!flags.empty()) flags += "+";
            flags += f;
        };

        bool is_shannon = std::fabs(alpha - 1.0) <= 1e-12;
        double rx = is_shannon ? ms::shannon_x(orb, config.quad)
                               : ms::renyi_x(orb, alpha, config.quad);
        Cell rx_cell = Cell::num(rx);
        Cell tx_cell = is_shannon
                           ? Cell::num(rx)
                           : Cell::num((1.0 - std::exp((1.0 - alpha) * rx)) /
                                       (alpha - 1.0));
        if (is_shannon) add_flag("shannon-limit");

        // momentum side order: the conjugate when it exists, alpha itself
        // below the conjugation range
        double k_order = q.has_conjugate ? q.beta : alpha;
        if (!q.has_conjugate) add_flag("no-conjugate");
        Cell rk_cell = Cell::none(), tk_cell = Cell::none();
        Cell dr_cell = Cell::none(), dt_cell = Cell::none();
        if (std::isinf(k_order)) {
            rk_cell = Cell::num(ms::renyi_k_sup(orb));
            add_flag("beta-infinite");
        } else if (k_order <= q.threshold * (1.0 + 1e-12)) {
            add_flag("divergent-momentum");
        } else if (std::fabs(k_order - 1.0) <= 1e-12) {
            double sk = ms::shannon_k(orb, config.quad);
            rk_cell = Cell::num(sk);
            tk_cell = Cell::num(sk);
        } else {
            try {
                double rk = ms::renyi_k(orb, k_order, config.quad);
                rk_cell = Cell::num(rk);
                tk_cell = Cell::num((1.0 - std::exp((1.0 - k_order) * rk)) /
                                    (k_order - 1.0));
            } catch (const near_threshold_error&) {
                add_flag("near-threshold-unsupported");
            }
        }
        if (q.has_conjugate && rk_cell.kind == Cell::Kind::number) {
            auto gaps = ms::uncertainty_gaps(orb, alpha, config.quad);
            dr_cell = Cell::num(gaps.delta_renyi);
            dt_cell = Cell::num(gaps.delta_tsallis);
        }
        if (flags.empty()) flags = "ok";

        return std::vector<Cell>{Cell::num(a),
                                 Cell::num(n),
                                 Cell::num(alpha),
                                 q.has_conjugate && !std::isinf(q.beta)
                                     ? Cell::num(q.beta)
                                     : (q.has_conjugate ? Cell::str("inf")
                                                        : Cell::none()),
                                 Cell::num(q.threshold),
                                 rx_cell,
                                 rk_cell,
                                 tx_cell,
                                 tk_cell,
                                 dr_cell,
                                 dt_cell,
                                 Cell::str(flags)};
    });
    return t;
}

void write_csv(const Table& table, std::ostream& os) {
    os << "# " << kSchemaVersion << " table=" << table.name << "\n";
    for (const auto& m : table.meta) os << "# " << m << "\n";
    for (size_t i = 0; i < table.columns.size(); ++i)
        os << (i ? "," : "") << table.columns[i];
    os << "\n";
    for (const auto& row : table.rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) os << ",";
            switch (row[i].kind) {
                case Cell::Kind::number: os << format_number(row[i].number); break;
                case Cell::Kind::text: os << row[i].text; break;
                case Cell::Kind::empty: break;
            }
        }
        os << "\n";
    }
}

void write_json(const Table& table, std::ostream& os) {
    nlohmann::ordered_json doc;
    doc["meta"]["schema"] = kSchemaVersion;
    doc["meta"]["table"] = table.name;
    doc["meta"]["notes"] = table.meta;
    doc["meta"]["columns"] = table.columns;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json r;
        for (size_t i = 0; i < row.size(); ++i) {
            switch (row[i].kind) {
                case Cell::Kind::number: r[table.columns[i]] = row[i].number; break;
                case Cell::Kind::text: r[table.columns[i]] = row[i].text; break;
                case Cell::Kind::empty: r[table.columns[i]] = nullptr; break;
            }
        }
        rows.push_back(std::move(r));
    }
    doc["rows"] = std::move(rows);
    os << doc.dump(2) << "\n";
}

std::string write_table(const Table& table, const SweepConfig& config) {
    auto emit = [&](std::ostream& os) {
        if (config.format == "json")
            write_json(table, os);
        else
            write_csv(table, os);
    };
    if (config.out_path.empty()) {
        emit(std::cout);
        return "-";
    }
    std::ofstream f(config.out_path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file " + config.out_path);
    emit(f);
    return config.out_path;
}

}
