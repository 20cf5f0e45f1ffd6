#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pho/quadrature.hpp"

namespace pho::sweep {

inline constexpr const char* kSchemaVersion = "pho-csv-1";

struct SweepConfig {
    std::vector<double> a_values{0.0, 1.0, 100.0};
    std::vector<int> n_values{0};
    std::vector<double> alpha_values;
    std::vector<double> energy_values{1.0};  // units of D_omega
    quad::QuadratureSpec quad;
    std::string format = "csv";  // csv | json
    std::string out_path;        // empty: stdout
};

// One output cell: a number, a flag string, or empty.
struct Cell {
    enum class Kind { number, text, empty } kind = Kind::empty;
    double number = 0.0;
    std::string text;

    static Cell num(double v) { return {Kind::number, v, {}}; }
    static Cell str(std::string s) { return {Kind::text, 0.0, std::move(s)}; }
    static Cell none() { return {}; }
};

struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    std::vector<std::string> meta;  // echoed into the output header
};

// Table builders; rows are computed on a worker pool and assembled in
// deterministic input order. Invalid configs throw std::invalid_argument.
Table spectrum_table(const SweepConfig& config);
Table classical_table(const SweepConfig& config);
Table measures_table(const SweepConfig& config);
Table renyi_table(const SweepConfig& config);

// 17 significant digits, '#'-prefixed metadata header.
void write_csv(const Table& table, std::ostream& os);
// {"meta": {...}, "rows": [...]}; numbers as doubles, flags as strings.
void write_json(const Table& table, std::ostream& os);

// Writes per config.format / config.out_path; returns the path actually
// used ("-" for stdout).
std::string write_table(const Table& table, const SweepConfig& config);

// "lo:hi:count" log-spaced values (inclusive endpoints).
std::vector<double> parse_log_range(const std::string& text);
// "lo:hi:count" linear values.
std::vector<double> parse_linear_range(const std::string& text);

// Flat "key = value" config file ('#' comments, blank lines ignored).
// Returns the raw key/value pairs; malformed lines throw
// std::invalid_argument.
std::vector<std::pair<std::string, std::string>> read_flat_config(
    const std::string& path);

}
