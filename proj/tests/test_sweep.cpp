#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "pho/sweep.hpp"

#include <json.hpp>

using namespace pho;
namespace sw = pho::sweep;

namespace {
double cell_num(const sw::Table& t, int row, const std::string& col) {
    for (size_t i = 0; i < t.columns.size(); ++i)
        if (t.columns[i] == col) {
            REQUIRE(t.rows[row][i].kind == sw::Cell::Kind::number);
            return t.rows[row][i].number;
        }
    FAIL("no column ", col);
    return 0.0;
}

const sw::Cell& cell(const sw::Table& t, int row, const std::string& col) {
    for (size_t i = 0; i < t.columns.size(); ++i)
        if (t.columns[i] == col) return t.rows[row][i];
    static sw::Cell dummy;
    FAIL("no column ", col);
    return dummy;
}
}

TEST_CASE("spectrum table anchors") {
    sw::SweepConfig cfg;
    cfg.a_values = {0.0};
    cfg.n_values = {0, 1, 2, 3};
    auto t = sw::spectrum_table(cfg);
    REQUIRE(t.rows.size() == 4);
    CHECK(cell_num(t, 0, "energy_hw") == doctest::Approx(1.5));
    CHECK(cell_num(t, 1, "energy_hw") == doctest::Approx(3.5));
    CHECK(cell_num(t, 2, "energy_hw") == doctest::Approx(5.5));
    CHECK(cell_num(t, 3, "energy_hw") == doctest::Approx(7.5));

    cfg.a_values = {6.0};
    cfg.n_values = {0};
    auto t6 = sw::spectrum_table(cfg);
    CHECK(cell_num(t6, 0, "energy_hw") ==
          doctest::Approx(3.5 - std::sqrt(6.0)));
}

TEST_CASE("config validation errors") {
    sw::SweepConfig cfg;
    cfg.n_values = {};
    CHECK_THROWS_AS(sw::spectrum_table(cfg), std::invalid_argument);
    cfg = {};
    cfg.a_values = {-1.0};
    CHECK_THROWS_AS(sw::measures_table(cfg), std::invalid_argument);
    cfg = {};
    cfg.format = "xml";
    CHECK_THROWS_AS(sw::spectrum_table(cfg), std::invalid_argument);
    cfg = {};
    cfg.energy_values = {-2.0};
    CHECK_THROWS_AS(sw::classical_table(cfg), std::invalid_argument);
    cfg = {};
    cfg.alpha_values = {};
    CHECK_THROWS_AS(sw::renyi_table(cfg), std::invalid_argument);
}

TEST_CASE("classical table rows") {
    sw::SweepConfig cfg;
    cfg.a_values = {0.0, 1.0};
    cfg.energy_values = {1.0};
    auto t = sw::classical_table(cfg);
    REQUIRE(t.rows.size() == 2);
    CHECK(cell_num(t, 0, "x_minus") == doctest::Approx(0.0));
    CHECK(cell_num(t, 0, "x_plus") == doctest::Approx(1.0));
    CHECK(cell_num(t, 0, "period") == doctest::Approx(3.14159265).epsilon(1e-8));
    CHECK(cell_num(t, 1, "symmetry_r") > 0.0);
    CHECK(cell_num(t, 1, "avg_speed") == doctest::Approx(2.0 / 3.14159265358979));
}

TEST_CASE("measures table reproduces the HHO anchor row") {
    sw::SweepConfig cfg;
    cfg.a_values = {0.0};
    cfg.n_values = {0};
    auto t = sw::measures_table(cfg);
    REQUIRE(t.rows.size() == 1);
    CHECK(cell_num(t, 0, "sigma_x") == doctest::Approx(0.6734).epsilon(2e-4));
    CHECK(cell_num(t, 0, "sigma_k") == doctest::Approx(0.8660).epsilon(2e-4));
    CHECK(cell_num(t, 0, "heisenberg") == doctest::Approx(0.5832).epsilon(2e-4));
    CHECK(cell_num(t, 0, "shannon_x") == doctest::Approx(0.9961).epsilon(2e-4));
    CHECK(cell_num(t, 0, "fisher_x") == doctest::Approx(3.0));
    CHECK(cell_num(t, 0, "fisher_k") == doctest::Approx(1.518).epsilon(1e-3));
    CHECK(cell_num(t, 0, "onicescu_x") == doctest::Approx(0.4231).epsilon(1e-3));
    CHECK(cell_num(t, 0, "onicescu_k") == doctest::Approx(0.3524).epsilon(1e-3));
    CHECK(cell_num(t, 0, "ng_x") == doctest::Approx(0.02742).epsilon(2e-3));
    CHECK(cell_num(t, 0, "ng_k") == doctest::Approx(0.04095).epsilon(2e-2));
    CHECK(cell_num(t, 0, "ng_q") == doctest::Approx(0.2934).epsilon(1e-3));
    // excited rows leave the ground-only measures empty
    cfg.n_values = {1};
    auto t1 = sw::measures_table(cfg);
    CHECK(cell(t1, 0, "ng_x").kind == sw::Cell::Kind::empty);
}

TEST_CASE("renyi table flags and saturation row") {
    sw::SweepConfig cfg;
    cfg.a_values = {0.0};
    cfg.n_values = {0};
    cfg.alpha_values = {0.2, 0.5, 2.0};
    auto t = sw::renyi_table(cfg);
    REQUIRE(t.rows.size() == 3);
    // below the quarter threshold: divergent momentum, no numbers
    CHECK(cell(t, 0, "flags").text.find("divergent-momentum") != std::string::npos);
    CHECK(cell(t, 0, "renyi_k").kind == sw::Cell::Kind::empty);
    // alpha = 1/2: the saturated pair sums to ln(2 pi) and the gap closes
    CHECK(cell_num(t, 1, "renyi_x") + cell_num(t, 1, "renyi_k") ==
          doctest::Approx(std::log(2.0 * 3.14159265358979324)).epsilon(1e-6));
    CHECK(cell_num(t, 1, "delta_renyi") == doctest::Approx(0.0).epsilon(1e-8));
    CHECK(cell(t, 1, "beta").text == "inf");
    // regular interior row
    CHECK(cell(t, 2, "flags").text == "ok");
    CHECK(cell_num(t, 2, "beta") == doctest::Approx(2.0 / 3.0));
    CHECK(cell_num(t, 2, "delta_renyi") > 0.0);
}

TEST_CASE("csv output is deterministic and carries the schema header") {
    sw::SweepConfig cfg;
    cfg.a_values = {0.0, 2.5};
    cfg.n_values = {0, 1};
    auto t = sw::measures_table(cfg);
    std::ostringstream s1, s2;
    sw::write_csv(t, s1);
    sw::write_csv(sw::measures_table(cfg), s2);
    CHECK(s1.str() == s2.str());
    CHECK(s1.str().rfind("# pho-csv-1", 0) == 0);
    CHECK(s1.str().find("sigma_x") != std::string::npos);
}

TEST_CASE("json output structure") {
    sw::SweepConfig cfg;
    cfg.a_values = {1.0};
    cfg.n_values = {0};
    cfg.alpha_values = {0.5};
    auto t = sw::renyi_table(cfg);
    std::ostringstream os;
    sw::write_json(t, os);
    auto doc = nlohmann::json::parse(os.str());
    CHECK(doc.contains("meta"));
    CHECK(doc.contains("rows"));
    CHECK(doc["meta"]["schema"] == "pho-csv-1");
    REQUIRE(doc["rows"].size() == 1);
    CHECK(doc["rows"][0]["alpha"] == doctest::Approx(0.5));
    CHECK(doc["rows"][0]["beta"] == "inf");
    CHECK(doc["rows"][0]["delta_tsallis"].is_number());
}

TEST_CASE("range parsers") {
    auto lg = sw::parse_log_range("0.01:100:5");
    REQUIRE(lg.size() == 5);
    CHECK(lg.front() == doctest::Approx(0.01));
    CHECK(lg.back() == doctest::Approx(100.0));
    CHECK(lg[2] == doctest::Approx(1.0));
    auto ln = sw::parse_linear_range("0.5:1.5:3");
    REQUIRE(ln.size() == 3);
    CHECK(ln[1] == doctest::Approx(1.0));
    CHECK_THROWS_AS(sw::parse_log_range("nope"), std::invalid_argument);
    CHECK_THROWS_AS(sw::parse_log_range("-1:10:3"), std::invalid_argument);
    CHECK_THROWS_AS(sw::parse_linear_range("3:1:2"), std::invalid_argument);
}

TEST_CASE("file output round trip is byte-identical") {
    sw::SweepConfig cfg;
    cfg.a_values = {0.0, 1.0};
    cfg.n_values = {0};
    cfg.out_path = "sweep_det_a.csv";
    sw::write_table(sw::measures_table(cfg), cfg);
    cfg.out_path = "sweep_det_b.csv";
    sw::write_table(sw::measures_table(cfg), cfg);
    std::ifstream fa("sweep_det_a.csv"), fb("sweep_det_b.csv");
    std::stringstream sa, sb;
    sa << fa.rdbuf();
    sb << fb.rdbuf();
    REQUIRE(!sa.str().empty());
    CHECK(sa.str() == sb.str());
    std::remove("sweep_det_a.csv");
    std::remove("sweep_det_b.csv");
}
