#include <cmath>
#include <cstddef>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "phasefront/errors.hpp"
#include "phasefront/io.hpp"

using namespace phasefront;

namespace {

std::string tmp(const std::string& name) {
    static const std::string dir = [] {
        auto p = std::filesystem::temp_directory_path() / "phasefront_io_tests";
        std::filesystem::create_directories(p);
        return p.string();
    }();
    return dir + "/" + name;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("decimal formatting round-trips every double bit for bit") {
    const std::vector<double> values = {0.0,
                                        -0.0,
                                        0.1,
                                        1.0 / 3.0,
                                        0.6469983519,
                                        3.141592653589793,
                                        -2.5e17,
                                        1e-300,
                                        5e-324,
                                        1.7976931348623157e308,
                                        -6.02e23};
    for (double v : values) {
        const std::string s = io::format_double(v);
        const double back = std::strtod(s.c_str(), nullptr);
        CHECK(std::memcmp(&back, &v, sizeof v) == 0);
    }
}

TEST_CASE("csv tables survive a write-read cycle unchanged") {
    const std::string path = tmp("table.csv");
    const std::vector<std::string> comments = {"phasefront test", "config-hash cafe"};
    const std::vector<std::string> columns = {"a", "b", "c"};
    const std::vector<std::vector<double>> rows = {{0.1, -0.0, 5e-324},
                                                   {1.0 / 3.0, 2.5e17, -1.0},
                                                   {9.0, 0.6469983519, 1e-300}};
    io::write_csv(path, comments, columns, rows);

    const auto table = io::read_csv(path);
    CHECK(table.comments == comments);
    CHECK(table.columns == columns);
    REQUIRE(table.rows.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            CHECK(std::memcmp(&table.rows[i][j], &rows[i][j], sizeof(double)) == 0);

    // identical content writes identical bytes
    const std::string path2 = tmp("table2.csv");
    io::write_csv(path2, comments, columns, rows);
    CHECK(slurp(path) == slurp(path2));
}

TEST_CASE("csv errors carry the file position and offending token") {
    const std::string wide = tmp("wide.csv");
    CHECK_THROWS_AS(io::write_csv(wide, {}, {"a", "b"}, {{1.0, 2.0, 3.0}}), ConfigError);

    const std::string bad = tmp("bad.csv");
    spit(bad, "# note\na,b\n1,2\n3,nope\n");
    try {
        io::read_csv(bad);
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(contains(e.what(), bad));
        CHECK(contains(e.what(), ":4"));
        CHECK(contains(e.what(), "nope"));
    }

    const std::string ragged = tmp("ragged.csv");
    spit(ragged, "a,b\n1,2,3\n");
    try {
        io::read_csv(ragged);
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(contains(e.what(), ":2"));
        CHECK(contains(e.what(), "expected 2 fields"));
    }

    const std::string empty = tmp("empty.csv");
    spit(empty, "# only a comment\n");
    CHECK_THROWS_AS(io::read_csv(empty), ConfigError);
    CHECK_THROWS_AS(io::read_csv(tmp("does_not_exist.csv")), ConfigError);
}

TEST_CASE("isotherm files keep their temperature and samples exactly") {
    IsothermDataset d;
    d.T = 0.9;
    d.V = {0.5, 0.75, 1.0, 1.5, 2.0};
    d.P = {1.2, 0.9, 0.64, 0.5, 0.41};
    const std::string path = tmp("isotherm.csv");
    io::write_isotherm_csv(path, d, {"deadbeef"});

    const auto back = io::read_isotherm_csv(path);
    CHECK(back.T == d.T);
    CHECK(back.V == d.V);
    CHECK(back.P == d.P);

    const auto raw = slurp(path);
    CHECK(contains(raw, "# phasefront 0.1.0"));
    CHECK(contains(raw, "# config-hash deadbeef"));
    CHECK(contains(raw, "# T="));
    CHECK(contains(raw, "V,P"));

    const std::string noT = tmp("no_temperature.csv");
    spit(noT, "V,P\n1,2\n");
    CHECK_THROWS_AS(io::read_isotherm_csv(noT), ConfigError);
    const std::string wrongcols = tmp("wrong_columns.csv");
    spit(wrongcols, "# T=1\nV,Q\n1,2\n");
    CHECK_THROWS_AS(io::read_isotherm_csv(wrongcols), ConfigError);

    IsothermDataset mismatched = d;
    mismatched.P.pop_back();
    CHECK_THROWS_AS(io::write_isotherm_csv(tmp("mismatch.csv"), mismatched, {}), ConfigError);
}

TEST_CASE("state surfaces round-trip through their json form") {
    const auto hyd = vdw_spec(hydrogen_params());
    const std::string path = tmp("hydrogen.json");
    io::save_eos(hyd, path);
    const auto back = io::load_eos(path);
    REQUIRE(back.vdw.has_value());
    CHECK(back.vdw->a == hyd.vdw->a);
    CHECK(back.vdw->b == hyd.vdw->b);
    CHECK(back.vdw->n == hyd.vdw->n);
    CHECK(back.vdw->R == hyd.vdw->R);

    const auto tab = tabulated_spec({1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0, 4.5},
                                    {0.5, 0.7, 0.9, 1.1, 1.3, 1.5, 1.7, 1.9},
                                    {1.0, 0.9, 0.8, 0.7, 0.6, 0.5, 0.4, 0.3});
    const std::string tpath = tmp("table.json");
    io::save_eos(tab, tpath);
    const auto tback = io::load_eos(tpath);
    REQUIRE(tback.table.has_value());
    CHECK(tback.table->V == tab.table->V);
    CHECK(tback.table->alpha == tab.table->alpha);
    CHECK(tback.table->f == tab.table->f);

    CHECK_THROWS_AS(io::eos_to_json(EosSpec{}), ConfigError);
    CHECK_THROWS_AS(io::eos_from_json(io::json{{"a", 1.0}}), ConfigError);
    CHECK_THROWS_AS(io::eos_from_json(io::json{{"kind", "mystery"}}), ConfigError);

    const std::string garbled = tmp("garbled.json");
    spit(garbled, "{not json");
    CHECK_THROWS_AS(io::load_eos(garbled), ConfigError);
    const std::string partial = tmp("partial.json");
    spit(partial, "{\"kind\":\"vdw\",\"a\":1.0}");
    CHECK_THROWS_AS(io::load_eos(partial), ConfigError);
}

TEST_CASE("field snapshots round-trip bitwise through the binary form") {
    FieldSolution sol;
    sol.P = {1.0, 1.5, 2.0};
    sol.T = {0.0, 0.25, 0.5, 0.75};
    sol.V = {0.1, -0.0, 5e-324, 1.0 / 3.0, 2.5e17, -1e-300,
             7.0, 0.25, 3.141592653589793, -42.0, 1e308, 2.0};
    sol.max_flux_residual = 3.5e-12;
    sol.steps_taken = 777;

    const std::string path = tmp("field.bin");
    io::write_field_binary(path, sol, {"cafe"});
    const auto back = io::read_field_binary(path);
    CHECK(back.P == sol.P);
    CHECK(back.T == sol.T);
    REQUIRE(back.V.size() == sol.V.size());
    CHECK(std::memcmp(back.V.data(), sol.V.data(), sol.V.size() * sizeof(double)) == 0);
    CHECK(back.max_flux_residual == sol.max_flux_residual);
    CHECK(back.steps_taken == sol.steps_taken);

    // identical writes, identical bytes
    const std::string path2 = tmp("field2.bin");
    io::write_field_binary(path2, sol, {"cafe"});
    CHECK(slurp(path) == slurp(path2));

    const auto size = std::filesystem::file_size(path);
    std::filesystem::resize_file(path, size - 8);
    CHECK_THROWS_AS(io::read_field_binary(path), ConfigError);

    const std::string headerless = tmp("headerless.bin");
    spit(headerless, "not json\n");
    CHECK_THROWS_AS(io::read_field_binary(headerless), ConfigError);

    // the long-form csv lists one row per node
    const std::string cpath = tmp("field.csv");
    io::write_field_csv(cpath, sol, {});
    const auto table = io::read_csv(cpath);
    CHECK(table.columns == std::vector<std::string>{"P", "T", "V"});
    REQUIRE(table.rows.size() == sol.P.size() * sol.T.size());
    CHECK(table.rows[5][0] == sol.P[1]);
    CHECK(table.rows[5][1] == sol.T[1]);
    CHECK(table.rows[5][2] == sol.value(1, 1));
}

TEST_CASE("metadata stamps appear in every emitted header") {
    const auto lines = io::header_lines({"beefcafe"});
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "phasefront 0.1.0");
    CHECK(lines[1] == "config-hash beefcafe");
    CHECK(io::header_lines({""}).size() == 1);

    const auto j = io::meta_json({"beefcafe"});
    CHECK(j.at("version").get<std::string>() == "0.1.0");
    CHECK(j.at("config_hash").get<std::string>() == "beefcafe");
}

TEST_CASE("derived-result writers emit the documented shapes") {
    ExponentEstimate est;
    est.name = "gamma";
    est.value = 0.5;
    est.std_err = 0.01;
    est.nu_lo = 1e-6;
    est.nu_hi = 1e-3;
    est.nu = {1e-6, 1e-5, 1e-4, 1e-3};
    est.quantity = {4.0, 2.0, 1.0, 0.5};

    const std::string epath = tmp("exponent.csv");
    io::write_exponent_csv(epath, est, {});
    const auto etable = io::read_csv(epath);
    CHECK(etable.columns == std::vector<std::string>{"nu", "quantity"});
    REQUIRE(etable.rows.size() == est.nu.size());
    for (std::size_t i = 0; i < est.nu.size(); ++i) {
        CHECK(etable.rows[i][0] == est.nu[i]);
        CHECK(etable.rows[i][1] == est.quantity[i]);
    }
    bool stamped = false;
    for (const auto& c : etable.comments) stamped = stamped || contains(c, "gamma = ");
    CHECK(stamped);

    const auto ej = io::exponent_to_json(est);
    CHECK(ej.at("name").get<std::string>() == "gamma");
    CHECK(ej.at("value").get<double>() == 0.5);
    CHECK(ej.at("nu").get<std::vector<double>>() == est.nu);

    std::vector<PearceyValue> grid(2);
    grid[0].X = -1.0;
    grid[0].Y = 2.0;
    grid[0].Lambda = 3.0;
    grid[0].log_scale = 0.5;
    grid[0].u = -0.25;
    grid[1].X = 1.0;
    const std::string ppath = tmp("pearcey.csv");
    io::write_pearcey_csv(ppath, grid, {});
    const auto ptable = io::read_csv(ppath);
    CHECK(ptable.columns == std::vector<std::string>{"X", "Y", "Lambda", "log_scale", "u"});
    REQUIRE(ptable.rows.size() == 2);
    CHECK(ptable.rows[0][0] == -1.0);
    CHECK(ptable.rows[0][2] == 3.0);
    CHECK(ptable.rows[1][0] == 1.0);
}

TEST_CASE("trajectories and phase diagrams serialize with their topology") {
    ShockTrajectory traj;
    traj.left.label = "liquid";
    traj.right.label = "gas";
    traj.T = {0.9, 0.8, 0.7};
    traj.P = {0.647, 0.383, 0.2};
    traj.U = {3.07, 2.6, 2.1};

    const auto tj = io::trajectory_to_json(traj);
    CHECK(tj.at("left").get<std::string>() == "liquid");
    CHECK(tj.at("right").get<std::string>() == "gas");
    CHECK(tj.at("T").get<std::vector<double>>() == traj.T);
    CHECK(tj.at("P").get<std::vector<double>>() == traj.P);
    CHECK(tj.at("U").get<std::vector<double>>() == traj.U);

    const std::string tpath = tmp("trajectory.csv");
    io::write_trajectory_csv(tpath, traj, {"cafe"});
    const auto ttable = io::read_csv(tpath);
    CHECK(ttable.columns == std::vector<std::string>{"T", "P", "U"});
    REQUIRE(ttable.rows.size() == 3);
    CHECK(ttable.rows[2][1] == 0.2);
    bool labeled = false;
    for (const auto& c : ttable.comments) labeled = labeled || contains(c, "left=liquid");
    CHECK(labeled);

    ConfluenceEvent ev;
    ev.T_triple = 1.0;
    ev.P_triple = 2.0;
    ev.U1 = 2.0;
    ev.U2 = 1.0;
    ev.U3 = 4.0 / 3.0;
    ev.outgoing = traj;
    const auto pd = io::phase_diagram_to_json({traj, traj}, {ev}, {"cafe"});
    CHECK(pd.at("meta").at("config_hash").get<std::string>() == "cafe");
    CHECK(pd.at("curves").size() == 2);
    REQUIRE(pd.at("triple_points").size() == 1);
    const auto& tp = pd.at("triple_points")[0];
    CHECK(tp.at("T").get<double>() == 1.0);
    CHECK(tp.at("P").get<double>() == 2.0);
    CHECK(tp.at("U3").get<double>() == doctest::Approx(4.0 / 3.0));
    CHECK(!tp.at("degenerate").get<bool>());
    CHECK(tp.at("outgoing").at("left").get<std::string>() == "liquid");
}
