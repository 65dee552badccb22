#include "phasefront/io.hpp"

#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include "phasefront/errors.hpp"
#include "phasefront/version.hpp"

namespace phasefront::io {

std::vector<std::string> header_lines(const Meta& meta) {
    std::vector<std::string> lines;
    lines.push_back(std::string("phasefront ") + PHASEFRONT_VERSION);
    if (!meta.config_hash.empty()) lines.push_back("config-hash " + meta.config_hash);
    return lines;
}

json meta_json(const Meta& meta) {
    json j;
    j["version"] = PHASEFRONT_VERSION;
    j["config_hash"] = meta.config_hash;
    return j;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

json eos_to_json(const EosSpec& eos) {
    json j;
    if (eos.vdw) {
        j["kind"] = "vdw";
        j["a"] = eos.vdw->a;
        j["b"] = eos.vdw->b;
        j["n"] = eos.vdw->n;
        j["R"] = eos.vdw->R;
    } else if (eos.table) {
        j["kind"] = "tabulated";
        j["V"] = eos.table->V;
        j["alpha"] = eos.table->alpha;
        j["f"] = eos.table->f;
    } else {
        throw ConfigError("eos_to_json: spec is neither vdw nor tabulated");
    }
    return j;
}

EosSpec eos_from_json(const json& j) {
    if (!j.contains("kind")) throw ConfigError("eos_from_json: missing \"kind\"");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "vdw") {
        VdwParams p{};
        p.a = j.at("a").get<double>();
        p.b = j.at("b").get<double>();
        p.n = j.at("n").get<double>();
        p.R = j.at("R").get<double>();
        return vdw_spec(p);
    }
    if (kind == "tabulated")
        return tabulated_spec(j.at("V").get<std::vector<double>>(),
                              j.at("alpha").get<std::vector<double>>(),
                              j.at("f").get<std::vector<double>>());
    throw ConfigError("eos_from_json: unknown kind \"" + kind + "\"");
}

void save_json(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot open for writing: " + path);
    out << j.dump(2) << '\n';
    if (!out) throw ConfigError("write failed: " + path);
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ConfigError("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

void save_eos(const EosSpec& eos, const std::string& path) { save_json(path, eos_to_json(eos)); }

EosSpec load_eos(const std::string& path) {
    try {
        return eos_from_json(load_json(path));
    } catch (const json::exception& e) {
        throw ConfigError("malformed EOS document " + path + ": " + e.what());
    }
}

void write_csv(const std::string& path, const std::vector<std::string>& comments,
               const std::vector<std::string>& columns,
               const std::vector<std::vector<double>>& rows) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot open for writing: " + path);
    for (const auto& c : comments) out << "# " << c << '\n';
    for (std::size_t i = 0; i < columns.size(); ++i)
        out << columns[i] << (i + 1 < columns.size() ? "," : "\n");
    for (const auto& row : rows) {
        if (row.size() != columns.size())
            throw ConfigError("write_csv: row width does not match the header");
        for (std::size_t i = 0; i < row.size(); ++i)
            out << format_double(row[i]) << (i + 1 < row.size() ? "," : "\n");
    }
    if (!out) throw ConfigError("write failed: " + path);
}

namespace {

std::vector<std::string> split_commas(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(tok);
    return out;
}

} // namespace

CsvTable read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open: " + path);
    CsvTable table;
    std::string line;
    bool have_header = false;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.front() == '#') {
            std::size_t start = 1;
            while (start < line.size() && line[start] == ' ') ++start;
            table.comments.push_back(line.substr(start));
            continue;
        }
        if (!have_header) {
            table.columns = split_commas(line);
            have_header = true;
            continue;
        }
        const auto toks = split_commas(line);
        if (toks.size() != table.columns.size())
            throw ConfigError(path + ":" + std::to_string(lineno) + ": expected " +
                              std::to_string(table.columns.size()) + " fields");
        std::vector<double> row;
        row.reserve(toks.size());
        for (const auto& t : toks) {
            char* end = nullptr;
            const double v = std::strtod(t.c_str(), &end);
            if (end == t.c_str() || *end != '\0')
                throw ConfigError(path + ":" + std::to_string(lineno) +
                                  ": not a number: " + t);
            row.push_back(v);
        }
        table.rows.push_back(std::move(row));
    }
    if (!have_header) throw ConfigError(path + ": missing CSV header line");
    return table;
}

void write_isotherm_csv(const std::string& path, const IsothermDataset& d, const Meta& meta) {
    if (d.V.size() != d.P.size()) throw ConfigError("write_isotherm_csv: V/P size mismatch");
    auto comments = header_lines(meta);
    comments.push_back("T=" + format_double(d.T));
    std::vector<std::vector<double>> rows;
    rows.reserve(d.V.size());
    for (std::size_t i = 0; i < d.V.size(); ++i) rows.push_back({d.V[i], d.P[i]});
    write_csv(path, comments, {"V", "P"}, rows);
}

IsothermDataset read_isotherm_csv(const std::string& path) {
    const auto table = read_csv(path);
    IsothermDataset d;
    bool have_T = false;
    for (const auto& c : table.comments) {
        const auto pos = c.find("T=");
        if (pos != std::string::npos) {
            d.T = std::strtod(c.c_str() + pos + 2, nullptr);
            have_T = true;
        }
    }
    if (!have_T) throw ConfigError(path + ": missing `# T=<value>` comment");
    if (table.columns.size() < 2 || table.columns[0] != "V" || table.columns[1] != "P")
        throw ConfigError(path + ": expected columns V,P");
    for (const auto& row : table.rows) {
        d.V.push_back(row[0]);
        d.P.push_back(row[1]);
    }
    return d;
}

void write_coexistence_csv(const std::string& path, const CoexistenceCurve& curve,
                           const Meta& meta) {
    std::vector<std::vector<double>> rows;
    rows.reserve(curve.points.size());
    for (const auto& p : curve.points)
        rows.push_back({p.T, p.P_sat, p.V_l, p.V_g, p.delta_S, p.latent_heat});
    write_csv(path, header_lines(meta), {"T", "P_sat", "V_l", "V_g", "delta_S", "latent_heat"},
              rows);
}

void write_pearcey_csv(const std::string& path, const std::vector<PearceyValue>& grid,
                       const Meta& meta) {
    auto comments = header_lines(meta);
    comments.push_back("unnormalized integral = Lambda * exp(log_scale)");
    std::vector<std::vector<double>> rows;
    rows.reserve(grid.size());
    for (const auto& v : grid) rows.push_back({v.X, v.Y, v.Lambda, v.log_scale, v.u});
    write_csv(path, comments, {"X", "Y", "Lambda", "log_scale", "u"}, rows);
}

void write_field_csv(const std::string& path, const FieldSolution& sol, const Meta& meta) {
    std::vector<std::vector<double>> rows;
    rows.reserve(sol.P.size() * sol.T.size());
    for (std::size_t i = 0; i < sol.P.size(); ++i)
        for (std::size_t j = 0; j < sol.T.size(); ++j)
            rows.push_back({sol.P[i], sol.T[j], sol.value(i, j)});
    write_csv(path, header_lines(meta), {"P", "T", "V"}, rows);
}

void write_field_binary(const std::string& path, const FieldSolution& sol, const Meta& meta) {
    json j = meta_json(meta);
    j["rows"] = sol.P.size();
    j["cols"] = sol.T.size();
    j["P"] = sol.P;
    j["T"] = sol.T;
    j["max_flux_residual"] = sol.max_flux_residual;
    j["steps_taken"] = sol.steps_taken;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open for writing: " + path);
    out << j.dump() << '\n';
    out.write(reinterpret_cast<const char*>(sol.V.data()),
              static_cast<std::streamsize>(sol.V.size() * sizeof(double)));
    if (!out) throw ConfigError("write failed: " + path);
}

FieldSolution read_field_binary(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open: " + path);
    std::string header;
    if (!std::getline(in, header)) throw ConfigError(path + ": missing binary header line");
    json j;
    try {
        j = json::parse(header);
    } catch (const json::exception& e) {
        throw ConfigError(path + ": malformed binary header: " + e.what());
    }
    FieldSolution sol;
    sol.P = j.at("P").get<std::vector<double>>();
    sol.T = j.at("T").get<std::vector<double>>();
    sol.max_flux_residual = j.value("max_flux_residual", 0.0);
    sol.steps_taken = j.value("steps_taken", 0L);
    const std::size_t count = j.at("rows").get<std::size_t>() * j.at("cols").get<std::size_t>();
    sol.V.resize(count);
    in.read(reinterpret_cast<char*>(sol.V.data()),
            static_cast<std::streamsize>(count * sizeof(double)));
    if (static_cast<std::size_t>(in.gcount()) != count * sizeof(double))
        throw ConfigError(path + ": truncated binary payload");
    return sol;
}

void write_exponent_csv(const std::string& path, const ExponentEstimate& est, const Meta& meta) {
    auto comments = header_lines(meta);
    comments.push_back(est.name + " = " + format_double(est.value) + " +- " +
                       format_double(est.std_err));
    std::vector<std::vector<double>> rows;
    rows.reserve(est.nu.size());
    for (std::size_t i = 0; i < est.nu.size(); ++i)
        rows.push_back({est.nu[i], est.quantity[i]});
    write_csv(path, comments, {"nu", "quantity"}, rows);
}

json exponent_to_json(const ExponentEstimate& est) {
    json j;
    j["name"] = est.name;
    j["value"] = est.value;
    j["std_err"] = est.std_err;
    j["nu_lo"] = est.nu_lo;
    j["nu_hi"] = est.nu_hi;
    j["nu"] = est.nu;
    j["quantity"] = est.quantity;
    return j;
}

json entropy_report_to_json(const EntropyConvexityReport& rep) {
    json j;
    j["points_checked"] = rep.points_checked;
    j["min_spp"] = rep.min_spp;
    j["min_hessian"] = rep.min_hessian;
    j["pass"] = rep.pass();
    auto dump = [](const std::vector<GridViolation>& v) {
        json arr = json::array();
        for (const auto& g : v) arr.push_back({{"P", g.P}, {"T", g.T}, {"value", g.value}});
        return arr;
    };
    j["spp_violations"] = dump(rep.spp_violations);
    j["hessian_violations"] = dump(rep.hessian_violations);
    return j;
}

json isentrope_report_to_json(const IsentropeConvexityReport& rep) {
    json j;
    j["points_checked"] = rep.points_checked;
    j["excluded"] = rep.excluded;
    j["min_value"] = rep.min_value;
    j["pass"] = rep.pass();
    json arr = json::array();
    for (const auto& g : rep.violations)
        arr.push_back({{"V", g.V}, {"T", g.T}, {"value", g.value}});
    j["violations"] = arr;
    return j;
}

json trajectory_to_json(const ShockTrajectory& traj) {
    json j;
    j["left"] = traj.left.label;
    j["right"] = traj.right.label;
    j["T"] = traj.T;
    j["P"] = traj.P;
    j["U"] = traj.U;
    return j;
}

void write_trajectory_csv(const std::string& path, const ShockTrajectory& traj,
                          const Meta& meta) {
    auto comments = header_lines(meta);
    comments.push_back("left=" + traj.left.label + " right=" + traj.right.label);
    std::vector<std::vector<double>> rows;
    rows.reserve(traj.T.size());
    for (std::size_t i = 0; i < traj.T.size(); ++i)
        rows.push_back({traj.T[i], traj.P[i], traj.U[i]});
    write_csv(path, comments, {"T", "P", "U"}, rows);
}

json phase_diagram_to_json(const std::vector<ShockTrajectory>& curves,
                           const std::vector<ConfluenceEvent>& triple_points, const Meta& meta) {
    json j;
    j["meta"] = meta_json(meta);
    json cs = json::array();
    for (const auto& c : curves) cs.push_back(trajectory_to_json(c));
    j["curves"] = cs;
    json ts = json::array();
    for (const auto& ev : triple_points) {
        json t;
        t["T"] = ev.T_triple;
        t["P"] = ev.P_triple;
        t["U1"] = ev.U1;
        t["U2"] = ev.U2;
        t["U3"] = ev.U3;
        t["degenerate"] = ev.degenerate;
        t["outgoing"] = trajectory_to_json(ev.outgoing);
        ts.push_back(t);
    }
    j["triple_points"] = ts;
    return j;
}

} // namespace phasefront::io
