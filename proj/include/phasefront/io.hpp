#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "phasefront/analysis.hpp"
#include "phasefront/coexistence.hpp"
#include "phasefront/eos.hpp"
#include "phasefront/fit.hpp"
#include "phasefront/pearcey.hpp"
#include "phasefront/shock.hpp"
#include "phasefront/viscous.hpp"

namespace phasefront::io {

using json = nlohmann::json;

/// Reproducibility stamp written into every output header: library version
/// plus the FNV-1a hash of the resolved run configuration. Identical config
/// then yields identical output bytes.
struct Meta {
    std::string config_hash;
};

std::vector<std::string> header_lines(const Meta& meta);
json meta_json(const Meta& meta);

/// 17-significant-digit decimal form; round-trips any double exactly.
std::string format_double(double v);

json eos_to_json(const EosSpec& eos);
EosSpec eos_from_json(const json& j);
void save_eos(const EosSpec& eos, const std::string& path);
EosSpec load_eos(const std::string& path);

void save_json(const std::string& path, const json& j);
json load_json(const std::string& path);

/// Comment lines (written with a leading "# "), one header line of column
/// names, then comma-separated numeric rows.
void write_csv(const std::string& path, const std::vector<std::string>& comments,
               const std::vector<std::string>& columns,
               const std::vector<std::vector<double>>& rows);

struct CsvTable {
    std::vector<std::string> comments;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};
CsvTable read_csv(const std::string& path);

/// Isotherm exchange format: columns V,P with a `# T=<value>` comment.
void write_isotherm_csv(const std::string& path, const IsothermDataset& d, const Meta& meta);
IsothermDataset read_isotherm_csv(const std::string& path);

/// Columns T,P_sat,V_l,V_g,delta_S,latent_heat.
void write_coexistence_csv(const std::string& path, const CoexistenceCurve& curve,
                           const Meta& meta);

/// Columns X,Y,Lambda,log_scale,u; the unnormalized integral is
/// Lambda * exp(log_scale).
void write_pearcey_csv(const std::string& path, const std::vector<PearceyValue>& grid,
                       const Meta& meta);

/// Long form: one P,T,V row per grid node.
void write_field_csv(const std::string& path, const FieldSolution& sol, const Meta& meta);

/// One JSON metadata line (grid shape and axes), a newline, then the
/// row-major V values as native doubles.
void write_field_binary(const std::string& path, const FieldSolution& sol, const Meta& meta);
FieldSolution read_field_binary(const std::string& path);

void write_exponent_csv(const std::string& path, const ExponentEstimate& est, const Meta& meta);
json exponent_to_json(const ExponentEstimate& est);

json entropy_report_to_json(const EntropyConvexityReport& rep);
json isentrope_report_to_json(const IsentropeConvexityReport& rep);

json trajectory_to_json(const ShockTrajectory& traj);
void write_trajectory_csv(const std::string& path, const ShockTrajectory& traj, const Meta& meta);

/// {"meta": ..., "curves": [...], "triple_points": [...]}.
json phase_diagram_to_json(const std::vector<ShockTrajectory>& curves,
                           const std::vector<ConfluenceEvent>& triple_points, const Meta& meta);

} // namespace phasefront::io
