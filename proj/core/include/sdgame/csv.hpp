#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "sdgame/sweep.hpp"

namespace sdg {

/// Decimal text with 12 significant digits; the stable interchange format
/// used by every CSV column.
std::string format_number(double v);

// Writers. Every file is UTF-8, comma separated, one header row, "\n" line
// ends; fields are quoted only when they contain a delimiter or quote.
void write_trajectory_csv(const Trajectory& traj, std::ostream& os);
void write_sweep_csv(const ResultTable& table, std::ostream& os);
void write_eqmap_csv(const std::vector<EqMapCell>& cells, std::ostream& os);

/// One prevalence column per labeled run, aligned on the day index.
void write_prevalence_csv(const std::vector<std::string>& labels,
                          const std::vector<std::vector<double>>& series, std::ostream& os);

struct EfficiencyRow {
    double alpha_tilde = 0.0;
    double c = 0.0;
    OutcomeSummary outcome;
};
void write_efficiency_csv(const std::vector<EfficiencyRow>& rows, std::ostream& os);

// Path-taking wrappers; failures throw IoError carrying the path.
void export_trajectory(const Trajectory& traj, const std::filesystem::path& file);
void export_sweep(const ResultTable& table, const std::filesystem::path& file);
void export_eqmap(const std::vector<EqMapCell>& cells, const std::filesystem::path& file);
void export_prevalence(const std::vector<std::string>& labels,
                       const std::vector<std::vector<double>>& series,
                       const std::filesystem::path& file);
void export_efficiency(const std::vector<EfficiencyRow>& rows,
                       const std::filesystem::path& file);

/// Minimal CSV reader for round-trip checks and downstream tooling. Handles
/// quoted fields and embedded quotes; no embedded newlines.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};
CsvTable read_csv(std::istream& is);
CsvTable read_csv_file(const std::filesystem::path& file);

} // namespace sdg
