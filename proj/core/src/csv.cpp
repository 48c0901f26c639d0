#include "sdgame/csv.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

namespace sdg {

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

namespace {

std::string quote_if_needed(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

void write_row(std::ostream& os, const std::vector<std::string>& fields) {
    for (size_t k = 0; k < fields.size(); ++k) {
        if (k) os << ',';
        os << quote_if_needed(fields[k]);
    }
    os << '\n';
}

std::string format_optional(const std::optional<double>& v) {
    return v ? format_number(*v) : "nan";
}

} // namespace

void write_trajectory_csv(const Trajectory& traj, std::ostream& os) {
    write_row(os, {"t", "s", "i", "q", "r", "reinfected", "case", "alpha_si", "alpha_r", "p",
                   "theta"});
    for (const DayRecord& d : traj.days) {
        write_row(os, {format_number(d.state.t), format_number(d.state.s),
                       format_number(d.state.i), format_number(d.state.q),
                       format_number(d.state.r), format_number(d.state.reinfected),
                       std::to_string(static_cast<int>(d.equilibrium.case_id)),
                       format_number(d.equilibrium.si_mean()),
                       format_number(d.equilibrium.recovered),
                       format_number(d.equilibrium.compliance_probability()),
                       format_number(d.theta)});
    }
}

void write_sweep_csv(const ResultTable& table, std::ostream& os) {
    write_row(os, {"alpha_tilde", "c", "phi", "segmented", "Z", "Z_hat", "E", "peak_prevalence",
                   "peak_day", "case1_days", "case2_days", "case3_days", "case4_days", "status"});
    for (const SweepRow& row : table.rows) {
        write_row(os, {format_number(row.alpha_tilde), format_number(row.c),
                       format_number(row.phi), row.segmented ? "1" : "0",
                       format_number(row.outcome.total_infections),
                       format_number(row.outcome.z_hat), format_optional(row.outcome.efficiency),
                       format_number(row.outcome.peak_prevalence),
                       std::to_string(row.outcome.peak_day), std::to_string(row.case_days[0]),
                       std::to_string(row.case_days[1]), std::to_string(row.case_days[2]),
                       std::to_string(row.case_days[3]), row.ok() ? "ok" : row.error});
    }
}

void write_eqmap_csv(const std::vector<EqMapCell>& cells, std::ostream& os) {
    write_row(os, {"c", "alpha_tilde", "case", "alpha_si", "alpha_r", "p"});
    for (const EqMapCell& cell : cells) {
        write_row(os, {format_number(cell.c), format_number(cell.alpha_tilde),
                       std::to_string(static_cast<int>(cell.case_id)),
                       format_number(cell.si_level), format_number(cell.recovered),
                       format_number(cell.p)});
    }
}

void write_prevalence_csv(const std::vector<std::string>& labels,
                          const std::vector<std::vector<double>>& series, std::ostream& os) {
    if (labels.size() != series.size()) {
        throw IoError("prevalence export: label/series count mismatch");
    }
    std::vector<std::string> header{"t"};
    header.insert(header.end(), labels.begin(), labels.end());
    write_row(os, header);
    size_t length = 0;
    for (const auto& s : series) length = std::max(length, s.size());
    for (size_t t = 0; t < length; ++t) {
        std::vector<std::string> fields{std::to_string(t)};
        for (const auto& s : series) {
            fields.push_back(t < s.size() ? format_number(s[t]) : "");
        }
        write_row(os, fields);
    }
}

void write_efficiency_csv(const std::vector<EfficiencyRow>& rows, std::ostream& os) {
    write_row(os, {"alpha_tilde", "c", "Z", "Z_hat", "activity_loss", "E", "peak_prevalence",
                   "peak_day"});
    for (const EfficiencyRow& row : rows) {
        write_row(os, {format_number(row.alpha_tilde), format_number(row.c),
                       format_number(row.outcome.total_infections),
                       format_number(row.outcome.z_hat), format_number(row.outcome.activity_loss),
                       format_optional(row.outcome.efficiency),
                       format_number(row.outcome.peak_prevalence),
                       std::to_string(row.outcome.peak_day)});
    }
}

namespace {

template <typename WriteFn>
void export_to(const std::filesystem::path& file, WriteFn&& write) {
    std::ofstream os(file);
    if (!os) throw IoError("cannot open " + file.string() + " for writing");
    write(os);
    os.flush();
    if (!os) throw IoError("write failed for " + file.string());
}

} // namespace

void export_trajectory(const Trajectory& traj, const std::filesystem::path& file) {
    export_to(file, [&](std::ostream& os) { write_trajectory_csv(traj, os); });
}

void export_sweep(const ResultTable& table, const std::filesystem::path& file) {
    export_to(file, [&](std::ostream& os) { write_sweep_csv(table, os); });
}

void export_eqmap(const std::vector<EqMapCell>& cells, const std::filesystem::path& file) {
    export_to(file, [&](std::ostream& os) { write_eqmap_csv(cells, os); });
}

void export_prevalence(const std::vector<std::string>& labels,
                       const std::vector<std::vector<double>>& series,
                       const std::filesystem::path& file) {
    export_to(file, [&](std::ostream& os) { write_prevalence_csv(labels, series, os); });
}

void export_efficiency(const std::vector<EfficiencyRow>& rows,
                       const std::filesystem::path& file) {
    export_to(file, [&](std::ostream& os) { write_efficiency_csv(rows, os); });
}

CsvTable read_csv(std::istream& is) {
    CsvTable table;
    std::string line;
    bool first = true;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::vector<std::string> fields;
        std::string field;
        bool quoted = false;
        for (size_t k = 0; k < line.size(); ++k) {
            const char ch = line[k];
            if (quoted) {
                if (ch == '"') {
                    if (k + 1 < line.size() && line[k + 1] == '"') {
                        field += '"';
                        ++k;
                    } else {
                        quoted = false;
                    }
                } else {
                    field += ch;
                }
            } else if (ch == '"') {
                quoted = true;
            } else if (ch == ',') {
                fields.push_back(std::move(field));
                field.clear();
            } else {
                field += ch;
            }
        }
        fields.push_back(std::move(field));
        if (first) {
            table.header = std::move(fields);
            first = false;
        } else {
            table.rows.push_back(std::move(fields));
        }
    }
    return table;
}

CsvTable read_csv_file(const std::filesystem::path& file) {
    std::ifstream is(file);
    if (!is) throw IoError("cannot open " + file.string() + " for reading");
    return read_csv(is);
}

} // namespace sdg
