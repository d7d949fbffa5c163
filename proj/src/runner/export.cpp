#include "runner/export.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "core/errors.hpp"

namespace ciemo {

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(ErrorCode::Io, "export: cannot open " + path + " for writing");
    return out;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

} // namespace

std::string format_float(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

void write_runs_csv(const std::string& path, const std::vector<RunRecord>& records) {
    auto out = open_out(path);
    std::size_t d = 0, m = 0;
    for (const auto& rec : records) {
        if (!rec.evals.empty()) {
            d = rec.config.d;
            m = rec.config.m;
            break;
        }
    }
    out << "run_id,eval_index";
    for (std::size_t k = 1; k <= d; ++k) out << ",x" << k;
    for (std::size_t j = 1; j <= m; ++j) out << ",f" << j;
    out << ",r1,r2,r3,i1,i2,i3\n";

    for (const auto& rec : records) {
        for (const auto& e : rec.evals) {
            out << rec.run_id << ',' << e.eval_index;
            for (double v : e.x) out << ',' << format_float(v);
            for (double v : e.f) out << ',' << format_float(v);
            if (e.has_weights) {
                out << ',' << format_float(e.r1) << ',' << format_float(e.r2) << ','
                    << format_float(e.r3);
            } else {
                out << ",,,";
            }
            if (e.has_indicators) {
                out << ',' << format_float(e.i1) << ',' << format_float(e.i2) << ','
                    << format_float(e.i3);
            } else {
                out << ",,,";
            }
            out << '\n';
        }
    }
}

void write_trajectory_csv(const std::string& path, const std::vector<RunRecord>& records) {
    auto out = open_out(path);
    out << "run_id,eval_index,igd_plus,hv\n";
    for (const auto& rec : records) {
        for (const auto& p : rec.trajectory) {
            out << rec.run_id << ',' << p.eval_count << ',' << format_float(p.igd_plus) << ','
                << format_float(p.hv) << '\n';
        }
    }
}

void write_summary_csv(const std::string& path, const CampaignSummary& summary) {
    auto out = open_out(path);
    out << "problem,variant,mean,std,verdict\n";
    for (const auto& cell : summary.cells) {
        out << cell.problem << ',' << cell.variant << ',' << format_float(cell.igd_mean) << ','
            << format_float(cell.igd_std) << ',';
        if (cell.is_baseline)
            out << "baseline";
        else if (cell.final_igd.empty())
            out << "incomplete";
        else
            out << verdict_symbol(cell.verdict);
        out << '\n';
    }
}

void write_config_echo(const std::string& path, const RunConfig& config) {
    auto out = open_out(path);
    out << echo_config(config);
}

std::vector<ParsedRun> read_runs_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::Io, "read_runs_csv: cannot open " + path);

    std::string line;
    if (!std::getline(in, line))
        throw Error(ErrorCode::Io, "read_runs_csv: empty file " + path);
    const auto header = split_csv_line(line);

    std::size_t d = 0, m = 0;
    for (const auto& h : header) {
        if (h.size() > 1 && h[0] == 'x' && h.find_first_not_of("0123456789", 1) == std::string::npos)
            ++d;
        if (h.size() > 1 && h[0] == 'f' && h.find_first_not_of("0123456789", 1) == std::string::npos)
            ++m;
    }
    if (d == 0 || m == 0 || header.size() < 2 + d + m)
        throw Error(ErrorCode::Io, "read_runs_csv: unrecognized header in " + path);

    std::vector<ParsedRun> runs;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto fields = split_csv_line(line);
        if (fields.size() < 2 + d + m)
            throw Error(ErrorCode::Io, "read_runs_csv: short row in " + path);
        if (runs.empty() || runs.back().run_id != fields[0]) {
            runs.push_back(ParsedRun{fields[0], {}, {}});
        }
        DecisionVector x(d);
        ObjectiveVector f(m);
        for (std::size_t k = 0; k < d; ++k) x[k] = std::stod(fields[2 + k]);
        for (std::size_t j = 0; j < m; ++j) f[j] = std::stod(fields[2 + d + j]);
        runs.back().xs.push_back(std::move(x));
        runs.back().fs.push_back(std::move(f));
    }
    return runs;
}

} // namespace ciemo
