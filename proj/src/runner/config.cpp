#include "runner/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "core/errors.hpp"
#include "problems/problems.hpp"

namespace ciemo {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

bool parse_bool(const std::string& v, const std::string& key) {
    if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
    if (v == "false" || v == "0" || v == "no" || v == "off") return false;
    throw Error(ErrorCode::ConfigError, "config: boolean expected for " + key + ", got '" + v + "'");
}

std::uint64_t parse_u64(const std::string& v, const std::string& key) {
    try {
        std::size_t pos = 0;
        const std::uint64_t r = std::stoull(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return r;
    } catch (const std::exception&) {
        throw Error(ErrorCode::ConfigError, "config: integer expected for " + key + ", got '" + v + "'");
    }
}

} // namespace

std::map<std::string, std::string> parse_config_text(const std::string& text) {
    std::map<std::string, std::string> entries;
    std::stringstream ss(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw Error(ErrorCode::ConfigError,
                        "config: expected key=value on line " + std::to_string(lineno));
        entries[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return entries;
}

std::map<std::string, std::string> load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::Io, "config: cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

void apply_config_entry(RunConfig& c, const std::string& key, const std::string& value) {
    if (key == "problem") {
        const auto list = split_list(value);
        if (list.empty())
            throw Error(ErrorCode::ConfigError, "config: problem must not be empty");
        c.problem = list.front();
        c.problems = list;
    } else if (key == "m") {
        c.m = parse_u64(value, key);
    } else if (key == "d") {
        c.d = parse_u64(value, key);
    } else if (key == "n0") {
        c.n0 = parse_u64(value, key);
    } else if (key == "n_total") {
        c.n_total = parse_u64(value, key);
    } else if (key == "t_max") {
        c.t_max = parse_u64(value, key);
    } else if (key == "indicators") {
        if (value.empty() || value.find_first_not_of("123") != std::string::npos)
            throw Error(ErrorCode::ConfigError, "config: indicators must be a subset of \"123\"");
        c.variant.use_i1 = value.find('1') != std::string::npos;
        c.variant.use_i2 = value.find('2') != std::string::npos;
        c.variant.use_i3 = value.find('3') != std::string::npos;
    } else if (key == "weights") {
        if (value == "random") c.variant.weights = WeightMode::Random;
        else if (value == "one") c.variant.weights = WeightMode::FixedOne;
        else throw Error(ErrorCode::ConfigError, "config: weights must be 'random' or 'one'");
    } else if (key == "normalize") {
        c.variant.normalize = parse_bool(value, key);
    } else if (key == "q") {
        c.variant.q = static_cast<int>(parse_u64(value, key));
    } else if (key == "random_pick") {
        c.variant.random_pick = parse_bool(value, key);
    } else if (key == "seed") {
        c.seed = parse_u64(value, key);
    } else if (key == "metric_cadence") {
        c.metric_cadence = parse_u64(value, key);
    } else if (key == "reference_size") {
        c.reference_size = parse_u64(value, key);
    } else if (key == "variants") {
        c.variants = split_list(value);
        for (const auto& label : c.variants) (void)variant_from_label(label); // validate
    } else if (key == "baseline") {
        c.baseline = value;
    } else if (key == "repeats") {
        c.repeats = parse_u64(value, key);
    } else if (key == "parallelism") {
        c.parallelism = parse_u64(value, key);
    } else if (key == "out_dir") {
        c.out_dir = value;
    } else {
        throw Error(ErrorCode::ConfigError, "config: unknown key '" + key + "'");
    }
}

RunConfig config_from_map(const std::map<std::string, std::string>& entries) {
    RunConfig c;
    for (const auto& [k, v] : entries) apply_config_entry(c, k, v);
    return c;
}

void resolve_config(RunConfig& c) {
    if (!is_known_problem(c.problem))
        throw Error(ErrorCode::UnknownProblem, "config: unknown problem '" + c.problem + "'");
    for (const auto& p : c.problems)
        if (!is_known_problem(p))
            throw Error(ErrorCode::UnknownProblem, "config: unknown problem '" + p + "'");
    if (c.problems.empty()) c.problems = {c.problem};

    const ProblemSpec spec = make_problem(c.problem, c.m, c.d);
    c.d = spec.d;
    if (c.n0 == 0) c.n0 = std::min<std::size_t>(11 * c.d - 1, 100);
    if (c.n_total == 0) c.n_total = c.m == 2 ? 200 : 300;
    if (c.reference_size == 0) c.reference_size = c.m == 2 ? 1000 : 990;
    if (c.metric_cadence == 0) c.metric_cadence = 1;

    if (c.n0 > c.n_total)
        throw Error(ErrorCode::ConfigError, "config: n0 must not exceed n_total");
    if (c.variant.q < 1)
        throw Error(ErrorCode::ConfigError, "config: q must be at least 1");
    if (c.repeats < 1)
        throw Error(ErrorCode::ConfigError, "config: repeats must be at least 1");
    if (c.parallelism < 1) c.parallelism = 1;
    if (c.variants.empty()) c.variants = {c.variant.label()};
}

std::string echo_config(const RunConfig& c) {
    std::ostringstream out;
    out << "problem = ";
    for (std::size_t i = 0; i < c.problems.size(); ++i)
        out << (i ? "," : "") << c.problems[i];
    out << "\n";
    out << "m = " << c.m << "\n";
    out << "d = " << c.d << "\n";
    out << "n0 = " << c.n0 << "\n";
    out << "n_total = " << c.n_total << "\n";
    out << "t_max = " << c.t_max << "\n";
    std::string ind;
    if (c.variant.use_i1) ind += '1';
    if (c.variant.use_i2) ind += '2';
    if (c.variant.use_i3) ind += '3';
    out << "indicators = " << ind << "\n";
    out << "weights = " << (c.variant.weights == WeightMode::Random ? "random" : "one") << "\n";
    out << "normalize = " << (c.variant.normalize ? "true" : "false") << "\n";
    out << "q = " << c.variant.q << "\n";
    out << "random_pick = " << (c.variant.random_pick ? "true" : "false") << "\n";
    out << "seed = " << c.seed << "\n";
    out << "metric_cadence = " << c.metric_cadence << "\n";
    out << "reference_size = " << c.reference_size << "\n";
    out << "variants = ";
    for (std::size_t i = 0; i < c.variants.size(); ++i)
        out << (i ? "," : "") << c.variants[i];
    out << "\n";
    out << "baseline = " << c.baseline << "\n";
    out << "repeats = " << c.repeats << "\n";
    out << "parallelism = " << c.parallelism << "\n";
    out << "out_dir = " << c.out_dir << "\n";
    return out.str();
}

std::string run_id_of(const RunConfig& c) {
    std::ostringstream out;
    out << c.problem << "_m" << c.m << "_d" << c.d << "_" << c.variant.label() << "_s" << c.seed;
    return out.str();
}

} // namespace ciemo
