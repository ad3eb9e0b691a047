#include "msy/runconfig.hpp"

#include <cmath>
#include <limits>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "msy/reference_levels.hpp"

namespace msy {

std::string format_number(double value) {
    if (std::abs(value) < std::numeric_limits<double>::min()) value = 0.0;  // -0 and subnormals
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

std::string to_string(SymmetryLimit v) {
    return v == SymmetryLimit::pseudospin ? "pseudospin" : "spin";
}
std::string to_string(PotentialChoice v) {
    return v == PotentialChoice::first ? "first" : "second";
}
std::string to_string(TailForm v) { return v == TailForm::squared ? "squared" : "linear"; }
std::string to_string(Branch v) { return v == Branch::plus ? "plus" : "minus"; }
std::string to_string(BranchPolicy v) {
    switch (v) {
        case BranchPolicy::automatic: return "auto";
        case BranchPolicy::plus: return "plus";
        case BranchPolicy::minus: return "minus";
    }
    return "auto";
}

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

double parse_double(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw config_error("config: bad numeric value for '" + key + "': " + v);
    }
}

int parse_int(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const int x = std::stoi(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw config_error("config: bad integer value for '" + key + "': " + v);
    }
}

std::vector<std::string> split_list(const std::string& v) {
    std::vector<std::string> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

}  // namespace

RunConfig RunConfig::parse(const std::string& text) {
    RunConfig cfg;
    cfg.n_list.clear();
    cfg.kappa_list.clear();
    cfg.H_list.clear();

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw config_error("config line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));

        if (key == "limit") {
            if (val == "pseudospin") cfg.spec.limit = SymmetryLimit::pseudospin;
            else if (val == "spin") cfg.spec.limit = SymmetryLimit::spin;
            else throw config_error("config: limit must be pseudospin or spin, got " + val);
        } else if (key == "choice") {
            if (val == "first") cfg.spec.choice = PotentialChoice::first;
            else if (val == "second") cfg.spec.choice = PotentialChoice::second;
            else throw config_error("config: choice must be first or second, got " + val);
        } else if (key == "tail") {
            if (val == "squared") cfg.spec.tail = TailForm::squared;
            else if (val == "linear") cfg.spec.tail = TailForm::linear;
            else throw config_error("config: tail must be squared or linear, got " + val);
        } else if (key == "branch") {
            if (val == "auto") cfg.branch = BranchPolicy::automatic;
            else if (val == "plus") cfg.branch = BranchPolicy::plus;
            else if (val == "minus") cfg.branch = BranchPolicy::minus;
            else throw config_error("config: branch must be auto, plus or minus, got " + val);
        } else if (key == "V0") cfg.params.V0 = parse_double(key, val);
        else if (key == "V1") cfg.params.V1 = parse_double(key, val);
        else if (key == "A") cfg.params.A = parse_double(key, val);
        else if (key == "B") cfg.params.B = parse_double(key, val);
        else if (key == "C") cfg.params.C = parse_double(key, val);
        else if (key == "D") cfg.params.D = parse_double(key, val);
        else if (key == "alpha") cfg.params.alpha = parse_double(key, val);
        else if (key == "M") cfg.spec.M = parse_double(key, val);
        else if (key == "sym_const") cfg.spec.sym_const = parse_double(key, val);
        else if (key == "H_list") {
            for (const auto& item : split_list(val)) cfg.H_list.push_back(parse_double(key, item));
        } else if (key == "n_list") {
            for (const auto& item : split_list(val)) cfg.n_list.push_back(parse_int(key, item));
        } else if (key == "kappa_list") {
            for (const auto& item : split_list(val)) cfg.kappa_list.push_back(parse_int(key, item));
        } else if (key == "r_min") cfg.grid.r_min = parse_double(key, val);
        else if (key == "r_max") cfg.grid.r_max = parse_double(key, val);
        else if (key == "points") cfg.grid.points = parse_int(key, val);
        else if (key == "spacing") {
            if (val == "uniform") cfg.grid.spacing = RadialGrid::Spacing::uniform;
            else if (val == "log") cfg.grid.spacing = RadialGrid::Spacing::log;
            else throw config_error("config: spacing must be uniform or log, got " + val);
        } else if (key == "output") cfg.output_path = val;
        else throw config_error("config: unknown key '" + key + "'");
    }
    if (cfg.H_list.empty()) cfg.H_list.push_back(0.0);
    return cfg;
}

RunConfig RunConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("config: cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

std::string RunConfig::serialize() const {
    std::ostringstream out;
    out << "limit = " << to_string(spec.limit) << "\n";
    out << "choice = " << to_string(spec.choice) << "\n";
    out << "tail = " << to_string(spec.tail) << "\n";
    out << "V0 = " << format_number(params.V0) << "\n";
    out << "V1 = " << format_number(params.V1) << "\n";
    out << "A = " << format_number(params.A) << "\n";
    out << "B = " << format_number(params.B) << "\n";
    out << "C = " << format_number(params.C) << "\n";
    out << "D = " << format_number(params.D) << "\n";
    out << "alpha = " << format_number(params.alpha) << "\n";
    out << "M = " << format_number(spec.M) << "\n";
    out << "sym_const = " << format_number(spec.sym_const) << "\n";
    auto join_ints = [](const std::vector<int>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i)
            s += (i ? ", " : "") + std::to_string(v[i]);
        return s;
    };
    auto join_doubles = [](const std::vector<double>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + format_number(v[i]);
        return s;
    };
    out << "n_list = " << join_ints(n_list) << "\n";
    out << "kappa_list = " << join_ints(kappa_list) << "\n";
    out << "H_list = " << join_doubles(H_list) << "\n";
    out << "branch = " << to_string(branch) << "\n";
    out << "r_min = " << format_number(grid.r_min) << "\n";
    out << "r_max = " << format_number(grid.r_max) << "\n";
    out << "points = " << grid.points << "\n";
    out << "spacing = " << (grid.spacing == RadialGrid::Spacing::uniform ? "uniform" : "log") << "\n";
    if (!output_path.empty()) out << "output = " << output_path << "\n";
    return out.str();
}

RunConfig benchmark_config(int table) {
    if (table < 1 || table > 4) throw std::invalid_argument("benchmark_config: table must be 1..4");
    const SymmetryLimit limit =
        (table == 1 || table == 3) ? SymmetryLimit::pseudospin : SymmetryLimit::spin;
    const PotentialChoice choice = table <= 2 ? PotentialChoice::first : PotentialChoice::second;
    RunConfig cfg;
    cfg.params = benchmark_params(limit);
    cfg.spec = benchmark_spec(limit, choice);
    cfg.H_list = {0.0, 0.5};
    if (limit == SymmetryLimit::pseudospin) {
        cfg.n_list = {1, 2, 3};
        cfg.kappa_list = {-1, -2, -3, -4};
    } else {
        cfg.n_list = {0, 1, 2};
        cfg.kappa_list = {-2, -3, -4, -5};
    }
    return cfg;
}

}  // namespace msy
