#include "quadsum/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "quadsum/functions.hpp"
#include "quadsum/report.hpp"

namespace quadsum::harness {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

int parse_int(const std::string& key, const std::string& value) {
    int out = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
        throw std::invalid_argument("config: bad integer for '" + key + "': " + value);
    }
    return out;
}

std::uint64_t parse_seed(const std::string& key, const std::string& value) {
    std::uint64_t out = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
        throw std::invalid_argument("config: bad seed for '" + key + "': " + value);
    }
    return out;
}

double parse_double(const std::string& key, const std::string& value) {
    double out = 0.0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
        throw std::invalid_argument("config: bad number for '" + key + "': " + value);
    }
    return out;
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> out;
    std::string current;
    std::stringstream ss(value);
    while (std::getline(ss, current, ';')) {
        std::string item = trim(current);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

}  // namespace

std::vector<std::string> ExperimentConfig::function_list() const {
    if (!functions.empty()) return functions;
    std::vector<std::string> names;
    for (const auto& f : shipped_family()) names.push_back(f.name);
    return names;
}

ExperimentConfig parse_config_text(const std::string& text) {
    ExperimentConfig cfg;
    std::stringstream ss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        size_t eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected 'key = value'");
        }
        std::string key = trim(stripped.substr(0, eq));
        std::string value = trim(stripped.substr(eq + 1));
        if (key == "grid") {
            cfg.grid = parse_int(key, value);
        } else if (key == "truncation") {
            cfg.truncation = parse_int(key, value);
        } else if (key == "lambda_count") {
            cfg.lambda_count = parse_int(key, value);
        } else if (key == "lambda_min") {
            cfg.lambda_min = parse_double(key, value);
        } else if (key == "lambda_max") {
            cfg.lambda_max = parse_double(key, value);
        } else if (key == "functions") {
            cfg.functions = split_list(value);
        } else if (key == "exp_coefficient") {
            cfg.exp_coefficient = parse_double(key, value);
        } else if (key == "psi") {
            cfg.psi = value;
        } else if (key == "bmo_refinement") {
            cfg.bmo_refinement = parse_int(key, value);
        } else if (key == "output") {
            cfg.output = value;
        } else if (key == "seed") {
            cfg.seed = parse_seed(key, value);
        } else {
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": unknown key '" + key + "'");
        }
    }
    return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream file(path);
    if (!file) throw std::runtime_error("cannot read config '" + path.string() + "'");
    std::stringstream ss;
    ss << file.rdbuf();
    return parse_config_text(ss.str());
}

void validate_config(const ExperimentConfig& cfg) {
    if (cfg.grid < 4 || cfg.grid % 2 != 0) {
        throw std::invalid_argument("config: grid must be even and >= 4");
    }
    if (cfg.truncation < 1 || cfg.truncation - 1 > cfg.grid / 2 - 1) {
        throw std::invalid_argument("config: truncation must lie in [1, G/2]");
    }
    if (cfg.lambda_count < 1) throw std::invalid_argument("config: lambda_count must be >= 1");
    if (!(cfg.lambda_min > 0.0) || !(cfg.lambda_max > cfg.lambda_min)) {
        throw std::invalid_argument("config: lambda range must satisfy 0 < min < max");
    }
    if (!(cfg.exp_coefficient > 0.0)) {
        throw std::invalid_argument("config: exp_coefficient must be positive");
    }
    if (cfg.bmo_refinement < 1 || cfg.bmo_refinement > 64) {
        throw std::invalid_argument("config: bmo_refinement must lie in [1, 64]");
    }
    for (const auto& entry : cfg.function_list()) {
        resolve_function(entry);  // throws on a bad expression
    }
    if (!cfg.psi.empty()) {
        FunctionExpr::parse(cfg.psi);
    }
}

std::vector<std::string> config_echo(const ExperimentConfig& cfg) {
    std::vector<std::string> out;
    out.push_back("quadsum 0.1.0");
    out.push_back("grid = " + std::to_string(cfg.grid));
    out.push_back("truncation = " + std::to_string(cfg.truncation));
    out.push_back("lambda_count = " + std::to_string(cfg.lambda_count));
    out.push_back("lambda_min = " + format_double(cfg.lambda_min));
    out.push_back("lambda_max = " + format_double(cfg.lambda_max));
    std::string fns;
    for (const auto& f : cfg.function_list()) {
        if (!fns.empty()) fns += "; ";
        fns += f;
    }
    out.push_back("functions = " + fns);
    out.push_back("exp_coefficient = " + format_double(cfg.exp_coefficient));
    if (!cfg.psi.empty()) out.push_back("psi = " + cfg.psi);
    out.push_back("bmo_refinement = " + std::to_string(cfg.bmo_refinement));
    out.push_back("seed = " + std::to_string(cfg.seed));
    return out;
}

}  // namespace quadsum::harness
