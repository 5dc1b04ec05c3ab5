#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace quadsum::harness {

// Declarative description of a harness run. The file form is flat
// `key = value` text; function lists are ';'-separated so expressions may
// contain commas. Unknown keys are errors.
struct ExperimentConfig {
    int grid = 128;
    int truncation = 32;            // quadratic orders 0..truncation-1 (weak type)
                                    // and the top of the dyadic ladder (convergence)
    int lambda_count = 32;
    double lambda_min = 1e-2;       // scaled by (1 + llogl) per function
    double lambda_max = 1e2;
    std::vector<std::string> functions;  // shipped names or expressions
    double exp_coefficient = 1.0;   // A in exp(A|.|) - 1
    std::string psi;                // optional expression in x; overrides the exponential
    int bmo_refinement = 2;
    std::string output;             // CSV destination; empty = caller decides
    std::uint64_t seed = 1;

    // Defaults to the shipped family when the list is empty.
    std::vector<std::string> function_list() const;
};

ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig load_config(const std::filesystem::path& path);

// Range checks; throws std::invalid_argument with the offending field.
void validate_config(const ExperimentConfig& cfg);

// Key = value echo in a fixed order, used as report metadata.
std::vector<std::string> config_echo(const ExperimentConfig& cfg);

}  // namespace quadsum::harness
