#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "quadsum/expr.hpp"
#include "quadsum/field.hpp"

namespace quadsum::harness {

// A member of the shipped test family.
struct TestFunction {
    std::string name;
    bool polynomial = false;
    int degree = 0;          // max(|m|,|n|) over modes, for exactness checks
    bool offset_sampled = false;  // sample at half-shifted nodes to dodge singular lines
    std::function<double(double, double)> eval;
};

// Trigonometric polynomials, a smooth non-polynomial, and an L log L
// function with logarithmic singularities along the node lines.
const std::vector<TestFunction>& shipped_family();

std::optional<TestFunction> find_shipped(const std::string& name);

SampledField2D sample_function(const TestFunction& f, const PeriodicGrid& grid);

// Samples an expression at the primal nodes; a non-finite value or a domain
// error is reported with the offending node.
SampledField2D sample_expression(const FunctionExpr& e, const PeriodicGrid& grid);
SampledField1D sample_expression_1d(const FunctionExpr& e, const PeriodicGrid& grid);

// Resolves a config entry: a shipped name, or an expression in x and y.
TestFunction resolve_function(const std::string& entry);

// Discrete cell-measure sum of |f| log+ |f| over the square period.
double llogl_norm(const SampledField2D& f);

}  // namespace quadsum::harness
