#include "quadsum/functions.hpp"

#include <cmath>
#include <stdexcept>

namespace quadsum::harness {

const std::vector<TestFunction>& shipped_family() {
    static const std::vector<TestFunction> family = [] {
        std::vector<TestFunction> f;
        f.push_back({"poly_basic", true, 1, false,
                     [](double x, double y) { return std::cos(x) * std::cos(y); }});
        f.push_back({"poly_mixed", true, 3, false, [](double x, double y) {
                         return std::cos(2.0 * x + y) + 0.5 * std::cos(x) * std::cos(2.0 * y) +
                                0.25 * std::sin(3.0 * x) * std::sin(y);
                     }});
        f.push_back({"smooth_exp", false, 0, false,
                     [](double x, double y) { return std::exp(std::cos(x)) * std::cos(y); }});
        f.push_back({"log_singular", false, 0, true, [](double x, double y) {
                         return std::log(std::abs(2.0 * std::sin(0.5 * x))) *
                                std::log(std::abs(2.0 * std::sin(0.5 * y)));
                     }});
        return f;
    }();
    return family;
}

std::optional<TestFunction> find_shipped(const std::string& name) {
    for (const auto& f : shipped_family()) {
        if (f.name == name) return f;
    }
    return std::nullopt;
}

SampledField2D sample_function(const TestFunction& f, const PeriodicGrid& grid) {
    SampledField2D out = zero_field_2d(grid);
    double shift = f.offset_sampled ? 0.5 * grid.cell_width() : 0.0;
    for (int j = 0; j < grid.size; ++j) {
        for (int l = 0; l < grid.size; ++l) {
            double v;
            try {
                v = f.eval(grid.primal_node(j) + shift, grid.primal_node(l) + shift);
            } catch (const EvalError& err) {
                throw std::runtime_error("function '" + f.name + "' failed at node (" +
                                         std::to_string(j) + "," + std::to_string(l) +
                                         "): " + err.what());
            }
            if (!std::isfinite(v)) {
                throw std::runtime_error("function '" + f.name + "' is not finite at node (" +
                                         std::to_string(j) + "," + std::to_string(l) + ")");
            }
            out.at(j, l) = v;
        }
    }
    return out;
}

SampledField2D sample_expression(const FunctionExpr& e, const PeriodicGrid& grid) {
    SampledField2D out = zero_field_2d(grid);
    for (int j = 0; j < grid.size; ++j) {
        for (int l = 0; l < grid.size; ++l) {
            double v;
            try {
                v = e.eval(grid.primal_node(j), grid.primal_node(l));
            } catch (const EvalError& err) {
                throw std::runtime_error("expression '" + e.source() + "' failed at node (" +
                                         std::to_string(j) + "," + std::to_string(l) +
                                         "): " + err.what());
            }
            if (!std::isfinite(v)) {
                throw std::runtime_error("expression '" + e.source() +
                                         "' is not finite at node (" + std::to_string(j) + "," +
                                         std::to_string(l) + ")");
            }
            out.at(j, l) = v;
        }
    }
    return out;
}

SampledField1D sample_expression_1d(const FunctionExpr& e, const PeriodicGrid& grid) {
    SampledField1D out = zero_field_1d(grid);
    for (int j = 0; j < grid.size; ++j) {
        double v;
        try {
            v = e.eval(grid.primal_node(j), 0.0);
        } catch (const EvalError& err) {
            throw std::runtime_error("expression '" + e.source() + "' failed at node " +
                                     std::to_string(j) + ": " + err.what());
        }
        if (!std::isfinite(v)) {
            throw std::runtime_error("expression '" + e.source() + "' is not finite at node " +
                                     std::to_string(j));
        }
        out.values[j] = v;
    }
    return out;
}

TestFunction resolve_function(const std::string& entry) {
    if (auto shipped = find_shipped(entry)) return *shipped;
    FunctionExpr e = FunctionExpr::parse(entry);
    TestFunction f;
    f.name = entry;
    f.eval = [expr = std::move(e)](double x, double y) { return expr.eval(x, y); };
    return f;
}

double llogl_norm(const SampledField2D& f) {
    double acc = 0.0;
    for (double v : f.values) {
        double a = std::abs(v);
        if (a > 1.0) acc += a * std::log(a);
    }
    double h = f.grid.cell_width();
    return acc * h * h;
}

}  // namespace quadsum::harness
