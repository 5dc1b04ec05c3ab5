// Command line front end: apply operators to expressions, evaluate BMO and
// Orlicz functionals, and run the weak-type / convergence experiments.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "quadsum/bmo.hpp"
#include "quadsum/config.hpp"
#include "quadsum/experiment.hpp"
#include "quadsum/expr.hpp"
#include "quadsum/fourier.hpp"
#include "quadsum/functions.hpp"
#include "quadsum/orlicz.hpp"
#include "quadsum/report.hpp"
#include "quadsum/singular.hpp"

namespace {

using namespace quadsum;
using harness::ExperimentConfig;
using harness::format_double;
using harness::ResultTable;

struct GlobalOptions {
    int grid = 64;
    int order = 4;
    std::uint64_t seed = 1;
    std::string out;
    std::string config;
};

std::vector<double> parse_values(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        out.push_back(std::stod(item));
    }
    return out;
}

void write_or_print(const ResultTable& table, const std::string& out) {
    if (out.empty()) {
        std::fputs(harness::render_csv(table).c_str(), stdout);
    } else {
        harness::emit_report(table, out);
        std::fprintf(stdout, "wrote %s (%zu rows)\n", out.c_str(), table.rows.size());
    }
}

int run_transform(const GlobalOptions& g, const std::string& op, const std::string& expr_src) {
    PeriodicGrid grid = make_grid(g.grid);
    harness::FunctionExpr expr = harness::FunctionExpr::parse(expr_src);
    int n = g.order;

    ResultTable table;
    table.metadata = {"quadsum 0.1.0", "op = " + op, "expr = " + expr_src,
                      "grid = " + std::to_string(g.grid), "order = " + std::to_string(n)};

    if (op == "correction-terms") {
        SampledField2D f = harness::sample_expression(expr, grid);
        singular::CorrectionReport rep = singular::correction_terms(f, n);
        table.metadata.push_back("residual = " + format_double(rep.residual));
        table.columns = {"x", "y", "s1", "s2", "s3"};
        for (int j = 0; j < grid.size; ++j) {
            for (int l = 0; l < grid.size; ++l) {
                table.add_row({grid.primal_node(j), grid.primal_node(l), rep.s1.at(j, l),
                               rep.s2.at(j, l), rep.s3.at(j, l)});
            }
        }
        write_or_print(table, g.out);
        return 0;
    }
    if (op == "ij") {
        SampledField2D f = harness::sample_expression(expr, grid);
        singular::IjReport rep = singular::ij_decomposition(f, n);
        table.metadata.push_back("split_residual = " + format_double(rep.split_residual));
        table.metadata.push_back("chain_residual = " + format_double(rep.chain_residual));
        table.metadata.push_back("shear_gap = " + format_double(rep.shear_gap));
        table.columns = {"x", "y", "i", "j", "i_sheared", "i0", "i1", "i2"};
        for (int j = 0; j < grid.size; ++j) {
            for (int l = 0; l < grid.size; ++l) {
                table.add_row({grid.primal_node(j), grid.primal_node(l), rep.i_term.at(j, l),
                               rep.j_term.at(j, l), rep.i_sheared.at(j, l), rep.i0.at(j, l),
                               rep.i1.at(j, l), rep.i2.at(j, l)});
            }
        }
        write_or_print(table, g.out);
        return 0;
    }
    if (op == "slice-norms") {
        SampledField2D f = harness::sample_expression(expr, grid);
        singular::SliceReport rep = singular::slice_transforms(f);
        table.columns = {"l1_f1", "l1_f2"};
        table.add_row({rep.l1_f1, rep.l1_f2});
        write_or_print(table, g.out);
        return 0;
    }

    bool two_dim =
        op == "modified-quadratic" || op == "rectangular" || op == "diagonal-conjugate";
    if (two_dim) {
        SampledField2D f = harness::sample_expression(expr, grid);
        SampledField2D result = zero_field_2d(grid);
        if (op == "modified-quadratic") {
            result = singular::modified_quadratic_sum(f, n);
        } else if (op == "rectangular") {
            Spectrum2D s = fourier::analyze_2d(f, n, n);
            result = fourier::rectangular_sum(s, n, n, grid);
        } else {
            result = singular::diagonal_conjugate(f);
        }
        table.columns = {"x", "y", "value"};
        for (int j = 0; j < grid.size; ++j) {
            for (int l = 0; l < grid.size; ++l) {
                table.add_row({grid.primal_node(j), grid.primal_node(l), result.at(j, l)});
            }
        }
    } else {
        SampledField1D f = harness::sample_expression_1d(expr, grid);
        Spectrum1D s = fourier::analyze_1d(f, grid.size / 2 - 1);
        SampledField1D result = zero_field_1d(grid);
        if (op == "partial-sum") {
            result = fourier::partial_sum_1d(s, n, grid);
        } else if (op == "cesaro") {
            result = fourier::cesaro_mean(s, n, grid);
        } else if (op == "conjugate") {
            result = fourier::synthesize_1d(singular::conjugate_function(s), grid);
        } else if (op == "conjugate-partial-sum") {
            result = singular::conjugate_partial_sum(s, n, grid);
        } else if (op == "u") {
            result = singular::u_transform(f, n);
        } else if (op == "pv-conjugate") {
            result = singular::pv_transform(f, singular::PvKernel::conjugate());
        } else if (op == "pv-cos") {
            result = singular::pv_transform(f, singular::PvKernel::cosine(n));
        } else if (op == "pv-sin") {
            result = singular::pv_transform(f, singular::PvKernel::sine(n));
        } else {
            throw std::invalid_argument("unknown operator '" + op + "'");
        }
        table.columns = {"x", "value"};
        for (int j = 0; j < grid.size; ++j) {
            table.add_row({grid.primal_node(j), result.values[j]});
        }
    }
    write_or_print(table, g.out);
    return 0;
}

int run_bmo(const GlobalOptions& g, const std::string& values_csv, const std::string& expr_src,
            double x, double y, int refine) {
    if (!values_csv.empty()) {
        functionals::StepSequence xi = functionals::make_step_sequence(parse_values(values_csv));
        functionals::BmoResult r = functionals::bmo_norm_step(xi, refine);
        std::printf("total = %s\n", format_double(r.total).c_str());
        std::printf("oscillation = %s\n", format_double(r.oscillation).c_str());
        std::printf("mean = %s\n", format_double(r.mean_abs).c_str());
        std::printf("interval = [%s, %s]\n", format_double(r.a).c_str(),
                    format_double(r.b).c_str());
        std::printf("prefix_sup = %s\n",
                    format_double(functionals::bmo_sequence(xi.values, refine)).c_str());
        return 0;
    }
    if (expr_src.empty()) {
        throw std::invalid_argument("bmo needs --values or --expr");
    }
    PeriodicGrid grid = make_grid(g.grid);
    harness::FunctionExpr expr = harness::FunctionExpr::parse(expr_src);
    SampledField2D f = harness::sample_expression(expr, grid);
    int n = g.order;
    Spectrum2D s = fourier::analyze_2d(f, n - 1, n - 1);
    double v = functionals::bmo_of_partial_sums(s, x, y, n, refine);
    std::printf("bmo[S_nn(%s, %s)] (n < %d) = %s\n", format_double(x).c_str(),
                format_double(y).c_str(), n, format_double(v).c_str());
    return 0;
}

int run_orlicz(const std::string& young, const std::string& values_csv, double constant,
               double indicator) {
    if (young != "phi" && young != "psi") {
        throw std::invalid_argument("--young must be phi or psi");
    }
    functionals::YoungFunction M =
        young == "phi" ? functionals::young_phi() : functionals::young_psi();
    if (!values_csv.empty()) {
        functionals::StepSequence xi = functionals::make_step_sequence(parse_values(values_csv));
        std::printf("luxemburg = %s\n", format_double(luxemburg_norm(xi, M)).c_str());
        return 0;
    }
    if (indicator > 0.0) {
        if (indicator >= 1.0) throw std::invalid_argument("--indicator must lie in (0,1)");
        std::vector<double> v{1.0, 0.0};
        std::vector<double> w{indicator, 1.0 - indicator};
        std::printf("luxemburg = %s\n", format_double(luxemburg_norm(v, w, M)).c_str());
        return 0;
    }
    functionals::StepSequence xi = functionals::make_step_sequence({constant});
    std::printf("luxemburg = %s\n", format_double(luxemburg_norm(xi, M)).c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical laboratory for quadratic partial sums of double Fourier series"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    app.add_option("--grid", g.grid, "grid size G (even, >= 4)");
    app.add_option("--order", g.order, "operator order / truncation");
    app.add_option("--seed", g.seed, "random seed echoed into reports");
    app.add_option("--out", g.out, "output CSV path (default: stdout)");
    app.add_option("--config", g.config, "experiment config file");

    auto* transform = app.add_subcommand("transform", "apply an operator to an expression");
    std::string op = "partial-sum", expr_src = "cos(x)";
    transform->add_option("--op", op,
                          "partial-sum | cesaro | conjugate | conjugate-partial-sum | u | "
                          "pv-conjugate | pv-cos | pv-sin | modified-quadratic | rectangular | "
                          "diagonal-conjugate | correction-terms | ij | slice-norms");
    transform->add_option("--expr", expr_src, "expression in x (and y for 2D operators)");

    auto* bmo = app.add_subcommand("bmo", "BMO norm of a step sequence or of partial sums");
    std::string values_csv, bmo_expr;
    double px = 0.0, py = 0.0;
    int refine = 16;
    bmo->add_option("--values", values_csv, "comma separated step sequence");
    bmo->add_option("--expr", bmo_expr, "expression; BMO of its quadratic sums at (--x,--y)");
    bmo->add_option("--x", px, "evaluation point x");
    bmo->add_option("--y", py, "evaluation point y");
    bmo->add_option("--refine", refine, "endpoint sub-grid per cell");

    auto* orlicz = app.add_subcommand("orlicz", "Luxemburg norms");
    std::string young = "psi";
    std::string orlicz_values;
    double constant = 1.0, indicator = 0.0;
    orlicz->add_option("--young", young, "phi | psi");
    orlicz->add_option("--values", orlicz_values, "comma separated step sequence on [0,1]");
    orlicz->add_option("--constant", constant, "constant function on [0,1]");
    orlicz->add_option("--indicator", indicator, "indicator of a set of this measure");

    auto* experiment = app.add_subcommand("experiment", "run a measurement campaign");
    experiment->require_subcommand(1);
    auto* weak = experiment->add_subcommand("weak-type", "level sets of bmo[S_nn] vs L log L");
    experiment->add_subcommand("convergence", "exponential/psi summability trends");

    CLI11_PARSE(app, argc, argv);

    try {
        if (transform->parsed()) return run_transform(g, op, expr_src);
        if (bmo->parsed()) return run_bmo(g, values_csv, bmo_expr, px, py, refine);
        if (orlicz->parsed()) return run_orlicz(young, orlicz_values, constant, indicator);
        if (experiment->parsed()) {
            ExperimentConfig cfg;
            if (!g.config.empty()) cfg = harness::load_config(g.config);
            if (app.count("--grid")) cfg.grid = g.grid;
            if (app.count("--order")) cfg.truncation = g.order;
            if (app.count("--seed")) cfg.seed = g.seed;
            if (!g.out.empty()) cfg.output = g.out;
            ResultTable table = weak->parsed() ? harness::weak_type_experiment(cfg)
                                               : harness::convergence_experiment(cfg);
            write_or_print(table, cfg.output);
        }
    } catch (const std::exception& err) {
        std::fprintf(stderr, "error: %s\n", err.what());
        return 1;
    }
    return 0;
}
