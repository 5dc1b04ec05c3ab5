#include "quadsum/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>

#include "quadsum/bmo.hpp"
#include "quadsum/fourier.hpp"
#include "quadsum/functions.hpp"
#include "quadsum/means.hpp"
#include "quadsum/trig_table.hpp"

namespace quadsum::harness {

namespace {

using functionals::MeanSpec;

// Phase tables e^{ikx_j} for k = -top..top at every primal node.
std::vector<Complex> phase_table(const PeriodicGrid& grid, int top) {
    detail::TrigTable tab(grid);
    std::vector<Complex> px(static_cast<size_t>(2 * top + 1) * grid.size);
    for (int k = -top; k <= top; ++k) {
        for (int j = 0; j < grid.size; ++j) {
            px[static_cast<size_t>(top + k) * grid.size + j] = tab.primal_phase(k, j);
        }
    }
    return px;
}

// running += Re(c e^{i(m x_j + n y_l)}) over the whole grid.
void add_mode(std::vector<double>& running, const std::vector<Complex>& phases, int top, int G,
              Complex c, int m, int n) {
    const Complex* pm = &phases[static_cast<size_t>(top + m) * G];
    const Complex* pn = &phases[static_cast<size_t>(top + n) * G];
    for (int j = 0; j < G; ++j) {
        Complex a = c * pm[j];
        double ar = a.real(), ai = a.imag();
        double* row = &running[static_cast<size_t>(j) * G];
        for (int l = 0; l < G; ++l) {
            row[l] += ar * pn[l].real() - ai * pn[l].imag();
        }
    }
}

void add_shell(std::vector<double>& running, const Spectrum2D& s,
               const std::vector<Complex>& phases, int top, int G, int k) {
    if (k == 0) {
        double c = s.at(0, 0).real();
        for (double& v : running) v += c;
        return;
    }
    for (int m = -k; m <= k; ++m) {
        if (std::abs(m) == k) {
            for (int n = -k; n <= k; ++n) add_mode(running, phases, top, G, s.at(m, n), m, n);
        } else {
            add_mode(running, phases, top, G, s.at(m, -k), m, -k);
            add_mode(running, phases, top, G, s.at(m, k), m, k);
        }
    }
}

double percentile(std::vector<double> data, double q) {
    size_t idx = static_cast<size_t>(q * (data.size() - 1));
    std::nth_element(data.begin(), data.begin() + idx, data.end());
    return data[idx];
}

}  // namespace

std::vector<double> bmo_field(const Spectrum2D& s, const PeriodicGrid& grid, int truncation,
                              int refinement) {
    if (truncation < 1 || truncation - 1 > std::min(s.max_m, s.max_n)) {
        throw std::invalid_argument("bmo_field: truncation out of range");
    }
    int G = grid.size;
    int top = truncation - 1;
    std::vector<Complex> phases = phase_table(grid, std::max(top, 1));
    size_t points = static_cast<size_t>(G) * G;

    // Per-point sequences S_00..S_{N-1,N-1}, built shell by shell.
    std::vector<double> seq(points * truncation);
    std::vector<double> running(points, 0.0);
    for (int k = 0; k < truncation; ++k) {
        add_shell(running, s, phases, std::max(top, 1), G, k);
        for (size_t p = 0; p < points; ++p) seq[p * truncation + k] = running[p];
    }

    std::vector<double> out(points);
    for (size_t p = 0; p < points; ++p) {
        out[p] = functionals::bmo_sequence(
            std::span<const double>(seq.data() + p * truncation, truncation), refinement);
    }
    return out;
}

ResultTable weak_type_experiment(const ExperimentConfig& cfg) {
    validate_config(cfg);
    PeriodicGrid grid = make_grid(cfg.grid);
    double h = grid.cell_width();

    ResultTable table;
    table.metadata = config_echo(cfg);
    table.metadata.insert(table.metadata.begin(), "experiment = weak-type");
    table.columns = {"function", "lambda", "measure", "lambda_times_measure", "llogl", "ratio"};

    double overall_ratio = 0.0;
    for (const auto& entry : cfg.function_list()) {
        TestFunction tf = resolve_function(entry);
        SampledField2D field = sample_function(tf, grid);
        double llogl = llogl_norm(field);
        double scale = 1.0 + llogl;

        Spectrum2D spec = fourier::analyze_2d(field, cfg.truncation - 1, cfg.truncation - 1);
        std::vector<double> bmo = bmo_field(spec, grid, cfg.truncation, cfg.bmo_refinement);

        double max_ratio = 0.0;
        double lo = cfg.lambda_min * scale;
        double hi = cfg.lambda_max * scale;
        for (int t = 0; t < cfg.lambda_count; ++t) {
            double frac = cfg.lambda_count > 1 ? static_cast<double>(t) / (cfg.lambda_count - 1)
                                               : 0.0;
            double lambda = lo * std::pow(hi / lo, frac);
            size_t count = 0;
            for (double v : bmo) {
                if (v > lambda) ++count;
            }
            double measure = static_cast<double>(count) * h * h;
            double ratio = lambda * measure / scale;
            max_ratio = std::max(max_ratio, ratio);
            table.add_row({tf.name, lambda, measure, lambda * measure, llogl, ratio});
        }
        table.add_row({tf.name, std::string("max"), std::string(), std::string(), llogl,
                       max_ratio});
        overall_ratio = std::max(overall_ratio, max_ratio);
    }
    table.add_row({std::string("ALL"), std::string("max"), std::string(), std::string(),
                   std::string(), overall_ratio});
    return table;
}

ResultTable convergence_experiment(const ExperimentConfig& cfg) {
    validate_config(cfg);
    PeriodicGrid grid = make_grid(cfg.grid);
    int G = cfg.grid;
    size_t points = static_cast<size_t>(G) * G;

    MeanSpec mean = cfg.psi.empty()
                        ? MeanSpec::exponential(cfg.exp_coefficient)
                        : MeanSpec::general([expr = FunctionExpr::parse(cfg.psi)](double u) {
                              return expr.eval(u, 0.0);
                          });

    ResultTable table;
    table.metadata = config_echo(cfg);
    table.metadata.insert(table.metadata.begin(), "experiment = convergence");
    table.columns = {"function", "m", "median_mean", "p95_mean", "exactness"};

    int full = G / 2 - 1;
    int top = std::min(cfg.truncation, full);
    std::vector<int> rungs;
    for (int m = 8; m < top; m *= 2) rungs.push_back(m);
    rungs.push_back(top);

    for (const auto& entry : cfg.function_list()) {
        TestFunction tf = resolve_function(entry);
        SampledField2D field = sample_function(tf, grid);
        Spectrum2D spec = fourier::analyze_2d(field, full, full);
        SampledField2D reference = fourier::synthesize_2d(spec, grid);

        std::vector<Complex> phases = phase_table(grid, std::max(top, 1));
        std::vector<double> running(points, 0.0);
        std::vector<double> psi_sum(points, 0.0);
        double exact_max = 0.0;
        size_t rung_idx = 0;
        for (int n = 0; n <= top && rung_idx < rungs.size(); ++n) {
            add_shell(running, spec, phases, std::max(top, 1), G, n);
            for (size_t p = 0; p < points; ++p) {
                psi_sum[p] += mean.apply(std::abs(running[p] - reference.values[p]));
            }
            if (tf.polynomial && n >= tf.degree) {
                for (size_t p = 0; p < points; ++p) {
                    exact_max = std::max(exact_max, std::abs(running[p] - reference.values[p]));
                }
            }
            if (n == rungs[rung_idx]) {
                std::vector<double> means(points);
                for (size_t p = 0; p < points; ++p) means[p] = psi_sum[p] / (n + 1);
                double med = percentile(means, 0.5);
                double p95 = percentile(means, 0.95);
                if (tf.polynomial) {
                    table.add_row({tf.name, static_cast<double>(n), med, p95, exact_max});
                } else {
                    table.add_row({tf.name, static_cast<double>(n), med, p95, std::string()});
                }
                ++rung_idx;
            }
        }
    }
    return table;
}

}  // namespace quadsum::harness
