#include "quadsum/fourier.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "quadsum/trig_table.hpp"

namespace quadsum::fourier {

using detail::TrigTable;

namespace {

void check_order(int n, int max_freq, const char* what) {
    if (n < 0 || n > max_freq) {
        throw std::invalid_argument(std::string(what) + " order " + std::to_string(n) +
                                    " outside [0, " + std::to_string(max_freq) + "]");
    }
}

void check_bound(int max_freq, int grid_size, const char* what) {
    if (max_freq < 0 || max_freq > grid_size / 2 - 1) {
        throw std::invalid_argument(std::string(what) + " frequency bound " +
                                    std::to_string(max_freq) + " outside [0, G/2-1] for G=" +
                                    std::to_string(grid_size));
    }
}

// Weighted synthesis sum_{|k|<=n} w(k) Re(c_k e^{ikx}) on the grid, ascending k.
template <typename Weight>
SampledField1D synth_weighted(const Spectrum1D& s, int n, const PeriodicGrid& grid, Weight w) {
    TrigTable tab(grid);
    SampledField1D out = zero_field_1d(grid);
    for (int k = -n; k <= n; ++k) {
        Complex c = s.at(k) * w(k);
        for (int j = 0; j < grid.size; ++j) {
            out.values[j] += (c * tab.primal_phase(k, j)).real();
        }
    }
    return out;
}

template <typename Weight>
double synth_weighted_point(const Spectrum1D& s, int n, double x, Weight w) {
    double acc = 0.0;
    for (int k = -n; k <= n; ++k) {
        Complex phase{std::cos(k * x), std::sin(k * x)};
        acc += (s.at(k) * w(k) * phase).real();
    }
    return acc;
}

}  // namespace

Spectrum1D analyze_1d(const SampledField1D& f, int max_freq) {
    check_bound(max_freq, f.grid.size, "analyze_1d");
    TrigTable tab(f.grid);
    Spectrum1D s = zero_spectrum_1d(max_freq);
    int G = f.grid.size;
    for (int n = -max_freq; n <= max_freq; ++n) {
        Complex acc{0.0, 0.0};
        for (int j = 0; j < G; ++j) {
            acc += f.values[j] * std::conj(tab.primal_phase(n, j));
        }
        s.at(n) = acc / static_cast<double>(G);
    }
    return s;
}

Spectrum2D analyze_2d(const SampledField2D& f, int max_m, int max_n) {
    check_bound(max_m, f.grid.size, "analyze_2d");
    check_bound(max_n, f.grid.size, "analyze_2d");
    TrigTable tab(f.grid);
    int G = f.grid.size;

    // Pass 1: transform in y for every row x_j.
    std::vector<Complex> rows(static_cast<size_t>(G) * (2 * max_n + 1));
    for (int j = 0; j < G; ++j) {
        for (int n = -max_n; n <= max_n; ++n) {
            Complex acc{0.0, 0.0};
            for (int l = 0; l < G; ++l) {
                acc += f.at(j, l) * std::conj(tab.primal_phase(n, l));
            }
            rows[static_cast<size_t>(j) * (2 * max_n + 1) + (max_n + n)] = acc / static_cast<double>(G);
        }
    }
    // Pass 2: transform in x.
    Spectrum2D s = zero_spectrum_2d(max_m, max_n);
    for (int m = -max_m; m <= max_m; ++m) {
        for (int n = -max_n; n <= max_n; ++n) {
            Complex acc{0.0, 0.0};
            for (int j = 0; j < G; ++j) {
                acc += rows[static_cast<size_t>(j) * (2 * max_n + 1) + (max_n + n)] *
                       std::conj(tab.primal_phase(m, j));
            }
            s.at(m, n) = acc / static_cast<double>(G);
        }
    }
    return s;
}

double partial_sum_1d(const Spectrum1D& s, int n, double x) {
    check_order(n, s.max_freq, "partial_sum_1d");
    return synth_weighted_point(s, n, x, [](int) { return 1.0; });
}

SampledField1D partial_sum_1d(const Spectrum1D& s, int n, const PeriodicGrid& grid) {
    check_order(n, s.max_freq, "partial_sum_1d");
    return synth_weighted(s, n, grid, [](int) { return 1.0; });
}

double cesaro_mean(const Spectrum1D& s, int n, double x) {
    check_order(n, s.max_freq, "cesaro_mean");
    return synth_weighted_point(s, n, x,
                                [n](int k) { return 1.0 - std::abs(k) / (n + 1.0); });
}

SampledField1D cesaro_mean(const Spectrum1D& s, int n, const PeriodicGrid& grid) {
    check_order(n, s.max_freq, "cesaro_mean");
    return synth_weighted(s, n, grid,
                          [n](int k) { return 1.0 - std::abs(k) / (n + 1.0); });
}

double rectangular_sum(const Spectrum2D& s, int m, int n, double x, double y) {
    check_order(m, s.max_m, "rectangular_sum");
    check_order(n, s.max_n, "rectangular_sum");
    double acc = 0.0;
    for (int mm = -m; mm <= m; ++mm) {
        Complex px{std::cos(mm * x), std::sin(mm * x)};
        for (int nn = -n; nn <= n; ++nn) {
            Complex py{std::cos(nn * y), std::sin(nn * y)};
            acc += (s.at(mm, nn) * px * py).real();
        }
    }
    return acc;
}

SampledField2D rectangular_sum(const Spectrum2D& s, int m, int n, const PeriodicGrid& grid) {
    check_order(m, s.max_m, "rectangular_sum");
    check_order(n, s.max_n, "rectangular_sum");
    TrigTable tab(grid);
    int G = grid.size;

    // Synthesize in y per m, then in x; keeps the cost at O(G^2 * modes).
    std::vector<Complex> rows(static_cast<size_t>(2 * m + 1) * G, Complex{0.0, 0.0});
    for (int mm = -m; mm <= m; ++mm) {
        for (int nn = -n; nn <= n; ++nn) {
            Complex c = s.at(mm, nn);
            for (int l = 0; l < G; ++l) {
                rows[static_cast<size_t>(m + mm) * G + l] += c * tab.primal_phase(nn, l);
            }
        }
    }
    SampledField2D out = zero_field_2d(grid);
    for (int mm = -m; mm <= m; ++mm) {
        for (int j = 0; j < G; ++j) {
            Complex px = tab.primal_phase(mm, j);
            for (int l = 0; l < G; ++l) {
                out.at(j, l) += (rows[static_cast<size_t>(m + mm) * G + l] * px).real();
            }
        }
    }
    return out;
}

SampledField1D synthesize_1d(const Spectrum1D& s, const PeriodicGrid& grid) {
    return partial_sum_1d(s, s.max_freq, grid);
}

SampledField2D synthesize_2d(const Spectrum2D& s, const PeriodicGrid& grid) {
    return rectangular_sum(s, s.max_m, s.max_n, grid);
}

double dirichlet_kernel(int n, double t) {
    double s = std::sin(0.5 * t);
    if (s == 0.0) return n + 0.5;
    return std::sin((n + 0.5) * t) / (2.0 * s);
}

double conjugate_dirichlet_kernel(int n, double t) {
    double s = std::sin(0.5 * t);
    if (s == 0.0) return 0.0;
    return (std::cos(0.5 * t) - std::cos((n + 0.5) * t)) / (2.0 * s);
}

std::pair<double, double> dirichlet_kernels(int n, double t) {
    return {dirichlet_kernel(n, t), conjugate_dirichlet_kernel(n, t)};
}

}  // namespace quadsum::fourier
