#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

#include "quadsum/field.hpp"
#include "quadsum/fourier.hpp"
#include "quadsum/spectrum.hpp"

namespace testsupport {

using quadsum::Complex;
using quadsum::PeriodicGrid;
using quadsum::SampledField1D;
using quadsum::SampledField2D;
using quadsum::Spectrum1D;
using quadsum::Spectrum2D;

// splitmix64-based uniforms; reproducible across toolchains.
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    double uniform(double lo = 0.0, double hi = 1.0) {
        return lo + (hi - lo) * ((next() >> 11) * 0x1.0p-53);
    }
};

inline Spectrum1D random_spectrum_1d(int max_freq, Rng& rng) {
    Spectrum1D s = quadsum::zero_spectrum_1d(max_freq);
    s.at(0) = Complex{rng.uniform(-1.0, 1.0), 0.0};
    for (int k = 1; k <= max_freq; ++k) {
        Complex c{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
        s.at(k) = c;
        s.at(-k) = std::conj(c);
    }
    return s;
}

inline Spectrum2D random_spectrum_2d(int bandwidth, Rng& rng) {
    Spectrum2D s = quadsum::zero_spectrum_2d(bandwidth, bandwidth);
    for (int m = 0; m <= bandwidth; ++m) {
        for (int n = -bandwidth; n <= bandwidth; ++n) {
            if (m == 0 && n < 0) continue;
            Complex c{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
            if (m == 0 && n == 0) c = Complex{c.real(), 0.0};
            s.at(m, n) = c;
            s.at(-m, -n) = std::conj(c);
        }
    }
    return s;
}

inline SampledField1D random_bandlimited_1d(const PeriodicGrid& grid, int bandwidth, Rng& rng) {
    Spectrum1D s = random_spectrum_1d(bandwidth, rng);
    return quadsum::fourier::synthesize_1d(s, grid);
}

inline SampledField2D random_bandlimited_2d(const PeriodicGrid& grid, int bandwidth, Rng& rng) {
    Spectrum2D s = random_spectrum_2d(bandwidth, rng);
    return quadsum::fourier::synthesize_2d(s, grid);
}

inline SampledField1D sample_1d(const PeriodicGrid& grid, const std::function<double(double)>& f) {
    SampledField1D out = quadsum::zero_field_1d(grid);
    for (int j = 0; j < grid.size; ++j) out.values[j] = f(grid.primal_node(j));
    return out;
}

inline SampledField2D sample_2d(const PeriodicGrid& grid,
                                const std::function<double(double, double)>& f) {
    SampledField2D out = quadsum::zero_field_2d(grid);
    for (int j = 0; j < grid.size; ++j) {
        for (int l = 0; l < grid.size; ++l) {
            out.at(j, l) = f(grid.primal_node(j), grid.primal_node(l));
        }
    }
    return out;
}

// Periodic trapezoid rule over [-pi, pi) with `points` midpoint-shifted
// nodes (avoids 0 and +-pi, so principal-value integrands stay finite).
inline double quadrature(const std::function<double(double)>& f, int points = 20000) {
    double h = quadsum::kTwoPi / points;
    double acc = 0.0;
    for (int i = 0; i < points; ++i) {
        acc += f(-quadsum::kPi + (i + 0.5) * h);
    }
    return acc * h;
}

inline double quadrature_2d(const std::function<double(double, double)>& f, int points = 400) {
    double h = quadsum::kTwoPi / points;
    double acc = 0.0;
    for (int i = 0; i < points; ++i) {
        double u = -quadsum::kPi + (i + 0.5) * h;
        for (int j = 0; j < points; ++j) {
            acc += f(u, -quadsum::kPi + (j + 0.5) * h);
        }
    }
    return acc * h * h;
}

// Band-limited point evaluation straight from the spectrum.
inline double eval_spectrum(const Spectrum1D& s, double x) {
    double acc = 0.0;
    for (int k = -s.max_freq; k <= s.max_freq; ++k) {
        acc += (s.at(k) * Complex{std::cos(k * x), std::sin(k * x)}).real();
    }
    return acc;
}

inline double eval_spectrum(const Spectrum2D& s, double x, double y) {
    double acc = 0.0;
    for (int m = -s.max_m; m <= s.max_m; ++m) {
        for (int n = -s.max_n; n <= s.max_n; ++n) {
            acc += (s.at(m, n) * Complex{std::cos(m * x + n * y), std::sin(m * x + n * y)}).real();
        }
    }
    return acc;
}

// Dense brute-force lower bound for the step-function BMO oscillation:
// every endpoint pair on a uniform grid of [0,1], with exact cell overlaps.
inline double brute_force_bmo_oscillation(const std::vector<double>& xi, int grid_points = 2000) {
    int n = static_cast<int>(xi.size());
    double cell = 1.0 / n;
    double g = 1.0 / grid_points;
    double best = 0.0;
    std::vector<double> overlap(n);
    for (int a = 0; a < grid_points; ++a) {
        for (int b = a + 1; b <= grid_points; ++b) {
            double lo = a * g, hi = b * g;
            double len = hi - lo;
            double sum = 0.0;
            for (int c = 0; c < n; ++c) {
                double w = std::min(hi, (c + 1) * cell) - std::max(lo, c * cell);
                overlap[c] = w > 0.0 ? w : 0.0;
                sum += overlap[c] * xi[c];
            }
            double mean = sum / len;
            double dev = 0.0;
            for (int c = 0; c < n; ++c) dev += overlap[c] * std::abs(xi[c] - mean);
            best = std::max(best, dev / len);
        }
    }
    return best;
}

}  // namespace testsupport
