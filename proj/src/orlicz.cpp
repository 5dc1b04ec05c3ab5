#include "quadsum/orlicz.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace quadsum::functionals {

namespace {

double integral(std::span<const double> values, std::span<const double> weights,
                const YoungFunction& M, double lambda) {
    double acc = 0.0;
    for (size_t i = 0; i < values.size(); ++i) {
        acc += weights[i] * M.eval(std::abs(values[i]) / lambda);
        if (!std::isfinite(acc)) return std::numeric_limits<double>::infinity();
    }
    return acc;
}

// splitmix64; keeps the randomized checks reproducible across toolchains.
struct Rng {
    uint64_t state;
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    double uniform(double lo, double hi) {
        double u = (next() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }
};

}  // namespace

YoungFunction young_phi() {
    YoungFunction M;
    M.name = "phi";
    M.eval = [](double t) { return t > 1.0 ? t * std::log(t) : 0.0; };
    M.delta2 = true;
    M.delta2_c = 4.0;
    M.delta2_t0 = std::exp(1.0);
    return M;
}

YoungFunction young_psi() {
    YoungFunction M;
    M.name = "psi";
    M.eval = [](double t) { return std::expm1(t); };
    M.delta2 = false;
    return M;
}

void validate_young(const YoungFunction& M) {
    if (std::abs(M.eval(0.0)) > 1e-12) {
        throw std::invalid_argument("young function " + M.name + " must vanish at 0");
    }
    double prev = 0.0, prev_slope = 0.0, prev_t = 0.0;
    for (int i = 1; i <= 200; ++i) {
        double t = 0.1 * i;
        double v = M.eval(t);
        if (v < prev - 1e-12) {
            throw std::invalid_argument("young function " + M.name + " decreases near t=" +
                                        std::to_string(t));
        }
        double slope = (v - prev) / (t - prev_t);
        if (slope < prev_slope - 1e-9) {
            throw std::invalid_argument("young function " + M.name + " is not convex near t=" +
                                        std::to_string(t));
        }
        prev = v;
        prev_slope = slope;
        prev_t = t;
    }
    if (M.eval(200.0) < 10.0) {
        throw std::invalid_argument("young function " + M.name + " does not grow");
    }
}

double luxemburg_norm(std::span<const double> values, std::span<const double> weights,
                      const YoungFunction& M) {
    if (values.size() != weights.size()) {
        throw std::invalid_argument("luxemburg_norm: values/weights length mismatch");
    }
    double maxabs = 0.0;
    for (double v : values) maxabs = std::max(maxabs, std::abs(v));
    if (maxabs == 0.0) return 0.0;

    auto feasible = [&](double lambda) { return integral(values, weights, M, lambda) <= 1.0; };

    double hi = maxabs;
    for (int guard = 0; guard < 4096 && !feasible(hi); ++guard) hi *= 2.0;
    double lo = hi;
    for (int guard = 0; guard < 4096; ++guard) {
        double half = lo / 2.0;
        if (!feasible(half)) {
            lo = half;
            break;
        }
        lo = half;
        hi = half;
    }
    for (int it = 0; it < 200 && (hi - lo) > 1e-12 * hi; ++it) {
        double mid = 0.5 * (lo + hi);
        if (feasible(mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

double luxemburg_norm(const StepSequence& xi, const YoungFunction& M) {
    std::vector<double> w(xi.values.size(), 1.0 / xi.values.size());
    return luxemburg_norm(xi.values, w, M);
}

double luxemburg_norm(const SampledField2D& f, const YoungFunction& M) {
    double h = f.grid.cell_width();
    std::vector<double> w(f.values.size(), h * h);
    return luxemburg_norm(f.values, w, M);
}

OrliczPropertiesReport orlicz_properties_check(std::span<const double> values,
                                               std::span<const double> weights,
                                               const YoungFunction& M,
                                               unsigned long long seed) {
    OrliczPropertiesReport rep;
    double norm = luxemburg_norm(values, weights, M);

    Rng rng{seed};
    std::vector<double> scaled(values.size());
    for (int trial = 0; trial < 16; ++trial) {
        double c = rng.uniform(0.05, 20.0);
        for (size_t i = 0; i < values.size(); ++i) scaled[i] = c * values[i];
        double got = luxemburg_norm(scaled, weights, M);
        if (norm > 0.0) {
            rep.homogeneity_defect =
                std::max(rep.homogeneity_defect, std::abs(got - c * norm) / (c * norm));
        }
        // shrink |f| pointwise; the norm must not grow
        for (size_t i = 0; i < values.size(); ++i) {
            scaled[i] = values[i] * rng.uniform(0.0, 1.0);
        }
        if (luxemburg_norm(scaled, weights, M) > norm * (1.0 + 1e-10)) rep.monotone_ok = false;
    }

    if (norm > 0.0) {
        // (d1) on a copy scaled to norm <= 1, (d3) on the normalized copy.
        for (double target : {0.25, 0.5, 1.0}) {
            for (size_t i = 0; i < values.size(); ++i) scaled[i] = values[i] * target / norm;
            double m1 = integral(scaled, weights, M, 1.0);
            double nrm = luxemburg_norm(scaled, weights, M);
            if (nrm <= 1.0 + 1e-12) {
                rep.d1_defect = std::max(rep.d1_defect, m1 - nrm);
            }
            if (target == 1.0) {
                rep.d3_lower = 0.5 * (1.0 + m1);
                rep.d3_upper = 1.0 + m1;
                rep.d3_ok = rep.d3_lower <= 1.0 + 1e-9 && 1.0 <= rep.d3_upper + 1e-9;
            }
        }
        rep.d1_defect = std::max(rep.d1_defect, 0.0);
    }

    rep.indicator_norms.clear();
    double measure = 1.0;
    for (int k = 1; k <= 6; ++k) {
        measure /= 4.0;
        std::vector<double> iv{1.0, 0.0};
        std::vector<double> iw{measure, 1.0 - measure};
        rep.indicator_norms.push_back(luxemburg_norm(iv, iw, M));
    }
    rep.indicators_decreasing = true;
    for (size_t k = 1; k < rep.indicator_norms.size(); ++k) {
        if (rep.indicator_norms[k] >= rep.indicator_norms[k - 1]) rep.indicators_decreasing = false;
    }
    return rep;
}

}  // namespace quadsum::functionals
