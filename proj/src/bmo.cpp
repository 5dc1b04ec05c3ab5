#include "quadsum/bmo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace quadsum::functionals {

namespace {

// Mean absolute deviation sums against a sorted prefix structure.
struct SortedMiddle {
    std::vector<double> sorted;
    std::vector<double> presum;  // presum[i] = sum of sorted[0..i)

    void clear() {
        sorted.clear();
        presum.assign(1, 0.0);
    }
    void insert(double v) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
        sorted.insert(it, v);
        presum.resize(sorted.size() + 1);
        for (size_t i = 0; i < sorted.size(); ++i) presum[i + 1] = presum[i] + sorted[i];
    }
    // sum_k |v_k - c| over the stored values (unit cell weight each)
    double abs_dev_sum(double c) const {
        size_t k = std::lower_bound(sorted.begin(), sorted.end(), c) - sorted.begin();
        double below = presum[k];
        double above = presum[sorted.size()] - below;
        return (c * k - below) + (above - c * (sorted.size() - k));
    }
};

}  // namespace

StepSequence make_step_sequence(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("step sequence must be nonempty");
    for (double v : values) {
        if (!std::isfinite(v)) throw std::invalid_argument("step sequence value not finite");
    }
    return StepSequence{std::move(values)};
}

BmoResult bmo_norm_step(const StepSequence& xi, int refinement) {
    if (xi.values.empty()) throw std::invalid_argument("bmo_norm_step: empty sequence");
    if (refinement < 1) throw std::invalid_argument("bmo_norm_step: refinement must be >= 1");

    int n = xi.cells() - 1;
    double cell = 1.0 / (n + 1);
    bool constant = true;
    for (double v : xi.values) constant = constant && v == xi.values[0];
    double mean;
    if (constant) {
        mean = xi.values[0];
    } else {
        mean = 0.0;
        for (double v : xi.values) mean += v;
        mean /= (n + 1);
    }

    BmoResult best;
    best.mean_abs = std::abs(mean);
    best.a = 0.0;
    best.b = 1.0;
    if (n == 0 || constant) {
        best.total = best.mean_abs;
        return best;
    }

    // The oscillation part is invariant under constant shifts; searching on
    // centered values keeps it well conditioned when the sequence rides on a
    // large constant.
    std::vector<double> centered(xi.values);
    for (double& v : centered) v -= mean;

    std::vector<double> prefix(n + 2, 0.0);
    for (int k = 0; k <= n; ++k) prefix[k + 1] = prefix[k] + centered[k];

    // Intervals interior to one cell oscillate by zero, so only pairs of end
    // cells matter. Work in cell-length units: oscillation means are scale
    // invariant.
    double r = refinement;
    SortedMiddle middle;
    for (int i = 0; i < n; ++i) {
        middle.clear();
        for (int j = i + 1; j <= n; ++j) {
            if (j > i + 1) middle.insert(centered[j - 1]);
            double mid_sum = prefix[j] - prefix[i + 1];
            int mid_count = j - 1 - i;
            for (int ai = 0; ai < refinement; ++ai) {
                double alpha = 1.0 - ai / r;  // included fraction of the left cell
                for (int bi = 1; bi <= refinement; ++bi) {
                    double beta = bi / r;  // included fraction of the right cell
                    double len = alpha + mid_count + beta;
                    double avg = (alpha * centered[i] + mid_sum + beta * centered[j]) / len;
                    double osc = alpha * std::abs(centered[i] - avg) +
                                 middle.abs_dev_sum(avg) + beta * std::abs(centered[j] - avg);
                    double value = osc / len;
                    if (value > best.oscillation) {
                        best.oscillation = value;
                        best.a = (i + 1 - alpha) * cell;
                        best.b = (j + beta) * cell;
                    }
                }
            }
        }
    }
    best.total = best.oscillation + best.mean_abs;
    return best;
}

double bmo_sequence(std::span<const double> xi, int refinement, int max_prefix) {
    if (xi.empty()) throw std::invalid_argument("bmo_sequence: empty sequence");
    if (static_cast<int>(xi.size()) > max_prefix) {
        throw std::invalid_argument("bmo_sequence: " + std::to_string(xi.size()) +
                                    " terms exceed the cap of " + std::to_string(max_prefix));
    }
    double best = 0.0;
    StepSequence prefix;
    prefix.values.reserve(xi.size());
    for (double v : xi) {
        prefix.values.push_back(v);
        best = std::max(best, bmo_norm_step(prefix, refinement).total);
    }
    return best;
}

std::vector<double> quadratic_sum_sequence(const Spectrum2D& f, double x, double y, int count) {
    if (count < 1 || count - 1 > std::min(f.max_m, f.max_n)) {
        throw std::invalid_argument("quadratic_sum_sequence: truncation out of range");
    }
    int top = count - 1;
    std::vector<Complex> px(2 * top + 1), py(2 * top + 1);
    for (int k = -top; k <= top; ++k) {
        px[top + k] = Complex{std::cos(k * x), std::sin(k * x)};
        py[top + k] = Complex{std::cos(k * y), std::sin(k * y)};
    }
    std::vector<double> seq(count, 0.0);
    double running = f.at(0, 0).real();
    seq[0] = running;
    for (int k = 1; k <= top; ++k) {
        double shell = 0.0;
        for (int m = -k; m <= k; ++m) {
            // modes with max(|m|,|n|) == k, ascending (m, n)
            if (std::abs(m) == k) {
                for (int nn = -k; nn <= k; ++nn) {
                    shell += (f.at(m, nn) * px[top + m] * py[top + nn]).real();
                }
            } else {
                shell += (f.at(m, -k) * px[top + m] * py[top - k]).real();
                shell += (f.at(m, k) * px[top + m] * py[top + k]).real();
            }
        }
        running += shell;
        seq[k] = running;
    }
    return seq;
}

double bmo_of_partial_sums(const Spectrum2D& f, double x, double y, int truncation,
                           int refinement) {
    std::vector<double> seq = quadratic_sum_sequence(f, x, y, truncation);
    return bmo_sequence(seq, refinement);
}

}  // namespace quadsum::functionals
