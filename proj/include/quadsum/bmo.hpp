#pragma once

#include <span>
#include <vector>

#include "quadsum/spectrum.hpp"

namespace quadsum::functionals {

// xi_0..xi_n read as a step function on [0,1] over the uniform partition
// delta_k = [k/(n+1), (k+1)/(n+1)].
struct StepSequence {
    std::vector<double> values;

    int cells() const { return static_cast<int>(values.size()); }
};

StepSequence make_step_sequence(std::vector<double> values);  // nonempty, finite

struct BmoResult {
    double oscillation = 0.0;  // sup_I (|f - f_I|)_I over the searched intervals
    double mean_abs = 0.0;     // |int_0^1 f|
    double total = 0.0;        // oscillation + mean_abs
    double a = 0.0, b = 1.0;   // maximizing interval
};

// Search over all cell pairs with interval endpoints refined on an r-point
// sub-grid per end cell (refinement = 1 is the breakpoint-aligned search).
// The value is a certified lower bound on the true supremum; the 3*sup upper
// bound always holds.
BmoResult bmo_norm_step(const StepSequence& xi, int refinement = 16);

// sup over n < N of the bmo norm of the n-prefix step function. N is capped
// (the search is O(N^4 r^2) in the worst case); raise max_prefix knowingly.
double bmo_sequence(std::span<const double> xi, int refinement = 16, int max_prefix = 64);

// The sequence S_00(x,y), S_11(x,y), ..., S_{count-1,count-1}(x,y).
std::vector<double> quadratic_sum_sequence(const Spectrum2D& f, double x, double y, int count);

// bmo_sequence applied to the quadratic partial sums at a point.
double bmo_of_partial_sums(const Spectrum2D& f, double x, double y, int truncation,
                           int refinement = 16);

}  // namespace quadsum::functionals
