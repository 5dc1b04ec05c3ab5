#pragma once

#include "quadsum/config.hpp"
#include "quadsum/grid.hpp"
#include "quadsum/report.hpp"
#include "quadsum/spectrum.hpp"

namespace quadsum::harness {

// Level-set measurement of bmo[S_nn(x,y)] against the L log L modulus.
// Emits one row per (function, lambda) plus per-function and overall
// summary rows carrying the largest ratio lambda*measure / (1 + llogl).
ResultTable weak_type_experiment(const ExperimentConfig& cfg);

// Grid medians and 95th percentiles of the exponential (or psi) means of
// |S_nn - f| along a dyadic ladder of orders, with an exactness column for
// polynomial inputs.
ResultTable convergence_experiment(const ExperimentConfig& cfg);

// bmo of the quadratic-sum sequence at every grid point (row-major),
// shared by the weak-type experiment and the tests.
std::vector<double> bmo_field(const Spectrum2D& s, const PeriodicGrid& grid, int truncation,
                              int refinement);

}  // namespace quadsum::harness
