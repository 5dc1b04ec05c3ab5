#pragma once

#include <vector>

#include "quadsum/grid.hpp"

namespace quadsum {

// Real samples of a 2*pi-periodic function on the primal nodes.
struct SampledField1D {
    PeriodicGrid grid;
    std::vector<double> values;  // values[j] = f(x_j), length grid.size

    double& operator[](int j) { return values[j]; }
    double operator[](int j) const { return values[j]; }
};

// Real samples of a 2*pi-biperiodic function, same G on both axes.
// Row index tracks x, column index tracks y.
struct SampledField2D {
    PeriodicGrid grid;
    std::vector<double> values;  // values[j*G + l] = f(x_j, y_l)

    double& at(int j, int l) { return values[static_cast<size_t>(j) * grid.size + l]; }
    double at(int j, int l) const { return values[static_cast<size_t>(j) * grid.size + l]; }
};

// Constructors that enforce the shape/finiteness invariants.
SampledField1D make_field_1d(const PeriodicGrid& grid, std::vector<double> values);
SampledField2D make_field_2d(const PeriodicGrid& grid, std::vector<double> values);

SampledField1D zero_field_1d(const PeriodicGrid& grid);
SampledField2D zero_field_2d(const PeriodicGrid& grid);

double max_abs(const SampledField1D& f);
double max_abs(const SampledField2D& f);
double max_abs_diff(const SampledField1D& a, const SampledField1D& b);
double max_abs_diff(const SampledField2D& a, const SampledField2D& b);

// Discrete L1 norm: cell-measure sum of |f| over the period domain.
double l1_norm(const SampledField1D& f);
double l1_norm(const SampledField2D& f);

}  // namespace quadsum
