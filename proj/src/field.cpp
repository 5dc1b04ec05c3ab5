#include "quadsum/field.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace quadsum {

namespace {

void check_finite(const std::vector<double>& values) {
    for (size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i])) {
            throw std::invalid_argument("field sample " + std::to_string(i) + " is not finite");
        }
    }
}

}  // namespace

SampledField1D make_field_1d(const PeriodicGrid& grid, std::vector<double> values) {
    if (static_cast<int>(values.size()) != grid.size) {
        throw std::invalid_argument("field length " + std::to_string(values.size()) +
                                    " does not match grid size " + std::to_string(grid.size));
    }
    check_finite(values);
    return SampledField1D{grid, std::move(values)};
}

SampledField2D make_field_2d(const PeriodicGrid& grid, std::vector<double> values) {
    size_t expected = static_cast<size_t>(grid.size) * grid.size;
    if (values.size() != expected) {
        throw std::invalid_argument("field has " + std::to_string(values.size()) +
                                    " samples, expected " + std::to_string(expected));
    }
    check_finite(values);
    return SampledField2D{grid, std::move(values)};
}

SampledField1D zero_field_1d(const PeriodicGrid& grid) {
    return SampledField1D{grid, std::vector<double>(grid.size, 0.0)};
}

SampledField2D zero_field_2d(const PeriodicGrid& grid) {
    return SampledField2D{grid, std::vector<double>(static_cast<size_t>(grid.size) * grid.size, 0.0)};
}

double max_abs(const SampledField1D& f) {
    double m = 0.0;
    for (double v : f.values) m = std::max(m, std::abs(v));
    return m;
}

double max_abs(const SampledField2D& f) {
    double m = 0.0;
    for (double v : f.values) m = std::max(m, std::abs(v));
    return m;
}

double max_abs_diff(const SampledField1D& a, const SampledField1D& b) {
    if (a.grid.size != b.grid.size) throw std::invalid_argument("grid mismatch in max_abs_diff");
    double m = 0.0;
    for (size_t i = 0; i < a.values.size(); ++i) m = std::max(m, std::abs(a.values[i] - b.values[i]));
    return m;
}

double max_abs_diff(const SampledField2D& a, const SampledField2D& b) {
    if (a.grid.size != b.grid.size) throw std::invalid_argument("grid mismatch in max_abs_diff");
    double m = 0.0;
    for (size_t i = 0; i < a.values.size(); ++i) m = std::max(m, std::abs(a.values[i] - b.values[i]));
    return m;
}

double l1_norm(const SampledField1D& f) {
    double s = 0.0;
    for (double v : f.values) s += std::abs(v);
    return s * f.grid.cell_width();
}

double l1_norm(const SampledField2D& f) {
    double s = 0.0;
    for (double v : f.values) s += std::abs(v);
    double h = f.grid.cell_width();
    return s * h * h;
}

}  // namespace quadsum
