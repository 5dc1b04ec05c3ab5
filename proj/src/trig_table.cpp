#include "quadsum/trig_table.hpp"

#include <cmath>

namespace quadsum::detail {

TrigTable::TrigTable(const PeriodicGrid& grid) : size(grid.size), half(2 * grid.size) {
    for (int k = 0; k < 2 * size; ++k) {
        double a = kPi * k / size;
        half[k] = Complex{std::cos(a), std::sin(a)};
    }
}

}  // namespace quadsum::detail
