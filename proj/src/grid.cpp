#include "quadsum/grid.hpp"

#include <stdexcept>
#include <string>

namespace quadsum {

PeriodicGrid make_grid(int size) {
    if (size < 4) {
        throw std::invalid_argument("grid size must be at least 4, got " + std::to_string(size));
    }
    if (size % 2 != 0) {
        throw std::invalid_argument("grid size must be even, got " + std::to_string(size));
    }
    return PeriodicGrid{size};
}

}  // namespace quadsum
