#pragma once

#include <numbers>

namespace quadsum {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Uniform discretization of the period [-pi, pi).
//
// Two interleaved node families are used throughout:
//   primal nodes  x_j = -pi + 2*pi*j/G          (function samples live here)
//   offset nodes  t_j = -pi + (j + 1/2)*2*pi/G  (singular quadrature lives here)
//
// Offset nodes never coincide with 0 or +-pi, so principal-value kernels are
// always evaluable on them, and they are symmetric about every primal node.
struct PeriodicGrid {
    int size = 0;

    double cell_width() const { return kTwoPi / size; }
    double primal_node(int j) const { return -kPi + kTwoPi * j / size; }
    double offset_node(int j) const { return -kPi + (j + 0.5) * kTwoPi / size; }

    // Reduces an arbitrary node index into [0, size).
    int wrap(int j) const {
        int r = j % size;
        return r < 0 ? r + size : r;
    }

    bool operator==(const PeriodicGrid&) const = default;
};

// Validates G >= 4 and even; throws std::invalid_argument otherwise.
PeriodicGrid make_grid(int size);

}  // namespace quadsum
