#pragma once

#include <vector>

#include "quadsum/grid.hpp"
#include "quadsum/spectrum.hpp"

namespace quadsum::detail {

// Phase lookup for a fixed grid. All exponentials at grid nodes reduce to
// powers of the half-step rotation e^{i*pi/G}:
//   e^{i n x_j} = (-1)^n * half[(2*n*j) mod 2G]
//   e^{i n t_j} = (-1)^n * half[(n*(2*j+1)) mod 2G]
// which keeps repeated analysis/synthesis passes both fast and bitwise
// deterministic (every phase is read from one table).
struct TrigTable {
    explicit TrigTable(const PeriodicGrid& grid);

    int size;                     // G
    std::vector<Complex> half;    // half[k] = e^{i k pi / G}, k = 0..2G-1

    Complex primal_phase(long long n, long long j) const {
        long long k = (2 * n * j) % (2LL * size);
        if (k < 0) k += 2LL * size;
        Complex w = half[static_cast<size_t>(k)];
        return (n & 1) ? -w : w;
    }
    Complex offset_phase(long long n, long long j) const {
        long long k = (n * (2 * j + 1)) % (2LL * size);
        if (k < 0) k += 2LL * size;
        Complex w = half[static_cast<size_t>(k)];
        return (n & 1) ? -w : w;
    }
};

}  // namespace quadsum::detail
