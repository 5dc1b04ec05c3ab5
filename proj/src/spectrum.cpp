#include "quadsum/spectrum.hpp"

#include <cmath>

namespace quadsum {

Spectrum1D zero_spectrum_1d(int max_freq) {
    return Spectrum1D{max_freq, std::vector<Complex>(2 * max_freq + 1, Complex{0.0, 0.0})};
}

Spectrum2D zero_spectrum_2d(int max_m, int max_n) {
    return Spectrum2D{max_m, max_n,
                      std::vector<Complex>(static_cast<size_t>(2 * max_m + 1) * (2 * max_n + 1),
                                           Complex{0.0, 0.0})};
}

double hermitian_defect(const Spectrum1D& s) {
    double d = 0.0;
    for (int n = 0; n <= s.max_freq; ++n) {
        d = std::max(d, std::abs(s.at(-n) - std::conj(s.at(n))));
    }
    return d;
}

double hermitian_defect(const Spectrum2D& s) {
    double d = 0.0;
    for (int m = -s.max_m; m <= s.max_m; ++m) {
        for (int n = -s.max_n; n <= s.max_n; ++n) {
            d = std::max(d, std::abs(s.at(-m, -n) - std::conj(s.at(m, n))));
        }
    }
    return d;
}

}  // namespace quadsum
