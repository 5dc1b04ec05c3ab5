#pragma once

#include <complex>
#include <vector>

namespace quadsum {

using Complex = std::complex<double>;

// Fourier coefficients c_n for n = -N..N, stored in ascending n order.
// Spectra of real fields satisfy c_{-n} = conj(c_n).
struct Spectrum1D {
    int max_freq = 0;                // N
    std::vector<Complex> coef;       // length 2N+1, coef[N+n] = c_n

    Complex& at(int n) { return coef[max_freq + n]; }
    Complex at(int n) const { return coef[max_freq + n]; }
    int count() const { return 2 * max_freq + 1; }
};

// Coefficients c_{m,n} for |m| <= M, |n| <= N, ascending (m, n).
struct Spectrum2D {
    int max_m = 0;
    int max_n = 0;
    std::vector<Complex> coef;       // (2M+1)*(2N+1), row-major in m

    Complex& at(int m, int n) {
        return coef[static_cast<size_t>(max_m + m) * (2 * max_n + 1) + (max_n + n)];
    }
    Complex at(int m, int n) const {
        return coef[static_cast<size_t>(max_m + m) * (2 * max_n + 1) + (max_n + n)];
    }
};

Spectrum1D zero_spectrum_1d(int max_freq);
Spectrum2D zero_spectrum_2d(int max_m, int max_n);

// Largest deviation from Hermitian symmetry; ~1e-16 for spectra of real data.
double hermitian_defect(const Spectrum1D& s);
double hermitian_defect(const Spectrum2D& s);

}  // namespace quadsum
