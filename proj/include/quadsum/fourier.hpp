#pragma once

#include <utility>

#include "quadsum/field.hpp"
#include "quadsum/spectrum.hpp"

namespace quadsum::fourier {

// Discrete Fourier coefficients by the periodic trapezoid rule on primal
// nodes: c_n = (1/G) sum_j f(x_j) e^{-i n x_j}. Exact (up to rounding) for
// trigonometric polynomials of degree < G/2. Requires N <= G/2 - 1.
Spectrum1D analyze_1d(const SampledField1D& f, int max_freq);

// Tensor-product rule of analyze_1d. Requires M, N <= G/2 - 1.
Spectrum2D analyze_2d(const SampledField2D& f, int max_m, int max_n);

// S_n(x) = sum_{|k| <= n} c_k e^{ikx}; real for Hermitian spectra.
double partial_sum_1d(const Spectrum1D& s, int n, double x);
SampledField1D partial_sum_1d(const Spectrum1D& s, int n, const PeriodicGrid& grid);

// (C,1) means: sigma_n = (1/(n+1)) sum_{k=0}^n S_k, evaluated through the
// Fejer weights 1 - |k|/(n+1).
double cesaro_mean(const Spectrum1D& s, int n, double x);
SampledField1D cesaro_mean(const Spectrum1D& s, int n, const PeriodicGrid& grid);

// Rectangular partial sum S_mn(x,y) = sum_{|m'|<=m, |n'|<=n} c e^{i(m'x+n'y)}.
double rectangular_sum(const Spectrum2D& s, int m, int n, double x, double y);
SampledField2D rectangular_sum(const Spectrum2D& s, int m, int n, const PeriodicGrid& grid);

// Full-band synthesis on the grid (= partial/rectangular sum at max order).
SampledField1D synthesize_1d(const Spectrum1D& s, const PeriodicGrid& grid);
SampledField2D synthesize_2d(const Spectrum2D& s, const PeriodicGrid& grid);

// Dirichlet kernel D_n(t) = sin((n+1/2)t) / (2 sin(t/2)) and its conjugate
// D~_n(t) = (cos(t/2) - cos((n+1/2)t)) / (2 sin(t/2)).
// Removable singularities at t = 0 (mod 2*pi) take the limits n+1/2 and 0.
double dirichlet_kernel(int n, double t);
double conjugate_dirichlet_kernel(int n, double t);
std::pair<double, double> dirichlet_kernels(int n, double t);

}  // namespace quadsum::fourier
