#pragma once

#include <functional>

#include "quadsum/spectrum.hpp"

namespace quadsum::functionals {

// The modulus applied to |S_k - f| inside a strong mean.
struct MeanSpec {
    enum class Kind { Power, YoungPhi, Exponential, General };

    Kind kind = Kind::Power;
    double p = 2.0;
    double coefficient = 1.0;  // A in exp(A|.|) - 1
    std::function<double(double)> psi;

    static MeanSpec power(double p);               // p > 0
    static MeanSpec young_phi();
    static MeanSpec exponential(double a);         // A > 0
    static MeanSpec general(std::function<double(double)> psi);  // increasing, psi(0)=0

    double apply(double u) const;
};

// (1/(n+1)) sum_{k=0}^n kind(|S_k(x) - f(x)|) with f(x) the full-band value.
double strong_mean_1d(const Spectrum1D& f, double x, int n, const MeanSpec& spec);

// (1/(m+1)) sum_{n=0}^m kind(|S_nn(x,y) - f(x,y)|).
double summability_mean_2d(const Spectrum2D& f, double x, double y, int m, const MeanSpec& spec);

// | mean of Psi(A|S_kk - f|) - exact integral of the prefix step function |.
// Zero up to rounding: the integrand is a step function integrated exactly.
double orlicz_mean_identity_residual(const Spectrum2D& f, double x, double y, int n, double a);

// B f(x,y): sup over n < truncation of the Luxemburg Psi-norm of the step
// function of quadratic partial sums.
double b_functional(const Spectrum2D& f, double x, double y, int truncation);

}  // namespace quadsum::functionals
