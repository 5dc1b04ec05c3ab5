#pragma once

#include <vector>

#include "quadsum/field.hpp"
#include "quadsum/spectrum.hpp"

// Principal-value convolution operators and the decompositions built from
// them.
//
// Sign convention used everywhere: kernels act on f(x + t), so the conjugate
// function of cos(mx) is -sin(mx) and the spectral multiplier of the
// conjugate kernel is +i*sgn(n). This is the opposite of the f(x - t)
// orientation common elsewhere; tests pin the convention down.
namespace quadsum::singular {

// Kernel of a 1D principal-value transform, evaluable at every offset node.
struct PvKernel {
    enum class Kind { Conjugate, CosineModulated, SineModulated };

    Kind kind = Kind::Conjugate;
    int order = 0;  // n for the modulated kernels

    double operator()(double t) const;

    static PvKernel conjugate();
    static PvKernel cosine(int n);
    static PvKernel sine(int n);
};

// How samples at half-grid points are produced for shifted evaluation.
// Spectral is exact for band-limited fields; Linear loses accuracy (O(h^2))
// but needs no spectrum.
enum class Interp { Spectral, Linear };

// Midpoint-rule principal value on offset nodes:
//   out(x_j) = (1/pi) * (2*pi/G) * sum_i K(t_i) f(x_j + t_i).
// The shifted arguments land exactly on the half-grid, so the only
// approximation is the resampling chosen by `interp`.
SampledField1D pv_transform(const SampledField1D& f, const PvKernel& k,
                            Interp interp = Interp::Spectral);

// Samples of f at the offset nodes (the half-grid used by pv_transform).
SampledField1D resample_offset(const SampledField1D& f, Interp interp = Interp::Spectral);

// Spectral form of the conjugate function: c_n -> i*sgn(n)*c_n.
Spectrum1D conjugate_function(const Spectrum1D& s);

// Conjugate partial sum: sum_{1<=|k|<=n} i*sgn(k) c_k e^{ikx}.
SampledField1D conjugate_partial_sum(const Spectrum1D& s, int n, const PeriodicGrid& grid);
double conjugate_partial_sum(const Spectrum1D& s, int n, double x);

// U_n: kernel cos(nt)/(2 tan(t/2)). Spectral multiplier
// (i/2)(sgn(k+n) + sgn(k-n)); the field overload uses offset-node quadrature.
Spectrum1D u_transform(const Spectrum1D& s, int n);
SampledField1D u_transform(const SampledField1D& f, int n, Interp interp = Interp::Spectral);

// Modified quadratic sum S*_nn: the sine-modulated pv kernel applied along y,
// then along x.
SampledField2D modified_quadratic_sum(const SampledField2D& f, int n);

// The three correction terms with S_nn - S*_nn = S1 + S2 + S3:
//   S1 = sine-pv in x, cosine projection in y
//   S2 = the mirror
//   S3 = double cosine projection
struct CorrectionReport {
    SampledField2D s1, s2, s3;
    double residual = 0.0;  // max |S_nn - S*_nn - (S1+S2+S3)|
};
CorrectionReport correction_terms(const SampledField2D& f, int n);

// Residual of 1/(tan((u+v)/2)tan(v/2))
//   = 1/(tan(u/2)tan(v/2)) - 1/(tan(u/2)tan((u+v)/2)) - 1.
// Rejects points with u, v or u+v closer than `margin` to a multiple of 2*pi.
double tan_identity_residual(double u, double v, double margin = 1e-3);

// A(x,y) = p.v. (1/pi) int f(x+v, y+v) / (2 tan(v/2)) dv.
SampledField2D diagonal_conjugate(const SampledField2D& f);

// Decomposition of the modified quadratic sum.
//
// i_term/j_term are the cosine-difference split of the S*_nn kernel
// (cos n(t-s) and cos n(t+s) halves), for which S*_nn = I - J holds to
// rounding. i_sheared is the same I integral iterated in the sheared
// coordinates u = t-s, v = s (inner v, outer u); the tangent identity chain
// I = I1 - I2 - I0 is exact for THAT iteration order, and only for it.
// Iterated principal values are not invariant under the shear, so the two
// evaluations of I genuinely differ; shear_gap measures the difference and
// is reported rather than asserted small.
struct IjReport {
    SampledField2D i_term, j_term;  // cosine-difference split
    SampledField2D i_sheared;       // I in sheared iteration order
    SampledField2D i0, i1, i2;      // tangent-identity pieces
    double split_residual = 0.0;    // max |S*_nn - (I - J)|
    double chain_residual = 0.0;    // max |I_sheared - (I1 - I2 - I0)|
    double shear_gap = 0.0;         // max |I - I_sheared|
};
IjReport ij_decomposition(const SampledField2D& f, int n);

// F1(x,y,u) and F2(x,y,u): conjugate kernel along the sheared directions
// (x+v, y+u-v) and (x+v, y+v-u), tabulated on the primal grid in all three
// variables, with their discrete L1 norms over the triple period.
struct SliceReport {
    int size = 0;
    std::vector<double> f1, f2;  // index (ix*G + iy)*G + iu
    double l1_f1 = 0.0, l1_f2 = 0.0;
};
SliceReport slice_transforms(const SampledField2D& f);

}  // namespace quadsum::singular
