#include "quadsum/singular.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

#include "quadsum/fourier.hpp"
#include "quadsum/trig_table.hpp"

namespace quadsum::singular {

using detail::TrigTable;

namespace {

int sgn(int k) { return (k > 0) - (k < 0); }

void check_n(int n, const char* what) {
    if (n < 0) {
        throw std::invalid_argument(std::string(what) + ": order must be nonnegative, got " +
                                    std::to_string(n));
    }
}

void check_quadrature_order(int n, int grid_size, const char* what) {
    check_n(n, what);
    if (n > grid_size / 2 - 1) {
        throw std::invalid_argument(std::string(what) + ": order " + std::to_string(n) +
                                    " exceeds G/2-1 for G=" + std::to_string(grid_size));
    }
}

// f(x_j + t_i) lands on the offset node with this index.
int shift_plus(int i, int j, int G) {
    int k = (i + j - G / 2) % G;
    return k < 0 ? k + G : k;
}

// f(y_l - t_i) lands on the offset node with this index.
int shift_minus(int i, int l, int G) {
    int k = (l - i - 1 + G / 2) % G;
    return k < 0 ? k + G : k;
}

std::vector<double> kernel_table(const PvKernel& k, const PeriodicGrid& grid) {
    std::vector<double> table(grid.size);
    for (int i = 0; i < grid.size; ++i) table[i] = k(grid.offset_node(i));
    return table;
}

// Offset-node samples of every x-line (axis 0) or y-line (axis 1).
std::vector<double> resample_offset_axis(const SampledField2D& f, int axis, Interp interp) {
    int G = f.grid.size;
    std::vector<double> out(static_cast<size_t>(G) * G);
    if (interp == Interp::Linear) {
        for (int j = 0; j < G; ++j) {
            for (int l = 0; l < G; ++l) {
                double a = f.at(j, l);
                double b = axis == 0 ? f.at((j + 1) % G, l) : f.at(j, (l + 1) % G);
                out[static_cast<size_t>(j) * G + l] = 0.5 * (a + b);
            }
        }
        return out;
    }
    TrigTable tab(f.grid);
    int N = G / 2 - 1;
    std::vector<Complex> line(2 * N + 1);
    for (int fixed = 0; fixed < G; ++fixed) {
        for (int k = -N; k <= N; ++k) {
            Complex acc{0.0, 0.0};
            for (int r = 0; r < G; ++r) {
                double v = axis == 0 ? f.at(r, fixed) : f.at(fixed, r);
                acc += v * std::conj(tab.primal_phase(k, r));
            }
            line[N + k] = acc / static_cast<double>(G);
        }
        for (int r = 0; r < G; ++r) {
            double acc = 0.0;
            for (int k = -N; k <= N; ++k) {
                acc += (line[N + k] * tab.offset_phase(k, r)).real();
            }
            if (axis == 0) {
                out[static_cast<size_t>(r) * G + fixed] = acc;
            } else {
                out[static_cast<size_t>(fixed) * G + r] = acc;
            }
        }
    }
    return out;
}

// Principal-value transform along one axis of a 2D field.
SampledField2D pv_axis(const SampledField2D& f, int axis, const PvKernel& k, Interp interp) {
    int G = f.grid.size;
    std::vector<double> off = resample_offset_axis(f, axis, interp);
    std::vector<double> kt = kernel_table(k, f.grid);
    double w = 2.0 / G;
    SampledField2D out = zero_field_2d(f.grid);
    for (int j = 0; j < G; ++j) {
        for (int l = 0; l < G; ++l) {
            double acc = 0.0;
            for (int i = 0; i < G; ++i) {
                int s = shift_plus(i, axis == 0 ? j : l, G);
                double v = axis == 0 ? off[static_cast<size_t>(s) * G + l]
                                     : off[static_cast<size_t>(j) * G + s];
                acc += kt[i] * v;
            }
            out.at(j, l) = w * acc;
        }
    }
    return out;
}

// (1/2pi) int cos(n s) f(.. + s) ds along one axis, on offset nodes.
SampledField2D cos_projection_axis(const SampledField2D& f, int axis, int n, Interp interp) {
    int G = f.grid.size;
    std::vector<double> off = resample_offset_axis(f, axis, interp);
    std::vector<double> ct(G);
    for (int i = 0; i < G; ++i) ct[i] = std::cos(n * f.grid.offset_node(i));
    SampledField2D out = zero_field_2d(f.grid);
    for (int j = 0; j < G; ++j) {
        for (int l = 0; l < G; ++l) {
            double acc = 0.0;
            for (int i = 0; i < G; ++i) {
                int s = shift_plus(i, axis == 0 ? j : l, G);
                double v = axis == 0 ? off[static_cast<size_t>(s) * G + l]
                                     : off[static_cast<size_t>(j) * G + s];
                acc += ct[i] * v;
            }
            out.at(j, l) = acc / G;
        }
    }
    return out;
}

// Synthesis of mult(m,n) * c_{m,n} over the full stored spectrum.
SampledField2D synthesize_multiplier(const Spectrum2D& s, const PeriodicGrid& grid,
                                     const std::function<Complex(int, int)>& mult) {
    TrigTable tab(grid);
    int G = grid.size;
    int M = s.max_m, N = s.max_n;
    std::vector<Complex> rows(static_cast<size_t>(2 * M + 1) * G, Complex{0.0, 0.0});
    for (int m = -M; m <= M; ++m) {
        for (int n = -N; n <= N; ++n) {
            Complex c = s.at(m, n) * mult(m, n);
            if (c == Complex{0.0, 0.0}) continue;
            for (int l = 0; l < G; ++l) {
                rows[static_cast<size_t>(M + m) * G + l] += c * tab.primal_phase(n, l);
            }
        }
    }
    SampledField2D out = zero_field_2d(grid);
    for (int m = -M; m <= M; ++m) {
        for (int j = 0; j < G; ++j) {
            Complex px = tab.primal_phase(m, j);
            for (int l = 0; l < G; ++l) {
                out.at(j, l) += (rows[static_cast<size_t>(M + m) * G + l] * px).real();
            }
        }
    }
    return out;
}

// Multiplier of the cosine-difference halves of the S*_nn kernel.
double split_i_multiplier(int n, int m, int np) {
    return -0.25 * (sgn(m + n) * sgn(np - n) + sgn(m - n) * sgn(np + n));
}

double split_j_multiplier(int n, int m, int np) {
    return -0.25 * (sgn(m + n) * sgn(np + n) + sgn(m - n) * sgn(np - n));
}

// Multiplier of the I integral iterated in sheared coordinates (inner v,
// outer u). Derived by evaluating the two-pole inner integral in closed form;
// the coefficient rule counts where +-n falls relative to the band spanned by
// m and -np.
double sheared_i_multiplier(int n, int m, int np) {
    int k = m + np;
    if (k == 0) {
        if (n == 0) return m == 0 ? -0.5 : 0.0;
        return std::abs(m) == n ? -0.25 : 0.0;
    }
    int lo = std::min(m, -np);
    int hi = std::max(m, -np);
    auto coeff = [&](int j) -> int {
        if (j < lo || j > hi) return 0;
        if (j == lo || j == hi) return 1;
        return 2;
    };
    if (n == 0) return -0.5 * coeff(0);
    return -0.25 * (coeff(n) + coeff(-n));
}

// The exact third term of the tangent-identity split,
// (1/(8 pi^2)) iint cos(nu) f(x+u+v, y+v) du dv, which keeps the cos(nu)
// factor and therefore lives on the anti-diagonal modes (+-n, -+n).
double third_term_multiplier(int n, int m, int np) {
    if (n == 0) return (m == 0 && np == 0) ? 0.5 : 0.0;
    if ((m == n && np == -n) || (m == -n && np == n)) return 0.25;
    return 0.0;
}

}  // namespace

double PvKernel::operator()(double t) const {
    double denom = 2.0 * std::tan(0.5 * t);
    switch (kind) {
        case Kind::Conjugate:
            return 1.0 / denom;
        case Kind::CosineModulated:
            return std::cos(order * t) / denom;
        case Kind::SineModulated:
            return std::sin(order * t) / denom;
    }
    return 0.0;
}

PvKernel PvKernel::conjugate() { return PvKernel{Kind::Conjugate, 0}; }

PvKernel PvKernel::cosine(int n) {
    check_n(n, "PvKernel::cosine");
    return PvKernel{Kind::CosineModulated, n};
}

PvKernel PvKernel::sine(int n) {
    check_n(n, "PvKernel::sine");
    return PvKernel{Kind::SineModulated, n};
}

SampledField1D resample_offset(const SampledField1D& f, Interp interp) {
    int G = f.grid.size;
    SampledField1D out = zero_field_1d(f.grid);
    if (interp == Interp::Linear) {
        for (int j = 0; j < G; ++j) out.values[j] = 0.5 * (f.values[j] + f.values[(j + 1) % G]);
        return out;
    }
    Spectrum1D s = fourier::analyze_1d(f, G / 2 - 1);
    TrigTable tab(f.grid);
    for (int j = 0; j < G; ++j) {
        double acc = 0.0;
        for (int k = -s.max_freq; k <= s.max_freq; ++k) {
            acc += (s.at(k) * tab.offset_phase(k, j)).real();
        }
        out.values[j] = acc;
    }
    return out;
}

SampledField1D pv_transform(const SampledField1D& f, const PvKernel& k, Interp interp) {
    int G = f.grid.size;
    SampledField1D off = resample_offset(f, interp);
    std::vector<double> kt = kernel_table(k, f.grid);
    SampledField1D out = zero_field_1d(f.grid);
    double w = 2.0 / G;
    for (int j = 0; j < G; ++j) {
        double acc = 0.0;
        for (int i = 0; i < G; ++i) {
            acc += kt[i] * off.values[shift_plus(i, j, G)];
        }
        out.values[j] = w * acc;
    }
    return out;
}

Spectrum1D conjugate_function(const Spectrum1D& s) {
    Spectrum1D out = s;
    for (int k = -s.max_freq; k <= s.max_freq; ++k) {
        out.at(k) = Complex{0.0, static_cast<double>(sgn(k))} * s.at(k);
    }
    return out;
}

SampledField1D conjugate_partial_sum(const Spectrum1D& s, int n, const PeriodicGrid& grid) {
    if (n < 0 || n > s.max_freq) {
        throw std::invalid_argument("conjugate_partial_sum: order out of range");
    }
    TrigTable tab(grid);
    SampledField1D out = zero_field_1d(grid);
    for (int k = -n; k <= n; ++k) {
        Complex c = Complex{0.0, static_cast<double>(sgn(k))} * s.at(k);
        for (int j = 0; j < grid.size; ++j) {
            out.values[j] += (c * tab.primal_phase(k, j)).real();
        }
    }
    return out;
}

double conjugate_partial_sum(const Spectrum1D& s, int n, double x) {
    if (n < 0 || n > s.max_freq) {
        throw std::invalid_argument("conjugate_partial_sum: order out of range");
    }
    double acc = 0.0;
    for (int k = -n; k <= n; ++k) {
        Complex c = Complex{0.0, static_cast<double>(sgn(k))} * s.at(k);
        acc += (c * Complex{std::cos(k * x), std::sin(k * x)}).real();
    }
    return acc;
}

Spectrum1D u_transform(const Spectrum1D& s, int n) {
    if (n < 0 || n > s.max_freq) {
        throw std::invalid_argument("u_transform: order out of range");
    }
    Spectrum1D out = s;
    for (int k = -s.max_freq; k <= s.max_freq; ++k) {
        double w = 0.5 * (sgn(k + n) + sgn(k - n));
        out.at(k) = Complex{0.0, w} * s.at(k);
    }
    return out;
}

SampledField1D u_transform(const SampledField1D& f, int n, Interp interp) {
    check_quadrature_order(n, f.grid.size, "u_transform");
    return pv_transform(f, PvKernel::cosine(n), interp);
}

SampledField2D modified_quadratic_sum(const SampledField2D& f, int n) {
    check_quadrature_order(n, f.grid.size, "modified_quadratic_sum");
    PvKernel k = PvKernel::sine(n);
    return pv_axis(pv_axis(f, 0, k, Interp::Spectral), 1, k, Interp::Spectral);
}

CorrectionReport correction_terms(const SampledField2D& f, int n) {
    check_quadrature_order(n, f.grid.size, "correction_terms");
    PvKernel vk = PvKernel::sine(n);
    CorrectionReport rep{
        cos_projection_axis(pv_axis(f, 0, vk, Interp::Spectral), 1, n, Interp::Spectral),
        cos_projection_axis(pv_axis(f, 1, vk, Interp::Spectral), 0, n, Interp::Spectral),
        cos_projection_axis(cos_projection_axis(f, 0, n, Interp::Spectral), 1, n, Interp::Spectral),
        0.0};
    Spectrum2D low = fourier::analyze_2d(f, n, n);
    SampledField2D snn = fourier::synthesize_2d(low, f.grid);
    SampledField2D sstar = modified_quadratic_sum(f, n);
    double r = 0.0;
    for (size_t i = 0; i < snn.values.size(); ++i) {
        double d = snn.values[i] - sstar.values[i] - rep.s1.values[i] - rep.s2.values[i] -
                   rep.s3.values[i];
        r = std::max(r, std::abs(d));
    }
    rep.residual = r;
    return rep;
}

double tan_identity_residual(double u, double v, double margin) {
    auto dist_to_period = [](double w) { return std::abs(std::remainder(w, kTwoPi)); };
    if (dist_to_period(u) < margin || dist_to_period(v) < margin ||
        dist_to_period(u + v) < margin) {
        throw std::invalid_argument("tan_identity_residual: point inside singular margin");
    }
    double lhs = 1.0 / (std::tan(0.5 * (u + v)) * std::tan(0.5 * v));
    double rhs = 1.0 / (std::tan(0.5 * u) * std::tan(0.5 * v)) -
                 1.0 / (std::tan(0.5 * u) * std::tan(0.5 * (u + v))) - 1.0;
    return std::abs(lhs - rhs);
}

SampledField2D diagonal_conjugate(const SampledField2D& f) {
    int G = f.grid.size;
    std::vector<double> oo =
        resample_offset_axis(SampledField2D{f.grid, resample_offset_axis(f, 0, Interp::Spectral)},
                             1, Interp::Spectral);
    std::vector<double> kt = kernel_table(PvKernel::conjugate(), f.grid);
    SampledField2D out = zero_field_2d(f.grid);
    double w = 2.0 / G;
    for (int j = 0; j < G; ++j) {
        for (int l = 0; l < G; ++l) {
            double acc = 0.0;
            for (int i = 0; i < G; ++i) {
                acc += kt[i] * oo[static_cast<size_t>(shift_plus(i, j, G)) * G + shift_plus(i, l, G)];
            }
            out.at(j, l) = w * acc;
        }
    }
    return out;
}

IjReport ij_decomposition(const SampledField2D& f, int n) {
    check_quadrature_order(n, f.grid.size, "ij_decomposition");
    int G = f.grid.size;
    Spectrum2D s = fourier::analyze_2d(f, G / 2 - 1, G / 2 - 1);

    auto real_mult = [&](double (*fn)(int, int, int)) {
        return [fn, n](int m, int np) { return Complex{fn(n, m, np), 0.0}; };
    };
    SampledField2D i_term = synthesize_multiplier(s, f.grid, real_mult(&split_i_multiplier));
    SampledField2D j_term = synthesize_multiplier(s, f.grid, real_mult(&split_j_multiplier));
    SampledField2D i_sheared = synthesize_multiplier(s, f.grid, real_mult(&sheared_i_multiplier));
    SampledField2D i0 = synthesize_multiplier(s, f.grid, real_mult(&third_term_multiplier));

    // I1 = (1/2pi) p.v. int cos(nu)/(2 tan(u/2)) A(x+u, y) du, and I2 the
    // shifted-diagonal mirror with A(x, y-u); both by offset-node quadrature.
    SampledField2D a = diagonal_conjugate(f);
    std::vector<double> a_xoff = resample_offset_axis(a, 0, Interp::Spectral);
    std::vector<double> a_yoff = resample_offset_axis(a, 1, Interp::Spectral);
    std::vector<double> kt = kernel_table(PvKernel::cosine(n), f.grid);
    SampledField2D i1 = zero_field_2d(f.grid);
    SampledField2D i2 = zero_field_2d(f.grid);
    for (int j = 0; j < G; ++j) {
        for (int l = 0; l < G; ++l) {
            double acc1 = 0.0, acc2 = 0.0;
            for (int i = 0; i < G; ++i) {
                acc1 += kt[i] * a_xoff[static_cast<size_t>(shift_plus(i, j, G)) * G + l];
                acc2 += kt[i] * a_yoff[static_cast<size_t>(j) * G + shift_minus(i, l, G)];
            }
            i1.at(j, l) = acc1 / G;
            i2.at(j, l) = acc2 / G;
        }
    }

    SampledField2D sstar = modified_quadratic_sum(f, n);
    IjReport rep{std::move(i_term), std::move(j_term), std::move(i_sheared),
                 std::move(i0),     std::move(i1),     std::move(i2),
                 0.0,               0.0,               0.0};
    for (size_t idx = 0; idx < sstar.values.size(); ++idx) {
        double split = sstar.values[idx] - (rep.i_term.values[idx] - rep.j_term.values[idx]);
        double chain = rep.i_sheared.values[idx] -
                       (rep.i1.values[idx] - rep.i2.values[idx] - rep.i0.values[idx]);
        double gap = rep.i_term.values[idx] - rep.i_sheared.values[idx];
        rep.split_residual = std::max(rep.split_residual, std::abs(split));
        rep.chain_residual = std::max(rep.chain_residual, std::abs(chain));
        rep.shear_gap = std::max(rep.shear_gap, std::abs(gap));
    }
    return rep;
}

SliceReport slice_transforms(const SampledField2D& f) {
    int G = f.grid.size;
    Spectrum2D s = fourier::analyze_2d(f, G / 2 - 1, G / 2 - 1);
    SampledField2D h1 = synthesize_multiplier(s, f.grid, [](int m, int np) {
        return Complex{0.0, static_cast<double>(sgn(m - np))};
    });
    SampledField2D h2 = synthesize_multiplier(s, f.grid, [](int m, int np) {
        return Complex{0.0, static_cast<double>(sgn(m + np))};
    });

    SliceReport rep;
    rep.size = G;
    rep.f1.resize(static_cast<size_t>(G) * G * G);
    rep.f2.resize(static_cast<size_t>(G) * G * G);
    for (int j = 0; j < G; ++j) {
        for (int l = 0; l < G; ++l) {
            for (int q = 0; q < G; ++q) {
                size_t idx = (static_cast<size_t>(j) * G + l) * G + q;
                rep.f1[idx] = h1.at(j, f.grid.wrap(l + q - G / 2));
                rep.f2[idx] = h2.at(j, f.grid.wrap(l - q + G / 2));
            }
        }
    }
    double h = f.grid.cell_width();
    double s1 = 0.0, s2 = 0.0;
    for (size_t i = 0; i < rep.f1.size(); ++i) {
        s1 += std::abs(rep.f1[i]);
        s2 += std::abs(rep.f2[i]);
    }
    rep.l1_f1 = s1 * h * h * h;
    rep.l1_f2 = s2 * h * h * h;
    return rep;
}

}  // namespace quadsum::singular
