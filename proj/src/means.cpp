#include "quadsum/means.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "quadsum/bmo.hpp"
#include "quadsum/fourier.hpp"
#include "quadsum/orlicz.hpp"

namespace quadsum::functionals {

MeanSpec MeanSpec::power(double p) {
    if (p <= 0.0) throw std::invalid_argument("strong mean: power p must be positive");
    MeanSpec s;
    s.kind = Kind::Power;
    s.p = p;
    return s;
}

MeanSpec MeanSpec::young_phi() {
    MeanSpec s;
    s.kind = Kind::YoungPhi;
    return s;
}

MeanSpec MeanSpec::exponential(double a) {
    if (a <= 0.0) throw std::invalid_argument("strong mean: coefficient A must be positive");
    MeanSpec s;
    s.kind = Kind::Exponential;
    s.coefficient = a;
    return s;
}

MeanSpec MeanSpec::general(std::function<double(double)> psi) {
    if (!psi) throw std::invalid_argument("strong mean: psi is empty");
    if (std::abs(psi(0.0)) > 1e-12) throw std::invalid_argument("strong mean: psi(0) must be 0");
    double prev = psi(0.0);
    for (int i = 1; i <= 100; ++i) {
        double v = psi(0.2 * i);
        if (v < prev - 1e-12) {
            throw std::invalid_argument("strong mean: psi is not monotone on the check grid");
        }
        prev = v;
    }
    MeanSpec s;
    s.kind = Kind::General;
    s.psi = std::move(psi);
    return s;
}

double MeanSpec::apply(double u) const {
    switch (kind) {
        case Kind::Power:
            return std::pow(u, p);
        case Kind::YoungPhi:
            return u > 1.0 ? u * std::log(u) : 0.0;
        case Kind::Exponential:
            return std::expm1(coefficient * u);
        case Kind::General:
            return psi(u);
    }
    return 0.0;
}

double strong_mean_1d(const Spectrum1D& f, double x, int n, const MeanSpec& spec) {
    if (n < 0 || n > f.max_freq) throw std::invalid_argument("strong_mean_1d: order out of range");
    double reference = fourier::partial_sum_1d(f, f.max_freq, x);
    double acc = 0.0;
    double running = f.at(0).real();
    for (int k = 0; k <= n; ++k) {
        if (k > 0) {
            Complex ph{std::cos(k * x), std::sin(k * x)};
            running += (f.at(k) * ph).real() + (f.at(-k) * std::conj(ph)).real();
        }
        acc += spec.apply(std::abs(running - reference));
    }
    return acc / (n + 1);
}

double summability_mean_2d(const Spectrum2D& f, double x, double y, int m, const MeanSpec& spec) {
    std::vector<double> seq = quadratic_sum_sequence(f, x, y, m + 1);
    double reference = fourier::rectangular_sum(f, f.max_m, f.max_n, x, y);
    double acc = 0.0;
    for (int k = 0; k <= m; ++k) acc += spec.apply(std::abs(seq[k] - reference));
    return acc / (m + 1);
}

double orlicz_mean_identity_residual(const Spectrum2D& f, double x, double y, int n, double a) {
    if (a <= 0.0) throw std::invalid_argument("orlicz_mean_identity_residual: A must be positive");
    std::vector<double> seq = quadratic_sum_sequence(f, x, y, n + 1);
    double reference = fourier::rectangular_sum(f, f.max_m, f.max_n, x, y);

    double mean = 0.0;
    for (int k = 0; k <= n; ++k) mean += std::expm1(a * std::abs(seq[k] - reference));
    mean /= (n + 1);

    // Exact integral of t -> Psi(A * sum_k |S_kk - f| 1_{delta_k}(t)).
    YoungFunction psi = young_psi();
    double cell = 1.0 / (n + 1);
    double exact = 0.0;
    for (int k = 0; k <= n; ++k) exact += cell * psi.eval(a * std::abs(seq[k] - reference));

    return std::abs(mean - exact);
}

double b_functional(const Spectrum2D& f, double x, double y, int truncation) {
    std::vector<double> seq = quadratic_sum_sequence(f, x, y, truncation);
    YoungFunction psi = young_psi();
    double best = 0.0;
    StepSequence prefix;
    prefix.values.reserve(seq.size());
    for (double v : seq) {
        prefix.values.push_back(v);
        best = std::max(best, luxemburg_norm(prefix, psi));
    }
    return best;
}

}  // namespace quadsum::functionals
