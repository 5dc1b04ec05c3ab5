#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "quadsum/bmo.hpp"
#include "quadsum/field.hpp"

namespace quadsum::functionals {

// Even convex M with M(0) = 0, evaluated for t >= 0.
//
// Note: Psi(t) = e^t - 1 has M(t)/t -> 1 at 0+, so it is accepted under the
// relaxed axioms (zero at zero, convex, nondecreasing, unbounded) rather
// than the full small-t Young condition.
struct YoungFunction {
    std::string name;
    std::function<double(double)> eval;
    bool delta2 = false;
    double delta2_c = 0.0;
    double delta2_t0 = 0.0;
};

YoungFunction young_phi();  // t * log+ t  (delta2 with c=4 beyond t0=e)
YoungFunction young_psi();  // e^t - 1

// Checks the relaxed axioms on a sample grid; throws on violation.
void validate_young(const YoungFunction& M);

// Luxemburg norm inf{lambda > 0 : sum_i w_i M(|v_i|/lambda) <= 1} by
// bracketing + bisection (relative tolerance 1e-12 or 200 iterations).
// Returns 0 for identically zero input; non-finite integrand values count
// as "integral > 1".
double luxemburg_norm(std::span<const double> values, std::span<const double> weights,
                      const YoungFunction& M);

// Step function on [0,1]: uniform weights 1/(n+1).
double luxemburg_norm(const StepSequence& xi, const YoungFunction& M);

// Field on the square period: cell weights h^2 (total measure 4 pi^2).
double luxemburg_norm(const SampledField2D& f, const YoungFunction& M);

struct OrliczPropertiesReport {
    double homogeneity_defect = 0.0;          // relative, over random trials
    bool monotone_ok = true;                  // |f| <= |g| implies norms ordered
    double d1_defect = 0.0;                   // max(0, int M(|f|) - norm) when norm <= 1
    double d3_lower = 0.0, d3_upper = 0.0;    // 0.5(1+int M(|f1|)), 1+int M(|f1|) at norm 1
    bool d3_ok = false;
    std::vector<double> indicator_norms;      // |E| = 4^-k, k = 1..6
    bool indicators_decreasing = false;
};

OrliczPropertiesReport orlicz_properties_check(std::span<const double> values,
                                               std::span<const double> weights,
                                               const YoungFunction& M, unsigned long long seed = 1);

}  // namespace quadsum::functionals
