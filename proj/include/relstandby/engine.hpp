#pragma once

#include <cstdint>
#include <functional>

#include "relstandby/system.hpp"

namespace relstandby {

struct EvalConfig {
    double quadRelTol = 1e-8;
    double quadAbsTol = 1e-10;
    int quadMaxDepth = 50;
    std::int64_t mcSamples = 1'000'000;
    std::uint64_t seed = 0;
    double tailCut = 1e-10;  // infinite limits truncated at quantile(1 - tailCut)
    int substreams = 16;     // Monte Carlo substream partition count

    void validate() const;  // throws std::invalid_argument
};

enum class EvalPath { ClosedForm, Quadrature, FactoredQuadrature, MonteCarlo };

struct Estimate {
    double value = 0.0;
    double errorBound = 0.0;  // quadrature error estimate or one MC standard error
    EvalPath path = EvalPath::ClosedForm;
};

/// Adaptive Gauss-Kronrod quadrature on (a, b); b may be +infinity, handled
/// by the substitution x = a + u/(1-u). Stops when the estimated error drops
/// below max(quadAbsTol, quadRelTol * |value|). Throws QuadratureError (with
/// the best estimate attached) on non-convergence and std::runtime_error when
/// the integrand returns NaN.
Estimate integrate_1d(const std::function<double(double)>& f, double a, double b,
                      const EvalConfig& cfg);

/// n * binom(n-1, n-k) in exact integer arithmetic; equals 1/B(n-k+1, k).
double inverse_beta_constant(int n, int k);

/// binom(n, r) in exact integer arithmetic (n <= 62).
double binomial_coefficient(int n, int r);

/// The (n+1)-fold integral of the standby contribution to P(T > s), evaluated
/// by importance-weighted Monte Carlo over independent marginal draws with
/// the copula density as weight. Deterministic for fixed (seed, mcSamples,
/// substreams).
Estimate mc_integral_standby(const SystemSpec& spec, double s, const EvalConfig& cfg);

/// Same integral via the multilinear density decomposition: the inner
/// integrals collapse to closed-form moment factors, leaving one outer 1-D
/// integral over the pivot lifetime.
Estimate factored_integral_standby(const SystemSpec& spec, double s, const EvalConfig& cfg);

/// Generalization used by the residual-life formulas: pivot over
/// (pivotLo, pivotHi), the k-1 survivor slots above `threshold`, the n-k
/// remaining slots below the pivot (from 0), the standby beyond
/// threshold - pivot. Requires pivotHi <= threshold.
Estimate factored_window_integral(const SystemSpec& spec, double pivotLo, double pivotHi,
                                  double threshold, const EvalConfig& cfg);

/// Residual-life variant for conditioning on all components alive at t:
/// pivot over (t, inf), remaining slots over (t, pivot), survivors above
/// pivot + x, standby beyond x.
Estimate factored_residual_integral(const SystemSpec& spec, double t, double x,
                                    const EvalConfig& cfg);

}  // namespace relstandby
