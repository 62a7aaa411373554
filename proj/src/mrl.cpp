#include "relstandby/mrl.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "relstandby/errors.hpp"
#include "relstandby/reliability.hpp"

namespace relstandby {

namespace {

constexpr double kMinConditioningProbability = 1e-8;

void requireTime(double t) {
    if (std::isnan(t) || t < 0.0) throw std::domain_error("t must be >= 0");
}

void requireMass(double p, const char* event) {
    if (p < kMinConditioningProbability)
        throw NullConditioningEvent(std::string("conditioning event ") + event +
                                    " has probability " + std::to_string(p));
}

EvalConfig innerConfig(const EvalConfig& cfg) {
    EvalConfig inner = cfg;
    inner.quadRelTol = cfg.quadRelTol * 1e-2;
    inner.quadAbsTol = cfg.quadAbsTol * 1e-2;
    return inner;
}

Estimate ratioEstimate(const Estimate& numerator, double denomValue, double denomError) {
    double value = numerator.value / denomValue;
    double bound = numerator.errorBound / denomValue +
                   std::abs(value) * denomError / denomValue;
    return Estimate{value, bound, numerator.path};
}

}  // namespace

double min_survival(const SystemSpec& spec, double t) {
    double u = spec.component.cdf(t);
    double total = 0.0;
    for (int j = 0; j <= spec.n; ++j) {
        double sign = j % 2 == 0 ? 1.0 : -1.0;
        total += sign * binomial_coefficient(spec.n, j) * spec.copula.diagonalCdf(j, u, 0, 0.0);
    }
    return total;
}

Estimate psi1(const SystemSpec& spec, double t, const EvalConfig& cfg) {
    require_valid(spec);
    requireTime(t);
    EvalConfig inner = innerConfig(cfg);
    Estimate denom = survival_T(spec, t, inner);
    requireMass(denom.value, "{T > t}");
    const double inf = std::numeric_limits<double>::infinity();
    Estimate numerator = integrate_1d(
        [&](double s) { return survival_T(spec, s, inner).value; }, t, inf, cfg);
    Estimate out = ratioEstimate(numerator, denom.value, denom.errorBound);
    out.path = EvalPath::FactoredQuadrature;
    return out;
}

Estimate psi2(const SystemSpec& spec, double t, const EvalConfig& cfg) {
    require_valid(spec);
    requireTime(t);
    EvalConfig inner = innerConfig(cfg);
    double denom = survival_kn(spec, t).value;
    requireMass(denom, "{Z_{n-k+1:n} > t}");

    const double inf = std::numeric_limits<double>::infinity();
    Estimate bareTail = integrate_1d(
        [&](double s) { return survival_kn(spec, s).value; }, t, inf, cfg);

    Estimate windowTail = integrate_1d(
        [&](double x) {
            return factored_window_integral(spec, t, t + x, t + x, inner).value;
        },
        0.0, inf, cfg);

    double value = (bareTail.value + windowTail.value) / denom;
    double bound = (bareTail.errorBound + windowTail.errorBound) / denom;
    return Estimate{value, bound, EvalPath::FactoredQuadrature};
}

Estimate mean_standby_gain(const SystemSpec& spec, const EvalConfig& cfg) {
    require_valid(spec);
    EvalConfig inner = innerConfig(cfg);
    Estimate out = integrate_1d(
        [&](double x) { return factored_window_integral(spec, 0.0, x, x, inner).value; },
        0.0, std::numeric_limits<double>::infinity(), cfg);
    out.path = EvalPath::FactoredQuadrature;
    return out;
}

Estimate mrl_kn_given_all_alive(const SystemSpec& spec, double t, const EvalConfig& cfg) {
    require_valid(spec);
    requireTime(t);
    const int n = spec.n;
    const int k = spec.k;
    double denom = min_survival(spec, t);
    requireMass(denom, "{Z_{1:n} > t}");

    double ut = spec.component.cdf(t);
    auto integrand = [&](double x) {
        double u = spec.component.cdf(t + x);
        // P(Z_{1:n} > t+x)
        double total = 0.0;
        for (int j = 0; j <= n; ++j) {
            double sign = j % 2 == 0 ? 1.0 : -1.0;
            total += sign * binomial_coefficient(n, j) * spec.copula.diagonalCdf(0, 0.0, j, u);
        }
        // inclusion-exclusion cells for i components dead in (t, t+x]
        for (int i = 1; i <= n - k; ++i) {
            double cell = spec.copula.diagonalCdf(0, 0.0, i, u);
            for (int j = 1; j <= i; ++j) {
                double sign = (j + 1) % 2 == 0 ? 1.0 : -1.0;
                cell -= sign * binomial_coefficient(i, j) *
                        spec.copula.diagonalCdf(j, ut, i - j, u);
            }
            for (int j = 1; j <= n - i; ++j) {
                double sign = (j + 1) % 2 == 0 ? 1.0 : -1.0;
                cell -= sign * binomial_coefficient(n - i, j) *
                        spec.copula.diagonalCdf(0, 0.0, i + j, u);
            }
            for (int j = 1; j <= i; ++j) {
                for (int m = 1; m <= n - i; ++m) {
                    double sign = (j + m) % 2 == 0 ? 1.0 : -1.0;
                    cell += sign * binomial_coefficient(i, j) *
                            binomial_coefficient(n - i, m) *
                            spec.copula.diagonalCdf(j, ut, i + m - j, u);
                }
            }
            total += binomial_coefficient(n, i) * cell;
        }
        return total;
    };

    Estimate numerator =
        integrate_1d(integrand, 0.0, std::numeric_limits<double>::infinity(), cfg);
    Estimate out = ratioEstimate(numerator, denom, 0.0);
    out.path = EvalPath::Quadrature;
    return out;
}

Estimate psi3(const SystemSpec& spec, double t, const EvalConfig& cfg) {
    Estimate base = mrl_kn_given_all_alive(spec, t, cfg);
    double denom = min_survival(spec, t);
    EvalConfig inner = innerConfig(cfg);
    Estimate standbyTerm = integrate_1d(
        [&](double x) { return factored_residual_integral(spec, t, x, inner).value; },
        0.0, std::numeric_limits<double>::infinity(), cfg);
    double value = base.value + standbyTerm.value / denom;
    double bound = base.errorBound + standbyTerm.errorBound / denom;
    return Estimate{value, bound, EvalPath::FactoredQuadrature};
}

}  // namespace relstandby
