#include "relstandby/reliability.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "relstandby/errors.hpp"

namespace relstandby {

namespace {

// Inner integrals get a tighter tolerance so the outer adaptive pass is not
// chasing inner-quadrature noise.
EvalConfig innerConfig(const EvalConfig& cfg) {
    EvalConfig inner = cfg;
    inner.quadRelTol = cfg.quadRelTol * 1e-2;
    inner.quadAbsTol = cfg.quadAbsTol * 1e-2;
    return inner;
}

}  // namespace

double upper_time_bound(const SystemSpec& spec, const EvalConfig& cfg) {
    return spec.component.quantile(1.0 - cfg.tailCut) +
           spec.standby.quantile(1.0 - cfg.tailCut);
}

Estimate survival_kn(const SystemSpec& spec, double s) {
    require_valid(spec);
    if (std::isnan(s) || s < 0.0) throw std::domain_error("s must be >= 0");
    const int n = spec.n;
    const int k = spec.k;
    double u = spec.component.cdf(s);
    double sum = 0.0;
    for (int i = n - k + 1; i <= n; ++i) {
        double sign = (i - n + k - 1) % 2 == 0 ? 1.0 : -1.0;
        sum += sign * binomial_coefficient(n, i) * binomial_coefficient(i - 1, n - k) *
               spec.copula.diagonalCdf(0, 0.0, i, u);
    }
    return Estimate{1.0 - sum, 0.0, EvalPath::ClosedForm};
}

Estimate standby_contribution(const SystemSpec& spec, double s, const EvalConfig& cfg,
                              ContributionPath path) {
    switch (path) {
        case ContributionPath::MonteCarlo:
            return mc_integral_standby(spec, s, cfg);
        case ContributionPath::Factored:
        case ContributionPath::Auto:
            return factored_integral_standby(spec, s, cfg);
    }
    throw std::logic_error("unreachable");
}

Estimate survival_T(const SystemSpec& spec, double s, const EvalConfig& cfg) {
    Estimate bare = survival_kn(spec, s);
    Estimate extra = standby_contribution(spec, s, cfg);
    return Estimate{bare.value + extra.value, bare.errorBound + extra.errorBound,
                    extra.path};
}

Estimate survival_T_fgm_2of3(const SystemSpec& spec, double s, const EvalConfig& cfg) {
    if (spec.n != 3 || spec.k != 2 || spec.copula.family() != CopulaFamily::Fgm4)
        throw UnsupportedOperation(
            "closed-form survival requires n=3, k=2 and the four-dimensional FGM copula");
    if (std::isnan(s) || s < 0.0) throw std::domain_error("s must be >= 0");
    auto th = spec.copula.parameters();
    const double t11 = th[0], t12 = th[1], t21 = th[2], t22 = th[3], t31 = th[4];
    const auto& F = spec.component;
    const auto& G = spec.standby;

    double Fs = F.cdf(s);
    double sfS = 1.0 - Fs;
    double bare = 1.0 - 3.0 * Fs * Fs + 2.0 * Fs * Fs * Fs -
                  3.0 * t11 * Fs * Fs * sfS * sfS * (1.0 - 2.0 * Fs) +
                  2.0 * t21 * Fs * Fs * Fs * sfS * sfS * sfS;
    if (s == 0.0) return Estimate{1.0, 0.0, EvalPath::ClosedForm};

    auto integrand = [&](double z) {
        double Fz = F.cdf(z);
        double sfZ = 1.0 - Fz;
        double Gs = G.cdf(s - z);
        double bracket =
            1.0 -
            (t11 - t22 * Gs) * (Fs * sfZ + (Fs - sfZ) * (1.0 - 2.0 * Fz)) +
            t12 * (Fs - 2.0 + 3.0 * Fz) * Gs -
            (t21 - t31 * Gs) * (1.0 - 2.0 * Fz) * Fs * sfZ;
        return bracket * Fz * (1.0 - Gs) * F.pdf(z);
    };
    Estimate integral = integrate_1d(integrand, 0.0, s, cfg);
    return Estimate{bare + 6.0 * sfS * integral.value, 6.0 * sfS * integral.errorBound,
                    EvalPath::Quadrature};
}

Estimate mttf(const SystemSpec& spec, const EvalConfig& cfg, MttfTarget which) {
    require_valid(spec);
    EvalConfig inner = innerConfig(cfg);
    auto integrand = [&](double s) {
        return which == MttfTarget::Bare ? survival_kn(spec, s).value
                                         : survival_T(spec, s, inner).value;
    };
    // integrate to infinity: the substitution inside integrate_1d keeps nodes
    // dense near the origin, which a wide finite interval (heavy-tailed
    // marginals) would not
    Estimate result =
        integrate_1d(integrand, 0.0, std::numeric_limits<double>::infinity(), cfg);
    result.path = which == MttfTarget::Bare ? EvalPath::Quadrature
                                            : EvalPath::FactoredQuadrature;
    return result;
}

CostRates cost_rates(const SystemSpec& spec, double unitCost, const EvalConfig& cfg) {
    if (!(unitCost > 0.0)) throw std::invalid_argument("unitCost must be > 0");
    double bare = mttf(spec, cfg, MttfTarget::Bare).value;
    double standby = mttf(spec, cfg, MttfTarget::Standby).value;
    return CostRates{unitCost, bare, standby, spec.n * unitCost / bare,
                     (spec.n + 1) * unitCost / standby};
}

}  // namespace relstandby
