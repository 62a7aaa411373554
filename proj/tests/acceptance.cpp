// Acceptance suite: one pass/fail line per criterion. Exit 0 iff all pass.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "relstandby/engine.hpp"
#include "relstandby/mrl.hpp"
#include "relstandby/reliability.hpp"
#include "relstandby/simulate.hpp"
#include "oracles.hpp"

using namespace relstandby;

namespace {

int gFailures = 0;

struct Criterion {
    std::string label;
    bool ok = true;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    explicit Criterion(std::string l) : label(std::move(l)) {}

    void require(bool cond, const std::string& detail) {
        if (!cond) {
            ok = false;
            std::fprintf(stderr, "  [%s] %s\n", label.c_str(), detail.c_str());
        }
    }

    void requireNear(double actual, double expected, double tol, const std::string& what) {
        if (!(std::abs(actual - expected) <= tol)) {
            ok = false;
            std::fprintf(stderr, "  [%s] %s: got %.9g, want %.9g (tol %.1g)\n",
                         label.c_str(), what.c_str(), actual, expected, tol);
        }
    }

    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    }

    void finish(double timeLimit = 0.0) {
        double secs = elapsed();
        if (timeLimit > 0.0 && secs > timeLimit) {
            ok = false;
            std::fprintf(stderr, "  [%s] runtime %.1fs exceeds %.0fs\n", label.c_str(),
                         secs, timeLimit);
        }
        std::printf("%s: %s (%.1fs)\n", ok ? "PASS" : "FAIL", label.c_str(), secs);
        if (!ok) ++gFailures;
    }
};

const std::vector<double> kThetaA{0.1, 0.2, 0.3, 0.4, 0.5};
const std::vector<double> kThetaB{0.2, 0.3, 0.5, 0.6, 0.7};
const std::vector<double> kThetaSmall{0.1, 0.1, 0.1, 0.1, 0.1};
const std::vector<double> kThetaZero{0, 0, 0, 0, 0};

Copula fgmFrom(const std::vector<double>& th) {
    return Copula::fgm4(th[0], th[1], th[2], th[3], th[4]);
}

SystemSpec spec23(Marginal m, Copula c) {
    return SystemSpec{3, 2, m, m, std::move(c)};
}

void checkTable(Criterion& c, const Marginal& m, const char* name,
                const std::vector<std::pair<double, double>>& expected) {
    EvalConfig cfg;
    const std::vector<std::vector<double>> rows{{0, 0, 0, 0, 0}, kThetaA, kThetaB};
    for (std::size_t r = 0; r < rows.size(); ++r) {
        auto spec = spec23(m, fgmFrom(rows[r]));
        double ez = mttf(spec, cfg, MttfTarget::Bare).value;
        double et = mttf(spec, cfg, MttfTarget::Standby).value;
        std::string tag = std::string(name) + " row " + std::to_string(r + 1);
        c.requireNear(ez, expected[r].first, 1e-4, tag + " E(bare)");
        c.requireNear(et, expected[r].second, 1e-4, tag + " E(system)");
    }
}

}  // namespace

int main() {
    {
        Criterion c("1. exponential table: means and cost rates");
        EvalConfig cfg;
        auto m = Marginal::exponential(2.0);
        checkTable(c, m, "exp",
                   {{0.416667, 0.666667}, {0.424167, 0.68125}, {0.430000, 0.688333}});
        const std::vector<std::vector<double>> rows{{0, 0, 0, 0, 0}, kThetaA, kThetaB};
        const double expectedBareRate[3] = {7.2, 7.072685, 6.976744};  // row 3: the
        // published 9.302325 is inconsistent with 3/E(bare); the formula value is pinned
        const double expectedSystemRate[3] = {6.0, 5.871559, 5.811140};
        for (int r = 0; r < 3; ++r) {
            auto rates = cost_rates(spec23(m, fgmFrom(rows[r])), 1.0, cfg);
            std::string tag = "exp row " + std::to_string(r + 1);
            c.requireNear(rates.costRateBare, 3.0 / rates.mttfBare, 1e-9, tag + " C(bare) formula");
            c.requireNear(rates.costRateStandby, 4.0 / rates.mttfStandby, 1e-9,
                          tag + " C(system) formula");
            c.requireNear(rates.costRateBare, expectedBareRate[r], 1e-3, tag + " C(bare)");
            c.requireNear(rates.costRateStandby, expectedSystemRate[r], 1e-3,
                          tag + " C(system)");
        }
        c.finish(10.0);
    }

    {
        Criterion c("2. lomax and weibull tables: means");
        checkTable(c, Marginal::lomax(2.0, 1.0), "lomax",
                   {{0.6, 1.00576}, {0.615931, 1.04269}, {0.629091, 1.063}});
        checkTable(c, Marginal::weibull(2.0, 1.0), "weibull",
                   {{0.856644, 1.21998}, {0.863228, 1.22371}, {0.867908, 1.22308}});
        c.finish(20.0);
    }

    {
        Criterion c("3. closed-form 2-of-3 survival matches the generic path");
        EvalConfig cfg;
        struct Case { Marginal m; double stop; const char* name; };
        const Case cases[] = {{Marginal::exponential(2.0), 3.0, "exp"},
                              {Marginal::lomax(2.0, 1.0), 5.0, "lomax"},
                              {Marginal::weibull(2.0, 1.0), 3.0, "weibull"}};
        double worst = 0.0;
        for (const auto& cs : cases) {
            for (const auto& th : {kThetaA, kThetaB}) {
                auto spec = spec23(cs.m, fgmFrom(th));
                for (int i = 0; i < 20; ++i) {
                    double s = cs.stop * i / 19.0;
                    double d = std::abs(survival_T(spec, s, cfg).value -
                                        survival_T_fgm_2of3(spec, s, cfg).value);
                    worst = std::max(worst, d);
                }
            }
        }
        c.require(worst <= 1e-6, "max deviation " + std::to_string(worst));
        c.finish();
    }

    {
        Criterion c("4. independence reductions to the closed forms");
        EvalConfig cfg;
        auto m = Marginal::exponential(1.0);
        double upper = m.quantile(1.0 - 1e-10);
        struct Shape { int n, k; };
        for (Shape sh : {Shape{3, 2}, Shape{4, 3}}) {
            auto spec = SystemSpec{sh.n, sh.k, m, m,
                                   Copula::fgmPairwise(static_cast<std::size_t>(sh.n + 1),
                                                       0.0, 0.0)};
            std::string tag = std::to_string(sh.k) + "-of-" + std::to_string(sh.n);
            for (int i = 0; i < 20; ++i) {
                double s = 3.0 * i / 19.0;
                double expected = oracles::indep_survival_kn(m, sh.n, sh.k, s) +
                                  oracles::iid_standby_contribution(m, m, sh.n, sh.k, s);
                c.requireNear(survival_T(spec, s, cfg).value, expected, 1e-6,
                              tag + " survival at s=" + std::to_string(s));
            }
            for (int i = 0; i < 20; ++i) {
                double t = 1.5 * i / 19.0;
                c.requireNear(mrl_kn_given_all_alive(spec, t, cfg).value,
                              oracles::iid_mrl_kn(m, sh.n, sh.k, t, upper), 1e-6,
                              tag + " bare mrl at t=" + std::to_string(t));
            }
            for (int i = 0; i < 20; ++i) {
                double t = 1.5 * i / 19.0;
                c.requireNear(psi3(spec, t, cfg).value,
                              oracles::iid_psi3(m, m, sh.n, sh.k, t, upper), 1e-6,
                              tag + " psi3 at t=" + std::to_string(t));
            }
        }
        c.finish();
    }

    {
        Criterion c("5. quadrature agrees with simulation within 4 standard errors");
        EvalConfig cfg;
        auto m = Marginal::exponential(2.0);
        for (const auto* th : {&kThetaZero, &kThetaSmall}) {
            auto spec = spec23(m, fgmFrom(*th));
            SimulationTargets targets;
            targets.survivalAt = {0.25, 0.5, 1.0};
            targets.psi1At = targets.psi2At = targets.psi3At = {0.0, 0.5, 1.0};
            targets.mttf = true;
            auto sim = simulate_metrics(spec, targets, 1'000'000, 20240801);
            std::string tag = (*th)[0] == 0.0 ? "theta=0" : "theta=0.1";
            for (std::size_t i = 0; i < targets.survivalAt.size(); ++i) {
                double s = targets.survivalAt[i];
                double se = std::max(sim.survival[i].standardError, 1e-12);
                c.require(std::abs(survival_T(spec, s, cfg).value - sim.survival[i].value) <=
                              4.0 * se,
                          tag + " survival at s=" + std::to_string(s));
            }
            for (std::size_t i = 0; i < targets.psi1At.size(); ++i) {
                double t = targets.psi1At[i];
                c.require(std::abs(psi1(spec, t, cfg).value - sim.psi1[i].value) <=
                              4.0 * sim.psi1[i].standardError,
                          tag + " psi1 at t=" + std::to_string(t));
                c.require(std::abs(psi2(spec, t, cfg).value - sim.psi2[i].value) <=
                              4.0 * sim.psi2[i].standardError,
                          tag + " psi2 at t=" + std::to_string(t));
                c.require(std::abs(psi3(spec, t, cfg).value - sim.psi3[i].value) <=
                              4.0 * sim.psi3[i].standardError,
                          tag + " psi3 at t=" + std::to_string(t));
            }
            c.require(std::abs(mttf(spec, cfg, MttfTarget::Standby).value -
                               sim.mttf.value) <= 4.0 * sim.mttf.standardError,
                      tag + " mttf");
        }
        c.finish(120.0);
    }

    {
        Criterion c("6. residual-life shape: ordering, monotonicity, constancy");
        EvalConfig cfg;
        auto m = Marginal::exponential(1.0);
        for (const auto* th : {&kThetaZero, &kThetaB}) {
            auto spec = spec23(m, fgmFrom(*th));
            bool independent = (*th)[0] == 0.0;
            std::string tag = independent ? "independent" : "dependent";
            double prev1 = 1e300, prev2 = 1e300;
            double psi3Min = 1e300, psi3Max = -1e300;
            for (int i = 0; i <= 30; ++i) {
                double t = 0.1 * i;
                double v1 = psi1(spec, t, cfg).value;
                double v2 = psi2(spec, t, cfg).value;
                double v3 = psi3(spec, t, cfg).value;
                std::string at = " at t=" + std::to_string(t);
                c.require(v1 <= v2 + 1e-8, tag + " psi1 <= psi2" + at);
                c.require(v2 <= v3 + 1e-8, tag + " psi2 <= psi3" + at);
                c.require(v1 <= prev1 + 1e-8, tag + " psi1 nonincreasing" + at);
                c.require(v2 <= prev2 + 1e-8, tag + " psi2 nonincreasing" + at);
                prev1 = v1;
                prev2 = v2;
                psi3Min = std::min(psi3Min, v3);
                psi3Max = std::max(psi3Max, v3);
            }
            if (independent)
                c.require(psi3Max - psi3Min <= 1e-4,
                          "psi3 spread " + std::to_string(psi3Max - psi3Min));
        }
        c.finish();
    }

    {
        Criterion c("7. anchors: psi(0) = mean lifetime, survival bounds");
        EvalConfig cfg;
        const Marginal marginals[] = {Marginal::exponential(2.0), Marginal::lomax(2.0, 1.0),
                                      Marginal::weibull(2.0, 1.0)};
        const char* names[] = {"exp", "lomax", "weibull"};
        for (int mi = 0; mi < 3; ++mi) {
            for (const auto& th : {kThetaA, kThetaB}) {
                auto spec = spec23(marginals[mi], fgmFrom(th));
                double mean = mttf(spec, cfg, MttfTarget::Standby).value;
                std::string tag = names[mi];
                c.requireNear(psi1(spec, 0.0, cfg).value, mean, 1e-6, tag + " psi1(0)");
                c.requireNear(psi2(spec, 0.0, cfg).value, mean, 1e-6, tag + " psi2(0)");
                c.requireNear(psi3(spec, 0.0, cfg).value, mean, 1e-6, tag + " psi3(0)");
                c.requireNear(survival_T(spec, 0.0, cfg).value, 1.0, 1e-9,
                              tag + " survival at 0");
                for (int i = 0; i <= 12; ++i) {
                    double s = 0.25 * i;
                    c.require(survival_T(spec, s, cfg).value >=
                                  survival_kn(spec, s).value - 1e-9,
                              tag + " survival_T >= survival_kn at s=" + std::to_string(s));
                }
            }
        }
        c.finish();
    }

    {
        Criterion c("8. property suites: axioms, corner report, margins, determinism");
        std::mt19937_64 rng(2024);
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        const Copula copulas[] = {Copula::independence(4), fgmFrom(kThetaA),
                                  Copula::fgmPairwise(5, 0.1, 0.1)};
        for (const auto& cop : copulas) {
            std::size_t d = cop.dimension();
            for (int trial = 0; trial < 200; ++trial) {
                std::vector<double> u(d);
                for (auto& x : u) x = unif(rng);
                // grounded
                std::vector<double> g = u;
                g[static_cast<std::size_t>(trial) % d] = 0.0;
                c.require(cop.cdf(g) == 0.0, "grounded copula");
                // uniform margins
                std::vector<double> margin(d, 1.0);
                std::size_t slot = static_cast<std::size_t>(trial) % d;
                margin[slot] = u[0];
                c.requireNear(cop.cdf(margin), u[0], 1e-12, "uniform margin");
                // exchangeability of the component block
                std::vector<double> perm = u;
                std::shuffle(perm.begin(), perm.end() - 1, rng);
                c.requireNear(cop.cdf(perm), cop.cdf(u), 1e-12, "component symmetry");
            }
        }
        for (const auto& th : {kThetaA, kThetaB}) {
            auto cop = fgmFrom(th);
            auto report = cop.validate();
            double lo = 1e300, hi = -1e300;
            std::vector<double> u(4);
            for (int a = 0; a < 17; ++a)
                for (int b = 0; b < 17; ++b)
                    for (int cidx = 0; cidx < 17; ++cidx)
                        for (int e = 0; e < 17; ++e) {
                            u[0] = a / 16.0; u[1] = b / 16.0;
                            u[2] = cidx / 16.0; u[3] = e / 16.0;
                            double dens = cop.density(u);
                            lo = std::min(lo, dens);
                            hi = std::max(hi, dens);
                        }
            c.requireNear(report.minCornerDensity, lo, 1e-9, "corner min vs grid sweep");
            c.requireNear(report.maxCornerDensity, hi, 1e-9, "corner max vs grid sweep");
        }
        {
            auto spec = spec23(Marginal::exponential(2.0), fgmFrom(kThetaSmall));
            auto block = sample_joint(spec, 300'000, 99);
            auto checkMargin = [&](std::vector<double> values, const Marginal& m,
                                   const char* what) {
                std::sort(values.begin(), values.end());
                double gap = 0.0;
                for (std::size_t i = 0; i < values.size(); ++i)
                    gap = std::max(gap, std::abs((i + 1.0) / values.size() -
                                                 m.cdf(values[i])));
                c.require(gap < 0.004, std::string(what) + " max CDF gap " +
                                           std::to_string(gap));
            };
            std::vector<double> first;
            first.reserve(static_cast<std::size_t>(block.count));
            for (std::int64_t i = 0; i < block.count; ++i)
                first.push_back(block.components[static_cast<std::size_t>(i * 3)]);
            checkMargin(first, spec.component, "component margin");
            checkMargin(block.standby, spec.standby, "standby margin");

            auto block2 = sample_joint(spec, 300'000, 99);
            c.require(block.components == block2.components &&
                          block.standby == block2.standby,
                      "sampler determinism");
            EvalConfig cfg;
            cfg.mcSamples = 100'000;
            cfg.seed = 17;
            auto a = mc_integral_standby(spec, 0.5, cfg);
            auto b = mc_integral_standby(spec, 0.5, cfg);
            c.require(a.value == b.value, "monte carlo integral determinism");
            SimulationTargets targets;
            targets.mttf = true;
            auto s1 = simulate_metrics(spec, targets, 100'000, 5);
            auto s2 = simulate_metrics(spec, targets, 100'000, 5);
            c.require(s1.mttf.value == s2.mttf.value, "metric simulation determinism");
        }
        c.finish();
    }

    if (gFailures == 0) {
        std::printf("all acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d criteria failed\n", gFailures);
    return 1;
}
