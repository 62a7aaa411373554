#include "relstandby/engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "relstandby/errors.hpp"
#include "relstandby/rng.hpp"

namespace relstandby {

void EvalConfig::validate() const {
    if (!(quadRelTol > 0.0) || !(quadAbsTol > 0.0))
        throw std::invalid_argument("quadrature tolerances must be > 0");
    if (quadMaxDepth < 1) throw std::invalid_argument("quadMaxDepth must be >= 1");
    if (mcSamples < 1000) throw std::invalid_argument("mcSamples must be >= 1000");
    if (!(tailCut > 0.0) || tailCut > 1e-4)
        throw std::invalid_argument("tailCut must lie in (0, 1e-4]");
    if (substreams < 1) throw std::invalid_argument("substreams must be >= 1");
}

namespace {

// Gauss-Kronrod 7-15 pair on [-1, 1].
constexpr double kKronrodNodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0};
constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Segment {
    double a, b;
    double integral;
    double error;
    int depth;
    bool operator<(const Segment& other) const { return error < other.error; }
};

Segment evaluateSegment(const std::function<double(double)>& f, double a, double b,
                        int depth) {
    double center = 0.5 * (a + b);
    double half = 0.5 * (b - a);
    double kronrod = 0.0, gauss = 0.0;
    for (int i = 0; i < 8; ++i) {
        double fsum;
        if (i == 7) {
            fsum = f(center);
        } else {
            fsum = f(center - half * kKronrodNodes[i]) + f(center + half * kKronrodNodes[i]);
        }
        if (std::isnan(fsum))
            throw std::runtime_error("integrand returned NaN near x = " +
                                     std::to_string(center - half * kKronrodNodes[i]));
        kronrod += kKronrodWeights[i] * fsum;
        if (i % 2 == 1) gauss += kGaussWeights[i / 2] * fsum;
    }
    kronrod *= half;
    gauss *= half;
    double err = std::abs(kronrod - gauss);
    // QUADPACK-style sharpening of the raw difference.
    if (err > 0.0) err = std::pow(200.0 * err, 1.5);
    err = std::min(err, std::abs(kronrod - gauss) * 200.0);
    if (err == 0.0) err = std::abs(kronrod) * 1e-16;
    return Segment{a, b, kronrod, err, depth};
}

Estimate integrateFinite(const std::function<double(double)>& f, double a, double b,
                         const EvalConfig& cfg) {
    std::priority_queue<Segment> queue;
    queue.push(evaluateSegment(f, a, b, 0));
    double total = queue.top().integral;
    double totalErr = queue.top().error;
    const int maxSegments = 4096;
    int segments = 1;
    while (totalErr > std::max(cfg.quadAbsTol, cfg.quadRelTol * std::abs(total))) {
        Segment worst = queue.top();
        if (worst.depth >= cfg.quadMaxDepth || segments >= maxSegments)
            throw QuadratureError("quadrature failed to converge on [" +
                                      std::to_string(a) + ", " + std::to_string(b) + "]",
                                  total, totalErr);
        queue.pop();
        double mid = 0.5 * (worst.a + worst.b);
        Segment left = evaluateSegment(f, worst.a, mid, worst.depth + 1);
        Segment right = evaluateSegment(f, mid, worst.b, worst.depth + 1);
        total += left.integral + right.integral - worst.integral;
        totalErr += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
        ++segments;
    }
    return Estimate{total, totalErr, EvalPath::Quadrature};
}

}  // namespace

Estimate integrate_1d(const std::function<double(double)>& f, double a, double b,
                      const EvalConfig& cfg) {
    if (!(a < b)) {
        if (a == b) return Estimate{0.0, 0.0, EvalPath::Quadrature};
        throw std::invalid_argument("integrate_1d requires a < b");
    }
    if (std::isinf(b)) {
        // x = a + u/(1-u), dx = du/(1-u)^2, u in (0, 1); the Kronrod nodes
        // never touch u = 1.
        auto g = [&f, a](double u) {
            double om = 1.0 - u;
            return f(a + u / om) / (om * om);
        };
        return integrateFinite(g, 0.0, 1.0, cfg);
    }
    return integrateFinite(f, a, b, cfg);
}

double binomial_coefficient(int n, int r) {
    if (r < 0 || r > n) return 0.0;
    r = std::min(r, n - r);
    unsigned long long acc = 1;
    for (int i = 1; i <= r; ++i)
        acc = acc * static_cast<unsigned long long>(n - r + i) /
              static_cast<unsigned long long>(i);
    return static_cast<double>(acc);
}

double inverse_beta_constant(int n, int k) {
    if (n < 1 || k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n");
    return static_cast<double>(n) * binomial_coefficient(n - 1, n - k);
}

Estimate mc_integral_standby(const SystemSpec& spec, double s, const EvalConfig& cfg) {
    require_valid(spec);
    cfg.validate();
    if (std::isnan(s) || s < 0.0) throw std::domain_error("s must be >= 0");
    if (s == 0.0) return Estimate{0.0, 0.0, EvalPath::MonteCarlo};

    const int n = spec.n;
    const int k = spec.k;
    const int streams = cfg.substreams;
    const std::int64_t base = cfg.mcSamples / streams;
    const std::int64_t extra = cfg.mcSamples % streams;

    struct Partial {
        double sum = 0.0, sumSq = 0.0;
    };
    std::vector<Partial> partials(static_cast<std::size_t>(streams));

    auto worker = [&](int stream) {
        std::mt19937_64 rng(substream_seed(cfg.seed, static_cast<std::uint64_t>(stream)));
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        std::int64_t count = base + (stream < extra ? 1 : 0);
        std::vector<double> u(static_cast<std::size_t>(n) + 1);
        std::vector<double> z(static_cast<std::size_t>(n));
        Partial p;
        for (std::int64_t it = 0; it < count; ++it) {
            for (auto& x : u) x = unif(rng);
            double w = spec.copula.density(u);
            for (int i = 0; i < n; ++i)
                z[static_cast<std::size_t>(i)] = spec.component.quantile(u[static_cast<std::size_t>(i)]);
            double standby = spec.standby.quantile(u[static_cast<std::size_t>(n)]);
            std::sort(z.begin(), z.end());
            double pivot = z[static_cast<std::size_t>(n - k)];
            bool event = pivot <= s && standby > s - pivot;
            if (event && k >= 2) event = z[static_cast<std::size_t>(n - k + 1)] > s;
            if (event) {
                p.sum += w;
                p.sumSq += w * w;
            }
        }
        partials[static_cast<std::size_t>(stream)] = p;
    };

    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    int threads = static_cast<int>(std::min<unsigned>(hw, static_cast<unsigned>(streams)));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            for (int stream = t; stream < streams; stream += threads) worker(stream);
        });
    }
    for (auto& th : pool) th.join();

    // Reduce in substream order so the result is scheduling-independent.
    double sum = 0.0, sumSq = 0.0;
    for (const auto& p : partials) {
        sum += p.sum;
        sumSq += p.sumSq;
    }
    double N = static_cast<double>(cfg.mcSamples);
    double mean = sum / N;
    double var = std::max(0.0, (sumSq - sum * sum / N) / std::max(1.0, N - 1.0));
    return Estimate{mean, std::sqrt(var / N), EvalPath::MonteCarlo};
}

namespace {

double survivorFactor(FactorKind kind, double Fth, double sfTh) {
    return kind == FactorKind::One ? sfTh : -Fth * sfTh;
}

}  // namespace

Estimate factored_window_integral(const SystemSpec& spec, double pivotLo, double pivotHi,
                                  double threshold, const EvalConfig& cfg) {
    require_valid(spec);
    cfg.validate();
    if (pivotHi <= pivotLo) return Estimate{0.0, 0.0, EvalPath::FactoredQuadrature};
    if (threshold < pivotHi)
        throw std::invalid_argument("window integral requires pivotHi <= threshold");

    const int n = spec.n;
    const int k = spec.k;
    const auto& terms = spec.copula.decomposition().terms;
    const double constant = inverse_beta_constant(n, k);
    const double Fth = spec.component.cdf(threshold);
    const double sfTh = 1.0 - Fth;

    auto integrand = [&](double z) {
        double Fz = spec.component.cdf(z);
        double Gs = spec.standby.cdf(threshold - z);
        double total = 0.0;
        for (const auto& term : terms) {
            double p = term.coefficient;
            for (int i = 0; i < k - 1; ++i)
                p *= survivorFactor(term.componentFactors[static_cast<std::size_t>(i)], Fth, sfTh);
            for (int i = k - 1; i < n - 1; ++i) {
                FactorKind kind = term.componentFactors[static_cast<std::size_t>(i)];
                p *= kind == FactorKind::One ? Fz : Fz * (1.0 - Fz);
            }
            FactorKind pivotKind = term.componentFactors[static_cast<std::size_t>(n - 1)];
            if (pivotKind == FactorKind::OneMinus2U) p *= 1.0 - 2.0 * Fz;
            p *= term.standbyFactor == FactorKind::One ? 1.0 - Gs : -Gs * (1.0 - Gs);
            total += p;
        }
        return total * spec.component.pdf(z);
    };

    Estimate inner = integrate_1d(integrand, pivotLo, pivotHi, cfg);
    return Estimate{constant * inner.value, constant * inner.errorBound,
                    EvalPath::FactoredQuadrature};
}

Estimate factored_integral_standby(const SystemSpec& spec, double s, const EvalConfig& cfg) {
    if (std::isnan(s) || s < 0.0) throw std::domain_error("s must be >= 0");
    return factored_window_integral(spec, 0.0, s, s, cfg);
}

Estimate factored_residual_integral(const SystemSpec& spec, double t, double x,
                                    const EvalConfig& cfg) {
    require_valid(spec);
    cfg.validate();
    if (t < 0.0 || x < 0.0) throw std::domain_error("t and x must be >= 0");

    const int n = spec.n;
    const int k = spec.k;
    const auto& terms = spec.copula.decomposition().terms;
    const double constant = inverse_beta_constant(n, k);
    const double Ft = spec.component.cdf(t);
    const double Gx = spec.standby.cdf(x);
    const double standbyOne = 1.0 - Gx;
    const double standby2V = -Gx * (1.0 - Gx);

    auto integrand = [&](double z) {
        double Fz = spec.component.cdf(z);
        double Fzx = spec.component.cdf(z + x);
        double sfZx = 1.0 - Fzx;
        double total = 0.0;
        for (const auto& term : terms) {
            double p = term.coefficient;
            for (int i = 0; i < k - 1; ++i) {
                FactorKind kind = term.componentFactors[static_cast<std::size_t>(i)];
                p *= kind == FactorKind::One ? sfZx : -Fzx * sfZx;
            }
            for (int i = k - 1; i < n - 1; ++i) {
                FactorKind kind = term.componentFactors[static_cast<std::size_t>(i)];
                p *= kind == FactorKind::One ? Fz - Ft
                                             : (Fz - Ft) - (Fz * Fz - Ft * Ft);
            }
            FactorKind pivotKind = term.componentFactors[static_cast<std::size_t>(n - 1)];
            if (pivotKind == FactorKind::OneMinus2U) p *= 1.0 - 2.0 * Fz;
            p *= term.standbyFactor == FactorKind::One ? standbyOne : standby2V;
            total += p;
        }
        return total * spec.component.pdf(z);
    };

    Estimate inner =
        integrate_1d(integrand, t, std::numeric_limits<double>::infinity(), cfg);
    return Estimate{constant * inner.value, constant * inner.errorBound,
                    EvalPath::FactoredQuadrature};
}

}  // namespace relstandby
