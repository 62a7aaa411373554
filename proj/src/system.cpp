#include "relstandby/system.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace relstandby {

ValidationReport validate_system(const SystemSpec& spec) {
    ValidationReport report;
    if (spec.n < 2)
        report.failures.push_back("n must be >= 2, got " + std::to_string(spec.n));
    if (spec.k < 1 || spec.k > spec.n)
        report.failures.push_back("k must satisfy 1 <= k <= n, got k=" +
                                  std::to_string(spec.k) + ", n=" + std::to_string(spec.n));
    if (spec.copula.dimension() != static_cast<std::size_t>(spec.n) + 1)
        report.failures.push_back("copula dimension " +
                                  std::to_string(spec.copula.dimension()) +
                                  " does not match n+1 = " + std::to_string(spec.n + 1));

    if (report.failures.empty()) {
        // Exchangeability spot-check: the density must be symmetric in the
        // first n arguments.
        std::mt19937_64 rng(0x5ca1ab1e);
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        std::size_t d = spec.copula.dimension();
        std::vector<double> u(d), perm(d);
        for (int trial = 0; trial < 20; ++trial) {
            for (auto& x : u) x = unif(rng);
            perm = u;
            std::shuffle(perm.begin(), perm.end() - 1, rng);
            double a = spec.copula.density(u);
            double b = spec.copula.density(perm);
            if (std::abs(a - b) > 1e-12) {
                report.failures.push_back("copula density is not exchangeable in the "
                                          "first n arguments");
                break;
            }
        }
        report.copulaReport = spec.copula.validate();
    }
    report.valid = report.failures.empty();
    return report;
}

void require_valid(const SystemSpec& spec) {
    auto report = validate_system(spec);
    if (report.valid) return;
    std::ostringstream msg;
    msg << "invalid system spec:";
    for (const auto& f : report.failures) msg << " [" << f << "]";
    throw std::invalid_argument(msg.str());
}

LifetimeDraw lifetime_from_draws(const SystemSpec& spec, std::span<const double> z,
                                 double standby) {
    if (z.size() != static_cast<std::size_t>(spec.n))
        throw std::invalid_argument("expected " + std::to_string(spec.n) +
                                    " component lifetimes, got " + std::to_string(z.size()));
    for (double zi : z)
        if (std::isnan(zi) || zi < 0.0) throw std::domain_error("negative component lifetime");
    if (std::isnan(standby) || standby < 0.0)
        throw std::domain_error("negative standby lifetime");

    std::vector<double> sorted(z.begin(), z.end());
    std::sort(sorted.begin(), sorted.end());
    double pivot = sorted[static_cast<std::size_t>(spec.n - spec.k)];  // Z_{n-k+1:n}
    double first = sorted.front();
    double T;
    if (spec.k >= 2) {
        double next = sorted[static_cast<std::size_t>(spec.n - spec.k + 1)];
        T = pivot + std::min(next - pivot, standby);
    } else {
        T = sorted.back() + standby;
    }
    return LifetimeDraw{T, pivot, first};
}

}  // namespace relstandby
