#include "relstandby/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <mutex>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>

#include "relstandby/errors.hpp"
#include "relstandby/rng.hpp"

namespace relstandby {

namespace {

constexpr double kMinAcceptanceRate = 1e-3;
constexpr std::int64_t kMinConditionedDraws = 100;

double requireSamplable(const SystemSpec& spec) {
    auto report = spec.copula.validate();
    if (!report.isProperDensity)
        throw ValidityError("copula density is signed (corner minimum " +
                            std::to_string(report.minCornerDensity) +
                            "); cannot sample");
    return report.maxCornerDensity;
}

// One accepted draw on the uniform scale; updates the proposal counter.
template <typename Rng>
void drawAccepted(const SystemSpec& spec, double bound, Rng& rng,
                  std::uniform_real_distribution<double>& unif, std::vector<double>& u,
                  std::int64_t& proposals, std::int64_t quota) {
    const std::int64_t proposalCap =
        quota * static_cast<std::int64_t>(2.0 / kMinAcceptanceRate) + 1000;
    for (;;) {
        if (proposals >= proposalCap)
            throw SimulationError("rejection sampler acceptance rate below " +
                                  std::to_string(kMinAcceptanceRate));
        ++proposals;
        for (auto& x : u) x = unif(rng);
        double accept = spec.copula.density(u) / bound;
        if (unif(rng) < accept) return;
    }
}

void runSubstreams(int substreams, const std::function<void(int)>& worker) {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    int threads = static_cast<int>(std::min<unsigned>(hw, static_cast<unsigned>(substreams)));
    std::vector<std::thread> pool;
    std::exception_ptr firstError;
    std::mutex errMutex;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (int s = t; s < substreams; s += threads) worker(s);
            } catch (...) {
                std::lock_guard<std::mutex> lock(errMutex);
                if (!firstError) firstError = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (firstError) std::rethrow_exception(firstError);
}

ValueSE meanSE(double sum, double sumSq, double n) {
    double mean = sum / n;
    double var = std::max(0.0, (sumSq - sum * sum / n) / std::max(1.0, n - 1.0));
    return ValueSE{mean, std::sqrt(var / n)};
}

}  // namespace

JointSampleBlock sample_joint(const SystemSpec& spec, std::int64_t count,
                              std::uint64_t seed, int substreams) {
    require_valid(spec);
    if (count < 1) throw std::invalid_argument("sample count must be >= 1");
    if (substreams < 1) throw std::invalid_argument("substreams must be >= 1");
    double bound = requireSamplable(spec);

    const int n = spec.n;
    JointSampleBlock block;
    block.count = count;
    block.n = n;
    block.components.resize(static_cast<std::size_t>(count) * static_cast<std::size_t>(n));
    block.standby.resize(static_cast<std::size_t>(count));

    const std::int64_t base = count / substreams;
    const std::int64_t extra = count % substreams;
    std::vector<std::int64_t> proposalCounts(static_cast<std::size_t>(substreams), 0);

    auto worker = [&](int stream) {
        std::mt19937_64 rng(substream_seed(seed, static_cast<std::uint64_t>(stream)));
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        std::int64_t quota = base + (stream < extra ? 1 : 0);
        std::int64_t offset = base * stream + std::min<std::int64_t>(stream, extra);
        std::vector<double> u(static_cast<std::size_t>(n) + 1);
        std::int64_t proposals = 0;
        for (std::int64_t i = 0; i < quota; ++i) {
            drawAccepted(spec, bound, rng, unif, u, proposals, quota);
            for (int j = 0; j < n; ++j)
                block.components[static_cast<std::size_t>((offset + i) * n + j)] =
                    spec.component.quantile(u[static_cast<std::size_t>(j)]);
            block.standby[static_cast<std::size_t>(offset + i)] =
                spec.standby.quantile(u[static_cast<std::size_t>(n)]);
        }
        proposalCounts[static_cast<std::size_t>(stream)] = proposals;
    };
    runSubstreams(substreams, worker);

    std::int64_t totalProposals = 0;
    for (auto p : proposalCounts) totalProposals += p;
    block.acceptanceRate = static_cast<double>(count) / static_cast<double>(totalProposals);
    return block;
}

SimulationResult simulate_metrics(const SystemSpec& spec, const SimulationTargets& targets,
                                  std::int64_t count, std::uint64_t seed, int substreams) {
    require_valid(spec);
    if (count < 1) throw std::invalid_argument("sample count must be >= 1");
    if (substreams < 1) throw std::invalid_argument("substreams must be >= 1");
    double bound = requireSamplable(spec);

    const int n = spec.n;
    struct CondAcc {
        std::int64_t hits = 0;
        double sum = 0.0, sumSq = 0.0;
    };
    struct StreamAcc {
        std::vector<std::int64_t> survivalHits;
        std::vector<CondAcc> psi1, psi2, psi3;
        double tSum = 0.0, tSumSq = 0.0;
        std::int64_t proposals = 0;
    };
    std::vector<StreamAcc> accs(static_cast<std::size_t>(substreams));
    for (auto& a : accs) {
        a.survivalHits.assign(targets.survivalAt.size(), 0);
        a.psi1.assign(targets.psi1At.size(), CondAcc{});
        a.psi2.assign(targets.psi2At.size(), CondAcc{});
        a.psi3.assign(targets.psi3At.size(), CondAcc{});
    }

    const std::int64_t base = count / substreams;
    const std::int64_t extra = count % substreams;

    auto worker = [&](int stream) {
        std::mt19937_64 rng(substream_seed(seed, static_cast<std::uint64_t>(stream)));
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        std::int64_t quota = base + (stream < extra ? 1 : 0);
        std::vector<double> u(static_cast<std::size_t>(n) + 1);
        std::vector<double> z(static_cast<std::size_t>(n));
        StreamAcc& acc = accs[static_cast<std::size_t>(stream)];
        for (std::int64_t i = 0; i < quota; ++i) {
            drawAccepted(spec, bound, rng, unif, u, acc.proposals, quota);
            for (int j = 0; j < n; ++j)
                z[static_cast<std::size_t>(j)] =
                    spec.component.quantile(u[static_cast<std::size_t>(j)]);
            double standby = spec.standby.quantile(u[static_cast<std::size_t>(n)]);
            LifetimeDraw draw = lifetime_from_draws(spec, z, standby);
            acc.tSum += draw.systemLifetime;
            acc.tSumSq += draw.systemLifetime * draw.systemLifetime;
            for (std::size_t j = 0; j < targets.survivalAt.size(); ++j)
                if (draw.systemLifetime > targets.survivalAt[j]) ++acc.survivalHits[j];
            auto condition = [](CondAcc& c, double T, double t, bool event) {
                if (!event) return;
                ++c.hits;
                c.sum += T - t;
                c.sumSq += (T - t) * (T - t);
            };
            for (std::size_t j = 0; j < targets.psi1At.size(); ++j)
                condition(acc.psi1[j], draw.systemLifetime, targets.psi1At[j],
                          draw.systemLifetime > targets.psi1At[j]);
            for (std::size_t j = 0; j < targets.psi2At.size(); ++j)
                condition(acc.psi2[j], draw.systemLifetime, targets.psi2At[j],
                          draw.kOutOfNFailure > targets.psi2At[j]);
            for (std::size_t j = 0; j < targets.psi3At.size(); ++j)
                condition(acc.psi3[j], draw.systemLifetime, targets.psi3At[j],
                          draw.firstFailure > targets.psi3At[j]);
        }
    };
    runSubstreams(substreams, worker);

    SimulationResult result;
    result.sampleCount = count;
    result.seed = seed;

    std::int64_t proposals = 0;
    for (const auto& a : accs) proposals += a.proposals;
    result.acceptanceRate = static_cast<double>(count) / static_cast<double>(proposals);

    double N = static_cast<double>(count);
    for (std::size_t j = 0; j < targets.survivalAt.size(); ++j) {
        std::int64_t hits = 0;
        for (const auto& a : accs) hits += a.survivalHits[j];
        double p = static_cast<double>(hits) / N;
        result.survival.push_back(ValueSE{p, std::sqrt(p * (1.0 - p) / N)});
    }
    auto reduceCond = [&](const std::vector<double>& ts,
                          std::vector<CondAcc> StreamAcc::*member, const char* name) {
        std::vector<ValueSE> out;
        for (std::size_t j = 0; j < ts.size(); ++j) {
            CondAcc total;
            for (const auto& a : accs) {
                total.hits += (a.*member)[j].hits;
                total.sum += (a.*member)[j].sum;
                total.sumSq += (a.*member)[j].sumSq;
            }
            if (total.hits < kMinConditionedDraws)
                throw SimulationError(std::string(name) + " at t=" + std::to_string(ts[j]) +
                                      ": only " + std::to_string(total.hits) +
                                      " draws satisfy the conditioning event");
            out.push_back(meanSE(total.sum, total.sumSq, static_cast<double>(total.hits)));
        }
        return out;
    };
    result.psi1 = reduceCond(targets.psi1At, &StreamAcc::psi1, "psi1");
    result.psi2 = reduceCond(targets.psi2At, &StreamAcc::psi2, "psi2");
    result.psi3 = reduceCond(targets.psi3At, &StreamAcc::psi3, "psi3");

    if (targets.mttf) {
        double sum = 0.0, sumSq = 0.0;
        for (const auto& a : accs) {
            sum += a.tSum;
            sumSq += a.tSumSq;
        }
        result.mttf = meanSE(sum, sumSq, N);
    }
    return result;
}

}  // namespace relstandby
