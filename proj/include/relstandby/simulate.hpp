#pragma once

#include <cstdint>
#include <vector>

#include "relstandby/system.hpp"

namespace relstandby {

/// Flat block of joint draws: `components` holds count*n lifetimes row-major.
struct JointSampleBlock {
    std::int64_t count = 0;
    int n = 0;
    std::vector<double> components;
    std::vector<double> standby;
    double acceptanceRate = 1.0;
};

/// Exact draws from the joint lifetime law by rejection sampling on the
/// copula scale: uniform proposals accepted with probability density/M where
/// M is the corner maximum, then pushed through the marginal quantiles.
/// Deterministic given (seed, count, substreams). Throws ValidityError for
/// signed densities and SimulationError when acceptance falls below 1e-3.
JointSampleBlock sample_joint(const SystemSpec& spec, std::int64_t count,
                              std::uint64_t seed, int substreams = 16);

struct ValueSE {
    double value = 0.0;
    double standardError = 0.0;
};

struct SimulationTargets {
    std::vector<double> survivalAt;
    std::vector<double> psi1At;
    std::vector<double> psi2At;
    std::vector<double> psi3At;
    bool mttf = false;
};

struct SimulationResult {
    std::int64_t sampleCount = 0;
    std::uint64_t seed = 0;
    double acceptanceRate = 1.0;
    std::vector<ValueSE> survival;
    std::vector<ValueSE> psi1;
    std::vector<ValueSE> psi2;
    std::vector<ValueSE> psi3;
    ValueSE mttf;
};

/// Monte Carlo estimates of every simulable quantity: survival indicators,
/// conditional residual-life means (events T>t, bare system alive, all
/// components alive), and the mean lifetime. Conditioning events backed by
/// fewer than 100 draws raise SimulationError.
SimulationResult simulate_metrics(const SystemSpec& spec, const SimulationTargets& targets,
                                  std::int64_t count, std::uint64_t seed,
                                  int substreams = 16);

}  // namespace relstandby
