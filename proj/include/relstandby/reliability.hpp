#pragma once

#include "relstandby/engine.hpp"
#include "relstandby/system.hpp"

namespace relstandby {

enum class ContributionPath { Auto, Factored, MonteCarlo };
enum class MttfTarget { Bare, Standby };

struct CostRates {
    double unitCost;
    double mttfBare;
    double mttfStandby;
    double costRateBare;     // n * unitCost / mttfBare
    double costRateStandby;  // (n+1) * unitCost / mttfStandby
};

/// P(Z_{n-k+1:n} > s): survival of the bare k-out-of-n system, as an
/// alternating sum of diagonal copula evaluations.
Estimate survival_kn(const SystemSpec& spec, double s);

/// The standby term of the system survival: probability that the bare system
/// fails by s but the standby carries it past s.
Estimate standby_contribution(const SystemSpec& spec, double s, const EvalConfig& cfg,
                              ContributionPath path = ContributionPath::Auto);

/// P(T > s) = survival_kn + standby_contribution.
Estimate survival_T(const SystemSpec& spec, double s, const EvalConfig& cfg);

/// Transcription of the single-integral closed form for the 2-out-of-3 FGM
/// case; kept as a permanent independent cross-check of survival_T.
Estimate survival_T_fgm_2of3(const SystemSpec& spec, double s, const EvalConfig& cfg);

Estimate mttf(const SystemSpec& spec, const EvalConfig& cfg, MttfTarget which);

CostRates cost_rates(const SystemSpec& spec, double unitCost, const EvalConfig& cfg);

/// Truncation point for integrals of survival functions of T: the system
/// lifetime is stochastically bounded by Z_{n:n} + Z.
double upper_time_bound(const SystemSpec& spec, const EvalConfig& cfg);

}  // namespace relstandby
