#pragma once

#include "relstandby/engine.hpp"
#include "relstandby/system.hpp"

namespace relstandby {

/// E(T - t | T > t): usual mean residual life of the augmented system.
Estimate psi1(const SystemSpec& spec, double t, const EvalConfig& cfg);

/// E(T - t | Z_{n-k+1:n} > t): residual life given the bare system is still up.
Estimate psi2(const SystemSpec& spec, double t, const EvalConfig& cfg);

/// E(T - t | Z_{1:n} > t): residual life given no component has failed yet.
Estimate psi3(const SystemSpec& spec, double t, const EvalConfig& cfg);

/// E(Z_{n-k+1:n} - t | Z_{1:n} > t): bare-system residual life under the
/// all-alive condition, by inclusion-exclusion over diagonal copula cells.
Estimate mrl_kn_given_all_alive(const SystemSpec& spec, double t, const EvalConfig& cfg);

/// E(T - Z_{n-k+1:n}): mean lifetime added by the standby.
Estimate mean_standby_gain(const SystemSpec& spec, const EvalConfig& cfg);

/// P(Z_{1:n} > t) via inclusion-exclusion over the copula diagonal.
double min_survival(const SystemSpec& spec, double t);

}  // namespace relstandby
