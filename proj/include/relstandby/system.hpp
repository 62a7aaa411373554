#pragma once

#include <span>
#include <string>
#include <vector>

#include "relstandby/copulas.hpp"
#include "relstandby/marginals.hpp"

namespace relstandby {

/// A k-out-of-n system of exchangeable components with one cold standby.
/// The n components share the marginal F; the standby has marginal G; the
/// joint law of all n+1 lifetimes is tied together by a copula of dimension
/// n+1 whose first n margins are the components.
struct SystemSpec {
    int n;
    int k;
    Marginal component;
    Marginal standby;
    Copula copula;
};

struct ValidationReport {
    bool valid = false;
    std::vector<std::string> failures;
    ValidityReport copulaReport;
};

/// Structural checks: k range, copula dimension, and a randomized spot-check
/// of density symmetry in the first n arguments.
ValidationReport validate_system(const SystemSpec& spec);

/// Throws std::invalid_argument listing all failures if the spec is invalid.
void require_valid(const SystemSpec& spec);

struct LifetimeDraw {
    double systemLifetime;   // T
    double kOutOfNFailure;   // Z_{n-k+1:n}
    double firstFailure;     // Z_{1:n}
};

/// The lifetime rule: the standby is switched in when the bare k-out-of-n
/// system fails and keeps it going until the next component failure or its
/// own, whichever comes first. For k=1 the system dies at Z_{n:n} + standby.
LifetimeDraw lifetime_from_draws(const SystemSpec& spec, std::span<const double> z,
                                 double standby);

}  // namespace relstandby
