#pragma once

#include <optional>
#include <string>
#include <vector>

#include "relstandby/engine.hpp"
#include "relstandby/system.hpp"

#include <nlohmann/json_fwd.hpp>

namespace relstandby {

struct GridConfig {
    double start = 0.0;
    double stop = 3.0;
    int points = 60;

    std::vector<double> values() const;
};

enum class OutputFormat { Csv, Json };

struct MarginalConfig {
    std::string family;  // "exponential" | "lomax" | "weibull" | "tabulated"
    std::vector<double> params;
    std::vector<std::pair<double, double>> grid;  // tabulated only

    Marginal build() const;
};

struct CopulaConfig {
    std::string family;  // "independence" | "fgm4" | "fgm_pairwise"
    std::vector<double> params;
    int dimension = 0;  // independence / fgm_pairwise

    Copula build() const;
};

/// One config file drives one CLI invocation. Parsing is strict: unknown or
/// ill-typed fields raise ConfigError with the offending field path.
struct RunConfig {
    int n = 3;
    int k = 2;
    MarginalConfig marginal;
    MarginalConfig standbyMarginal;
    CopulaConfig copula;
    EvalConfig eval;
    GridConfig grid;
    double unitCost = 1.0;
    std::optional<std::string> outputPath;
    OutputFormat outputFormat = OutputFormat::Csv;
    std::vector<std::vector<double>> thetaRows;  // table command only
    // Optional published values per theta row (EZ, ET, C_bare, C_standby);
    // the table command footnotes computed cells that disagree.
    std::vector<std::vector<double>> referenceRows;
    double referenceTolerance = 1e-3;

    SystemSpec buildSystem() const;

    static RunConfig fromJson(const nlohmann::json& j);
    static RunConfig fromFile(const std::string& path);
    nlohmann::json toJson() const;
};

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace relstandby
