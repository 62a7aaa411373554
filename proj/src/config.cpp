#include "relstandby/config.hpp"

#include <cmath>
#include <fstream>

#include <nlohmann/json.hpp>

namespace relstandby {

using nlohmann::json;

std::vector<double> GridConfig::values() const {
    if (points < 1) throw ConfigError("grid.points must be >= 1");
    if (start < 0.0 || !(stop > start) && points > 1)
        throw ConfigError("grid must be nonnegative with stop > start");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(points));
    if (points == 1) {
        out.push_back(start);
        return out;
    }
    double step = (stop - start) / (points - 1);
    for (int i = 0; i < points; ++i) out.push_back(start + step * i);
    return out;
}

Marginal MarginalConfig::build() const {
    try {
        if (family == "exponential") {
            if (params.size() != 1) throw ConfigError("exponential takes 1 parameter (rate)");
            return Marginal::exponential(params[0]);
        }
        if (family == "lomax") {
            if (params.size() != 2) throw ConfigError("lomax takes 2 parameters (shape, scale)");
            return Marginal::lomax(params[0], params[1]);
        }
        if (family == "weibull") {
            if (params.size() != 2) throw ConfigError("weibull takes 2 parameters (shape, scale)");
            return Marginal::weibull(params[0], params[1]);
        }
        if (family == "tabulated") return Marginal::tabulated(grid);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("marginal: ") + e.what());
    }
    throw ConfigError("unknown marginal family '" + family + "'");
}

Copula CopulaConfig::build() const {
    try {
        if (family == "independence") return Copula::independence(static_cast<std::size_t>(dimension));
        if (family == "fgm4") {
            if (params.size() != 5)
                throw ConfigError("fgm4 takes 5 parameters (theta11, theta12, theta21, theta22, theta31)");
            return Copula::fgm4(params[0], params[1], params[2], params[3], params[4]);
        }
        if (family == "fgm_pairwise") {
            if (params.size() != 2)
                throw ConfigError("fgm_pairwise takes 2 parameters (theta_cc, theta_cs)");
            return Copula::fgmPairwise(static_cast<std::size_t>(dimension), params[0], params[1]);
        }
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("copula: ") + e.what());
    }
    throw ConfigError("unknown copula family '" + family + "'");
}

SystemSpec RunConfig::buildSystem() const {
    CopulaConfig cop = copula;
    if (cop.dimension == 0) cop.dimension = n + 1;
    return SystemSpec{n, k, marginal.build(), standbyMarginal.build(), cop.build()};
}

namespace {

template <typename T>
T getField(const json& j, const std::string& path, const char* key) {
    if (!j.contains(key)) throw ConfigError("missing field " + path + "." + key);
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ConfigError("field " + path + "." + key + ": " + e.what());
    }
}

template <typename T>
T getOr(const json& j, const std::string& path, const char* key, T fallback) {
    if (!j.contains(key)) return fallback;
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ConfigError("field " + path + "." + key + ": " + e.what());
    }
}

MarginalConfig parseMarginal(const json& j, const std::string& path) {
    MarginalConfig m;
    m.family = getField<std::string>(j, path, "family");
    m.params = getOr<std::vector<double>>(j, path, "params", {});
    if (j.contains("grid")) {
        for (const auto& row : j.at("grid")) {
            if (!row.is_array() || row.size() != 2)
                throw ConfigError("field " + path + ".grid: entries must be [z, F] pairs");
            m.grid.emplace_back(row[0].get<double>(), row[1].get<double>());
        }
    }
    return m;
}

}  // namespace

RunConfig RunConfig::fromJson(const json& j) {
    RunConfig cfg;
    if (!j.contains("system")) throw ConfigError("missing field system");
    const json& sys = j.at("system");
    cfg.n = getField<int>(sys, "system", "n");
    cfg.k = getField<int>(sys, "system", "k");
    cfg.marginal = parseMarginal(sys.at("marginal"), "system.marginal");
    cfg.standbyMarginal = parseMarginal(sys.at("standby_marginal"), "system.standby_marginal");
    if (!sys.contains("copula")) throw ConfigError("missing field system.copula");
    const json& cop = sys.at("copula");
    cfg.copula.family = getField<std::string>(cop, "system.copula", "family");
    cfg.copula.params = getOr<std::vector<double>>(cop, "system.copula", "params", {});
    cfg.copula.dimension = getOr<int>(cop, "system.copula", "dimension", 0);

    if (j.contains("eval")) {
        const json& ev = j.at("eval");
        cfg.eval.quadRelTol = getOr<double>(ev, "eval", "quad_rel_tol", cfg.eval.quadRelTol);
        cfg.eval.quadAbsTol = getOr<double>(ev, "eval", "quad_abs_tol", cfg.eval.quadAbsTol);
        cfg.eval.quadMaxDepth = getOr<int>(ev, "eval", "quad_max_depth", cfg.eval.quadMaxDepth);
        cfg.eval.mcSamples = getOr<std::int64_t>(ev, "eval", "mc_samples", cfg.eval.mcSamples);
        cfg.eval.seed = getOr<std::uint64_t>(ev, "eval", "seed", cfg.eval.seed);
        cfg.eval.tailCut = getOr<double>(ev, "eval", "tail_cut", cfg.eval.tailCut);
        cfg.eval.substreams = getOr<int>(ev, "eval", "substreams", cfg.eval.substreams);
    }
    if (j.contains("grid")) {
        const json& g = j.at("grid");
        cfg.grid.start = getField<double>(g, "grid", "start");
        cfg.grid.stop = getField<double>(g, "grid", "stop");
        cfg.grid.points = getField<int>(g, "grid", "points");
        if (cfg.grid.start < 0.0 || (cfg.grid.points > 1 && cfg.grid.stop <= cfg.grid.start))
            throw ConfigError("grid must be nonnegative and strictly increasing");
    }
    cfg.unitCost = getOr<double>(j, "", "unit_cost", 1.0);
    if (j.contains("output")) {
        const json& out = j.at("output");
        if (out.contains("path")) cfg.outputPath = out.at("path").get<std::string>();
        std::string fmt = getOr<std::string>(out, "output", "format", "csv");
        if (fmt == "csv")
            cfg.outputFormat = OutputFormat::Csv;
        else if (fmt == "json")
            cfg.outputFormat = OutputFormat::Json;
        else
            throw ConfigError("output.format must be 'csv' or 'json'");
    }
    if (j.contains("theta_rows")) {
        for (const auto& row : j.at("theta_rows"))
            cfg.thetaRows.push_back(row.get<std::vector<double>>());
    }
    if (j.contains("reference_rows")) {
        for (const auto& row : j.at("reference_rows"))
            cfg.referenceRows.push_back(row.get<std::vector<double>>());
    }
    cfg.referenceTolerance = getOr<double>(j, "", "reference_tolerance", 1e-3);
    return cfg;
}

RunConfig RunConfig::fromFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ConfigError("config '" + path + "': " + e.what());
    }
    return fromJson(j);
}

json RunConfig::toJson() const {
    json m1{{"family", marginal.family}, {"params", marginal.params}};
    if (!marginal.grid.empty()) m1["grid"] = marginal.grid;
    json m2{{"family", standbyMarginal.family}, {"params", standbyMarginal.params}};
    if (!standbyMarginal.grid.empty()) m2["grid"] = standbyMarginal.grid;
    json cop{{"family", copula.family}, {"params", copula.params}};
    if (copula.dimension != 0) cop["dimension"] = copula.dimension;
    json j{
        {"system",
         {{"n", n}, {"k", k}, {"marginal", m1}, {"standby_marginal", m2}, {"copula", cop}}},
        {"eval",
         {{"quad_rel_tol", eval.quadRelTol},
          {"quad_abs_tol", eval.quadAbsTol},
          {"quad_max_depth", eval.quadMaxDepth},
          {"mc_samples", eval.mcSamples},
          {"seed", eval.seed},
          {"tail_cut", eval.tailCut},
          {"substreams", eval.substreams}}},
        {"grid", {{"start", grid.start}, {"stop", grid.stop}, {"points", grid.points}}},
        {"unit_cost", unitCost},
    };
    json out;
    if (outputPath) out["path"] = *outputPath;
    out["format"] = outputFormat == OutputFormat::Csv ? "csv" : "json";
    j["output"] = out;
    if (!thetaRows.empty()) j["theta_rows"] = thetaRows;
    if (!referenceRows.empty()) j["reference_rows"] = referenceRows;
    j["reference_tolerance"] = referenceTolerance;
    return j;
}

}  // namespace relstandby
