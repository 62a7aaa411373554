#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "relstandby/config.hpp"
#include "relstandby/errors.hpp"
#include "relstandby/mrl.hpp"
#include "relstandby/reliability.hpp"
#include "relstandby/simulate.hpp"

namespace {

using namespace relstandby;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitComputation = 1;
constexpr int kExitUsage = 2;

const char* pathName(EvalPath p) {
    switch (p) {
        case EvalPath::ClosedForm: return "closed_form";
        case EvalPath::Quadrature: return "quadrature";
        case EvalPath::FactoredQuadrature: return "factored_quadrature";
        case EvalPath::MonteCarlo: return "monte_carlo";
    }
    return "?";
}

std::string fmt12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

void applyThreadCap(EvalConfig& eval) {
    if (const char* env = std::getenv("RELSTANDBY_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1 && cap < eval.substreams) eval.substreams = cap;
    }
}

void writeOut(const RunConfig& cfg, const std::string& text) {
    if (cfg.outputPath) {
        std::ofstream out(*cfg.outputPath);
        if (!out) throw std::runtime_error("cannot open output file '" + *cfg.outputPath + "'");
        out << text;
    } else {
        std::cout << text;
    }
}

int cmdValidate(const RunConfig& cfg, bool strict) {
    SystemSpec spec = cfg.buildSystem();
    ValidationReport report = validate_system(spec);
    if (!report.valid) {
        for (const auto& f : report.failures) std::cerr << "error: " << f << "\n";
        return kExitUsage;
    }
    std::cout << "system: n=" << spec.n << " k=" << spec.k << " valid\n";
    std::cout << "copula density corner min = " << fmt12(report.copulaReport.minCornerDensity)
              << ", corner max = " << fmt12(report.copulaReport.maxCornerDensity) << "\n";
    if (!report.copulaReport.isProperDensity) {
        std::cerr << "warning: density min " << fmt12(report.copulaReport.minCornerDensity)
                  << " at corner; the copula density is signed and cannot be sampled\n";
        if (strict) return kExitComputation;
    } else {
        std::cout << "density is a proper (nonnegative) density\n";
    }
    return kExitOk;
}

int cmdCurve(const RunConfig& cfg, const std::string& quantity) {
    SystemSpec spec = cfg.buildSystem();
    std::ostringstream csv;
    csv << "x,value,error_bound,path\n";
    for (double x : cfg.grid.values()) {
        Estimate e;
        if (quantity == "survival_bare")
            e = survival_kn(spec, x);
        else if (quantity == "survival_t")
            e = survival_T(spec, x, cfg.eval);
        else if (quantity == "psi1")
            e = psi1(spec, x, cfg.eval);
        else if (quantity == "psi2")
            e = psi2(spec, x, cfg.eval);
        else if (quantity == "psi3")
            e = psi3(spec, x, cfg.eval);
        else
            throw ConfigError("unknown quantity '" + quantity + "'");
        if (quantity == "survival_t") e.value = std::min(1.0, std::max(0.0, e.value));
        csv << fmt12(x) << ',' << fmt12(e.value) << ',' << fmt12(e.errorBound) << ','
            << pathName(e.path) << '\n';
    }
    writeOut(cfg, csv.str());
    return kExitOk;
}

int cmdTable(const RunConfig& cfg) {
    if (cfg.copula.family != "fgm4")
        throw ConfigError("table command requires the fgm4 copula family");
    std::vector<std::vector<double>> rows = cfg.thetaRows;
    if (rows.empty()) rows.push_back(cfg.copula.params);

    std::ostringstream csv;
    csv << "theta11,theta12,theta21,theta22,theta31,"
           "mttf_bare,mttf_standby,cost_rate_bare,cost_rate_standby,note\n";
    std::ostringstream pretty;
    pretty << "theta                      E(bare)    E(system)  C(bare)    C(system)\n";

    for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto& th = rows[r];
        if (th.size() != 5) throw ConfigError("each theta row needs 5 entries");
        RunConfig rowCfg = cfg;
        rowCfg.copula.params = th;
        SystemSpec spec = rowCfg.buildSystem();
        CostRates rates = cost_rates(spec, cfg.unitCost, cfg.eval);

        std::string note;
        if (r < cfg.referenceRows.size() && cfg.referenceRows[r].size() == 4) {
            const auto& ref = cfg.referenceRows[r];
            double computed[4] = {rates.mttfBare, rates.mttfStandby, rates.costRateBare,
                                  rates.costRateStandby};
            const char* names[4] = {"mttf_bare", "mttf_standby", "cost_rate_bare",
                                    "cost_rate_standby"};
            for (int c = 0; c < 4; ++c) {
                if (std::abs(computed[c] - ref[c]) > cfg.referenceTolerance) {
                    if (!note.empty()) note += "; ";
                    note += std::string(names[c]) + " differs from reference " + fmt12(ref[c]);
                }
            }
        }
        for (double v : th) csv << fmt12(v) << ',';
        csv << fmt12(rates.mttfBare) << ',' << fmt12(rates.mttfStandby) << ','
            << fmt12(rates.costRateBare) << ',' << fmt12(rates.costRateStandby) << ','
            << note << '\n';
        char line[256];
        std::snprintf(line, sizeof(line), "%.1f %.1f %.1f %.1f %.1f        %-10.6f %-10.6f %-10.6f %-10.6f %s\n",
                      th[0], th[1], th[2], th[3], th[4], rates.mttfBare, rates.mttfStandby,
                      rates.costRateBare, rates.costRateStandby,
                      note.empty() ? "" : ("[" + note + "]").c_str());
        pretty << line;
    }
    std::cerr << pretty.str();
    writeOut(cfg, csv.str());
    return kExitOk;
}

int cmdSimulate(const RunConfig& cfg, const std::vector<std::string>& targetSpecs,
                std::int64_t count, std::uint64_t seed) {
    SystemSpec spec = cfg.buildSystem();
    if (count == 0) throw ConfigError("simulation count must be positive");
    SimulationTargets targets;
    for (const auto& ts : targetSpecs) {
        auto eq = ts.find('=');
        std::string name = ts.substr(0, eq);
        double at = eq == std::string::npos ? 0.0 : std::stod(ts.substr(eq + 1));
        if (name == "mttf")
            targets.mttf = true;
        else if (name == "survival")
            targets.survivalAt.push_back(at);
        else if (name == "psi1")
            targets.psi1At.push_back(at);
        else if (name == "psi2")
            targets.psi2At.push_back(at);
        else if (name == "psi3")
            targets.psi3At.push_back(at);
        else
            throw ConfigError("unknown simulation target '" + name + "'");
    }
    if (!targets.mttf && targets.survivalAt.empty() && targets.psi1At.empty() &&
        targets.psi2At.empty() && targets.psi3At.empty())
        targets.mttf = true;

    SimulationResult result =
        simulate_metrics(spec, targets, count, seed, cfg.eval.substreams);

    json out;
    out["sample_count"] = result.sampleCount;
    out["seed"] = result.seed;
    out["acceptance_rate"] = result.acceptanceRate;
    auto dump = [&out](const char* key, const std::vector<double>& at,
                       const std::vector<ValueSE>& vals) {
        if (at.empty()) return;
        json arr = json::array();
        for (std::size_t i = 0; i < at.size(); ++i)
            arr.push_back({{"at", at[i]}, {"value", vals[i].value},
                           {"standard_error", vals[i].standardError}});
        out[key] = arr;
    };
    dump("survival", targets.survivalAt, result.survival);
    dump("psi1", targets.psi1At, result.psi1);
    dump("psi2", targets.psi2At, result.psi2);
    dump("psi3", targets.psi3At, result.psi3);
    if (targets.mttf)
        out["mttf"] = {{"value", result.mttf.value},
                       {"standard_error", result.mttf.standardError}};
    writeOut(cfg, out.dump(2) + "\n");
    return kExitOk;
}

bool parseGridSpec(const std::string& s, GridConfig& grid) {
    double a, b;
    int n;
    char c1, c2;
    std::istringstream in(s);
    if (!(in >> a >> c1 >> b >> c2 >> n) || c1 != ':' || c2 != ':' || n < 1) return false;
    grid = GridConfig{a, b, n};
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reliability of a k-out-of-n system with a cold standby component"};
    app.require_subcommand(1);

    std::string configPath;
    std::string quantity = "survival_t";
    std::string gridSpec;
    std::string outPath;
    std::string format;
    std::vector<std::string> targetSpecs;
    bool strict = false;
    std::int64_t count = -1;
    std::int64_t seedArg = -1;

    auto addCommon = [&](CLI::App* sub) {
        sub->add_option("--config", configPath, "JSON config file")->required();
        sub->add_option("--out", outPath, "output file (default: stdout)");
        sub->add_option("--format", format, "csv|json");
    };

    CLI::App* validate = app.add_subcommand("validate", "check a system configuration");
    validate->add_option("--config", configPath)->required();
    validate->add_flag("--strict", strict, "fail on signed copula densities");

    CLI::App* curve = app.add_subcommand("curve", "evaluate a quantity on a grid");
    addCommon(curve);
    curve->add_option("--quantity", quantity,
                      "survival_bare|survival_t|psi1|psi2|psi3");
    curve->add_option("--grid", gridSpec, "start:stop:points");

    CLI::App* table = app.add_subcommand("table", "mean time to failure and cost rates");
    addCommon(table);

    CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo estimates");
    addCommon(simulate);
    simulate->add_option("--target", targetSpecs,
                         "mttf | survival=<s> | psi1=<t> | psi2=<t> | psi3=<t>");
    simulate->add_option("--count", count, "sample count (default from config)");
    simulate->add_option("--seed", seedArg, "RNG seed (default from config)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return kExitUsage;
    }

    try {
        RunConfig cfg = RunConfig::fromFile(configPath);
        applyThreadCap(cfg.eval);
        cfg.eval.validate();
        if (!outPath.empty()) cfg.outputPath = outPath;
        if (format == "json")
            cfg.outputFormat = OutputFormat::Json;
        else if (format == "csv")
            cfg.outputFormat = OutputFormat::Csv;
        else if (!format.empty())
            throw ConfigError("--format must be csv or json");
        if (!gridSpec.empty() && !parseGridSpec(gridSpec, cfg.grid))
            throw ConfigError("--grid must look like start:stop:points");
        if (seedArg >= 0) cfg.eval.seed = static_cast<std::uint64_t>(seedArg);
        std::int64_t simCount = count >= 0 ? count : cfg.eval.mcSamples;

        if (validate->parsed()) return cmdValidate(cfg, strict);
        if (curve->parsed()) return cmdCurve(cfg, quantity);
        if (table->parsed()) return cmdTable(cfg);
        if (simulate->parsed()) return cmdSimulate(cfg, targetSpecs, simCount, cfg.eval.seed);
        return kExitUsage;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitComputation;
    }
}
