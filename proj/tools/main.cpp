// Command-line front end: simulate, verify, props, refs.
//
// Exit codes: 0 success (all requested checks pass), 1 a requested
// check failed, 2 configuration/parse error, 3 hypothesis violation,
// 4 flow abort (artifacts are still written).

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

#include "sphereflow/ballrefs.hpp"
#include "sphereflow/checks.hpp"
#include "sphereflow/config.hpp"
#include "sphereflow/flow.hpp"
#include "sphereflow/geometry.hpp"
#include "sphereflow/profile.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace sphereflow;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitConfig = 2;
constexpr int kExitHypothesis = 3;
constexpr int kExitAbort = 4;

json check_to_json(const CheckResult& r) {
    return json{{"suite", r.suite},
                {"check", r.check},
                {"pass", r.pass},
                {"worstViolation", r.worstViolation},
                {"tolerance", r.tolerance},
                {"provenance", r.provenance}};
}

json config_to_json(const RunConfig& cfg) {
    json cosines = json::array();
    for (const auto& [f, a] : cfg.rho0Cosines)
        cosines.push_back(json{{"frequency", f}, {"amplitude", a}});
    const char* fk = cfg.F.kind == CurvatureFunctionSpec::Kind::Mean ? "mean"
                     : cfg.F.kind == CurvatureFunctionSpec::Kind::PowerRoot ? "powerroot"
                                                                            : "quotient";
    return json{{"n", cfg.n},
                {"N", cfg.N},
                {"mode", mode_name(cfg.mode)},
                {"rho0", json{{"base", cfg.rho0Base}, {"cosines", cosines}}},
                {"seed", cfg.seed},
                {"family", family_name(cfg.family)},
                {"F", fk},
                {"k", cfg.F.k},
                {"requiredCone", cfg.requiredCone},
                {"cflFactor", cfg.cflFactor},
                {"maxDt", cfg.maxDt},
                {"tEnd", cfg.tEnd},
                {"convergenceTol", cfg.convergenceTol},
                {"sampleEvery", cfg.sampleEvery},
                {"suites", cfg.suites}};
}

void write_json(const fs::path& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open " + path.string() + " for writing");
    out << j.dump(2) << '\n';
}

std::string verdict_name(VerdictKind k) {
    switch (k) {
        case VerdictKind::ConvergedToSlice: return "ConvergedToSlice";
        case VerdictKind::ReachedTEnd: return "ReachedTEnd";
        case VerdictKind::Aborted: return "Aborted";
    }
    return "?";
}

int run_one_simulation(const RunConfig& cfgIn, const fs::path& outDir) {
    RunConfig cfg = cfgIn;
    cfg.outDir = outDir.string();
    fs::create_directories(outDir);

    AxisymProfile profile0 = initial_profile(cfg);
    const FlowSpec spec = flow_spec(cfg);

    RunResult result;
    int exitCode = kExitOk;
    try {
        result = run(profile0, spec);
    } catch (const HypothesisError& e) {
        std::cerr << "hypothesis error: " << e.what() << "\n";
        return kExitHypothesis;
    } catch (const ProfileError& e) {
        std::cerr << "profile rejected: " << e.what() << "\n";
        return kExitHypothesis;
    }
    if (result.verdict.kind == VerdictKind::Aborted) exitCode = kExitAbort;

    write_series_csv((outDir / "series.csv").string(), result.series);
    write_profile_csv((outDir / "final_profile.csv").string(), result.finalProfile);

    json summary;
    summary["config"] = config_to_json(cfg);
    summary["verdict"] = verdict_name(result.verdict.kind);
    summary["finalRadius"] = result.verdict.finalRadius;
    summary["reason"] = result.verdict.reason;
    summary["steps"] = result.steps;
    summary["samples"] = result.series.rows.size();

    const DecayFit fit = decay_rate(result.series);
    summary["decay"] = json{{"fitted", fit.fitted},
                            {"rate", fit.rate},
                            {"rSquared", fit.rSquared},
                            {"samplesUsed", fit.samplesUsed}};

    json checks = json::array();
    bool allPass = true;
    for (const std::string& suiteName : cfg.suites) {
        if (suiteName == "monotone") {
            const bool convex = series_strictly_convex(result.series);
            const auto suite = monotone_suite(spec, cfg.n, convex);
            for (const CheckResult& r : check_monotone(result.series, suite)) {
                allPass = allPass && r.pass;
                checks.push_back(check_to_json(r));
            }
        } else if (suiteName == "decay") {
            CheckResult r;
            r.suite = "decay";
            r.check = "maxAbsDgamma2 exponential decay";
            r.pass = fit.fitted;
            r.worstViolation = fit.rate;
            r.tolerance = 0.99;  // required r^2
            r.provenance = "exponential gradient decay near the limit slice";
            allPass = allPass && r.pass;
            checks.push_back(check_to_json(r));
        } else if (suiteName == "heintze_karcher") {
            double worst = 0.0;
            bool valid = true;
            for (size_t i = 0; i < result.extras.hkResidual.size(); ++i) {
                const double v = result.extras.hkResidual[i];
                if (std::isnan(v)) { valid = false; break; }
                worst = std::min(worst, v);
            }
            CheckResult r;
            r.suite = "heintze_karcher";
            r.check = "integral phi'/p1 - integral u >= 0 throughout";
            const double scale = result.series.rows.front().area;
            r.tolerance = 1e-9 * scale;
            r.worstViolation = std::max(0.0, -worst);
            r.pass = valid && -worst <= r.tolerance;
            r.provenance = "Heintze-Karcher inequality for mean-convex hypersurfaces";
            allPass = allPass && r.pass;
            checks.push_back(check_to_json(r));
        } else if (suiteName == "inequalities") {
            const auto reports = check_inequalities(result.finalProfile);
            write_inequalities_csv((outDir / "inequalities.csv").string(), reports);
            for (const InequalityReport& r : reports) {
                allPass = allPass && r.pass;
                checks.push_back(json{{"suite", "inequalities"},
                                      {"check", r.inequality + "[k=" + std::to_string(r.k) + "]"},
                                      {"pass", r.pass},
                                      {"worstViolation", std::max(0.0, -r.gap)},
                                      {"tolerance", 1e-9 * r.scale},
                                      {"provenance", "sharp lower bound with equality on slices"}});
            }
        } else if (suiteName == "conjectures") {
            // Non-normative: written to its own table, never gates.
            try {
                const auto rows = explore_conjectures(result.finalProfile);
                write_conjectures_csv((outDir / "conjectures.csv").string(), rows);
            } catch (const HypothesisError& e) {
                std::cerr << "conjecture table skipped: " << e.what() << "\n";
            }
        }
    }
    summary["checks"] = checks;
    if (!allPass && exitCode == kExitOk) exitCode = kExitCheckFailed;
    summary["exitCode"] = exitCode;
    write_json(outDir / "summary.json", summary);
    return exitCode;
}

int cmd_simulate(const std::string& configPath, const std::string& outPath, int jobs) {
    if (fs::is_directory(configPath)) {
        // Sweep directory: every *.ini runs into its own subdirectory.
        std::vector<fs::path> configs;
        for (const auto& e : fs::directory_iterator(configPath))
            if (e.path().extension() == ".ini") configs.push_back(e.path());
        std::sort(configs.begin(), configs.end());
        if (configs.empty()) {
            std::cerr << "no .ini configs in " << configPath << "\n";
            return kExitConfig;
        }
        std::atomic<size_t> next{0};
        std::atomic<int> worstExit{0};
        auto worker = [&] {
            while (true) {
                const size_t i = next.fetch_add(1);
                if (i >= configs.size()) break;
                int code;
                try {
                    const RunConfig cfg = load_config(configs[i].string());
                    code = run_one_simulation(cfg, fs::path(outPath) / configs[i].stem());
                } catch (const ConfigError& e) {
                    std::cerr << configs[i] << ": " << e.what() << "\n";
                    code = kExitConfig;
                }
                int cur = worstExit.load();
                while (code > cur && !worstExit.compare_exchange_weak(cur, code)) {}
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < std::max(1, jobs); ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
        return worstExit.load();
    }
    const RunConfig cfg = load_config(configPath);
    return run_one_simulation(cfg, outPath);
}

int cmd_verify(const std::string& profilePath, int n, const std::string& outPath,
               bool dumpGeometry) {
    const fs::path outDir(outPath);
    fs::create_directories(outDir);
    const AxisymProfile profile = read_profile_csv(profilePath, n);
    validate_profile(profile);

    const auto reports = check_inequalities(profile);
    write_inequalities_csv((outDir / "inequalities.csv").string(), reports);

    json summary;
    summary["profile"] = profilePath;
    summary["n"] = n;
    summary["N"] = profile.N;
    summary["mode"] = mode_name(profile.mode);

    bool allPass = true;
    json ineq = json::array();
    for (const InequalityReport& r : reports) {
        allPass = allPass && r.pass;
        ineq.push_back(json{{"inequality", r.inequality},
                            {"k", r.k},
                            {"lhs", r.lhs},
                            {"rhs", r.rhs},
                            {"gap", r.gap},
                            {"pass", r.pass},
                            {"equality", r.equality},
                            {"skipped", r.skipped},
                            {"note", r.note}});
    }
    summary["inequalities"] = ineq;

    try {
        const double hk = check_heintze_karcher(profile);
        summary["heintzeKarcher"] = json{{"residual", hk}, {"pass", hk >= -1e-9}};
        allPass = allPass && hk >= -1e-9;
    } catch (const HypothesisError& e) {
        summary["heintzeKarcher"] = json{{"skipped", e.what()}};
    }

    try {
        const auto rows = explore_conjectures(profile);
        write_conjectures_csv((outDir / "conjectures.csv").string(), rows);
        summary["conjectures"] = "conjectures.csv";
    } catch (const HypothesisError& e) {
        write_conjectures_csv((outDir / "conjectures.csv").string(), {});
        summary["conjectures"] = std::string("skipped: ") + e.what();
    }

    if (dumpGeometry)
        write_geometry_csv((outDir / "geometry.csv").string(), profile, geometry(profile));

    const int exitCode = allPass ? kExitOk : kExitCheckFailed;
    summary["exitCode"] = exitCode;
    write_json(outDir / "summary.json", summary);
    return exitCode;
}

int cmd_props(std::uint64_t seed, int samples, const std::string& outPath) {
    const fs::path outDir(outPath);
    fs::create_directories(outDir);
    const PropertyReport report = property_suites(seed, samples);
    json j;
    j["seed"] = report.seed;
    j["samplesPerSuite"] = report.samplesPerSuite;
    j["allPass"] = report.allPass;
    json rows = json::array();
    for (const CheckResult& r : report.rows) rows.push_back(check_to_json(r));
    j["checks"] = rows;
    write_json(outDir / "report.json", j);
    for (const CheckResult& r : report.rows)
        std::printf("%-30s %-6s %s worst=%.3g\n", r.suite.c_str(), r.check.c_str(),
                    r.pass ? "PASS" : "FAIL", r.worstViolation);
    return report.allPass ? kExitOk : kExitCheckFailed;
}

int cmd_refs(int n, const std::vector<double>& rGrid, const std::string& outPath) {
    const fs::path outDir(outPath);
    fs::create_directories(outDir);
    std::ofstream out(outDir / "refs.csv");
    if (!out) throw Error("cannot open refs.csv for writing");
    out << "r";
    for (int k = 0; k <= n; ++k) out << ",f" << k;
    out << ",h_m1";
    for (int k = 0; k <= n; ++k) out << ",h" << k;
    for (int k = 0; k <= n; ++k) out << ",xi" << k;
    out << '\n';
    for (double r : rGrid) {
        out << fmt17(r);
        for (int k = 0; k <= n; ++k) out << ',' << fmt17(BallReference::f(n, k).eval(r));
        out << ',' << fmt17(BallReference::h(n, -1).eval(r));
        for (int k = 0; k <= n; ++k) out << ',' << fmt17(BallReference::h(n, k).eval(r));
        for (int k = 0; k <= n; ++k) out << ',' << fmt17(BallReference::xi(n, k).eval(r));
        out << '\n';
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical laboratory for locally constrained curvature flows "
                 "of radial graphs in the round sphere"};
    app.require_subcommand(1);

    std::string configPath, outPath = "out", profilePath;
    int n = 2, jobs = 1, samples = 100000;
    std::uint64_t seed = 42;
    std::vector<double> rGrid;
    bool dumpGeometry = false;

    auto* simulate = app.add_subcommand("simulate", "integrate a flow from a config");
    simulate->add_option("--config", configPath, "config file (or directory of .ini files)")
        ->required();
    simulate->add_option("--out", outPath, "output directory");
    simulate->add_option("--jobs", jobs, "workers for a config directory sweep");

    auto* verify = app.add_subcommand("verify", "check inequalities on a profile CSV");
    verify->add_option("--profile", profilePath, "profile CSV (theta,rho)")->required();
    verify->add_option("--n", n, "hypersurface dimension")->required();
    verify->add_option("--out", outPath, "output directory");
    verify->add_flag("--dump-geometry", dumpGeometry, "also write geometry.csv");

    auto* props = app.add_subcommand("props", "run the pointwise property sweeps");
    props->add_option("--seed", seed, "RNG seed");
    props->add_option("--samples", samples, "samples per suite");
    props->add_option("--out", outPath, "output directory");

    auto* refs = app.add_subcommand("refs", "tabulate geodesic-ball references");
    refs->add_option("--n", n, "hypersurface dimension")->required();
    refs->add_option("--r", rGrid, "radii to tabulate")->required()->expected(-1);
    refs->add_option("--out", outPath, "output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (simulate->parsed()) return cmd_simulate(configPath, outPath, jobs);
        if (verify->parsed()) return cmd_verify(profilePath, n, outPath, dumpGeometry);
        if (props->parsed()) return cmd_props(seed, samples, outPath);
        if (refs->parsed()) return cmd_refs(n, rGrid, outPath);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const HypothesisError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitHypothesis;
    } catch (const ProfileError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitHypothesis;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return kExitConfig;
}
