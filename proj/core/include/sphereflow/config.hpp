#ifndef SPHEREFLOW_CONFIG_HPP
#define SPHEREFLOW_CONFIG_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sphereflow/flow.hpp"
#include "sphereflow/profile.hpp"

// Flat key = value configuration (INI-style sections) for simulation
// runs, chosen for diff-friendliness.

namespace sphereflow {

struct RunConfig {
    // [run]
    int n = 2;
    int N = 200;
    GridMode mode = GridMode::Axisym;
    double rho0Base = 0.8;
    std::vector<std::pair<int, double>> rho0Cosines;  // (frequency, amplitude)
    std::uint64_t seed = 0;
    // [flow]
    FlowFamily family = FlowFamily::Contracting;
    CurvatureFunctionSpec F = CurvatureFunctionSpec::mean();
    int requiredCone = -1;  // -1: use the family/F default
    double cflFactor = 0.2;
    double maxDt = 1e-2;
    double tEnd = 1.0;
    double convergenceTol = 1e-9;
    int sampleEvery = 100;
    // [checks]
    std::vector<std::string> suites;
    // resolved at invocation
    std::string outDir;
};

// Parses and validates; throws ConfigError with a precise message.
// Cosine frequencies must be even (the symmetry the cell-centered grid
// represents).
RunConfig parse_config_text(const std::string& text);
RunConfig load_config(const std::string& path);

AxisymProfile initial_profile(const RunConfig& cfg);
FlowSpec flow_spec(const RunConfig& cfg);

// Round-trip serialization of the fully resolved config (used to embed
// it into run summaries).
std::string config_to_text(const RunConfig& cfg);

std::string family_name(FlowFamily family);
std::string mode_name(GridMode mode);

}  // namespace sphereflow

#endif
