#ifndef SPHEREFLOW_FLOW_HPP
#define SPHEREFLOW_FLOW_HPP

#include <string>
#include <vector>

#include "sphereflow/geometry.hpp"
#include "sphereflow/symfun.hpp"

// Method-of-lines time integration of the two locally constrained
// curvature flows as scalar equations for rho(theta, t).

namespace sphereflow {

enum class FlowFamily {
    Contracting,  // d rho/dt = (phi' - u F) omega
    InverseType,  // d rho/dt = (1/F - u/phi') omega
};

struct DtPolicy {
    double cflFactor = 0.2;  // in (0, 1]
    double maxDt = 1e-2;
};

struct FlowSpec {
    FlowFamily family = FlowFamily::Contracting;
    CurvatureFunctionSpec F = CurvatureFunctionSpec::mean();
    int requiredCone = 0;  // Gamma index validated every step (0 = none)
    DtPolicy dt;
    double tEnd = 1.0;
    double convergenceTol = 1e-9;  // on osc(rho) = max rho - min rho
    int sampleEvery = 100;

    // The cone actually enforced: requiredCone joined with the domain
    // cone of F.
    int effective_cone(int n) const;
};

// Default cone per family/F: star-shaped only for the mean-curvature
// speed, strict convexity for the p2^(1/2) and quotient speeds.
int default_required_cone(FlowFamily family, const CurvatureFunctionSpec& F, int n);

// Family/F pairing admitted by the integrator.  Throws ConfigError.
void validate_flow_spec(const FlowSpec& spec, int n);

struct QuantityRow {
    double t = 0.0;
    std::vector<double> W;       // W_0..W_{n+1}
    std::vector<double> Wphi;    // Wphi[i] = W_{i-1}^{phi'}, i = 0..n+1
    std::vector<double> PhiPkW;  // PhiPk[k] + k W_{k-1}, k = 0..n
    double maxAbsDgamma2 = 0.0;
    double minU = 0.0;
    double minKappa = 0.0;
    double maxKappa = 0.0;
    double area = 0.0;
    double maxSpeed = 0.0;
};

struct QuantitySeries {
    int n = 0;
    std::vector<QuantityRow> rows;
    static std::string csv_header(int n);
};

void write_series_csv(const std::string& path, const QuantitySeries& series);

enum class SpeedStatus { Ok, ConeViolation, HemisphereViolation, RangeViolation };

struct SpeedResult {
    SpeedStatus status = SpeedStatus::Ok;
    int at_index = -1;
    std::string reason;
    std::vector<double> values;
};

// Pointwise d rho/dt; a cone violation (slack 1e-10) or, for the
// inverse family, phi' <= 0 is reported as a non-Ok status.
SpeedResult try_speed(const AxisymProfile& profile, const GeometryFields& fields,
                      const FlowSpec& spec);

// Throwing wrapper: ConeError / DomainError instead of a status.
std::vector<double> speed(const AxisymProfile& profile, const GeometryFields& fields,
                          const FlowSpec& spec);

// Parabolic stability heuristic
//   dt = cflFactor * dtheta^2 * min_j phi_j^2 omega_j^2 / D_j,
// capped by maxDt, with D the linearized diffusion strength.
double cfl_dt(const AxisymProfile& profile, const GeometryFields& fields,
              const FlowSpec& spec);

struct StepResult {
    bool accepted = false;
    AxisymProfile profile;
    std::string reason;
};

// One classical RK4 step; rejects (rather than throws) when any stage
// leaves the admissible range or the required cone.
StepResult step(const AxisymProfile& profile, const FlowSpec& spec, double dt);

enum class VerdictKind { ConvergedToSlice, ReachedTEnd, Aborted };

struct RunVerdict {
    VerdictKind kind = VerdictKind::ReachedTEnd;
    double finalRadius = 0.0;  // mean rho at exit
    std::string reason;
};

// Per-sample diagnostics that do not belong in the series schema.
struct RunExtras {
    std::vector<double> maxF;
    std::vector<double> hkResidual;  // integral of phi'/p_1 - integral of u
    std::vector<double> minRho;
    std::vector<double> maxRho;
};

struct RunResult {
    QuantitySeries series;
    AxisymProfile finalProfile;
    RunVerdict verdict;
    RunExtras extras;
    long long steps = 0;
};

// Integrates until t >= tEnd or osc(rho) < convergenceTol, sampling
// every sampleEvery steps (plus the first and last states).  A step
// rejection halves dt and retries up to 20 times, then the run aborts
// with the last valid state.
RunResult run(const AxisymProfile& profile0, const FlowSpec& spec);

struct DecayFit {
    bool fitted = false;
    double rate = 0.0;
    double rSquared = 0.0;
    int samplesUsed = 0;
};

// Least-squares slope of log(maxAbsDgamma2) over the tail below 1e-4.
// Inconclusive (fitted = false) when there is no decay to fit.
DecayFit decay_rate(const QuantitySeries& series);

}  // namespace sphereflow

#endif
