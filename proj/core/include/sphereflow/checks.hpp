#ifndef SPHEREFLOW_CHECKS_HPP
#define SPHEREFLOW_CHECKS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "sphereflow/ballrefs.hpp"
#include "sphereflow/flow.hpp"

// Pass/fail verdicts for the monotone quantities, the geometric
// inequalities, and the pointwise algebraic property sweeps.

namespace sphereflow {

enum class Direction { NonDecreasing, NonIncreasing, Constant };

struct MonotonicityCheck {
    std::string quantity;   // series column, e.g. "W0", "Wphi_m1", "PhiPkW_1"
    Direction direction = Direction::NonDecreasing;
    double tol = -1.0;      // < 0: auto (1e-9 x range + 1e-12 per step;
                            // constant: 1e-7 x magnitude over the whole run)
    bool requiresConvex = false;
    std::string source;     // which conservation/monotonicity law this is
};

struct CheckResult {
    std::string suite;
    std::string check;
    bool pass = false;
    double worstViolation = 0.0;
    double tolerance = 0.0;
    std::string provenance;
};

// The monotone family matched to a flow configuration.  Checks that
// need strict convexity are included only when convex is true.
std::vector<MonotonicityCheck> monotone_suite(const FlowSpec& spec, int n, bool convex);

// True when every sample has minKappa above the cone slack.
bool series_strictly_convex(const QuantitySeries& series);

// Looks a monitored quantity up by column name.
double series_quantity(const QuantityRow& row, const std::string& name);

// Per-consecutive-sample verification.  Throws HypothesisError when a
// check requiring convexity is run against a non-convex series.
std::vector<CheckResult> check_monotone(const QuantitySeries& series,
                                        const std::vector<MonotonicityCheck>& suite);

struct InequalityReport {
    std::string inequality;  // content-named id
    int k = -1;              // order parameter, -1 when not applicable
    double lhs = 0.0;
    double rhs = 0.0;
    double gap = 0.0;        // lhs - rhs
    double scale = 1.0;
    bool pass = false;
    bool equality = false;   // |gap| below the equality tolerance
    bool skipped = false;
    std::string note;
};

// Evaluates every inequality whose hypotheses the profile satisfies
// (star-shapedness always holds for radial graphs; strict convexity is
// gated on the curvature fields).  Inversion range problems are
// reported per inequality, not thrown.
std::vector<InequalityReport> check_inequalities(const AxisymProfile& profile,
                                                 double tol = 1e-9);

// integral of phi'/p_1 - integral of u  (>= 0 for mean-convex data
// inside the hemisphere).  Throws HypothesisError otherwise.
double check_heintze_karcher(const AxisymProfile& profile);

struct ConjectureGap {
    int k = 0;
    int l = 0;
    char family = 'f';  // 'f': vs quermassintegral, 'h': vs weighted integral
    double lhs = 0.0;
    double rhs = 0.0;
    double gap = 0.0;
    bool rangeError = false;
    std::string note;
    std::string provenance = "conjecture - not asserted";
};

// Gap table for the conjectured inequalities; evidence only, never a
// pass/fail input.  Requires strict convexity.
std::vector<ConjectureGap> explore_conjectures(const AxisymProfile& profile);

void write_inequalities_csv(const std::string& path,
                            const std::vector<InequalityReport>& reports);
void write_conjectures_csv(const std::string& path,
                           const std::vector<ConjectureGap>& rows);

// --- pointwise algebra sweeps -------------------------------------------

// Uniform draw in [-1,3]^n rejected into Gamma_k^+; a fixed fraction is
// slid toward the cone boundary so that p_k lands in (1e-7, 1e-6).
std::vector<double> sample_in_cone(std::mt19937_64& rng, int n, int coneK,
                                   bool nearBoundary);

struct PropertyReport {
    std::uint64_t seed = 0;
    int samplesPerSuite = 0;
    bool allPass = true;
    std::vector<CheckResult> rows;
};

// Runs every pointwise sweep (divided-difference identity, the
// p2^(1/2) gradient-trace comparison, excluded-index identities,
// derivative identities, Newton-MacLaurin, quotient trace bounds,
// ordered-product bounds, Euler homogeneity) with the recorded seed.
PropertyReport property_suites(std::uint64_t seed, int samplesPerSuite = 100000);

}  // namespace sphereflow

#endif
