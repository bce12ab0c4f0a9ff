// Acceptance suite: every criterion prints exactly one PASS/FAIL line
// with its wall time; the process exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sphereflow/ballrefs.hpp"
#include "sphereflow/checks.hpp"
#include "sphereflow/config.hpp"
#include "sphereflow/flow.hpp"
#include "sphereflow/geometry.hpp"
#include "sphereflow/symfun.hpp"

using namespace sphereflow;

namespace {

int g_failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

void report(int id, const std::string& name, bool pass, double secs, double limit,
            const std::string& detail) {
    const bool ok = pass && secs < limit;
    if (!ok) ++g_failures;
    std::printf("%s  #%-2d %-58s (%.1fs < %.0fs) %s\n", ok ? "PASS" : "FAIL", id,
                name.c_str(), secs, limit, detail.c_str());
    std::fflush(stdout);
}

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<double> draw(std::mt19937_64& rng, int n) {
    std::vector<double> k(n);
    for (double& v : k) v = -1.0 + 4.0 * uniform01(rng);
    return k;
}

char g_buf[256];

// ---- criteria ------------------------------------------------------------

void c1_symmetric_oracle() {
    Timer t;
    std::mt19937_64 rng(1001);
    bool ok = true;
    double worst = 0.0;
    for (int s = 0; s < 10000; ++s) {
        const int n = 1 + static_cast<int>(uniform01(rng) * 8);
        const std::vector<double> k = draw(rng, n);
        std::vector<double> sig(n + 1);
        elementary_symmetric(k, sig);
        for (int ord = 0; ord <= n; ++ord) {
            const double ref = oracles::sigma_subset(k, ord);
            const double rel = std::abs(sig[ord] - ref) / (1.0 + std::abs(ref));
            worst = std::max(worst, rel);
            ok = ok && rel <= 1e-12;
        }
    }
    std::snprintf(g_buf, sizeof g_buf, "worst rel %.2e over 1e4 draws", worst);
    report(1, "symmetric functions vs subset-expansion oracle", ok, t.elapsed(), 5.0, g_buf);
}

void c2_divided_difference() {
    Timer t;
    bool ok = true;
    {
        const ValuePair v = divided_difference_identity(CurvatureVector({1.0, 2.0, 3.0}));
        ok = v.lhs == 12.0 && v.rhs == 12.0;
    }
    std::mt19937_64 rng(1002);
    double worst = 0.0;
    for (int s = 0; s < 100000; ++s) {
        const int n = 2 + static_cast<int>(uniform01(rng) * 7);
        const ValuePair v = divided_difference_identity(CurvatureVector(draw(rng, n)));
        const double rel = std::abs(v.lhs - v.rhs) / (1.0 + std::abs(v.lhs));
        worst = std::max(worst, rel);
        ok = ok && rel <= 1e-10;
    }
    std::snprintf(g_buf, sizeof g_buf, "worst rel %.2e over 1e5 draws, 12 == 12", worst);
    report(2, "divided-difference identity for sigma products", ok, t.elapsed(), 10.0,
           g_buf);
}

void c3_gradient_trace_comparison() {
    Timer t;
    std::mt19937_64 rng(1003);
    bool ok = true;
    double worstMargin = 0.0;
    for (int s = 0; s < 100000; ++s) {
        const int n = 2 + static_cast<int>(uniform01(rng) * 7);
        const CurvatureVector k(sample_in_cone(rng, n, 2, s % 16 == 0));
        const ValuePair v = algebra_gap_pair(k);
        const double margin = v.lhs - 0.5 * n * v.rhs;
        worstMargin = std::min(worstMargin, margin);
        ok = ok && margin >= -1e-12;
    }
    // two-sided comparability on the convex cone: empirical sup per n
    std::string sups = "sup(lhs/rhs):";
    for (int n = 2; n <= 8; ++n) {
        double sup = 0.0;
        for (int s = 0; s < 3000; ++s) {
            const CurvatureVector k(sample_in_cone(rng, n, n, s % 16 == 0));
            const ValuePair v = algebra_gap_pair(k);
            if (v.rhs > 1e-12) sup = std::max(sup, v.lhs / v.rhs);
        }
        ok = ok && std::isfinite(sup) && sup > 0.0;
        std::snprintf(g_buf, sizeof g_buf, " n%d=%.2f", n, sup);
        sups += g_buf;
    }
    std::snprintf(g_buf, sizeof g_buf, "worst margin %.2e; %s", worstMargin, sups.c_str());
    report(3, "gradient-trace comparison for the p2^(1/2) speed", ok, t.elapsed(), 10.0,
           g_buf);
}

void c4_pointwise_sweeps() {
    Timer t;
    const PropertyReport rep = property_suites(1004, 100000 / 7);
    bool ok = rep.allPass;
    int failed = 0;
    for (const CheckResult& r : rep.rows)
        if (!r.pass) ++failed;
    std::snprintf(g_buf, sizeof g_buf, "%zu sweep rows, %d failing", rep.rows.size(),
                  failed);
    report(4, "excluded-index, derivative, Newton-MacLaurin, trace-bound sweeps", ok,
           t.elapsed(), 20.0, g_buf);
}

void c5_slice_exactness() {
    Timer t;
    bool ok = true;
    double worstSpeed = 0.0;
    for (int n : {2, 3}) {
        const AxisymProfile p = make_slice(n, 200, GridMode::Axisym, 0.7);
        const GeometryFields f = geometry(p);
        std::vector<FlowSpec> specs;
        FlowSpec s1;
        s1.family = FlowFamily::Contracting;
        s1.F = CurvatureFunctionSpec::mean();
        specs.push_back(s1);
        FlowSpec s2 = s1;
        s2.F = CurvatureFunctionSpec::power_root(2);
        s2.requiredCone = n;
        specs.push_back(s2);
        FlowSpec s3 = s1;
        s3.family = FlowFamily::InverseType;
        s3.F = CurvatureFunctionSpec::quotient(2);
        s3.requiredCone = n;
        specs.push_back(s3);
        for (const FlowSpec& s : specs) {
            for (double v : speed(p, f, s)) worstSpeed = std::max(worstSpeed, std::abs(v));
        }
    }
    ok = ok && worstSpeed < 1e-12;

    double worstGap = 0.0;
    for (int n : {2, 3}) {
        for (double r : {0.5, 0.8}) {
            const AxisymProfile p = make_slice(n, 200, GridMode::Axisym, r);
            for (const InequalityReport& rep : check_inequalities(p)) {
                if (rep.skipped) { ok = false; continue; }
                worstGap = std::max(worstGap, std::abs(rep.gap) / rep.scale);
                ok = ok && rep.equality;
            }
        }
    }
    ok = ok && worstGap < 1e-8;
    std::snprintf(g_buf, sizeof g_buf, "max|speed| %.2e, max slice gap %.2e rel",
                  worstSpeed, worstGap);
    report(5, "slices: stationary for all speeds, equality in all bounds", ok, t.elapsed(),
           1.0, g_buf);
}

void c6_minkowski_decay() {
    Timer t;
    bool ok = true;
    std::string detail;
    for (int k : {0, 1}) {
        double prev = 0.0;
        double worstRatio = 1e300;
        for (int N : {100, 200, 400}) {
            const AxisymProfile p =
                make_cosine_profile(2, N, GridMode::Axisym, 0.8, {{2, 0.05}});
            const double res = std::abs(minkowski_residual(p, geometry(p), k));
            if (prev > 0.0) worstRatio = std::min(worstRatio, prev / res);
            prev = res;
        }
        ok = ok && worstRatio >= 8.0;
        std::snprintf(g_buf, sizeof g_buf, "k=%d ratio>=%.1f ", k, worstRatio);
        detail += g_buf;
    }
    report(6, "Minkowski identity residual decays >= 8x per refinement", ok, t.elapsed(),
           5.0, detail);
}

void c7_mean_flow_suite() {
    Timer t;
    AxisymProfile p0 = make_cosine_profile(2, 200, GridMode::Axisym, 0.8, {{2, 0.05}});
    FlowSpec spec;
    spec.family = FlowFamily::Contracting;
    spec.F = CurvatureFunctionSpec::mean();
    spec.tEnd = 40.0;
    spec.convergenceTol = 1e-9;
    spec.sampleEvery = 100;
    const RunResult r = run(p0, spec);

    bool ok = r.verdict.kind == VerdictKind::ConvergedToSlice;
    const double w0 = r.series.rows.front().W[0];
    double drift = 0.0;
    for (const QuantityRow& row : r.series.rows)
        drift = std::max(drift, std::abs(row.W[0] - w0));
    ok = ok && drift < 1e-7 * w0;

    std::vector<MonotonicityCheck> suite{
        {"Wphi_m1", Direction::NonDecreasing, -1.0, false, ""},
        {"W1", Direction::NonIncreasing, -1.0, true, ""},
        {"PhiPkW_0", Direction::NonIncreasing, -1.0, true, ""},
    };
    double worstViol = 0.0;
    for (const CheckResult& c : check_monotone(r.series, suite)) {
        ok = ok && c.pass;
        worstViol = std::max(worstViol, c.worstViolation);
    }
    std::snprintf(g_buf, sizeof g_buf, "W0 drift %.2e rel, worst step violation %.2e",
                  drift / w0, worstViol);
    report(7, "mean-curvature constrained flow: conservation + monotone family", ok,
           t.elapsed(), 60.0, g_buf);
}

void c8_root_flow_suite() {
    Timer t;
    bool ok = true;
    std::string detail;
    for (int n : {2, 3}) {
        const int N = n == 2 ? 200 : 160;
        AxisymProfile p0 = make_cosine_profile(n, N, GridMode::Axisym, 0.8, {{2, 0.04}});
        FlowSpec spec;
        spec.family = FlowFamily::Contracting;
        spec.F = CurvatureFunctionSpec::power_root(2);
        spec.requiredCone = n;
        spec.tEnd = 40.0;
        spec.convergenceTol = 1e-9;
        spec.sampleEvery = 100;
        const RunResult r = run(p0, spec);
        ok = ok && r.verdict.kind == VerdictKind::ConvergedToSlice;

        double worstDec = 0.0;
        for (size_t i = 0; i + 1 < r.series.rows.size(); ++i)
            worstDec = std::max(worstDec,
                                r.series.rows[i].minU - r.series.rows[i + 1].minU);
        ok = ok && worstDec <= 1e-10;

        const DecayFit fit = decay_rate(r.series);
        ok = ok && fit.fitted && fit.rate < 0.0 && fit.rSquared > 0.99;
        std::snprintf(g_buf, sizeof g_buf, "n=%d rate=%.2f r2=%.4f minU viol %.1e ", n,
                      fit.rate, fit.rSquared, worstDec);
        detail += g_buf;
    }
    report(8, "root-quadratic flow: convergence, min-u monotone, decay fit", ok,
           t.elapsed(), 120.0, detail);
}

void c9_inverse_flow_suite() {
    Timer t;
    bool ok = true;
    std::string detail;
    const int n = 3;
    for (int k : {1, 2}) {
        AxisymProfile p0 = make_cosine_profile(n, 128, GridMode::Axisym, 0.7, {{2, 0.03}});
        FlowSpec spec;
        spec.family = FlowFamily::InverseType;
        spec.F = CurvatureFunctionSpec::quotient(k);
        spec.requiredCone = n;
        spec.tEnd = 40.0;
        spec.convergenceTol = 1e-9;
        spec.sampleEvery = 100;
        const RunResult r = run(p0, spec);
        ok = ok && (r.verdict.kind == VerdictKind::ConvergedToSlice ||
                    r.verdict.kind == VerdictKind::ReachedTEnd);

        std::vector<MonotonicityCheck> suite{
            {"Wphi_m1", Direction::NonDecreasing, -1.0, true, ""}};
        for (int m = k; m <= n; ++m) {
            suite.push_back({"W" + std::to_string(m), Direction::NonIncreasing, -1.0, true, ""});
            suite.push_back(
                {"PhiPkW_" + std::to_string(m), Direction::NonIncreasing, -1.0, true, ""});
        }
        double worstViol = 0.0;
        for (const CheckResult& c : check_monotone(r.series, suite)) {
            ok = ok && c.pass;
            worstViol = std::max(worstViol, c.worstViolation);
        }
        double hkMin = 1e300;
        for (double v : r.extras.hkResidual) hkMin = std::min(hkMin, v);
        const double scale = r.series.rows.front().area;
        ok = ok && hkMin >= -1e-9 * scale;
        std::snprintf(g_buf, sizeof g_buf, "k=%d viol %.1e hkMin %.1e ", k, worstViol,
                      hkMin);
        detail += g_buf;
    }
    report(9, "inverse quotient flow: monotone family + Heintze-Karcher", ok, t.elapsed(),
           120.0, detail);
}

void c10_inequality_family() {
    Timer t;
    std::mt19937_64 rng(1010);
    bool ok = true;
    double worstGap = 0.0;
    int profiles = 0, comparisons = 0;
    const int dims[10] = {2, 2, 2, 2, 3, 3, 3, 4, 4, 4};
    for (int rep = 0; rep < 10; ++rep) {
        const int n = dims[rep];
        const int N = n == 2 ? 200 : (n == 3 ? 160 : 128);
        const double base = 0.6 + 0.4 * uniform01(rng);
        const double a2 = 0.015 + 0.02 * uniform01(rng);
        const double a4 = 0.005 + 0.01 * uniform01(rng);

        std::vector<std::vector<InequalityReport>> tiers;
        bool convexAll = true;
        for (double scale : {1.0, 0.5, 0.25}) {
            const AxisymProfile p = make_cosine_profile(
                n, N, GridMode::Axisym, base, {{2, a2 * scale}, {4, a4 * scale}});
            const IntegralSet s = integral_set(p, geometry(p));
            convexAll = convexAll && s.minKappa > 1e-10;
            tiers.push_back(check_inequalities(p, 1e-9));
        }
        if (!convexAll) continue;  // draw landed outside the hypothesis, skip
        ++profiles;
        for (size_t i = 0; i < tiers[0].size(); ++i) {
            if (tiers[0][i].skipped) { ok = false; continue; }
            ++comparisons;
            ok = ok && tiers[0][i].pass && tiers[1][i].pass && tiers[2][i].pass;
            worstGap = std::min(worstGap, tiers[2][i].gap / tiers[2][i].scale);
            // gaps shrink monotonically toward zero as the amplitude halves
            ok = ok && tiers[0][i].gap > tiers[1][i].gap &&
                 tiers[1][i].gap > tiers[2][i].gap;
        }
    }
    ok = ok && profiles == 10;
    std::snprintf(g_buf, sizeof g_buf, "%d profiles, %d comparisons, min gap %.1e rel",
                  profiles, comparisons, worstGap);
    report(10, "inequality family on random convex data + amplitude continuity", ok,
           t.elapsed(), 120.0, g_buf);
}

// Variational consistency machinery for criterion 11.
struct QuantityVec {
    std::vector<double> q;  // W_0..W_{n+1}, Wphi_{-1}..Wphi_n, PhiPkW_0..PhiPkW_n
};

QuantityVec quantities(const AxisymProfile& p) {
    const IntegralSet s = integral_set(p, geometry(p));
    QuantityVec out;
    for (double v : s.W) out.q.push_back(v);
    for (double v : s.Wphi) out.q.push_back(v);
    for (int k = 0; k <= p.n; ++k)
        out.q.push_back(s.PhiPk[k] + (k >= 1 ? k * s.W[k - 1] : 0.0));
    return out;
}

std::vector<double> variational_rhs(const AxisymProfile& p, const FlowSpec& spec) {
    const int n = p.n;
    const GeometryFields f = geometry(p);
    const std::vector<double> v = speed(p, f, spec);
    // pointwise p_k table
    std::vector<std::vector<double>> pk(n + 2, std::vector<double>(p.N, 0.0));
    std::array<double, kMaxCurvatures + 2> kv{}, sig{};
    for (int j = 0; j < p.N; ++j) {
        curvature_at(f, n, j, {kv.data(), static_cast<size_t>(n)});
        elementary_symmetric({kv.data(), static_cast<size_t>(n)},
                             {sig.data(), static_cast<size_t>(n + 1)});
        for (int k = 0; k <= n; ++k) pk[k][j] = sig[k] / binomial(n, k);
    }
    auto quad = [&](auto&& integrand) {
        double s = 0.0;
        for (int j = 0; j < p.N; ++j) s += integrand(j) * f.areaWeight[j];
        return s;
    };
    std::vector<double> rhs;
    // d/dt W_k = (n+1-k)/(n+1) * integral of (normal speed) p_k
    for (int k = 0; k <= n + 1; ++k) {
        if (k <= n)
            rhs.push_back(static_cast<double>(n + 1 - k) / (n + 1) *
                          quad([&](int j) { return v[j] / f.omega[j] * pk[k][j]; }));
        else
            rhs.push_back(0.0);
    }
    // d/dt Wphi_{j-1} with the p_{-1} = p_{n+1} = 0 convention
    for (int i = 0; i <= n + 1; ++i) {
        const int k = i - 1;  // weighted index
        rhs.push_back(quad([&](int j) {
            const double pkj = (k >= 0 && k <= n) ? pk[k][j] : 0.0;
            const double pk1j = (k + 1 <= n) ? pk[k + 1][j] : 0.0;
            return (-(k + 1) * f.u[j] * pkj + (n - k) * f.phiPrime[j] * pk1j) * v[j] /
                   f.omega[j];
        }));
    }
    // d/dt (integral of Phi p_k + k W_{k-1}).  Under the variational
    // normalization of W the sphere identity phi' + Phi = 1 leaves a
    // residual -k(k-1)/(n+1) integral of (normal speed) p_{k-1}, which
    // vanishes for k <= 1.
    for (int k = 0; k <= n; ++k) {
        double r = quad([&](int j) {
            const double pk1j = (k + 1 <= n) ? pk[k + 1][j] : 0.0;
            return ((k + 1) * f.u[j] * pk[k][j] + (n - k) * f.PhiInt[j] * pk1j) * v[j] /
                   f.omega[j];
        });
        if (k >= 2)
            r -= static_cast<double>(k) * (k - 1) / (n + 1) *
                 quad([&](int j) { return v[j] / f.omega[j] * pk[k - 1][j]; });
        rhs.push_back(r);
    }
    return rhs;
}

// Signed defects (Q(rho+dt) - Q(rho))/dt - rhs, one per quantity.
std::vector<double> forward_defects(const AxisymProfile& p, const FlowSpec& spec,
                                    double dt) {
    const QuantityVec q0 = quantities(p);
    const std::vector<double> rhs = variational_rhs(p, spec);
    const StepResult sr = step(p, spec, dt);
    std::vector<double> d(q0.q.size(), -1.0);
    if (!sr.accepted) return d;
    const QuantityVec q1 = quantities(sr.profile);
    for (size_t i = 0; i < q0.q.size(); ++i)
        d[i] = ((q1.q[i] - q0.q[i]) / dt - rhs[i]) / std::max(1.0, std::abs(q0.q[i]));
    return d;
}

double forward_error(const AxisymProfile& p, const FlowSpec& spec, double dt) {
    double err = 0.0;
    for (double v : forward_defects(p, spec, dt)) err += std::abs(v);
    return err;
}

// Spatial consistency error: Richardson in dt removes the O(dt) part of
// the forward defects, leaving the quadrature/stencil floor.
double spatial_error(const AxisymProfile& p, const FlowSpec& spec, double dt) {
    const std::vector<double> a = forward_defects(p, spec, dt);
    const std::vector<double> b = forward_defects(p, spec, dt / 2);
    double err = 0.0;
    for (size_t i = 0; i < a.size(); ++i) err += std::abs(2.0 * b[i] - a[i]);
    return err;
}

void c11_variational_consistency() {
    Timer t;
    FlowSpec spec;
    spec.family = FlowFamily::Contracting;
    spec.F = CurvatureFunctionSpec::mean();

    // dt order >= 1 at fixed resolution: first differences of the error
    // isolate the dt term from the spatial floor
    const AxisymProfile p96 = make_cosine_profile(2, 96, GridMode::Axisym, 0.8, {{2, 0.05}});
    const double d = 1.2e-4;
    const double e1 = forward_error(p96, spec, d);
    const double e2 = forward_error(p96, spec, d / 2);
    const double e3 = forward_error(p96, spec, d / 4);
    const double d1 = e1 - e2, d2 = e2 - e3;
    const bool dtOk = d1 > 0.0 && d2 > 0.0 && d1 / d2 >= std::pow(2.0, 0.5);

    // dtheta order >= 2 with the dt term removed by Richardson
    const AxisymProfile p192 =
        make_cosine_profile(2, 192, GridMode::Axisym, 0.8, {{2, 0.05}});
    const double sCoarse = spatial_error(p96, spec, 1e-4);
    const double sFine = spatial_error(p192, spec, 1e-4);
    const bool dxOk = sCoarse > 0.0 && sFine > 0.0 && sCoarse / sFine >= std::pow(2.0, 1.5);

    std::snprintf(g_buf, sizeof g_buf,
                  "dt ratio %.2f (>=1.41), dtheta ratio %.1f (>=2.83)", d1 / d2,
                  sCoarse / sFine);
    report(11, "discrete evolution matches the variational formulas", dtOk && dxOk,
           t.elapsed(), 60.0, g_buf);
}

}  // namespace

int main() {
    std::printf("acceptance suite\n");
    c1_symmetric_oracle();
    c2_divided_difference();
    c3_gradient_trace_comparison();
    c4_pointwise_sweeps();
    c5_slice_exactness();
    c6_minkowski_decay();
    c7_mean_flow_suite();
    c8_root_flow_suite();
    c9_inverse_flow_suite();
    c10_inequality_family();
    c11_variational_consistency();
    if (g_failures == 0)
        std::printf("all criteria passed\n");
    else
        std::printf("%d criteria FAILED\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
