#include "sphereflow/flow.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

namespace sphereflow {

namespace {

constexpr double kConeSlack = 1e-10;

using KBuf = std::array<double, kMaxCurvatures + 2>;

double osc(const std::vector<double>& rho) {
    auto [lo, hi] = std::minmax_element(rho.begin(), rho.end());
    return *hi - *lo;
}

double mean(const std::vector<double>& rho) {
    double s = 0.0;
    for (double v : rho) s += v;
    return s / rho.size();
}

bool in_range(const std::vector<double>& rho) {
    for (double v : rho)
        if (!std::isfinite(v) || v <= kRhoMin || v >= kRhoMax) return false;
    return true;
}

}  // namespace

int FlowSpec::effective_cone(int n) const {
    return std::min(n, std::max(requiredCone, F.domain_cone()));
}

int default_required_cone(FlowFamily family, const CurvatureFunctionSpec& F, int n) {
    if (family == FlowFamily::InverseType) return n;
    if (F.kind == CurvatureFunctionSpec::Kind::PowerRoot) return n;
    return 0;  // mean-curvature speed: star-shaped data suffices
}

void validate_flow_spec(const FlowSpec& spec, int n) {
    const auto kind = spec.F.kind;
    if (spec.family == FlowFamily::Contracting) {
        const bool ok = kind == CurvatureFunctionSpec::Kind::Mean ||
                        (kind == CurvatureFunctionSpec::Kind::PowerRoot && spec.F.k == 2);
        if (!ok)
            throw ConfigError("contracting flow admits F = p1 or F = p2^(1/2) only");
    } else {
        if (kind != CurvatureFunctionSpec::Kind::Quotient)
            throw ConfigError("inverse flow admits F = pk/p(k-1) only");
    }
    if (spec.F.domain_cone() > n)
        throw ConfigError("curvature function order exceeds dimension");
    if (!(spec.dt.cflFactor > 0.0 && spec.dt.cflFactor <= 1.0))
        throw ConfigError("cflFactor must be in (0, 1]");
    if (!(spec.dt.maxDt > 0.0)) throw ConfigError("maxDt must be positive");
    if (spec.tEnd < 0.0) throw ConfigError("tEnd must be >= 0");
    if (spec.sampleEvery < 1) throw ConfigError("sampleEvery must be >= 1");
}

SpeedResult try_speed(const AxisymProfile& profile, const GeometryFields& fields,
                      const FlowSpec& spec) {
    const int n = profile.n;
    const int N = profile.N;
    const int cone = spec.effective_cone(n);
    SpeedResult out;
    out.values.resize(N);
    KBuf kvec;
    const std::span<const double> kv{kvec.data(), static_cast<size_t>(n)};
    for (int j = 0; j < N; ++j) {
        curvature_at(fields, n, j, {kvec.data(), static_cast<size_t>(n)});
        const ConeEval ce = F_in_cone(spec.F, kv, cone, kConeSlack);
        if (!ce.ok) {
            out.status = SpeedStatus::ConeViolation;
            out.at_index = j;
            char msg[96];
            std::snprintf(msg, sizeof msg,
                          "state left Gamma_%d+ at grid point %d (p_%d = %.3g)", cone, j,
                          ce.failingOrder, ce.failingValue);
            out.reason = msg;
            return out;
        }
        const double F = ce.F;
        if (spec.family == FlowFamily::Contracting) {
            out.values[j] = (fields.phiPrime[j] - fields.u[j] * F) * fields.omega[j];
        } else {
            const double fp = fields.phiPrime[j];
            if (!(fp > 0.0)) {
                out.status = SpeedStatus::HemisphereViolation;
                out.at_index = j;
                char msg[96];
                std::snprintf(msg, sizeof msg,
                              "inverse flow left the open hemisphere (phi' <= 0 at %d)", j);
                out.reason = msg;
                return out;
            }
            out.values[j] = (1.0 / F - fields.u[j] / fp) * fields.omega[j];
        }
    }
    return out;
}

std::vector<double> speed(const AxisymProfile& profile, const GeometryFields& fields,
                          const FlowSpec& spec) {
    SpeedResult r = try_speed(profile, fields, spec);
    switch (r.status) {
        case SpeedStatus::Ok: return std::move(r.values);
        case SpeedStatus::ConeViolation: throw ConeError(r.reason, spec.effective_cone(profile.n), 0.0);
        default: throw DomainError(r.reason);
    }
}

double cfl_dt(const AxisymProfile& profile, const GeometryFields& fields,
              const FlowSpec& spec) {
    const int n = profile.n;
    const double h = profile.dtheta();
    KBuf kvec;
    double best = std::numeric_limits<double>::infinity();
    for (int j = 0; j < profile.N; ++j) {
        curvature_at(fields, n, j, {kvec.data(), static_cast<size_t>(n)});
        const FSums s = F_sums(spec.F, {kvec.data(), static_cast<size_t>(n)});
        const double D = spec.family == FlowFamily::Contracting
                             ? fields.u[j] * s.grad_trace
                             : fields.u[j] * s.grad_trace / (s.value * s.value);
        if (!(D > 0.0)) continue;  // no diffusion at this point, no constraint
        const double phi_om = fields.phi[j] * fields.omega[j];
        best = std::min(best, phi_om * phi_om / D);
    }
    double dt = spec.dt.cflFactor * h * h * best;
    if (!std::isfinite(dt)) dt = spec.dt.maxDt;
    return std::max(std::min(dt, spec.dt.maxDt), 1e-300);
}

namespace {

// One RK4 stage evaluation: geometry + speed on a candidate state.
bool stage_speed(const AxisymProfile& state, const FlowSpec& spec,
                 std::vector<double>& out, std::string& reason) {
    if (!in_range(state.rho)) {
        reason = "state left the admissible radius range";
        return false;
    }
    try {
        const GeometryFields f = geometry(state);
        SpeedResult r = try_speed(state, f, spec);
        if (r.status != SpeedStatus::Ok) {
            reason = r.reason;
            return false;
        }
        out = std::move(r.values);
        return true;
    } catch (const Error& e) {
        reason = e.what();
        return false;
    }
}

// Range + cone validation of a committed state (no speed needed).
bool state_admissible(const AxisymProfile& state, const FlowSpec& spec,
                      std::string& reason) {
    if (!in_range(state.rho)) {
        reason = "step left the admissible radius range";
        return false;
    }
    try {
        const GeometryFields f = geometry(state);
        const int n = state.n;
        const int cone = spec.effective_cone(n);
        if (cone >= 1) {
            KBuf kvec;
            for (int j = 0; j < state.N; ++j) {
                curvature_at(f, n, j, {kvec.data(), static_cast<size_t>(n)});
                if (!cone_membership({kvec.data(), static_cast<size_t>(n)}, cone,
                                     kConeSlack)) {
                    char msg[96];
                    std::snprintf(msg, sizeof msg,
                                  "committed state left Gamma_%d+ at grid point %d", cone,
                                  j);
                    reason = msg;
                    return false;
                }
            }
        }
        return true;
    } catch (const Error& e) {
        reason = e.what();
        return false;
    }
}

}  // namespace

StepResult step(const AxisymProfile& profile, const FlowSpec& spec, double dt) {
    const int N = profile.N;
    StepResult res;
    res.profile = profile;

    std::vector<double> k1, k2, k3, k4;
    AxisymProfile tmp = profile;

    if (!stage_speed(profile, spec, k1, res.reason)) return res;
    for (int j = 0; j < N; ++j) tmp.rho[j] = profile.rho[j] + 0.5 * dt * k1[j];
    if (!stage_speed(tmp, spec, k2, res.reason)) return res;
    for (int j = 0; j < N; ++j) tmp.rho[j] = profile.rho[j] + 0.5 * dt * k2[j];
    if (!stage_speed(tmp, spec, k3, res.reason)) return res;
    for (int j = 0; j < N; ++j) tmp.rho[j] = profile.rho[j] + dt * k3[j];
    if (!stage_speed(tmp, spec, k4, res.reason)) return res;

    for (int j = 0; j < N; ++j)
        tmp.rho[j] =
            profile.rho[j] + dt / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);

    if (!state_admissible(tmp, spec, res.reason)) return res;

    res.accepted = true;
    res.profile = std::move(tmp);
    return res;
}

namespace {

QuantityRow make_row(double t, const AxisymProfile& state, const GeometryFields& fields,
                     const std::vector<double>& speed_values) {
    const int n = state.n;
    IntegralSet s = integral_set(state, fields);
    QuantityRow row;
    row.t = t;
    row.W = std::move(s.W);
    row.Wphi = std::move(s.Wphi);
    row.PhiPkW.resize(n + 1);
    for (int k = 0; k <= n; ++k)
        row.PhiPkW[k] = s.PhiPk[k] + (k >= 1 ? k * row.W[k - 1] : 0.0);
    row.maxAbsDgamma2 = s.maxAbsDgamma2;
    row.minU = s.minU;
    row.minKappa = s.minKappa;
    row.maxKappa = s.maxKappa;
    row.area = s.area;
    row.maxSpeed = 0.0;
    for (double v : speed_values) row.maxSpeed = std::max(row.maxSpeed, std::abs(v));
    return row;
}

void make_extras(const AxisymProfile& state, const GeometryFields& fields,
                 const FlowSpec& spec, RunExtras& extras) {
    const int n = state.n;
    KBuf kvec;
    double maxF = -std::numeric_limits<double>::infinity();
    double hk = 0.0;
    bool hk_valid = true;
    for (int j = 0; j < state.N; ++j) {
        curvature_at(fields, n, j, {kvec.data(), static_cast<size_t>(n)});
        double p1 = 0.0;
        for (int i = 0; i < n; ++i) p1 += kvec[i];
        p1 /= n;
        try {
            maxF = std::max(maxF, F_value(spec.F, {kvec.data(), static_cast<size_t>(n)}));
        } catch (const Error&) {
            // outside the F domain (exploration mode); leave maxF as-is
        }
        if (p1 > 0.0)
            hk += (fields.phiPrime[j] / p1 - fields.u[j]) * fields.areaWeight[j];
        else
            hk_valid = false;
    }
    extras.maxF.push_back(maxF);
    extras.hkResidual.push_back(hk_valid ? hk : std::numeric_limits<double>::quiet_NaN());
    const auto [lo, hi] = std::minmax_element(state.rho.begin(), state.rho.end());
    extras.minRho.push_back(*lo);
    extras.maxRho.push_back(*hi);
}

}  // namespace

RunResult run(const AxisymProfile& profile0, const FlowSpec& spec) {
    validate_profile(profile0);
    validate_flow_spec(spec, profile0.n);

    RunResult result;
    result.series.n = profile0.n;

    AxisymProfile state = profile0;
    GeometryFields fields = geometry(state);

    // Ingress hypothesis check: the initial state must already satisfy
    // the required cone.
    {
        SpeedResult r = try_speed(state, fields, spec);
        if (r.status != SpeedStatus::Ok)
            throw HypothesisError("initial data violates the flow hypotheses: " + r.reason);
    }

    auto sample = [&](double t) {
        const SpeedResult r = try_speed(state, fields, spec);
        result.series.rows.push_back(make_row(t, state, fields, r.values));
        make_extras(state, fields, spec, result.extras);
    };

    double t = 0.0;
    sample(t);

    long long steps = 0;
    while (true) {
        if (t >= spec.tEnd) {
            result.verdict = {VerdictKind::ReachedTEnd, mean(state.rho), ""};
            break;
        }
        if (osc(state.rho) < spec.convergenceTol) {
            result.verdict = {VerdictKind::ConvergedToSlice, mean(state.rho), ""};
            break;
        }

        double dt = std::min(cfl_dt(state, fields, spec), spec.tEnd - t);
        StepResult sr;
        bool accepted = false;
        for (int attempt = 0; attempt <= 20; ++attempt) {
            sr = step(state, spec, dt);
            if (sr.accepted) {
                accepted = true;
                break;
            }
            dt *= 0.5;
        }
        if (!accepted) {
            result.verdict = {VerdictKind::Aborted, mean(state.rho),
                              "step rejected 20 times: " + sr.reason};
            break;
        }

        state = std::move(sr.profile);
        fields = geometry(state);
        t += dt;
        ++steps;
        if (steps % spec.sampleEvery == 0) sample(t);
    }

    // Final sample unless the last loop iteration just recorded it.
    if (result.series.rows.empty() || result.series.rows.back().t != t) sample(t);

    result.finalProfile = std::move(state);
    result.steps = steps;
    return result;
}

DecayFit decay_rate(const QuantitySeries& series) {
    DecayFit fit;
    std::vector<double> ts, logs;
    for (const QuantityRow& row : series.rows) {
        const double v = row.maxAbsDgamma2;
        if (v < 1e-4 && v > 1e-25) {
            ts.push_back(row.t);
            logs.push_back(std::log(v));
        }
    }
    const int m = static_cast<int>(ts.size());
    fit.samplesUsed = m;
    if (m < 10 || logs.front() <= logs.back()) return fit;  // nothing to fit

    double st = 0.0, sl = 0.0;
    for (int i = 0; i < m; ++i) {
        st += ts[i];
        sl += logs[i];
    }
    st /= m;
    sl /= m;
    double stt = 0.0, stl = 0.0, sll = 0.0;
    for (int i = 0; i < m; ++i) {
        stt += (ts[i] - st) * (ts[i] - st);
        stl += (ts[i] - st) * (logs[i] - sl);
        sll += (logs[i] - sl) * (logs[i] - sl);
    }
    if (stt == 0.0 || sll == 0.0) return fit;
    fit.rate = stl / stt;
    fit.rSquared = (stl * stl) / (stt * sll);
    fit.fitted = fit.rate < 0.0 && fit.rSquared > 0.99;
    return fit;
}

std::string QuantitySeries::csv_header(int n) {
    std::string h = "t";
    char buf[32];
    for (int k = 0; k <= n + 1; ++k) {
        std::snprintf(buf, sizeof buf, ",W%d", k);
        h += buf;
    }
    h += ",Wphi_m1";
    for (int k = 0; k <= n; ++k) {
        std::snprintf(buf, sizeof buf, ",Wphi_%d", k);
        h += buf;
    }
    for (int k = 0; k <= n; ++k) {
        std::snprintf(buf, sizeof buf, ",PhiPkW_%d", k);
        h += buf;
    }
    h += ",maxAbsDgamma2,minU,minKappa,maxKappa,area,maxSpeed";
    return h;
}

void write_series_csv(const std::string& path, const QuantitySeries& series) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open " + path + " for writing");
    out << QuantitySeries::csv_header(series.n) << '\n';
    for (const QuantityRow& r : series.rows) {
        out << fmt17(r.t);
        for (double v : r.W) out << ',' << fmt17(v);
        for (double v : r.Wphi) out << ',' << fmt17(v);
        for (double v : r.PhiPkW) out << ',' << fmt17(v);
        out << ',' << fmt17(r.maxAbsDgamma2) << ',' << fmt17(r.minU) << ','
            << fmt17(r.minKappa) << ',' << fmt17(r.maxKappa) << ',' << fmt17(r.area)
            << ',' << fmt17(r.maxSpeed) << '\n';
    }
}

}  // namespace sphereflow
