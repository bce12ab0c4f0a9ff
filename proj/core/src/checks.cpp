#include "sphereflow/checks.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

namespace sphereflow {

namespace {

constexpr double kConeSlack = 1e-10;
constexpr double kEqualityTol = 1e-8;

std::string qname(const char* stem, int k) {
    char s[32];
    std::snprintf(s, sizeof s, "%s%d", stem, k);
    return s;
}

}  // namespace

std::vector<MonotonicityCheck> monotone_suite(const FlowSpec& spec, int n, bool convex) {
    std::vector<MonotonicityCheck> suite;
    const bool mean = spec.F.kind == CurvatureFunctionSpec::Kind::Mean;
    if (spec.family == FlowFamily::Contracting && mean) {
        suite.push_back({"W0", Direction::Constant, -1.0, false,
                         "volume conservation under the mean-curvature constrained flow"});
        suite.push_back({"Wphi_m1", Direction::NonDecreasing, -1.0, false,
                         "weighted area monotonicity"});
        if (convex) {
            for (int m = 1; m <= n - 1; ++m)
                suite.push_back({qname("W", m), Direction::NonIncreasing, -1.0, true,
                                 "quermassintegral monotonicity"});
            for (int k = 0; k <= n - 2; ++k)
                suite.push_back({qname("PhiPkW_", k), Direction::NonIncreasing, -1.0, true,
                                 "three-term quantity monotonicity"});
        }
    } else if (spec.family == FlowFamily::Contracting) {
        // F = p2^(1/2); every statement needs strict convexity.
        suite.push_back({"W0", Direction::NonDecreasing, -1.0, true,
                         "volume monotonicity under the root-quadratic speed"});
        suite.push_back({"Wphi_m1", Direction::NonDecreasing, -1.0, true,
                         "weighted area monotonicity"});
        suite.push_back({"minU", Direction::NonDecreasing, 1e-10, true,
                         "support function minimum monotone"});
        for (int m = 1; m <= n - 1; ++m)
            suite.push_back({qname("W", m), Direction::NonIncreasing, -1.0, true,
                             "quermassintegral monotonicity"});
        for (int k = 1; k <= n - 2; ++k)
            suite.push_back({qname("PhiPkW_", k), Direction::NonIncreasing, -1.0, true,
                             "three-term quantity monotonicity"});
    } else {
        const int k0 = spec.F.k;
        suite.push_back({"Wphi_m1", Direction::NonDecreasing, -1.0, true,
                         "weighted area monotonicity (Heintze-Karcher)"});
        for (int m = k0; m <= n; ++m)
            suite.push_back({qname("W", m), Direction::NonIncreasing, -1.0, true,
                             "quermassintegral monotonicity"});
        for (int m = k0; m <= n; ++m)
            suite.push_back({qname("PhiPkW_", m), Direction::NonIncreasing, -1.0, true,
                             "three-term quantity monotonicity"});
    }
    return suite;
}

bool series_strictly_convex(const QuantitySeries& series) {
    for (const QuantityRow& r : series.rows)
        if (!(r.minKappa > kConeSlack)) return false;
    return !series.rows.empty();
}

double series_quantity(const QuantityRow& row, const std::string& name) {
    int k = 0;
    if (name == "Wphi_m1") return row.Wphi[0];
    if (std::sscanf(name.c_str(), "W%d", &k) == 1 && name.rfind("Wphi", 0) != 0)
        return row.W.at(k);
    if (std::sscanf(name.c_str(), "Wphi_%d", &k) == 1) return row.Wphi.at(k + 1);
    if (std::sscanf(name.c_str(), "PhiPkW_%d", &k) == 1) return row.PhiPkW.at(k);
    if (name == "minU") return row.minU;
    if (name == "minKappa") return row.minKappa;
    if (name == "maxKappa") return row.maxKappa;
    if (name == "area") return row.area;
    if (name == "maxAbsDgamma2") return row.maxAbsDgamma2;
    if (name == "maxSpeed") return row.maxSpeed;
    throw Error("unknown series quantity: " + name);
}

std::vector<CheckResult> check_monotone(const QuantitySeries& series,
                                        const std::vector<MonotonicityCheck>& suite) {
    const bool convex = series_strictly_convex(series);
    for (const MonotonicityCheck& c : suite)
        if (c.requiresConvex && !convex)
            throw HypothesisError("check '" + c.quantity +
                                  "' requires a strictly convex run");

    std::vector<CheckResult> out;
    for (const MonotonicityCheck& c : suite) {
        std::vector<double> q(series.rows.size());
        for (size_t i = 0; i < q.size(); ++i)
            q[i] = series_quantity(series.rows[i], c.quantity);

        double range = 0.0, mag = 0.0;
        for (double v : q) mag = std::max(mag, std::abs(v));
        const auto [lo, hi] = std::minmax_element(q.begin(), q.end());
        range = *hi - *lo;

        double tol = c.tol;
        if (tol < 0.0)
            tol = c.direction == Direction::Constant ? 1e-7 * mag
                                                     : 1e-9 * range + 1e-12;

        double worst = 0.0;
        for (size_t i = 0; i + 1 < q.size(); ++i) {
            double v = 0.0;
            switch (c.direction) {
                case Direction::NonDecreasing: v = q[i] - q[i + 1]; break;
                case Direction::NonIncreasing: v = q[i + 1] - q[i]; break;
                case Direction::Constant: v = std::abs(q[i + 1] - q[0]); break;
            }
            worst = std::max(worst, v);
        }

        CheckResult r;
        r.suite = "monotone";
        r.check = c.quantity;
        r.worstViolation = worst;
        r.tolerance = tol;
        r.pass = worst <= tol;
        r.provenance = c.source;
        out.push_back(std::move(r));
    }
    return out;
}

namespace {

struct ProfileData {
    GeometryFields fields;
    IntegralSet s;
    bool convex = false;
};

ProfileData profile_data(const AxisymProfile& profile) {
    validate_profile(profile);
    ProfileData d{geometry(profile), {}, false};
    d.s = integral_set(profile, d.fields);
    d.convex = d.s.minKappa > kConeSlack;
    return d;
}

void push_report(std::vector<InequalityReport>& out, const std::string& id, int k,
                 double lhs, const BallReference& inner, double innerValue,
                 const std::vector<BallReference>& outer,
                 const std::vector<double>& outerCoef, double tol) {
    InequalityReport r;
    r.inequality = id;
    r.k = k;
    r.lhs = lhs;
    try {
        const double rr = inner.invert(innerValue);
        double rhs = 0.0;
        for (size_t i = 0; i < outer.size(); ++i) rhs += outerCoef[i] * outer[i].eval(rr);
        r.rhs = rhs;
        r.gap = lhs - rhs;
        r.scale = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
        r.pass = r.gap >= -tol * r.scale;
        r.equality = std::abs(r.gap) <= kEqualityTol * r.scale;
    } catch (const RangeError& e) {
        r.skipped = true;
        r.note = e.what();
        r.pass = true;  // not evaluable, not a failure
    }
    out.push_back(std::move(r));
}

}  // namespace

std::vector<InequalityReport> check_inequalities(const AxisymProfile& profile,
                                                 double tol) {
    const int n = profile.n;
    const ProfileData d = profile_data(profile);
    const double W0 = d.s.W[0];
    const double WphiM1 = d.s.Wphi[0];

    std::vector<InequalityReport> out;

    // Star-shaped only: volume against the weighted area.
    push_report(out, "volume_vs_weighted_area", -1, W0, BallReference::h(n, -1), WphiM1,
                {BallReference::f(n, 0)}, {1.0}, tol);

    auto skip_convex = [&](const std::string& id, int k) {
        InequalityReport r;
        r.inequality = id;
        r.k = k;
        r.skipped = true;
        r.pass = true;
        r.note = "requires strict convexity, profile is not in Gamma_n+";
        out.push_back(std::move(r));
    };

    for (int m = 1; m <= n; ++m) {
        if (!d.convex) { skip_convex("quermass_vs_weighted_area", m); continue; }
        push_report(out, "quermass_vs_weighted_area", m, d.s.W[m], BallReference::h(n, -1),
                    WphiM1, {BallReference::f(n, m)}, {1.0}, tol);
    }
    for (int m = 1; m <= n - 2; ++m) {
        if (!d.convex) { skip_convex("quermass_vs_volume", m); continue; }
        push_report(out, "quermass_vs_volume", m, d.s.W[m], BallReference::f(n, 0), W0,
                    {BallReference::f(n, m)}, {1.0}, tol);
    }
    for (int k = 0; k <= n; ++k) {
        if (!d.convex) { skip_convex("three_term_vs_weighted_area", k); continue; }
        const double lhs = d.s.PhiPk[k] + (k >= 1 ? k * d.s.W[k - 1] : 0.0);
        std::vector<BallReference> outer{BallReference::xi(n, k)};
        std::vector<double> coef{1.0};
        if (k >= 1) {
            outer.push_back(BallReference::f(n, k - 1));
            coef.push_back(k);
        }
        push_report(out, "three_term_vs_weighted_area", k, lhs, BallReference::h(n, -1),
                    WphiM1, outer, coef, tol);
    }
    for (int k = 0; k <= n - 2; ++k) {
        if (!d.convex) { skip_convex("three_term_vs_volume", k); continue; }
        const double lhs = d.s.PhiPk[k] + (k >= 1 ? k * d.s.W[k - 1] : 0.0);
        std::vector<BallReference> outer{BallReference::xi(n, k)};
        std::vector<double> coef{1.0};
        if (k >= 1) {
            outer.push_back(BallReference::f(n, k - 1));
            coef.push_back(k);
        }
        push_report(out, "three_term_vs_volume", k, lhs, BallReference::f(n, 0), W0,
                    outer, coef, tol);
    }
    return out;
}

double check_heintze_karcher(const AxisymProfile& profile) {
    validate_profile(profile);
    const GeometryFields f = geometry(profile);
    const int n = profile.n;
    double residual = 0.0;
    for (int j = 0; j < profile.N; ++j) {
        const double p1 =
            (f.kappaM[j] + (n - 1) * f.kappaP[j]) / n;
        if (!(p1 > 0.0))
            throw HypothesisError("Heintze-Karcher check needs p_1 > 0 everywhere");
        if (!(f.phiPrime[j] > 0.0))
            throw HypothesisError("Heintze-Karcher check needs phi' > 0 everywhere");
        residual += (f.phiPrime[j] / p1 - f.u[j]) * f.areaWeight[j];
    }
    return residual;
}

std::vector<ConjectureGap> explore_conjectures(const AxisymProfile& profile) {
    const int n = profile.n;
    const ProfileData d = profile_data(profile);
    if (!d.convex)
        throw HypothesisError("conjecture exploration requires strict convexity");

    std::vector<ConjectureGap> out;
    for (int k = 0; k <= n; ++k) {
        const double lhs = d.s.PhiPk[k] + (k >= 1 ? k * d.s.W[k - 1] : 0.0);
        for (int l = 0; l <= k; ++l) {
            for (char fam : {'f', 'h'}) {
                ConjectureGap g;
                g.k = k;
                g.l = l;
                g.family = fam;
                g.lhs = lhs;
                try {
                    const BallReference inner = fam == 'f' ? BallReference::f(n, l)
                                                           : BallReference::h(n, l);
                    const double target = fam == 'f' ? d.s.W[l] : d.s.Wphi[l + 1];
                    const double rr = inner.invert(target);
                    double rhs = BallReference::xi(n, k).eval(rr);
                    if (k >= 1) rhs += k * BallReference::f(n, k - 1).eval(rr);
                    g.rhs = rhs;
                    g.gap = lhs - rhs;
                } catch (const RangeError& e) {
                    g.rangeError = true;
                    g.note = e.what();
                }
                out.push_back(std::move(g));
            }
        }
    }
    return out;
}

void write_inequalities_csv(const std::string& path,
                            const std::vector<InequalityReport>& reports) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open " + path + " for writing");
    out << "inequality,k,lhs,rhs,gap,scale,pass,equality,skipped,note\n";
    for (const InequalityReport& r : reports)
        out << r.inequality << ',' << r.k << ',' << fmt17(r.lhs) << ',' << fmt17(r.rhs)
            << ',' << fmt17(r.gap) << ',' << fmt17(r.scale) << ',' << (r.pass ? 1 : 0)
            << ',' << (r.equality ? 1 : 0) << ',' << (r.skipped ? 1 : 0) << ",\""
            << r.note << "\"\n";
}

void write_conjectures_csv(const std::string& path,
                           const std::vector<ConjectureGap>& rows) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open " + path + " for writing");
    out << "k,l,family,lhs,rhs,gap,rangeError,note,provenance\n";
    for (const ConjectureGap& g : rows)
        out << g.k << ',' << g.l << ',' << g.family << ',' << fmt17(g.lhs) << ','
            << fmt17(g.rhs) << ',' << fmt17(g.gap) << ',' << (g.rangeError ? 1 : 0)
            << ",\"" << g.note << "\",\"" << g.provenance << "\"\n";
}

// --- property sweeps ------------------------------------------------------

namespace {

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<double> draw_raw(std::mt19937_64& rng, int n) {
    std::vector<double> k(n);
    for (double& v : k) v = -1.0 + 4.0 * uniform01(rng);
    return k;
}

}  // namespace

std::vector<double> sample_in_cone(std::mt19937_64& rng, int n, int coneK,
                                   bool nearBoundary) {
    std::vector<double> k;
    for (int tries = 0; tries < 100000; ++tries) {
        k = draw_raw(rng, n);
        if (coneK < 1 || cone_membership(k, coneK, 0.0)) break;
        k.clear();
    }
    if (k.empty()) throw Error("cone sampling failed");
    if (!nearBoundary || coneK < 1) return k;

    // Slide toward the cone boundary along -(1,...,1): membership along
    // the ray is an interval, so bisection on the predicate is valid.
    double lo = 0.0, hi = 4.0;
    for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        std::vector<double> cand = k;
        for (double& v : cand) v -= mid;
        if (cone_membership(cand, coneK, 0.0))
            lo = mid;
        else
            hi = mid;
    }
    const double tstar = lo;
    const double target = std::pow(10.0, -7.0 + uniform01(rng));  // in [1e-7, 1e-6]
    if (p_value(k, coneK) <= target) return k;

    double a = 0.0, b = tstar;
    for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (a + b);
        std::vector<double> cand = k;
        for (double& v : cand) v -= mid;
        if (p_value(cand, coneK) > target)
            a = mid;
        else
            b = mid;
    }
    std::vector<double> cand = k;
    for (double& v : cand) v -= a;
    if (cone_membership(cand, coneK, 0.0)) return cand;
    return k;
}

namespace {

struct Sweep {
    CheckResult row;
    double worst = std::numeric_limits<double>::infinity();  // min margin
    long count = 0;

    // margin >= 0 is a pass; track the minimum.
    void margin(double m) {
        worst = std::min(worst, m);
        ++count;
    }
    // Tolerances are already folded into the per-sample margins; the
    // displayTol argument is informational.
    CheckResult finish(const std::string& suite, const std::string& check,
                       double displayTol, const std::string& prov) {
        CheckResult r;
        r.suite = suite;
        r.check = check;
        r.tolerance = displayTol;
        r.worstViolation =
            count ? std::max(0.0, -worst) : std::numeric_limits<double>::infinity();
        r.pass = count > 0 && worst >= 0.0;
        r.provenance = prov;
        return r;
    }
};

}  // namespace

PropertyReport property_suites(std::uint64_t seed, int samplesPerSuite) {
    PropertyReport report;
    report.seed = seed;
    report.samplesPerSuite = samplesPerSuite;
    std::mt19937_64 rng(seed);

    const int nLo = 2, nHi = 8;
    const int perN = std::max(1, samplesPerSuite / (nHi - nLo + 1));

    auto add = [&](CheckResult r) {
        report.allPass = report.allPass && r.pass;
        report.rows.push_back(std::move(r));
    };

    // Divided-difference identity, no cone needed.
    for (int n = nLo; n <= nHi; ++n) {
        Sweep sw;
        for (int s = 0; s < perN; ++s) {
            CurvatureVector k(draw_raw(rng, n));
            const ValuePair v = divided_difference_identity(k);
            const double scale = 1.0 + std::abs(v.lhs);
            sw.margin(1e-10 * scale - std::abs(v.lhs - v.rhs));
        }
        add(sw.finish("divided_difference_identity", qname("n=", n), 1e-10,
                      "second-difference expansion of sigma products"));
    }

    // Gradient-trace comparison for p2^(1/2) on Gamma_2+.
    for (int n = nLo; n <= nHi; ++n) {
        Sweep sw;
        for (int s = 0; s < perN; ++s) {
            const bool nb = s % 16 == 0;
            CurvatureVector k(sample_in_cone(rng, n, 2, nb));
            const ValuePair v = algebra_gap_pair(k);
            sw.margin(v.lhs - 0.5 * n * v.rhs + 1e-12);
        }
        add(sw.finish("algebra_gap_lower", qname("n=", n), 1e-12,
                      "gradient-trace comparison for the root-quadratic speed"));
    }

    // Two-sided comparability on Gamma_n+: report the empirical sup of
    // lhs/rhs; pass = finite positive.
    for (int n = nLo; n <= nHi; ++n) {
        double sup = 0.0;
        long used = 0;
        for (int s = 0; s < perN; ++s) {
            CurvatureVector k(sample_in_cone(rng, n, n, s % 16 == 0));
            const ValuePair v = algebra_gap_pair(k);
            if (v.rhs > 1e-12) {
                sup = std::max(sup, v.lhs / v.rhs);
                ++used;
            }
        }
        CheckResult r;
        r.suite = "algebra_gap_comparable";
        r.check = qname("n=", n);
        r.pass = used > 0 && std::isfinite(sup) && sup > 0.0;
        r.worstViolation = sup;  // reported ratio, not a violation
        r.tolerance = std::numeric_limits<double>::infinity();
        r.provenance = "empirical sup of lhs/rhs on the convex cone";
        add(std::move(r));
    }

    // Excluded-index summation identities.
    for (int n = nLo; n <= nHi; ++n) {
        Sweep sw;
        for (int s = 0; s < perN; ++s) {
            const std::vector<double> k = draw_raw(rng, n);
            std::vector<double> sig(n + 1);
            elementary_symmetric(k, sig);
            for (int ord = 0; ord <= n - 1; ++ord) {
                double sum0 = 0.0, sum1 = 0.0, sum2 = 0.0, abs2 = 0.0;
                for (int i = 0; i < n; ++i) {
                    const double e = sigma_excluding(k, ord, i);
                    sum0 += e;
                    sum1 += k[i] * e;
                    sum2 += k[i] * k[i] * e;
                    abs2 += std::abs(k[i] * k[i] * e);
                }
                const double s2 = ord + 2 <= n ? sig[ord + 2] : 0.0;
                const double rhs2 = sig[1] * sig[ord + 1] - (ord + 2) * s2;
                sw.margin(1e-12 * (1.0 + std::abs(sum0) + std::abs(sig[ord])) -
                          std::abs(sum0 - (n - ord) * sig[ord]));
                sw.margin(1e-12 * (1.0 + std::abs(sum1)) -
                          std::abs(sum1 - (ord + 1) * sig[ord + 1]));
                sw.margin(1e-12 * (1.0 + abs2 + std::abs(rhs2)) - std::abs(sum2 - rhs2));
            }
        }
        add(sw.finish("excluded_index_identities", qname("n=", n), 1e-12,
                      "summation identities for excluded symmetric functions"));
    }

    // Derivative identities of the normalized functions on diagonal data.
    for (int n = nLo; n <= nHi; ++n) {
        Sweep sw;
        for (int s = 0; s < perN; ++s) {
            const std::vector<double> k = draw_raw(rng, n);
            std::vector<double> sig(n + 1);
            elementary_symmetric(k, sig);
            for (int m = 1; m <= n; ++m) {
                const double cm = binomial(n, m);
                double dsum = 0.0, dk = 0.0, dk2 = 0.0, absdk2 = 0.0;
                for (int i = 0; i < n; ++i) {
                    const double g = sigma_excluding(k, m - 1, i) / cm;
                    dsum += g;
                    dk += g * k[i];
                    dk2 += g * k[i] * k[i];
                    absdk2 += std::abs(g * k[i] * k[i]);
                }
                const double pm = sig[m] / cm;
                const double pm1 = sig[m - 1] / binomial(n, m - 1);
                const double pmp1 = m + 1 <= n ? sig[m + 1] / binomial(n, m + 1) : 0.0;
                const double p1 = sig[1] / n;
                const double rhs2 = n * p1 * pm - (n - m) * pmp1;
                sw.margin(1e-12 * (1.0 + std::abs(dk)) - std::abs(dk - m * pm));
                sw.margin(1e-12 * (1.0 + std::abs(dsum)) - std::abs(dsum - m * pm1));
                sw.margin(1e-12 * (1.0 + absdk2 + std::abs(rhs2)) - std::abs(dk2 - rhs2));
            }
        }
        add(sw.finish("derivative_identities", qname("n=", n), 1e-12,
                      "trace identities of normalized symmetric function derivatives"));
    }

    // Newton-MacLaurin margins and the power-mean chain on Gamma_m+.
    for (int n = nLo; n <= nHi; ++n) {
        Sweep sw;
        for (int s = 0; s < perN; ++s) {
            const int m = 2 + static_cast<int>(uniform01(rng) * (n - 1));
            CurvatureVector k(sample_in_cone(rng, n, m, s % 16 == 0));
            for (int kk = 1; kk < m; ++kk) {
                const MarginPair mp = newton_maclaurin_margin(k, kk, m);
                sw.margin(mp.newton + 1e-12);
                sw.margin(mp.chain + 1e-12);
            }
        }
        add(sw.finish("newton_maclaurin", qname("n=", n), 1e-12,
                      "Newton-MacLaurin inequalities and power-mean chain"));
    }

    // Quotient gradient-trace bounds.  The upper bound on the squared
    // trace needs p_{k+1} >= 0 (it fails on Gamma_k alone, e.g.
    // kappa = (3,-1), k = 1), so the draws live one cone deeper, which
    // is where the flows use the bound.
    for (int n = nLo; n <= std::min(nHi, 6); ++n) {
        Sweep sw;
        for (int s = 0; s < perN; ++s) {
            const int kk = 1 + static_cast<int>(uniform01(rng) * n);
            const int cone = std::min(kk + 1, n);
            CurvatureVector k(sample_in_cone(rng, n, cone, s % 16 == 0));
            const TraceBounds tb = trace_bounds_quotient(kk, k);
            sw.margin(tb.traceF - 1.0 + 1e-12);
            sw.margin(static_cast<double>(kk) - tb.traceF + 1e-12);
            sw.margin(tb.h2F - tb.F * tb.F + 1e-12 * (1.0 + tb.F * tb.F));
            sw.margin((n - kk + 1) * tb.F * tb.F - tb.h2F +
                      1e-12 * (1.0 + std::abs(tb.h2F)));
        }
        add(sw.finish("quotient_trace_bounds", qname("n=", n), 1e-12,
                      "gradient-trace bounds for quotient curvature functions"));
    }

    // Ordered-product bounds on sigma_m.
    for (int n = nLo; n <= nHi; ++n) {
        Sweep sw;
        for (int s = 0; s < perN; ++s) {
            const int m = 1 + static_cast<int>(uniform01(rng) * (n - 1));
            std::vector<double> k = sample_in_cone(rng, n, m + 1, false);
            std::sort(k.begin(), k.end(), std::greater<>());
            if (!(k[m - 1] > 0.0)) continue;
            std::vector<double> sig(n + 1);
            elementary_symmetric(k, sig);
            double prod = 1.0;
            for (int i = 0; i < m; ++i) prod *= k[i];
            const double scale = 1.0 + std::abs(sig[m]) + binomial(n, m) * prod;
            sw.margin(binomial(n, m) * prod - sig[m] + 1e-12 * scale);
            sw.margin(sig[m] - prod + 1e-12 * scale);
        }
        add(sw.finish("ordered_product_bounds", qname("n=", n), 1e-12,
                      "product bounds on sigma_m for ordered positive curvatures"));
    }

    // Euler homogeneity of every curvature function.
    for (int n = nLo; n <= nHi; ++n) {
        Sweep sw;
        for (int s = 0; s < perN; ++s) {
            const int kk = 1 + static_cast<int>(uniform01(rng) * n);
            for (const CurvatureFunctionSpec& F :
                 {CurvatureFunctionSpec::mean(), CurvatureFunctionSpec::power_root(kk),
                  CurvatureFunctionSpec::quotient(kk)}) {
                CurvatureVector k(sample_in_cone(rng, n, std::max(1, F.domain_cone()),
                                                 false));
                const FValueGradient fg = F_value_and_gradient(F, k);
                double dot = 0.0;
                for (int i = 0; i < n; ++i) dot += fg.gradient[i] * k.kappa[i];
                sw.margin(1e-12 * (1.0 + std::abs(fg.value)) - std::abs(dot - fg.value));
            }
        }
        add(sw.finish("euler_homogeneity", qname("n=", n), 1e-12,
                      "degree-one homogeneity of curvature functions"));
    }

    return report;
}

}  // namespace sphereflow
