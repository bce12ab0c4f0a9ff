#include "sphereflow/ballrefs.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace sphereflow {

namespace {

constexpr double kPi = std::numbers::pi;

double simpson_rule(double a, double fa, double b, double fb, double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double simpson_rec(const std::function<double(double)>& f, double a, double fa,
                   double b, double fb, double m, double fm, double whole, double tol,
                   int depth) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson_rule(a, fa, m, fm, flm);
    const double right = simpson_rule(m, fm, b, fb, frm);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return simpson_rec(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
           simpson_rec(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol) {
    if (a == b) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a), fb = f(b), fm = f(m);
    const double whole = simpson_rule(a, fa, b, fb, fm);
    return simpson_rec(f, a, fa, b, fb, m, fm, whole, tol, 48);
}

double sphere_area(int n) {
    if (n < 0) throw std::out_of_range("sphere_area: n must be >= 0");
    return 2.0 * std::pow(kPi, 0.5 * (n + 1)) / std::tgamma(0.5 * (n + 1));
}

BallReference BallReference::f(int n, int k) {
    if (k < 0 || k > n) throw std::out_of_range("BallReference::f needs 0 <= k <= n");
    return {n, Kind::Quermass, k};
}

BallReference BallReference::h(int n, int k) {
    if (k < -1 || k > n) throw std::out_of_range("BallReference::h needs -1 <= k <= n");
    return {n, Kind::WeightedPhi, k};
}

BallReference BallReference::xi(int n, int k) {
    if (k < 0 || k > n) throw std::out_of_range("BallReference::xi needs 0 <= k <= n");
    return {n, Kind::XiPhi, k};
}

double BallReference::domain_max() const {
    if (kind == Kind::WeightedPhi && k >= 0)
        return std::atan(std::sqrt(static_cast<double>(n - k) / (k + 1)));
    return 0.5 * kPi;
}

double BallReference::eval(double r) const {
    const double rmax = 0.5 * kPi;
    if (!(r > 0.0) || r > rmax * (1.0 + 1e-12)) {
        char msg[96];
        std::snprintf(msg, sizeof msg, "%s: r = %.17g outside (0, %.17g]", name().c_str(),
                      r, rmax);
        throw DomainError(msg);
    }
    const double wn = sphere_area(n);
    const double s = std::sin(r), c = std::cos(r);
    switch (kind) {
        case Kind::Quermass: {
            const int nk = n - k, kk = k;
            const double coef = static_cast<double>(n + 1 - k) / (n + 1) * wn;
            return coef * adaptive_simpson(
                              [nk, kk](double t) {
                                  return std::pow(std::sin(t), nk) * std::pow(std::cos(t), kk);
                              },
                              0.0, r, 1e-12);
        }
        case Kind::WeightedPhi:
            if (k == -1) return wn * std::pow(s, n + 1);
            return wn * std::pow(s, n - k) * std::pow(c, k + 1);
        case Kind::XiPhi:
            return wn * (1.0 - c) * std::pow(s, n - k) * std::pow(c, k);
    }
    return 0.0;
}

double BallReference::invert(double value) const {
    const double rmax = domain_max();
    if (!(rmax > 0.0)) {
        char msg[96];
        std::snprintf(msg, sizeof msg, "%s: empty strictly increasing domain",
                      name().c_str());
        throw RangeError(msg, 0.0, 0.0);
    }
    const double hi_val = eval(rmax);
    const double slack = 1e-12 * std::abs(hi_val);
    if (!(value > 0.0) || value > hi_val + slack) {
        char msg[128];
        std::snprintf(msg, sizeof msg,
                      "%s: value %.17g outside attained range (0, %.17g]", name().c_str(),
                      value, hi_val);
        throw RangeError(msg, 0.0, hi_val);
    }
    double lo = 0.0, hi = rmax;
    // eval is strictly increasing on (0, rmax]; 80 halvings put the
    // bracket far below the 1e-12 contract.
    for (int it = 0; it < 80 && (hi - lo) > 1e-15; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (eval(mid) < value)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

std::string BallReference::name() const {
    char s[48];
    switch (kind) {
        case Kind::Quermass: std::snprintf(s, sizeof s, "f_%d (n=%d)", k, n); break;
        case Kind::WeightedPhi: std::snprintf(s, sizeof s, "h_%d (n=%d)", k, n); break;
        case Kind::XiPhi: std::snprintf(s, sizeof s, "xi_%d (n=%d)", k, n); break;
    }
    return s;
}

}  // namespace sphereflow
