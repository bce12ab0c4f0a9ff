#include "sphereflow/profile.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <numbers>
#include <sstream>

namespace sphereflow {

namespace {
constexpr double kPi = std::numbers::pi;
}

double AxisymProfile::dtheta() const {
    return (mode == GridMode::Axisym ? kPi : 2.0 * kPi) / N;
}

double AxisymProfile::theta(int j) const {
    return mode == GridMode::Axisym ? (j + 0.5) * dtheta() : j * dtheta();
}

double reflection_mismatch(const AxisymProfile& profile) {
    if (profile.mode != GridMode::Axisym) return 0.0;
    // DCT-II of rho; smooth even data across both poles has a
    // superalgebraically decaying cosine tail, a pole kink does not.
    const int N = profile.N;
    double worst = 0.0;
    for (int m = (3 * N) / 4; m < N; ++m) {
        double am = 0.0;
        for (int j = 0; j < N; ++j)
            am += profile.rho[j] * std::cos(m * profile.theta(j));
        worst = std::max(worst, std::abs(2.0 * am / N));
    }
    return worst;
}

void validate_profile(const AxisymProfile& profile) {
    if (profile.n < 1) throw ProfileError("profile: n must be >= 1");
    if (profile.N < 16) throw ProfileError("profile: N must be >= 16");
    if (static_cast<int>(profile.rho.size()) != profile.N)
        throw ProfileError("profile: rho size does not match N");
    if (profile.mode == GridMode::Periodic1D && profile.n != 1)
        throw ProfileError("profile: periodic mode requires n = 1");
    for (int j = 0; j < profile.N; ++j) {
        const double r = profile.rho[j];
        if (!std::isfinite(r)) throw ProfileError("profile: non-finite radius");
        if (!(r > kRhoMin && r < kRhoMax)) {
            char msg[96];
            std::snprintf(msg, sizeof msg,
                          "profile: rho[%d] = %.17g outside (%.3g, %.7g)", j, r, kRhoMin,
                          kRhoMax);
            throw ProfileError(msg);
        }
    }
    if (profile.mode == GridMode::Axisym) {
        const double mism = reflection_mismatch(profile);
        if (mism > 1e-8) {
            char msg[96];
            std::snprintf(msg, sizeof msg,
                          "profile: ghost-reflection mismatch %.3g exceeds 1e-8", mism);
            throw ProfileError(msg);
        }
    }
}

AxisymProfile make_cosine_profile(int n, int N, GridMode mode, double base,
                                  const std::vector<std::pair<int, double>>& cosines) {
    AxisymProfile p;
    p.n = n;
    p.N = N;
    p.mode = mode;
    p.rho.resize(N);
    for (int j = 0; j < N; ++j) {
        double r = base;
        for (const auto& [freq, amp] : cosines) r += amp * std::cos(freq * p.theta(j));
        p.rho[j] = r;
    }
    return p;
}

AxisymProfile make_slice(int n, int N, GridMode mode, double radius) {
    return make_cosine_profile(n, N, mode, radius, {});
}

std::string fmt17(double v) {
    char s[40];
    std::snprintf(s, sizeof s, "%.17g", v);
    return s;
}

void write_profile_csv(const std::string& path, const AxisymProfile& profile) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open " + path + " for writing");
    out << "theta,rho\n";
    for (int j = 0; j < profile.N; ++j)
        out << fmt17(profile.theta(j)) << ',' << fmt17(profile.rho[j]) << '\n';
}

AxisymProfile read_profile_csv(const std::string& path, int n) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open profile CSV " + path);
    std::string line;
    if (!std::getline(in, line)) throw ConfigError("profile CSV is empty: " + path);
    if (line.rfind("theta,rho", 0) != 0)
        throw ConfigError("profile CSV must start with header 'theta,rho'");
    std::vector<double> theta, rho;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        double t, r;
        if (std::sscanf(line.c_str(), "%lf,%lf", &t, &r) != 2) {
            char msg[96];
            std::snprintf(msg, sizeof msg, "profile CSV parse error at line %d", lineno);
            throw ConfigError(msg);
        }
        theta.push_back(t);
        rho.push_back(r);
    }
    const int N = static_cast<int>(theta.size());
    if (N < 2) throw ConfigError("profile CSV has fewer than 2 rows");

    AxisymProfile p;
    p.n = n;
    p.N = N;
    p.rho = std::move(rho);
    // Infer the grid: cell-centered over [0,pi] or node-based periodic.
    p.mode = std::abs(theta[0]) < 1e-12 ? GridMode::Periodic1D : GridMode::Axisym;
    for (int j = 0; j < N; ++j)
        if (std::abs(theta[j] - p.theta(j)) > 1e-9)
            throw ConfigError("profile CSV grid is neither cell-centered [0,pi] "
                              "nor uniform periodic [0,2pi)");
    return p;
}

}  // namespace sphereflow
