#include "sphereflow/geometry.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <map>
#include <mutex>
#include <numbers>

#include "sphereflow/ballrefs.hpp"
#include "sphereflow/symfun.hpp"

namespace sphereflow {

namespace {

constexpr double kPi = std::numbers::pi;

// Ghost lookup: even reflection across both poles for the cell-centered
// grid, wrap-around for the periodic one.
inline int ghost(int j, int N, GridMode mode) {
    if (mode == GridMode::Periodic1D) return ((j % N) + N) % N;
    if (j < 0) return -j - 1;
    if (j >= N) return 2 * N - 1 - j;
    return j;
}

// sin(theta)^nu prefactor of the area element in Axisym mode; the
// periodic grid integrates plain d(theta).
int polar_power(const AxisymProfile& p) {
    return p.mode == GridMode::Axisym ? p.n - 1 : 0;
}

double angular_prefactor(const AxisymProfile& p) {
    return p.mode == GridMode::Axisym ? sphere_area(p.n - 1) : 1.0;
}

// integral of cos(m theta) sin(theta)^nu over [0, pi] by the two-step
// power reduction; exact rational-in-pi values.
std::vector<double> cosine_moments(int mmax, int nu) {
    std::vector<double> cur(mmax + nu + 1, 0.0);
    cur[0] = kPi;  // nu = 0
    int level = 0;
    if (nu % 2 == 1) {
        for (int m = 0; m < static_cast<int>(cur.size()); ++m)
            cur[m] = (m % 2 == 0) ? 2.0 / (1.0 - static_cast<double>(m) * m) : 0.0;
        level = 1;
    }
    while (level + 2 <= nu) {
        std::vector<double> nxt(cur.size(), 0.0);
        for (int m = 0; m + 2 < static_cast<int>(cur.size()); ++m) {
            const double jm = cur[m];
            const double jp2 = cur[m + 2];
            const double jm2 = cur[std::abs(m - 2)];
            nxt[m] = 0.5 * jm - 0.25 * jp2 - 0.25 * jm2;
        }
        cur = nxt;
        level += 2;
    }
    cur.resize(mmax + 1);
    return cur;
}

std::vector<double> build_polar_weights(int N, int nu) {
    const std::vector<double> I = cosine_moments(N - 1, nu);
    std::vector<double> w(N, 0.0);
    const double h = kPi / N;
    for (int j = 0; j < N; ++j) {
        const double theta = (j + 0.5) * h;
        double s = I[0];
        for (int m = 1; m < N; ++m) s += 2.0 * I[m] * std::cos(m * theta);
        w[j] = s / N;
    }
    return w;
}

struct FDPair {
    double d1;
    double d2;
};

inline double ipow(double x, int n) {
    double r = 1.0;
    for (; n > 0; --n) r *= x;
    return r;
}

// Fourth-order stencils in difference form, so that stencils of a
// constant vanish identically in floating point.
inline FDPair stencil(const std::vector<double>& v, int j, int N, GridMode mode,
                      double h) {
    const double vm2 = v[ghost(j - 2, N, mode)];
    const double vm1 = v[ghost(j - 1, N, mode)];
    const double v0 = v[j];
    const double vp1 = v[ghost(j + 1, N, mode)];
    const double vp2 = v[ghost(j + 2, N, mode)];
    FDPair out;
    out.d1 = (8.0 * (vp1 - vm1) - (vp2 - vm2)) / (12.0 * h);
    out.d2 = (16.0 * ((vp1 - v0) + (vm1 - v0)) - ((vp2 - v0) + (vm2 - v0))) /
             (12.0 * h * h);
    return out;
}

}  // namespace

const std::vector<double>& polar_weights(int N, int nu) {
    static std::map<std::pair<int, int>, std::vector<double>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find({N, nu});
    if (it == cache.end())
        it = cache.emplace(std::make_pair(N, nu), build_polar_weights(N, nu)).first;
    return it->second;
}

Derivatives derivatives(const AxisymProfile& profile) {
    if (profile.N < 16) throw ProfileError("derivatives: N must be >= 16");
    Derivatives out;
    out.rhoTheta.resize(profile.N);
    out.rhoThetaTheta.resize(profile.N);
    const double h = profile.dtheta();
    for (int j = 0; j < profile.N; ++j) {
        const FDPair fd = stencil(profile.rho, j, profile.N, profile.mode, h);
        out.rhoTheta[j] = fd.d1;
        out.rhoThetaTheta[j] = fd.d2;
    }
    return out;
}

std::vector<double> stencil_d1(const AxisymProfile& profile, std::span<const double> data) {
    std::vector<double> v(data.begin(), data.end());
    std::vector<double> out(profile.N);
    const double h = profile.dtheta();
    for (int j = 0; j < profile.N; ++j)
        out[j] = stencil(v, j, profile.N, profile.mode, h).d1;
    return out;
}

std::vector<double> stencil_d2(const AxisymProfile& profile, std::span<const double> data) {
    std::vector<double> v(data.begin(), data.end());
    std::vector<double> out(profile.N);
    const double h = profile.dtheta();
    for (int j = 0; j < profile.N; ++j)
        out[j] = stencil(v, j, profile.N, profile.mode, h).d2;
    return out;
}

GeometryFields geometry(const AxisymProfile& profile) {
    const int N = profile.N;
    const int n = profile.n;
    const Derivatives der = derivatives(profile);
    const double h = profile.dtheta();
    const double pref = angular_prefactor(profile);
    const std::vector<double>* wpolar = nullptr;
    if (profile.mode == GridMode::Axisym) wpolar = &polar_weights(N, polar_power(profile));

    GeometryFields f;
    for (auto* v : {&f.u, &f.omega, &f.gammaTheta, &f.gammaThetaTheta, &f.kappaM,
                    &f.kappaP, &f.phi, &f.phiPrime, &f.PhiInt, &f.rhoTheta, &f.areaWeight})
        v->resize(N);

    for (int j = 0; j < N; ++j) {
        const WarpedScalars w(profile.rho[j]);
        const double rt = der.rhoTheta[j];
        const double rtt = der.rhoThetaTheta[j];
        const double gt = rt / w.phi;
        const double gtt = rtt / w.phi - w.phiPrime * rt * rt / (w.phi * w.phi);
        const double om = std::sqrt(1.0 + gt * gt);
        const double u = w.phi / om;
        if (!(u > 0.0)) throw GeometryError("geometry: non-star-shaped state (u <= 0)");

        const double km = (w.phiPrime - gtt / (om * om)) / (w.phi * om);
        double kp = km;
        if (profile.mode == GridMode::Axisym) {
            const double theta = profile.theta(j);
            const double st = std::sin(theta);
            // Regularized quotient at the poles: cot(theta) gammaTheta
            // tends to gammaThetaTheta there.
            const double t = (st < h) ? gtt : (std::cos(theta) / st) * gt;
            kp = (w.phiPrime - t) / (w.phi * om);
        }

        f.u[j] = u;
        f.omega[j] = om;
        f.gammaTheta[j] = gt;
        f.gammaThetaTheta[j] = gtt;
        f.kappaM[j] = km;
        f.kappaP[j] = kp;
        f.phi[j] = w.phi;
        f.phiPrime[j] = w.phiPrime;
        f.PhiInt[j] = w.PhiInt;
        f.rhoTheta[j] = rt;

        const double wj = (profile.mode == GridMode::Axisym) ? (*wpolar)[j] : h;
        const double aw = pref * wj * ipow(w.phi, n) * om;
        if (!(aw > 0.0)) throw GeometryError("geometry: non-positive area weight");
        f.areaWeight[j] = aw;
    }
    return f;
}

double integrate(const GeometryFields& fields, std::span<const double> f) {
    double s = 0.0;
    for (size_t j = 0; j < fields.areaWeight.size(); ++j) s += f[j] * fields.areaWeight[j];
    return s;
}

double enclosed_volume(const AxisymProfile& profile) {
    const int n = profile.n;
    const double pref = angular_prefactor(profile);
    const double h = profile.dtheta();
    const std::vector<double>* wpolar = nullptr;
    if (profile.mode == GridMode::Axisym)
        wpolar = &polar_weights(profile.N, polar_power(profile));
    double vol = 0.0;
    for (int j = 0; j < profile.N; ++j) {
        const double inner = adaptive_simpson(
            [n](double s) { return std::pow(std::sin(s), n); }, 0.0, profile.rho[j], 1e-12);
        const double wj = (profile.mode == GridMode::Axisym) ? (*wpolar)[j] : h;
        vol += pref * wj * inner;
    }
    return vol;
}

void curvature_at(const GeometryFields& fields, int n, int j, std::span<double> out) {
    out[0] = fields.kappaM[j];
    for (int i = 1; i < n; ++i) out[i] = fields.kappaP[j];
}

IntegralSet integral_set(const AxisymProfile& profile, const GeometryFields& fields) {
    const int n = profile.n;
    const int N = profile.N;
    IntegralSet s;
    s.Ipk.assign(n + 1, 0.0);
    s.Wphi.assign(n + 2, 0.0);
    s.PhiPk.assign(n + 1, 0.0);
    s.uPk.assign(n + 1, 0.0);
    s.minU = fields.u[0];
    s.minKappa = std::min(fields.kappaM[0], n > 1 ? fields.kappaP[0] : fields.kappaM[0]);
    s.maxKappa = s.minKappa;

    std::array<double, kMaxCurvatures + 2> kvec{}, sig{};
    for (int j = 0; j < N; ++j) {
        curvature_at(fields, n, j, {kvec.data(), static_cast<size_t>(n)});
        elementary_symmetric({kvec.data(), static_cast<size_t>(n)},
                             {sig.data(), static_cast<size_t>(n + 1)});
        const double w = fields.areaWeight[j];
        const double u = fields.u[j];
        const double fp = fields.phiPrime[j];
        const double Ph = fields.PhiInt[j];
        s.area += w;
        for (int k = 0; k <= n; ++k) {
            const double pk = sig[k] / binomial(n, k);
            s.Ipk[k] += pk * w;
            s.Wphi[k + 1] += fp * pk * w;
            s.PhiPk[k] += Ph * pk * w;
            s.uPk[k] += u * pk * w;
        }
        s.minU = std::min(s.minU, u);
        const double klo = (n > 1) ? std::min(fields.kappaM[j], fields.kappaP[j])
                                   : fields.kappaM[j];
        const double khi = (n > 1) ? std::max(fields.kappaM[j], fields.kappaP[j])
                                   : fields.kappaM[j];
        s.minKappa = std::min(s.minKappa, klo);
        s.maxKappa = std::max(s.maxKappa, khi);
        const double dg2 = fields.gammaTheta[j] * fields.gammaTheta[j];
        s.maxAbsDgamma2 = std::max(s.maxAbsDgamma2, dg2);
    }
    s.Wphi[0] = s.uPk[0];

    s.W.assign(n + 2, 0.0);
    s.W[0] = enclosed_volume(profile);
    s.W[1] = s.area / (n + 1);
    for (int k = 1; k <= n - 1; ++k)
        s.W[k + 1] = s.Ipk[k] / (n + 1) + static_cast<double>(k) / (n + 2 - k) * s.W[k - 1];
    s.W[n + 1] = sphere_area(n) / (n + 1);
    return s;
}

std::vector<double> quermassintegrals(const AxisymProfile& profile,
                                      const GeometryFields& fields) {
    return integral_set(profile, fields).W;
}

WeightedIntegrals weighted_integrals(const AxisymProfile& profile,
                                     const GeometryFields& fields) {
    IntegralSet s = integral_set(profile, fields);
    return {std::move(s.Wphi), std::move(s.PhiPk), std::move(s.uPk)};
}

double minkowski_residual(const AxisymProfile& profile, const GeometryFields& fields,
                          int k) {
    if (k < 0 || k > profile.n - 1)
        throw std::out_of_range("minkowski_residual requires 0 <= k <= n-1");
    const IntegralSet s = integral_set(profile, fields);
    return s.uPk[k + 1] - s.Wphi[k + 1];
}

double support_gradient_residual(const AxisymProfile& profile,
                                 const GeometryFields& fields) {
    const std::vector<double> du = stencil_d1(profile, fields.u);
    const std::vector<double> dPhi = stencil_d1(profile, fields.PhiInt);
    double worst = 0.0;
    for (int j = 0; j < profile.N; ++j)
        worst = std::max(worst, std::abs(du[j] - fields.kappaM[j] * dPhi[j]));
    return worst;
}

double gradient_identity_residual(const AxisymProfile& profile,
                                  const GeometryFields& fields) {
    double worst = 0.0;
    for (int j = 0; j < profile.N; ++j) {
        const double g = fields.rhoTheta[j] / (fields.phi[j] * fields.omega[j]);
        const double om = fields.omega[j];
        worst = std::max(worst, std::abs(g * g - (1.0 - 1.0 / (om * om))));
    }
    return worst;
}

void write_geometry_csv(const std::string& path, const AxisymProfile& profile,
                        const GeometryFields& fields) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open " + path + " for writing");
    out << "theta,rho,u,omega,kappaM,kappaP\n";
    for (int j = 0; j < profile.N; ++j)
        out << fmt17(profile.theta(j)) << ',' << fmt17(profile.rho[j]) << ','
            << fmt17(fields.u[j]) << ',' << fmt17(fields.omega[j]) << ','
            << fmt17(fields.kappaM[j]) << ',' << fmt17(fields.kappaP[j]) << '\n';
}

}  // namespace sphereflow
