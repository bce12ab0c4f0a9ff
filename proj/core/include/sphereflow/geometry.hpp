#ifndef SPHEREFLOW_GEOMETRY_HPP
#define SPHEREFLOW_GEOMETRY_HPP

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "sphereflow/profile.hpp"

// Warped-product geometry of the round sphere (curvature +1) and the
// derived fields and integrals of a discretized radial graph.

namespace sphereflow {

// phi = sin(rho), phi' = cos(rho), Phi = 1 - cos(rho).
struct WarpedScalars {
    explicit WarpedScalars(double rho_)
        : rho(rho_), phi(std::sin(rho_)), phiPrime(std::cos(rho_)),
          PhiInt(1.0 - std::cos(rho_)) {}
    double rho;
    double phi;
    double phiPrime;
    double PhiInt;
};

struct Derivatives {
    std::vector<double> rhoTheta;
    std::vector<double> rhoThetaTheta;
};

// Fourth-order central differences; Axisym mode reflects evenly across
// both poles, Periodic1D wraps.
Derivatives derivatives(const AxisymProfile& profile);

// First/second derivative stencils for any even grid field (used for
// the support-function identity diagnostics as well).
std::vector<double> stencil_d1(const AxisymProfile& profile, std::span<const double> data);
std::vector<double> stencil_d2(const AxisymProfile& profile, std::span<const double> data);

struct GeometryFields {
    std::vector<double> u;                // support function phi/omega
    std::vector<double> omega;            // sqrt(1 + gammaTheta^2)
    std::vector<double> gammaTheta;       // rhoTheta / phi
    std::vector<double> gammaThetaTheta;  // second derivative of gamma
    std::vector<double> kappaM;           // meridian principal curvature
    std::vector<double> kappaP;           // parallel principal curvature (mult. n-1)
    std::vector<double> phi, phiPrime, PhiInt;
    std::vector<double> rhoTheta;
    std::vector<double> areaWeight;       // positive quadrature weight for d(mu)
};

GeometryFields geometry(const AxisymProfile& profile);

// Angular quadrature weights against sin(theta)^nu on the cell-centered
// [0,pi] grid.  Exact for cos(m theta), m < N, so geodesic slices
// integrate to machine precision for every n and smooth data is
// integrated superalgebraically.  Cached per (N, nu).
const std::vector<double>& polar_weights(int N, int nu);

// Quadrature of a pointwise integrand against d(mu).
double integrate(const GeometryFields& fields, std::span<const double> f);

// Enclosed volume: angular quadrature of the radial volume integral,
// the latter by adaptive Simpson to 1e-12.
double enclosed_volume(const AxisymProfile& profile);

// Everything monitored at once: quermassintegrals W_0..W_{n+1}, the
// weighted integrals, and the basic field extrema.  One symmetric
// function evaluation per grid point.
struct IntegralSet {
    std::vector<double> W;      // size n+2
    std::vector<double> Ipk;    // integral of p_k d(mu), k = 0..n
    std::vector<double> Wphi;   // Wphi[i] = integral of phi' p_{i-1}; Wphi[0] = integral of u
    std::vector<double> PhiPk;  // integral of Phi p_k, k = 0..n
    std::vector<double> uPk;    // integral of u p_k, k = 0..n
    double area = 0.0;
    double minU = 0.0;
    double minKappa = 0.0;
    double maxKappa = 0.0;
    double maxAbsDgamma2 = 0.0;
};
IntegralSet integral_set(const AxisymProfile& profile, const GeometryFields& fields);

// W_0..W_{n+1}: volume, area/(n+1), then the recursion
// W_{k+1} = Ipk[k]/(n+1) + k/(n+2-k) W_{k-1}, and W_{n+1} = omega_n/(n+1).
std::vector<double> quermassintegrals(const AxisymProfile& profile,
                                      const GeometryFields& fields);

struct WeightedIntegrals {
    std::vector<double> Wphi;   // as in IntegralSet
    std::vector<double> PhiPk;
    std::vector<double> uPk;
};
WeightedIntegrals weighted_integrals(const AxisymProfile& profile,
                                     const GeometryFields& fields);

// integral of p_{k+1} u d(mu) - integral of phi' p_k d(mu); vanishes in
// the continuum, the primary discretization-quality diagnostic.
double minkowski_residual(const AxisymProfile& profile, const GeometryFields& fields,
                          int k);

// max_j |D(u) - kappaM D(Phi)| over the grid (the meridian component of
// the support-function gradient identity).
double support_gradient_residual(const AxisymProfile& profile,
                                 const GeometryFields& fields);

// max_j ||grad rho|^2 - (1 - 1/omega^2)|.
double gradient_identity_residual(const AxisymProfile& profile,
                                  const GeometryFields& fields);

// Per-point curvature vector (kappaM, kappaP, ..., kappaP) into out (size n).
void curvature_at(const GeometryFields& fields, int n, int j, std::span<double> out);

void write_geometry_csv(const std::string& path, const AxisymProfile& profile,
                        const GeometryFields& fields);

}  // namespace sphereflow

#endif
