#ifndef SPHEREFLOW_PROFILE_HPP
#define SPHEREFLOW_PROFILE_HPP

#include <string>
#include <vector>

#include "sphereflow/errors.hpp"

namespace sphereflow {

enum class GridMode {
    Axisym,      // theta_j = (j+1/2) pi/N on [0,pi], reflection ghosts at both poles
    Periodic1D,  // theta_j = 2 pi j/N on the circle, n must be 1
};

// Discretized radial graph rho(theta) of a rotationally symmetric
// hypersurface in the round sphere.  Immutable after construction in
// all downstream code; flows produce fresh profiles.
struct AxisymProfile {
    int n = 2;  // hypersurface dimension
    int N = 0;  // grid size
    GridMode mode = GridMode::Axisym;
    std::vector<double> rho;

    double dtheta() const;
    double theta(int j) const;
};

// Lowest/highest admissible radius: profiles must keep away from both
// poles of the ambient sphere.
inline constexpr double kRhoMin = 1e-3;
inline constexpr double kRhoMax = 3.1405926535897932;  // pi - 1e-3

// Grid sanity, radius range, mode/n consistency and (Axisym) the
// even-reflection smoothness of the data across the poles.  Throws
// ProfileError with a reason.
void validate_profile(const AxisymProfile& profile);

// Size of the high-mode cosine tail used by the validator; a profile
// whose implied even extension has a kink at a pole shows up here.
double reflection_mismatch(const AxisymProfile& profile);

// rho0(theta) = base + sum_i amp_i cos(freq_i theta) sampled on the grid.
AxisymProfile make_cosine_profile(int n, int N, GridMode mode, double base,
                                  const std::vector<std::pair<int, double>>& cosines);

AxisymProfile make_slice(int n, int N, GridMode mode, double radius);

// CSV persistence: header "theta,rho", one row per grid point,
// 17 significant digits.
void write_profile_csv(const std::string& path, const AxisymProfile& profile);

// Reads a profile CSV and infers the grid mode from the theta column.
// Throws ConfigError if the grid is not one of the two supported ones.
AxisymProfile read_profile_csv(const std::string& path, int n);

// 17-significant-digit formatting used by every CSV writer.
std::string fmt17(double v);

}  // namespace sphereflow

#endif
