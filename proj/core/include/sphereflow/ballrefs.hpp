#ifndef SPHEREFLOW_BALLREFS_HPP
#define SPHEREFLOW_BALLREFS_HPP

#include <functional>
#include <string>

#include "sphereflow/errors.hpp"

// Closed-form size functionals of geodesic balls about the origin and
// their monotone inverses.  These are the right-hand sides of every
// inequality checked by the harness.

namespace sphereflow {

// Surface area of the unit n-sphere.
double sphere_area(int n);

// Adaptive composite Simpson quadrature to the requested absolute
// tolerance.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol);

struct BallReference {
    enum class Kind {
        Quermass,     // f_k(r): k-th quermassintegral of B_r, 0 <= k <= n
        WeightedPhi,  // h_k(r): weighted curvature integral over dB_r, -1 <= k <= n
        XiPhi,        // xi_k(r): integral of Phi p_k over dB_r, 0 <= k <= n
    };

    int n = 2;
    Kind kind = Kind::Quermass;
    int k = 0;

    static BallReference f(int n, int k);
    static BallReference h(int n, int k);
    static BallReference xi(int n, int k);

    // Right end of the interval on which the reference is strictly
    // increasing: pi/2, except h_k with k >= 0 which turns over at
    // arctan(sqrt((n-k)/(k+1))) (an empty interval for k = n).
    double domain_max() const;

    // Value at r in (0, pi/2]; quermassintegrals are evaluated by
    // adaptive Simpson to 1e-12, the rest in closed form.
    double eval(double r) const;

    // Bracketed bisection inverse on the strictly increasing interval
    // (0, domain_max()].  Throws RangeError with the attained range if
    // value is outside it.
    double invert(double value) const;

    std::string name() const;
};

}  // namespace sphereflow

#endif
