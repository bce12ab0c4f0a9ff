#ifndef SPHEREFLOW_SYMFUN_HPP
#define SPHEREFLOW_SYMFUN_HPP

#include <span>
#include <vector>

#include "sphereflow/errors.hpp"

// Elementary symmetric functions of principal curvatures, their
// derivatives, Garding cones and the curvature functions driving the
// flows.  Everything here is a pure function of its arguments.

namespace sphereflow {

// Hard cap on the number of principal curvatures.  The incremental
// recurrence stays exact (no factorial blowup) up to this size.
inline constexpr int kMaxCurvatures = 32;

struct CurvatureVector {
    explicit CurvatureVector(std::vector<double> kappa_);
    int n() const { return static_cast<int>(kappa.size()); }
    std::vector<double> kappa;
};

// sigma[k] and normalized p[k] = sigma[k]/C(n,k) for k = 0..n.
struct SymFunValues {
    std::vector<double> sigma;
    std::vector<double> p;
};

double binomial(int n, int k);

// sigma_0..sigma_n of kappa via the one-element-at-a-time recurrence
// sigma_k <- sigma_k + kappa_m * sigma_{k-1}.  sigma_out.size() == n+1.
void elementary_symmetric(std::span<const double> kappa, std::span<double> sigma_out);

SymFunValues eval_sym(const CurvatureVector& kappa);

// p_k of kappa; k may exceed n or be negative, in which case 0 is
// returned (the p_{-1} = p_{n+1} = 0 convention).
double p_value(std::span<const double> kappa, int k);

// sigma_k of kappa with entry i removed (0-based i).  Throws
// std::out_of_range for bad indices or k outside 0..n-1.
double sigma_excluding(std::span<const double> kappa, int k, int i);

// kappa in Gamma_k^+, i.e. p_m(kappa) > slack for every m <= k.
bool cone_membership(std::span<const double> kappa, int k, double slack = 0.0);

// Throws ConeError naming the first failing p_m if kappa is outside
// Gamma_k^+ with the given slack.
void require_cone(std::span<const double> kappa, int k, double slack = 0.0);

struct CurvatureFunctionSpec {
    enum class Kind { Mean, PowerRoot, Quotient };
    Kind kind = Kind::Mean;
    int k = 1;

    static CurvatureFunctionSpec mean() { return {Kind::Mean, 1}; }
    static CurvatureFunctionSpec power_root(int k) { return {Kind::PowerRoot, k}; }
    static CurvatureFunctionSpec quotient(int k) { return {Kind::Quotient, k}; }

    // Gamma index of the natural domain (Gamma_k^+ for both families,
    // nothing for the mean).
    int domain_cone() const { return kind == Kind::Mean ? 0 : k; }
    std::string name() const;
};

struct FValueGradient {
    double value = 0.0;
    std::vector<double> gradient;
};

// F and its eigenvalue gradient dF/dkappa_i, computed analytically from
// excluded symmetric functions.  Throws ConeError outside the domain.
FValueGradient F_value_and_gradient(const CurvatureFunctionSpec& spec,
                                    const CurvatureVector& kappa);

// Allocation-free value-only path for inner loops.
double F_value(const CurvatureFunctionSpec& spec, std::span<const double> kappa);

// Single-pass cone check + F evaluation for the flow inner loop.
struct ConeEval {
    bool ok = false;
    int failingOrder = 0;
    double failingValue = 0.0;
    double F = 0.0;
};
ConeEval F_in_cone(const CurvatureFunctionSpec& spec, std::span<const double> kappa,
                   int coneK, double slack);

// F together with the gradient traces entering the CFL bound and the
// quotient trace bounds: sum_i F^i and sum_i F^i kappa_i^2, computed in
// closed form through the derivative trace identities
// sum_i (p_m)^i = m p_{m-1} and sum_i (p_m)^i kappa_i^2 = n p_1 p_m - (n-m) p_{m+1}.
struct FSums {
    double value = 0.0;
    double grad_trace = 0.0;
    double grad_kappa_sq = 0.0;
};
FSums F_sums(const CurvatureFunctionSpec& spec, std::span<const double> kappa);

// p_k p_{m-1} - p_m p_{k-1} (>= 0 on Gamma_m^+) and the power-mean
// chain margin p_k^{1/k} - p_m^{1/m}.
struct MarginPair {
    double newton = 0.0;
    double chain = 0.0;
};
MarginPair newton_maclaurin_margin(const CurvatureVector& kappa, int k, int m);

struct ValuePair {
    double lhs = 0.0;
    double rhs = 0.0;
};

// The two sides of the gradient-trace comparison for F = p_2^(1/2):
// lhs = sum_i F^i kappa_i^2 / F^2 - 1, rhs = sum_i F^i - 1, both in
// closed form.  lhs >= (n/2) rhs on Gamma_2^+; on Gamma_n^+ the two are
// comparable in both directions.
ValuePair algebra_gap_pair(const CurvatureVector& kappa);

// (n-2) sigma_1 sigma_2 - 3n sigma_3  ==  sum_{i<j} (kappa_j-kappa_i)^2
// sigma_1(kappa|ij); returns both routes.
ValuePair divided_difference_identity(const CurvatureVector& kappa);

// Gradient traces of F = p_k/p_{k-1}: 1 <= traceF <= k and
// F^2 <= h2F <= (n-k+1) F^2 on Gamma_k^+.
struct TraceBounds {
    double traceF = 0.0;
    double h2F = 0.0;
    double F = 0.0;
};
TraceBounds trace_bounds_quotient(int k, const CurvatureVector& kappa);

}  // namespace sphereflow

#endif
