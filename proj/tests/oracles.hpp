#ifndef SPHEREFLOW_TEST_ORACLES_HPP
#define SPHEREFLOW_TEST_ORACLES_HPP

// Independent reference implementations used only by tests.  They must
// stay free of the code paths they check: sigma by explicit subset
// enumeration, gradients by central finite differences.

#include <cmath>
#include <span>
#include <vector>

namespace oracles {

// sigma_k by brute-force subset expansion, O(2^n).
inline double sigma_subset(std::span<const double> kappa, int k) {
    const int n = static_cast<int>(kappa.size());
    if (k == 0) return 1.0;
    if (k < 0 || k > n) return 0.0;
    double total = 0.0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != k) continue;
        double prod = 1.0;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) prod *= kappa[i];
        total += prod;
    }
    return total;
}

inline double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double c = 1.0;
    for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
    return c;
}

inline double p_subset(std::span<const double> kappa, int k) {
    return sigma_subset(kappa, k) / binomial(static_cast<int>(kappa.size()), k);
}

// Central finite-difference gradient of a scalar function of kappa.
template <typename F>
std::vector<double> fd_gradient(F&& f, std::vector<double> kappa, double step = 1e-6) {
    std::vector<double> g(kappa.size());
    for (size_t i = 0; i < kappa.size(); ++i) {
        const double save = kappa[i];
        kappa[i] = save + step;
        const double fp = f(kappa);
        kappa[i] = save - step;
        const double fm = f(kappa);
        kappa[i] = save;
        g[i] = (fp - fm) / (2.0 * step);
    }
    return g;
}

}  // namespace oracles

#endif
