#include "sphereflow/symfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace sphereflow {

namespace {

using Buf = std::array<double, kMaxCurvatures + 2>;

void check_size(std::span<const double> kappa) {
    if (kappa.empty() || kappa.size() > kMaxCurvatures)
        throw std::out_of_range("curvature vector size must be in 1..32");
    for (double v : kappa)
        if (!std::isfinite(v)) throw Error("curvature vector has a non-finite entry");
}

// sigma_0..sigma_n of kappa into buf (optionally skipping one entry).
// One extra slot is zeroed so sigma_{n+1} reads are well-defined.
void sigma_into(std::span<const double> kappa, Buf& buf, int skip = -1) {
    const int n = static_cast<int>(kappa.size());
    std::fill(buf.begin(), buf.begin() + n + 2, 0.0);
    buf[0] = 1.0;
    int used = 0;
    for (int m = 0; m < n; ++m) {
        if (m == skip) continue;
        ++used;
        for (int k = used; k >= 1; --k) buf[k] += kappa[m] * buf[k - 1];
    }
}

std::string cone_name(int k) {
    char s[32];
    std::snprintf(s, sizeof s, "Gamma_%d+", k);
    return s;
}

}  // namespace

CurvatureVector::CurvatureVector(std::vector<double> kappa_) : kappa(std::move(kappa_)) {
    check_size(kappa);
}

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    k = std::min(k, n - k);
    double c = 1.0;
    for (int i = 1; i <= k; ++i) c = c * static_cast<double>(n - k + i) / i;
    return std::round(c);
}

void elementary_symmetric(std::span<const double> kappa, std::span<double> sigma_out) {
    check_size(kappa);
    const int n = static_cast<int>(kappa.size());
    if (sigma_out.size() != static_cast<size_t>(n + 1))
        throw std::out_of_range("sigma output must have n+1 entries");
    Buf buf;
    sigma_into(kappa, buf);
    std::copy(buf.begin(), buf.begin() + n + 1, sigma_out.begin());
}

SymFunValues eval_sym(const CurvatureVector& kappa) {
    const int n = kappa.n();
    SymFunValues out;
    out.sigma.resize(n + 1);
    out.p.resize(n + 1);
    elementary_symmetric(kappa.kappa, out.sigma);
    for (int k = 0; k <= n; ++k) out.p[k] = out.sigma[k] / binomial(n, k);
    return out;
}

double p_value(std::span<const double> kappa, int k) {
    const int n = static_cast<int>(kappa.size());
    if (k < 0 || k > n) return 0.0;
    Buf buf;
    sigma_into(kappa, buf);
    return buf[k] / binomial(n, k);
}

double sigma_excluding(std::span<const double> kappa, int k, int i) {
    check_size(kappa);
    const int n = static_cast<int>(kappa.size());
    if (i < 0 || i >= n) throw std::out_of_range("sigma_excluding: index out of range");
    if (k < 0 || k > n - 1) throw std::out_of_range("sigma_excluding: order out of range");
    Buf buf;
    sigma_into(kappa, buf, i);
    return buf[k];
}

bool cone_membership(std::span<const double> kappa, int k, double slack) {
    check_size(kappa);
    const int n = static_cast<int>(kappa.size());
    if (k < 1 || k > n) throw std::out_of_range("cone index must be in 1..n");
    Buf buf;
    sigma_into(kappa, buf);
    for (int m = 1; m <= k; ++m)
        if (!(buf[m] / binomial(n, m) > slack)) return false;
    return true;
}

void require_cone(std::span<const double> kappa, int k, double slack) {
    const int n = static_cast<int>(kappa.size());
    if (k < 1) return;
    Buf buf;
    sigma_into(kappa, buf);
    for (int m = 1; m <= k; ++m) {
        const double pm = buf[m] / binomial(n, m);
        if (!(pm > slack)) {
            char msg[128];
            std::snprintf(msg, sizeof msg,
                          "curvature vector outside %s: p_%d = %.17g (slack %.3g)",
                          cone_name(k).c_str(), m, pm, slack);
            throw ConeError(msg, m, pm);
        }
    }
}

std::string CurvatureFunctionSpec::name() const {
    char s[32];
    switch (kind) {
        case Kind::Mean: return "p1";
        case Kind::PowerRoot: std::snprintf(s, sizeof s, "p%d^(1/%d)", k, k); return s;
        case Kind::Quotient: std::snprintf(s, sizeof s, "p%d/p%d", k, k - 1); return s;
    }
    return "?";
}

namespace {

// Shared kernel: value plus optional per-eigenvalue gradient.
// grad may be empty when only sums are needed.
FSums F_kernel(const CurvatureFunctionSpec& spec, std::span<const double> kappa,
               std::span<double> grad) {
    check_size(kappa);
    const int n = static_cast<int>(kappa.size());
    const int k = spec.k;
    if (spec.kind != CurvatureFunctionSpec::Kind::Mean && (k < 1 || k > n))
        throw std::out_of_range("curvature function order must be in 1..n");
    require_cone(kappa, spec.domain_cone(), 0.0);

    FSums out;
    Buf full;
    sigma_into(kappa, full);

    // dp_m/dkappa_i = sigma_{m-1}(kappa|i) / C(n,m)
    Buf excl;
    const double cnk = binomial(n, k);
    const double cnk1 = binomial(n, k - 1);
    const double pk = full[k] / cnk;
    const double pk1 = (k >= 1) ? full[k - 1] / cnk1 : 1.0;

    double F = 0.0;
    switch (spec.kind) {
        case CurvatureFunctionSpec::Kind::Mean: F = full[1] / n; break;
        case CurvatureFunctionSpec::Kind::PowerRoot: F = std::pow(pk, 1.0 / k); break;
        case CurvatureFunctionSpec::Kind::Quotient: F = pk / pk1; break;
    }
    out.value = F;

    for (int i = 0; i < n; ++i) {
        double gi = 0.0;
        switch (spec.kind) {
            case CurvatureFunctionSpec::Kind::Mean:
                gi = 1.0 / n;
                break;
            case CurvatureFunctionSpec::Kind::PowerRoot: {
                sigma_into(kappa, excl, i);
                const double dpk = excl[k - 1] / cnk;
                gi = std::pow(pk, 1.0 / k - 1.0) * dpk / k;
                break;
            }
            case CurvatureFunctionSpec::Kind::Quotient: {
                sigma_into(kappa, excl, i);
                const double dpk = excl[k - 1] / cnk;
                const double dpk1 = (k >= 2) ? excl[k - 2] / cnk1 : 0.0;
                gi = (dpk * pk1 - pk * dpk1) / (pk1 * pk1);
                break;
            }
        }
        if (!grad.empty()) grad[i] = gi;
        out.grad_trace += gi;
        out.grad_kappa_sq += gi * kappa[i] * kappa[i];
    }
    return out;
}

}  // namespace

FValueGradient F_value_and_gradient(const CurvatureFunctionSpec& spec,
                                    const CurvatureVector& kappa) {
    FValueGradient out;
    out.gradient.resize(kappa.n());
    out.value = F_kernel(spec, kappa.kappa, out.gradient).value;
    return out;
}

namespace {

double F_from_table(const CurvatureFunctionSpec& spec, const Buf& sig, int n) {
    const int k = spec.k;
    switch (spec.kind) {
        case CurvatureFunctionSpec::Kind::Mean:
            return sig[1] / n;
        case CurvatureFunctionSpec::Kind::PowerRoot: {
            const double pk = sig[k] / binomial(n, k);
            return k == 2 ? std::sqrt(pk) : std::pow(pk, 1.0 / k);
        }
        case CurvatureFunctionSpec::Kind::Quotient:
            return (sig[k] / binomial(n, k)) / (sig[k - 1] / binomial(n, k - 1));
    }
    return 0.0;
}

}  // namespace

double F_value(const CurvatureFunctionSpec& spec, std::span<const double> kappa) {
    check_size(kappa);
    const int n = static_cast<int>(kappa.size());
    require_cone(kappa, spec.domain_cone(), 0.0);
    Buf buf;
    sigma_into(kappa, buf);
    return F_from_table(spec, buf, n);
}

ConeEval F_in_cone(const CurvatureFunctionSpec& spec, std::span<const double> kappa,
                   int coneK, double slack) {
    const int n = static_cast<int>(kappa.size());
    Buf buf;
    sigma_into(kappa, buf);
    ConeEval out;
    const int cone = std::max(coneK, spec.domain_cone());
    for (int m = 1; m <= cone; ++m) {
        const double pm = buf[m] / binomial(n, m);
        if (!(pm > slack)) {
            out.failingOrder = m;
            out.failingValue = pm;
            return out;
        }
    }
    out.ok = true;
    out.F = F_from_table(spec, buf, n);
    return out;
}

FSums F_sums(const CurvatureFunctionSpec& spec, std::span<const double> kappa) {
    check_size(kappa);
    const int n = static_cast<int>(kappa.size());
    const int k = spec.k;
    if (spec.kind != CurvatureFunctionSpec::Kind::Mean && (k < 1 || k > n))
        throw std::out_of_range("curvature function order must be in 1..n");
    require_cone(kappa, spec.domain_cone(), 0.0);

    Buf sig;
    sigma_into(kappa, sig);
    auto p = [&](int m) { return (m < 0 || m > n) ? 0.0 : sig[m] / binomial(n, m); };

    FSums out;
    out.value = F_from_table(spec, sig, n);
    const double p1 = p(1);
    switch (spec.kind) {
        case CurvatureFunctionSpec::Kind::Mean:
            out.grad_trace = 1.0;
            out.grad_kappa_sq = n * p1 * p1 - (n - 1) * p(2);
            break;
        case CurvatureFunctionSpec::Kind::PowerRoot: {
            const double pk = p(k);
            const double scale = (k == 2 ? 1.0 / std::sqrt(pk) : std::pow(pk, 1.0 / k - 1.0)) / k;
            out.grad_trace = scale * k * p(k - 1);
            out.grad_kappa_sq = scale * (n * p1 * pk - (n - k) * p(k + 1));
            break;
        }
        case CurvatureFunctionSpec::Kind::Quotient: {
            const double pk = p(k), pk1 = p(k - 1);
            out.grad_trace = (k * pk1 * pk1 - (k - 1) * pk * p(k - 2)) / (pk1 * pk1);
            const double num_k = n * p1 * pk - (n - k) * p(k + 1);
            const double num_k1 = n * p1 * pk1 - (n - k + 1) * pk;
            out.grad_kappa_sq = (num_k * pk1 - pk * num_k1) / (pk1 * pk1);
            break;
        }
    }
    return out;
}

MarginPair newton_maclaurin_margin(const CurvatureVector& kappa, int k, int m) {
    const int n = kappa.n();
    if (!(1 <= k && k < m && m <= n))
        throw std::out_of_range("newton_maclaurin_margin requires 1 <= k < m <= n");
    require_cone(kappa.kappa, m, 0.0);
    const SymFunValues v = eval_sym(kappa);
    MarginPair out;
    out.newton = v.p[k] * v.p[m - 1] - v.p[m] * v.p[k - 1];
    out.chain = std::pow(v.p[k], 1.0 / k) - std::pow(v.p[m], 1.0 / m);
    return out;
}

ValuePair algebra_gap_pair(const CurvatureVector& kappa) {
    const int n = kappa.n();
    if (n < 2) throw std::out_of_range("algebra_gap_pair requires n >= 2");
    require_cone(kappa.kappa, 2, 0.0);
    const SymFunValues v = eval_sym(kappa);
    const double p1 = v.p[1], p2 = v.p[2];
    const double p3 = (n >= 3) ? v.p[3] : 0.0;
    const double p2_32 = p2 * std::sqrt(p2);
    ValuePair out;
    out.lhs = (n * p1 * p2 - (n - 2) * p3 - 2.0 * p2_32) / (2.0 * p2_32);
    out.rhs = p1 / std::sqrt(p2) - 1.0;
    return out;
}

ValuePair divided_difference_identity(const CurvatureVector& kappa) {
    const int n = kappa.n();
    if (n < 2) throw std::out_of_range("divided_difference_identity requires n >= 2");
    Buf buf;
    sigma_into(kappa.kappa, buf);
    const double s3 = n >= 3 ? buf[3] : 0.0;
    ValuePair out;
    out.lhs = (n - 2) * buf[1] * buf[2] - 3.0 * n * s3;

    // sigma_1 with two entries removed is just the complementary sum.
    double total = 0.0;
    for (double v : kappa.kappa) total += v;
    double rhs = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double d = kappa.kappa[j] - kappa.kappa[i];
            rhs += d * d * (total - kappa.kappa[i] - kappa.kappa[j]);
        }
    out.rhs = rhs;
    return out;
}

TraceBounds trace_bounds_quotient(int k, const CurvatureVector& kappa) {
    const auto spec = CurvatureFunctionSpec::quotient(k);
    const FSums s = F_kernel(spec, kappa.kappa, {});
    return {s.grad_trace, s.grad_kappa_sq, s.value};
}

}  // namespace sphereflow
