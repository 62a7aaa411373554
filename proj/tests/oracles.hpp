// Test-only reference implementations, kept independent of the library's
// evaluation paths: fixed-grid Simpson quadrature and the independence-case
// closed forms for the survival and residual-life quantities.
#pragma once

#include <cmath>
#include <functional>

#include "relstandby/engine.hpp"
#include "relstandby/marginals.hpp"

namespace oracles {

inline double simpson(const std::function<double(double)>& f, double a, double b,
                      int intervals = 2000) {
    if (b <= a) return 0.0;
    if (intervals % 2 != 0) ++intervals;
    double h = (b - a) / intervals;
    double total = f(a) + f(b);
    for (int i = 1; i < intervals; ++i) total += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
    return total * h / 3.0;
}

// Independent-components standby term of P(T > s):
//   (1/B(n-k+1,k)) * sf(s)^{k-1} * int_0^s sfG(s-z) F^{n-k}(z) f(z) dz
inline double iid_standby_contribution(const relstandby::Marginal& F,
                                   const relstandby::Marginal& G, int n, int k, double s) {
    double constant = relstandby::inverse_beta_constant(n, k);
    double sfS = F.survival(s);
    auto integrand = [&](double z) {
        return G.survival(s - z) * std::pow(F.cdf(z), n - k) * F.pdf(z);
    };
    return constant * std::pow(sfS, k - 1) * simpson(integrand, 0.0, s, 4000);
}

inline double indep_survival_kn(const relstandby::Marginal& F, int n, int k, double s) {
    // P(at least k of n iid survive past s)
    double sf = F.survival(s);
    double total = 0.0;
    for (int i = k; i <= n; ++i)
        total += relstandby::binomial_coefficient(n, i) * std::pow(sf, i) *
                 std::pow(1.0 - sf, n - i);
    return total;
}

// E(Z_{n-k+1:n} - t | Z_{1:n} > t) for iid components.
inline double iid_mrl_kn(const relstandby::Marginal& F, int n, int k, double t,
                       double upper) {
    double total = 0.0;
    for (int m = 0; m <= n - k; ++m) {
        for (int i = 0; i <= m; ++i) {
            int p = n - m + i;
            double tail = simpson([&](double z) { return std::pow(F.survival(z), p); }, t,
                                  upper, 4000);
            double sign = i % 2 == 0 ? 1.0 : -1.0;
            total += relstandby::binomial_coefficient(n, m) *
                     relstandby::binomial_coefficient(m, i) * sign * tail /
                     std::pow(F.survival(t), p);
        }
    }
    return total;
}

// E(T - t | Z_{1:n} > t) for independent components and standby.
inline double iid_psi3(const relstandby::Marginal& F, const relstandby::Marginal& G,
                           int n, int k, double t, double upper) {
    double base = iid_mrl_kn(F, n, k, t, upper);
    double constant = relstandby::inverse_beta_constant(n, k);
    auto inner = [&](double x) {
        return simpson(
            [&](double z) {
                return std::pow(F.survival(z + x), k - 1) *
                       std::pow(F.cdf(z) - F.cdf(t), n - k) * G.survival(x) * F.pdf(z);
            },
            t, upper, 800);
    };
    double standbyTerm = simpson(inner, 0.0, upper, 800);
    return base + constant * standbyTerm / std::pow(F.survival(t), n);
}

}  // namespace oracles
