#include "monocert/special_functions.hpp"

#include <cmath>

#include "monocert/constants.hpp"
#include "monocert/domain.hpp"

namespace monocert {

namespace detail {

double stirling_tail(double x) {
    double inv2 = 1.0 / (x * x);
    double p = 1.0 / x;  // x^{-(2n-1)}, n starting at 1
    KahanSum s;
    for (int n = 0; n < 8; ++n) {
        s.add(kStirling[n] * p);
        p *= inv2;
    }
    return s.value();
}

double psi_series_tail(int k, double y) {
    // c_j = (2j+k-1)!/(2j)!; c_1 = (k+1)!/2, then
    // c_{j+1} = c_j (2j+k)(2j+k+1) / ((2j+1)(2j+2)).
    double c = 0.5;
    for (int m = 3; m <= k + 1; ++m) c *= m;
    if (k >= 1) c *= 2.0;  // (k+1)!/2 collapses to 1 at k = 1
    double inv2 = 1.0 / (y * y);
    double p = std::pow(y, -(k + 2.0));  // y^{-(2j+k)}, j starting at 1
    KahanSum s;
    for (int j = 1; j <= 8; ++j) {
        s.add(kBernoulli2n[j - 1] * c * p);
        p *= inv2;
        c *= static_cast<double>(2 * j + k) * (2 * j + k + 1) /
             (static_cast<double>(2 * j + 1) * (2 * j + 2));
    }
    return s.value();
}

}  // namespace detail

namespace {

// x(x+1)...(x+m-1) walked upward until the argument reaches the threshold;
// the recurrence terms for digamma/polygamma walk the same chain.
double factorial(int m) {
    double f = 1.0;
    for (int i = 2; i <= m; ++i) f *= i;
    return f;
}

}  // namespace

double ln_gamma(double x) {
    (void)PositiveReal(x);
    double y = x;
    double prod = 1.0;
    while (y < kAsymptoticThreshold) {
        prod *= y;
        y += 1.0;
    }
    double core = (y - 0.5) * std::log(y) - y + kHalfLn2Pi + detail::stirling_tail(y);
    return prod == 1.0 ? core : core - std::log(prod);
}

double digamma(double x) {
    (void)PositiveReal(x);
    // collect the shift chain, then add recurrence terms smallest-first so the
    // largest term is the final rounding
    double chain[16];
    int m = 0;
    double y = x;
    while (y < kAsymptoticThreshold) {
        chain[m++] = y;
        y += 1.0;
    }
    double v = std::log(y) - 0.5 / y - detail::psi_series_tail(0, y);
    for (int j = m - 1; j >= 0; --j) v -= 1.0 / chain[j];
    return v;
}

double polygamma(int k, double x) {
    (void)DerivOrder(k);
    (void)PositiveReal(x);
    if (k == 0) return digamma(x);
    double kfac = factorial(k);
    double chain[16];
    int m = 0;
    double y = x;
    while (y < kAsymptoticThreshold) {
        chain[m++] = y;
        y += 1.0;
    }
    // |psi^(k)|(y) asymptotic head + Bernoulli tail
    double yk = 1.0;
    for (int i = 0; i < k; ++i) yk *= y;
    double v = (kfac / k) / yk + kfac / (2.0 * yk * y) + detail::psi_series_tail(k, y);
    // magnitude recurrence |psi^(k)|(x) = |psi^(k)|(x+1) + k!/x^{k+1},
    // largest (smallest argument) term added last
    for (int j = m - 1; j >= 0; --j) {
        double p = chain[j];
        double pk1 = p;
        for (int i = 0; i < k; ++i) pk1 *= p;
        v += kfac / pk1;
    }
    return (k % 2 == 1) ? v : -v;
}

}  // namespace monocert
