#pragma once

namespace monocert {

// Compensated (Kahan) accumulator.
struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;
    void add(double x) {
        double y = x - carry;
        double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    double value() const { return sum; }
};

// ln Gamma(x) for x > 0.
double ln_gamma(double x);

// psi(x) = d/dx ln Gamma(x) for x > 0.
double digamma(double x);

// psi^(k)(x) for 0 <= k <= 8, x > 0.  k = 0 is digamma.
double polygamma(int k, double x);

namespace detail {

// Binet remainder asymptotic series sum_n B_{2n} / (2n(2n-1) x^{2n-1}),
// valid for x >= kAsymptoticThreshold.
double stirling_tail(double x);

// T_k(y) = sum_{j=1..8} B_{2j} (2j+k-1)! / ((2j)! y^{2j+k}), k >= 0,
// the Bernoulli tail of the polygamma asymptotic series,
// valid for y >= kAsymptoticThreshold.
double psi_series_tail(int k, double y);

}  // namespace detail

}  // namespace monocert
