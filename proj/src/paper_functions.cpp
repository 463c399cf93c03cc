#include "monocert/paper_functions.hpp"

#include <cmath>

#include "monocert/constants.hpp"
#include "monocert/domain.hpp"
#include "monocert/special_functions.hpp"

namespace monocert {

namespace {

double factorial(int m) {
    double f = 1.0;
    for (int i = 2; i <= m; ++i) f *= i;
    return f;
}

// Kahan accumulator that also tracks the magnitude scale of its terms.
struct ScaledSum {
    KahanSum sum;
    double scale = 0.0;
    void add(double v) {
        sum.add(v);
        scale += std::abs(v);
    }
};

// sigma(t) = phi1(t) - 1 = sum_{k>=1} 6 (-1)^k (k+1)/(k+3)! t^k
double phi1_sigma(double t) {
    KahanSum s;
    double c = -0.5;  // k = 1 coefficient
    double tp = t;
    for (int k = 1; k <= 34; ++k) {
        s.add(c * tp);
        tp *= t;
        c *= -(k + 2.0) / ((k + 1.0) * (k + 4.0));
    }
    return s.value();
}

}  // namespace

double F_a(double a, double x) {
    (void)ShiftParam(a);
    (void)PositiveReal(x);
    KahanSum s;
    s.add(ln_gamma(x));
    s.add(-(x - 0.5) * std::log(x));
    s.add(-polygamma(1, x + a) / 12.0);
    return s.value();
}

double f_a(double a, double x) { return fa_margin(a, x, 0).margin; }

double g_a(double a, double x) { return f_a(a, x) - kHalfLn2Pi; }

double f_a_derivative(double a, double x, int i) {
    detail::require(i >= 0 && i <= 7, "f_a_derivative: order must be in [0, 7]");
    double m = fa_margin(a, x, i).margin;
    return (i % 2 == 0) ? m : -m;
}

double difference_closed_form(double a, double x) {
    (void)ShiftParam(a);
    (void)PositiveReal(x);
    double y = x + a;
    KahanSum s;
    s.add(1.0);
    s.add(-(x + 0.5) * std::log1p(1.0 / x));
    s.add(1.0 / (12.0 * y * y));
    return s.value();
}

double theta_representation_check(double a, double x, QuadratureConfig config) {
    double theta = binet_theta(x, config).value;
    return std::abs(f_a(a, x) - (polygamma(1, x + a) / 12.0 - theta));
}

MarginEval phi_kernel_margin(double a, double t, double series_switch) {
    (void)ShiftParam(a);
    (void)KernelPoint(t);
    detail::require(std::isfinite(series_switch) && series_switch > 0.0,
                    "phi_kernel: series_switch must be > 0");
    ScaledSum acc;
    if (t < series_switch) {
        // (t^2/12) sum_{k>=1} [6 (-1)^k (k+1)/(k+3)! - (-a)^k/k!] t^k
        double c = -0.5;  // phi1 coefficient at k = 1
        double e = -a;    // (-a)^k/k! at k = 1
        double tp = t;
        for (int k = 1; k <= 34; ++k) {
            acc.add((c - e) * tp);
            tp *= t;
            c *= -(k + 2.0) / ((k + 1.0) * (k + 4.0));
            e *= -a / (k + 1.0);
        }
        double f = t * t / 12.0;
        return {f * acc.sum.value(), f * acc.scale};
    }
    double em = std::expm1(-t);
    acc.add((em + 2.0) / 2.0);
    acc.add(-t * t * std::exp(-a * t) / 12.0);
    acc.add(em / t);
    return {acc.sum.value(), acc.scale};
}

double phi_kernel(double a, double t, double series_switch) {
    return phi_kernel_margin(a, t, series_switch).margin;
}

double phi1(double t) {
    (void)KernelPoint(t);
    if (t < 0.1) return 1.0 + phi1_sigma(t);
    double em = std::expm1(-t);
    return 12.0 / (t * t) * ((em + 2.0) / 2.0 + em / t);
}

double phi_threshold(double t) {
    (void)KernelPoint(t);
    if (t < 0.1) return -std::log1p(phi1_sigma(t)) / t;
    return -std::log(phi1(t)) / t;
}

double phi2(double u) {
    (void)KernelPoint(u);
    if (u < 0.5) {
        // numerator u^4 sum 2(m+1)/(m+4)! u^m, denominator u^4 sum (m+1)/(m+3)! u^m
        KahanSum num, den;
        double nt = 2.0 / 24.0;
        double dt = 1.0 / 6.0;
        for (int m = 0; m < 30; ++m) {
            num.add(nt);
            den.add(dt);
            nt *= u * (m + 2.0) / ((m + 1.0) * (m + 5.0));
            dt *= u * (m + 2.0) / ((m + 1.0) * (m + 4.0));
        }
        return num.value() / den.value();
    }
    double em = std::expm1(u);
    return (2.0 * (u - 3.0) * em + u * (u + 6.0)) / (u * ((u - 2.0) * em + 2.0 * u));
}

double laplace_phi(double a, double x, QuadratureConfig cfg) {
    (void)ShiftParam(a);
    (void)PositiveReal(x);
    detail::require(cfg.nodes >= 2, "laplace_phi: nodes must be >= 2");
    if (cfg.tolerance <= 0.0) cfg.tolerance = 1e-8;
    // |phi_a(t)| <= 2 + t^2/12, so the tail beyond T is bounded by
    // e^{-xT} [2/x + (T^2/12)/x + (T/6)/x^2 + (1/6)/x^3]
    auto majorant = [&](double T) {
        return std::exp(-x * T) *
               (2.0 / x + T * T / (12.0 * x) + T / (6.0 * x * x) + 1.0 / (6.0 * x * x * x));
    };
    double T = cfg.truncation_T;
    if (T == 0.0) {
        T = 4.0;
        while (majorant(T) > 0.5 * cfg.tolerance && T < 1e7) T *= 1.25;
    }
    cfg.tail_bound = majorant(T);
    if (!(cfg.tail_bound <= cfg.tolerance))
        throw convergence_error("laplace_phi: tail majorant exceeds tolerance");
    auto f = [&](double t) { return phi_kernel(a, t, cfg.series_switch) * std::exp(-x * t); };
    double w = std::max(std::min(cfg.series_switch, 1.0 / x), T * 0x1p-48);
    return quadrature::integrate_panels(f, quadrature::dyadic_edges(w, T), cfg.nodes);
}

MarginEval fa_margin(double a, double x, int n) {
    (void)ShiftParam(a);
    (void)PositiveReal(x);
    detail::require(n >= 0 && n <= 7, "fa_margin: order must be in [0, 7]");
    double y = x + a;
    ScaledSum acc;
    if (x >= kAsymptoticThreshold) {
        // pair the polygamma tail of psi^(n+1)(y)/12 against the Binet-series
        // derivative tail (-1)^n theta^(n)(x); the polynomial heads cancel
        // exactly instead of catastrophically
        if (n == 0) {
            acc.add(1.0 / (12.0 * y));
            acc.add(1.0 / (24.0 * y * y));
            acc.add(detail::psi_series_tail(1, y) / 12.0);
            acc.add(-detail::stirling_tail(x));
        } else {
            double nf = factorial(n);
            double yn1 = std::pow(y, n + 1.0);
            acc.add(nf / (12.0 * yn1));
            acc.add(nf * (n + 1.0) / (24.0 * yn1 * y));
            acc.add(detail::psi_series_tail(n + 1, y) / 12.0);
            acc.add(-detail::psi_series_tail(n - 1, x));
        }
    } else if (n == 0) {
        acc.add(kHalfLn2Pi);
        acc.add(-x);
        acc.add((x - 0.5) * std::log(x));
        acc.add(-ln_gamma(x));
        acc.add(polygamma(1, y) / 12.0);
    } else if (n == 1) {
        acc.add(digamma(x));
        acc.add(-std::log(x));
        acc.add(0.5 / x);
        acc.add(-polygamma(2, y) / 12.0);
    } else {
        double sgn = (n % 2 == 0) ? 1.0 : -1.0;
        acc.add(sgn * polygamma(n + 1, y) / 12.0);
        acc.add(-sgn * polygamma(n - 1, x));
        double xn1 = std::pow(x, n - 1.0);
        acc.add(factorial(n - 2) / xn1);
        acc.add(factorial(n - 1) / (2.0 * xn1 * x));
    }
    return {acc.sum.value(), acc.scale};
}

}  // namespace monocert
