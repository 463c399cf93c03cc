#pragma once

#include "monocert/quadrature.hpp"

namespace monocert {

// F_a(x) = ln Gamma(x) - (x - 1/2) ln x - psi'(x + a)/12
double F_a(double a, double x);

// f_a(x) = ln(2 pi)/2 - x + (x - 1/2) ln x - ln Gamma(x) + psi'(x + a)/12
double f_a(double a, double x);

// g_a(x) = f_a(x) - ln(2 pi)/2
double g_a(double a, double x);

// i-th derivative of f_a, 0 <= i <= 7 (i = 0 is f_a itself).
double f_a_derivative(double a, double x, int i);

// Closed form of f_a(x) - f_a(x+1) = 1 + (x + 1/2) ln(x/(x+1)) + 1/(12 (x+a)^2).
double difference_closed_form(double a, double x);

// Residual |f_a(x) - (psi'(x+a)/12 - theta(x))| with theta from quadrature.
double theta_representation_check(double a, double x, QuadratureConfig config = {});

// phi_a(t) = e^{-t}/2 + 1/2 - t^2 e^{-at}/12 + (e^{-t} - 1)/t
//          = (t^2/12) (phi1(t) - e^{-at});
// evaluated by its Maclaurin difference series below series_switch.
double phi_kernel(double a, double t, double series_switch = 0.1);

// phi1(t) = (12/t^2) ((e^{-t} + 1)/2 + (e^{-t} - 1)/t), strictly in (0, 1).
double phi1(double t);

// Sign-change threshold -phi(t) = -ln(phi1(t))/t, strictly in (0, 1/2):
// phi_kernel(a, t) > 0 iff a > phi_threshold(t).
double phi_threshold(double t);

// phi2(u) = (2(u-3) e^u + u^2 + 4u + 6) / (u ((u-2) e^u + u + 2)),
// strictly in (0, 1/2); satisfies -ln phi1(t) = integral_0^t phi2(u) du.
double phi2(double u);

// Laplace transform integral_0^inf phi_a(t) e^{-xt} dt,
// which equals d/dx [f_a(x) - f_a(x+1)].
double laplace_phi(double a, double x, QuadratureConfig config = {});

// Signed complete-monotonicity margin (-1)^n f_a^(n)(x) together with the
// magnitude scale (sum of |terms| the evaluation path adds); the
// certification dead band is dead_band * scale.  For x >= 10 the margin is
// assembled from paired asymptotic tails so the polynomial parts cancel
// exactly instead of catastrophically.
struct MarginEval {
    double margin = 0.0;
    double scale = 0.0;
};
MarginEval fa_margin(double a, double x, int n);

// phi_kernel value together with the magnitude scale of its evaluation path.
MarginEval phi_kernel_margin(double a, double t, double series_switch = 0.1);

}  // namespace monocert
