#pragma once

#include <functional>
#include <vector>

namespace monocert {

struct QuadratureConfig {
    double truncation_T = 0.0;   // upper integration limit; 0 = resolve from the tail majorant
    int nodes = 32;              // Gauss-Legendre nodes per panel
    double series_switch = 0.1;  // series/direct switch for small-t kernel evaluation
    double tolerance = 1e-10;    // requested truncation tolerance
    double tail_bound = 0.0;     // a posteriori truncation majorant, filled on return
};

enum class ThetaRoute { exp_kernel, arctan_kernel };

struct ThetaResult {
    double value = 0.0;
    QuadratureConfig config;  // echo of the config used, tail_bound filled in
};

// Binet remainder theta(x) = ln Gamma(x) - (x - 1/2) ln x + x - ln(2 pi)/2
// for x > 0, computed from one of its two integral representations.
// Throws convergence_error when the truncation majorant exceeds the tolerance.
ThetaResult binet_theta(double x, QuadratureConfig config = {},
                        ThetaRoute route = ThetaRoute::exp_kernel);

namespace quadrature {

struct GaussRule {
    std::vector<double> nodes;    // on (-1, 1), ascending
    std::vector<double> weights;
};

// n-point Gauss-Legendre rule, Newton-iterated Legendre roots, cached per n.
const GaussRule& gauss_legendre(int n);

// Integrate f over consecutive panels [edges[i], edges[i+1]] with an n-point
// rule per panel; panels are accumulated in order with compensated summation.
double integrate_panels(const std::function<double(double)>& f,
                        const std::vector<double>& edges, int n);

// Panel boundaries 0, w, 2w, 4w, ..., T (widths double until T is reached).
std::vector<double> dyadic_edges(double first_width, double T);

}  // namespace quadrature

}  // namespace monocert
