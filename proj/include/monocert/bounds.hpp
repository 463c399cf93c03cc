#pragma once

#include <vector>

#include "monocert/domain.hpp"
#include "monocert/grid.hpp"

namespace monocert {

// Log-space Stirling-type bound ln B_c(x) = ln(2 pi)/2 - x + (x - 1/2) ln x
// + psi'(x + c)/12; ln Gamma(x) - ln B_c(x) = -f_c(x).
double log_gamma_bound(double x, double c);

// Two-sided enclosure of ln Gamma(x): upper side uses shift alpha (valid for
// alpha = 0), lower side uses shift beta (valid for beta >= 1/2).
// Requires 0 <= alpha < 1/2 <= beta.
BoundPair gamma_bounds(double x, double alpha, double beta);

// Log-space normalized ratio bound for
//   T(x) = [Gamma(x+s)/Gamma(x+t)] (x+t)^{x+t-1/2} / (x+s)^{x+s-1/2}:
//   ln R_c = (t - s) + (psi'(x+s+c) - psi'(x+t+c))/12,
//   ln T - ln R_c = -[f_c(x+s) - f_c(x+t)].
// Lower side uses shift alpha (valid for alpha >= 1/2), upper side uses
// shift beta (valid for beta = 0).  Requires 0 <= beta < 1/2 <= alpha,
// 0 <= s < t, x + s > 0.
double log_ratio_bound(double x, double s, double t, double c);
double log_ratio_target(double x, double s, double t);
BoundPair gamma_ratio_bounds(double x, double s, double t, double alpha, double beta);

// Scan the grid geometrically for a bound violation (lower side needs
// a < 1/2 and appears at large x; upper side needs a > 0 and appears at
// small x), then bisect the bracketing interval to x-width <= bisect_tol
// relative.  margin = lnGamma - lnBound (lower side) or lnBound - lnGamma
// (upper side); a violation is margin <= -dead_band * scale.
CounterexampleSearch gamma_bound_counterexample(BoundSide side, double a, const GridSpec& search,
                                                double dead_band = 1e-13,
                                                double bisect_tol = 1e-8);

// Finite-grid checks of the digamma/polygamma envelope inequalities:
//   ln x - 1/x < psi(x) < ln x - 1/(2x)
//   (i-1)!/x^i + i!/(2 x^{i+1}) < (-1)^{i+1} psi^(i)(x) < (i-1)!/x^i + i!/x^{i+1}
//     for i in orders (subset of [1, 6])
//   1/(2x^2) - 1/(6x^3) < 1/x - psi'(x+1) < 1/(2x^2) - 1/(6x^3) + 1/(30 x^5)
std::vector<ClaimResult> lemma_inequalities_check(const GridSpec& grid,
                                                  const std::vector<int>& orders);

// Asymptotic normalizations evaluated at x = 1e4 with tolerance 1e-3:
//   x^2 (psi'(x) - 1/x) -> 1/2
//   x (ln x - psi(x)) -> 1/2
//   x^2 f_a(x) -> (1 - 2a)/24 for a in {0, 1/4, 1/2, 1}
std::vector<ClaimResult> asymptotic_limit_checks(double x = 1e4, double tolerance = 1e-3);

}  // namespace monocert
