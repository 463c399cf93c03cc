#pragma once

namespace monocert {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kHalfLn2Pi = 0.91893853320467274178;  // ln(2*pi)/2
inline constexpr double kEulerGamma = 0.57721566490153286061;

// Bernoulli numbers B_{2n}, n = 1..8.
inline constexpr double kBernoulli2n[8] = {
    1.0 / 6.0,   -1.0 / 30.0,     1.0 / 42.0, -1.0 / 30.0,
    5.0 / 66.0,  -691.0 / 2730.0, 7.0 / 6.0,  -3617.0 / 510.0,
};

// Stirling-series coefficients B_{2n} / (2n (2n-1)), n = 1..8.
inline constexpr double kStirling[8] = {
    1.0 / 12.0,  -1.0 / 360.0,      1.0 / 1260.0, -1.0 / 1680.0,
    1.0 / 1188.0, -691.0 / 360360.0, 1.0 / 156.0,  -3617.0 / 122400.0,
};

// Arguments at or above this use the asymptotic series directly; smaller
// arguments are shifted up by the recurrence.
inline constexpr double kAsymptoticThreshold = 10.0;

// Default relative dead band applied to the sum of |terms| of an evaluation.
inline constexpr double kDefaultDeadBand = 1e-13;

}  // namespace monocert
