#pragma once

#include <utility>
#include <vector>

#include "monocert/domain.hpp"
#include "monocert/grid.hpp"
#include "monocert/sweep.hpp"

namespace monocert {

struct ClassifyOptions {
    int max_order = 6;  // 0 <= max_order <= 7
    double dead_band = 1e-13;
    SweepMode mode = SweepMode::parallel;
};

// Classify f_a by the sign pattern of its CM margins (-1)^n f_a^(n)(x) over
// the grid and orders 0..max_order.
CMReport classify_fa(double a, const GridSpec& grid, const ClassifyOptions& opt = {});

enum class KernelSignOutcome { AllPositive, AllNegative, Mixed };

struct KernelSweepReport {
    KernelSignOutcome outcome = KernelSignOutcome::Mixed;
    std::vector<MarginEntry> values;  // phi_a over the grid (order 0)
    // sign-change bracket refined by bisection when outcome == Mixed
    std::pair<double, double> crossing{0.0, 0.0};
    std::size_t dead_band_hits = 0;
};

KernelSweepReport kernel_sign_sweep(double a, const GridSpec& t_grid,
                                    double dead_band = 1e-13, double bisection_tol = 1e-8);

struct ThresholdCurveReport {
    std::vector<double> t;
    std::vector<double> value;  // phi_threshold(t)
    bool strictly_decreasing = false;
    bool in_range = false;                // all values in (0, 1/2)
    double endpoint_low_residual = 0.0;   // |value.front() - 1/2|
    double value_at_high = 0.0;           // value.back()
};

// Requires >= 100 points spanning [1e-3, 1e2].
ThresholdCurveReport threshold_curve_report(const GridSpec& t_grid);

struct RemarkOptions {
    double alpha = 1.0;   // step of the difference, > 0
    int max_order = 6;    // chain uses derivatives 1..max_order
    double dead_band = 1e-13;
    double limit_x = 1e4;
    SweepMode mode = SweepMode::parallel;
};

// Finite-order difference-chain criterion: q_k(x) =
// (-1)^k [f_a^(k+1)(x) - f_a^(k+1)(x+alpha)], k = 0..max_order-1, plus the
// tail sign conditions (-1)^i f_a^(i)(limit_x) for i = 0..max_order.  A
// certified q >= band chain with compatible tail signs supports negative
// complete monotonicity; the reversed chain supports complete monotonicity.
// Margin entries list the q_k samples first, then the tail samples at
// x = limit_x.  The report is labeled finite-order evidence.
CMReport remark_criterion_check(double a, const GridSpec& grid, const RemarkOptions& opt = {});

// Exact integer coefficient claims behind the phi_0 / phi_{1/2} series and
// the threshold slope, checked with arbitrary-precision integers:
//   series-coeff-half:      3*2^(i-2) - i^2 + i > 0        for i >= 5
//   series-coeff-zero:      (i-3)(i^2-4) >= 0              for i >= 4
//   series-coeff-threshold: 2^(i-1)(i^2-13i+24)
//                             + i^4-6i^3+19i^2-14i-24 > 0  for i >= 8
std::vector<ClaimResult> verify_series_claims(long long max_index);

struct SeriesComparison {
    double series_value = 0.0;
    double direct_value = 0.0;
    double abs_err = 0.0;
    double rel_err = 0.0;
};

// Exact-coefficient exponential series for phi_0 or phi_{1/2} (a must be 0 or
// 0.5) against the direct kernel at t.
SeriesComparison series_vs_direct(double a, double t, int terms = 40);

// CM margins of the difference f_a(x+s) - f_a(x+t), s < t, over the grid.
CMReport logcm_difference_check(double a, double s, double t, const GridSpec& grid,
                                const ClassifyOptions& opt = {});

}  // namespace monocert
