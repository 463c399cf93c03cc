#include "monocert/cm_verify.hpp"

#include <algorithm>
#include <cmath>

#include <boost/multiprecision/cpp_int.hpp>

#include "monocert/paper_functions.hpp"
#include "monocert/special_functions.hpp"

namespace monocert {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::CompletelyMonotonic: return "CompletelyMonotonic";
        case Verdict::NegativeCompletelyMonotonic: return "NegativeCompletelyMonotonic";
        case Verdict::Neither: return "Neither";
        default: return "Inconclusive";
    }
}

const char* to_string(BoundSide side) { return side == BoundSide::lower ? "lower" : "upper"; }

namespace {

enum class Cert { positive, negative, dead };

Cert certify(const MarginEntry& e) {
    if (std::abs(e.margin) < e.band) return Cert::dead;
    return e.margin > 0.0 ? Cert::positive : Cert::negative;
}

WitnessRef as_witness(const MarginEntry& e) { return {e.order, e.x, e.margin}; }

// Verdict from the sign pattern: both certified signs present -> Neither,
// any dead-band sample otherwise -> Inconclusive, else the uniform sign.
void finalize_classification(CMReport& r) {
    const MarginEntry* min_e = nullptr;
    const MarginEntry* max_e = nullptr;
    const MarginEntry* least_certified = nullptr;
    std::size_t pos = 0, neg = 0, dead = 0;
    for (const MarginEntry& e : r.margins) {
        if (!min_e || e.margin < min_e->margin) min_e = &e;
        if (!max_e || e.margin > max_e->margin) max_e = &e;
        double ratio = e.band > 0.0 ? std::abs(e.margin) / e.band : HUGE_VAL;
        if (!least_certified ||
            ratio < std::abs(least_certified->margin) / least_certified->band)
            least_certified = &e;
        switch (certify(e)) {
            case Cert::positive: ++pos; break;
            case Cert::negative: ++neg; break;
            case Cert::dead: ++dead; break;
        }
    }
    r.dead_band_hits = dead;
    if (pos > 0 && neg > 0) {
        r.verdict = Verdict::Neither;
        r.violations.push_back(as_witness(*min_e));  // violates f CM
        r.violations.push_back(as_witness(*max_e));  // violates -f CM
        r.worst_witness = std::abs(min_e->margin) >= std::abs(max_e->margin)
                              ? as_witness(*min_e)
                              : as_witness(*max_e);
    } else if (dead > 0) {
        r.verdict = Verdict::Inconclusive;
        for (const MarginEntry& e : r.margins) {
            if (certify(e) == Cert::dead && r.violations.size() < 16)
                r.violations.push_back(as_witness(e));
        }
        r.worst_witness = as_witness(*least_certified);
    } else if (pos > 0) {
        r.verdict = Verdict::CompletelyMonotonic;
        r.worst_witness = as_witness(*min_e);
    } else {
        r.verdict = Verdict::NegativeCompletelyMonotonic;
        r.worst_witness = as_witness(*max_e);
    }
}

}  // namespace

CMReport classify_fa(double a, const GridSpec& grid, const ClassifyOptions& opt) {
    (void)ShiftParam(a);
    CMReport r;
    r.min_order = 0;
    r.max_order = opt.max_order;
    r.margins = sweep_fa_margins(a, grid.points, 0, opt.max_order, opt.dead_band, opt.mode);
    finalize_classification(r);
    return r;
}

CMReport logcm_difference_check(double a, double s, double t, const GridSpec& grid,
                                const ClassifyOptions& opt) {
    (void)ShiftParam(a);
    CMReport r;
    r.min_order = 0;
    r.max_order = opt.max_order;
    r.margins =
        sweep_difference_margins(a, s, t, grid.points, 0, opt.max_order, opt.dead_band, opt.mode);
    finalize_classification(r);
    return r;
}

KernelSweepReport kernel_sign_sweep(double a, const GridSpec& t_grid, double dead_band,
                                    double bisection_tol) {
    (void)ShiftParam(a);
    detail::require(dead_band > 0.0 && bisection_tol > 0.0,
                    "kernel_sign_sweep: tolerances must be > 0");
    KernelSweepReport r;
    r.values.reserve(t_grid.points.size());
    std::size_t pos = 0, neg = 0;
    for (double t : t_grid.points) {
        MarginEval e = phi_kernel_margin(a, t);
        MarginEntry entry{0, t, e.margin, dead_band * e.scale};
        switch (certify(entry)) {
            case Cert::positive: ++pos; break;
            case Cert::negative: ++neg; break;
            case Cert::dead: ++r.dead_band_hits; break;
        }
        r.values.push_back(entry);
    }
    if (pos > 0 && neg == 0 && r.dead_band_hits == 0) {
        r.outcome = KernelSignOutcome::AllPositive;
    } else if (neg > 0 && pos == 0 && r.dead_band_hits == 0) {
        r.outcome = KernelSignOutcome::AllNegative;
    } else {
        r.outcome = KernelSignOutcome::Mixed;
        // bracket the first sign flip, then bisect to width <= bisection_tol
        double lo = t_grid.lo(), hi = t_grid.hi();
        for (std::size_t i = 0; i + 1 < r.values.size(); ++i) {
            if ((r.values[i].margin > 0.0) != (r.values[i + 1].margin > 0.0)) {
                lo = r.values[i].x;
                hi = r.values[i + 1].x;
                break;
            }
        }
        bool lo_pos = phi_kernel(a, lo) > 0.0;
        while (hi - lo > bisection_tol) {
            double mid = 0.5 * (lo + hi);
            if ((phi_kernel(a, mid) > 0.0) == lo_pos)
                lo = mid;
            else
                hi = mid;
        }
        r.crossing = {lo, hi};
    }
    return r;
}

ThresholdCurveReport threshold_curve_report(const GridSpec& t_grid) {
    detail::require(t_grid.count() >= 100, "threshold_curve_report: need >= 100 points");
    detail::require(t_grid.lo() <= 1e-3 * (1.0 + 1e-9) && t_grid.hi() >= 1e2 * (1.0 - 1e-9),
                    "threshold_curve_report: grid must span [1e-3, 1e2]");
    ThresholdCurveReport r;
    r.t = t_grid.points;
    r.value.reserve(r.t.size());
    for (double t : r.t) r.value.push_back(phi_threshold(t));
    r.strictly_decreasing = true;
    r.in_range = true;
    for (std::size_t i = 0; i < r.value.size(); ++i) {
        if (i > 0 && !(r.value[i] < r.value[i - 1])) r.strictly_decreasing = false;
        if (!(r.value[i] > 0.0 && r.value[i] < 0.5)) r.in_range = false;
    }
    r.endpoint_low_residual = std::abs(r.value.front() - 0.5);
    r.value_at_high = r.value.back();
    return r;
}

CMReport remark_criterion_check(double a, const GridSpec& grid, const RemarkOptions& opt) {
    (void)ShiftParam(a);
    detail::require(std::isfinite(opt.alpha) && opt.alpha > 0.0,
                    "remark_criterion_check: alpha must be > 0");
    detail::require(opt.max_order >= 1 && opt.max_order <= 7,
                    "remark_criterion_check: max_order must be in [1, 7]");
    detail::require(opt.dead_band > 0.0, "remark_criterion_check: dead_band must be > 0");
    (void)PositiveReal(opt.limit_x);
    CMReport r;
    r.min_order = 0;
    r.max_order = opt.max_order;
    r.note = "finite-order evidence";
    // chain margins q_k = (-1)^k [f^(k+1)(x) - f^(k+1)(x+alpha)], k < max_order
    for (int k = 0; k < opt.max_order; ++k) {
        for (double x : grid.points) {
            MarginEval u = fa_margin(a, x + opt.alpha, k + 1);
            MarginEval v = fa_margin(a, x, k + 1);
            r.margins.push_back({k, x, u.margin - v.margin, opt.dead_band * (u.scale + v.scale)});
        }
    }
    std::size_t chain_count = r.margins.size();
    // tail sign samples (-1)^i f^(i)(limit_x), i = 0..max_order
    for (int i = 0; i <= opt.max_order; ++i) {
        MarginEval e = fa_margin(a, opt.limit_x, i);
        r.margins.push_back({i, opt.limit_x, e.margin, opt.dead_band * e.scale});
    }
    std::size_t pos = 0, neg = 0, dead = 0;
    const MarginEntry* min_e = nullptr;
    const MarginEntry* max_e = nullptr;
    for (std::size_t i = 0; i < chain_count; ++i) {
        const MarginEntry& e = r.margins[i];
        if (!min_e || e.margin < min_e->margin) min_e = &e;
        if (!max_e || e.margin > max_e->margin) max_e = &e;
        switch (certify(e)) {
            case Cert::positive: ++pos; break;
            case Cert::negative: ++neg; break;
            case Cert::dead: ++dead; break;
        }
    }
    r.dead_band_hits = dead;
    bool tails_ok_neg = true;  // need (-1)^i f^(i)(limit_x) <= band
    bool tails_ok_pos = true;  // need (-1)^i f^(i)(limit_x) >= -band
    for (std::size_t i = chain_count; i < r.margins.size(); ++i) {
        const MarginEntry& e = r.margins[i];
        if (e.margin > e.band) tails_ok_neg = false;
        if (e.margin < -e.band) tails_ok_pos = false;
    }
    if (pos == chain_count && chain_count > 0 && tails_ok_neg) {
        // natural chain certifies the -f derivative ordering
        r.verdict = Verdict::NegativeCompletelyMonotonic;
        r.worst_witness = as_witness(*min_e);
    } else if (neg == chain_count && chain_count > 0 && tails_ok_pos) {
        r.verdict = Verdict::CompletelyMonotonic;
        r.worst_witness = as_witness(*max_e);
    } else if (pos > 0 && neg > 0) {
        r.verdict = Verdict::Neither;
        r.violations.push_back(as_witness(*min_e));
        r.violations.push_back(as_witness(*max_e));
        r.worst_witness = std::abs(min_e->margin) >= std::abs(max_e->margin)
                              ? as_witness(*min_e)
                              : as_witness(*max_e);
    } else {
        r.verdict = Verdict::Inconclusive;
        for (std::size_t i = 0; i < chain_count && r.violations.size() < 16; ++i) {
            if (certify(r.margins[i]) == Cert::dead) r.violations.push_back(as_witness(r.margins[i]));
        }
        r.worst_witness = min_e ? as_witness(*min_e) : WitnessRef{};
    }
    return r;
}

std::vector<ClaimResult> verify_series_claims(long long max_index) {
    detail::require(max_index >= 8, "verify_series_claims: max_index must be >= 8");
    using boost::multiprecision::cpp_int;
    std::vector<ClaimResult> out;
    auto run = [&](const char* id, long long lo, bool strict, auto value) {
        ClaimResult c;
        c.claim_id = id;
        c.index_lo = lo;
        c.index_hi = max_index;
        cpp_int min_v;
        bool first = true;
        for (long long i = lo; i <= max_index; ++i) {
            cpp_int v = value(i);
            bool ok = strict ? v > 0 : v >= 0;
            if (!ok && !c.first_violation) c.first_violation = i;
            if (first || v < min_v) {
                min_v = v;
                first = false;
            }
        }
        c.holds = !c.first_violation.has_value();
        c.min_margin = min_v.convert_to<double>();
        out.push_back(std::move(c));
    };
    run("series-coeff-half", 5, true, [](long long i) {
        return (cpp_int(3) << (i - 2)) - cpp_int(i) * i + i;
    });
    run("series-coeff-zero", 4, false,
        [](long long i) { return cpp_int(i - 3) * (cpp_int(i) * i - 4); });
    run("series-coeff-threshold", 8, true, [](long long i) {
        cpp_int i2 = cpp_int(i) * i;
        return (cpp_int(1) << (i - 1)) * (i2 - 13 * i + 24) + i2 * i2 - 6 * i2 * i + 19 * i2 -
               14 * i - 24;
    });
    return out;
}

SeriesComparison series_vs_direct(double a, double t, int terms) {
    (void)KernelPoint(t);
    detail::require(a == 0.0 || a == 0.5, "series_vs_direct: a must be 0 or 0.5");
    detail::require(t <= 1.0, "series_vs_direct: t must be in (0, 1]");
    detail::require(terms >= 30, "series_vs_direct: need >= 30 terms");
    SeriesComparison r;
    KahanSum s;
    if (a == 0.0) {
        // -(1/(12 e^t)) sum_{i>=4} (i-3)(i^2-4)/i! t^{i-1}
        double fac = 24.0;      // i!
        double tp = t * t * t;  // t^{i-1}
        for (int i = 4; i < 4 + terms; ++i) {
            double di = i;
            s.add((di - 3.0) * (di * di - 4.0) / fac * tp);
            tp *= t;
            fac *= i + 1.0;
        }
        r.series_value = -std::exp(-t) / 12.0 * s.value();
    } else {
        // (1/(12 e^t)) sum_{i>=5} (i-2)(3*2^{i-2} - i^2 + i)/(i! 2^{i-3}) t^{i-1}
        double fac = 120.0;         // i!
        double pw = 4.0;            // 2^{i-3}
        double tp = t * t * t * t;  // t^{i-1}
        for (int i = 5; i < 5 + terms; ++i) {
            double di = i;
            s.add((di - 2.0) * (6.0 * pw - di * di + di) / (fac * pw) * tp);
            tp *= t;
            fac *= i + 1.0;
            pw *= 2.0;
        }
        r.series_value = std::exp(-t) / 12.0 * s.value();
    }
    r.direct_value = phi_kernel(a, t);
    r.abs_err = std::abs(r.series_value - r.direct_value);
    r.rel_err = r.abs_err / std::max(std::abs(r.direct_value), 1e-300);
    return r;
}

}  // namespace monocert
