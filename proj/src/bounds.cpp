#include "monocert/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "monocert/constants.hpp"
#include "monocert/paper_functions.hpp"
#include "monocert/special_functions.hpp"

namespace monocert {

double log_gamma_bound(double x, double c) {
    (void)PositiveReal(x);
    (void)ShiftParam(c);
    KahanSum s;
    s.add(kHalfLn2Pi);
    s.add(-x);
    s.add((x - 0.5) * std::log(x));
    s.add(polygamma(1, x + c) / 12.0);
    return s.value();
}

BoundPair gamma_bounds(double x, double alpha, double beta) {
    detail::require(alpha >= 0.0 && alpha < 0.5, "gamma_bounds: alpha must be in [0, 1/2)");
    detail::require(std::isfinite(beta) && beta >= 0.5, "gamma_bounds: beta must be >= 1/2");
    BoundPair b;
    b.alpha = alpha;
    b.beta = beta;
    b.lower = log_gamma_bound(x, beta);
    b.upper = log_gamma_bound(x, alpha);
    b.target = ln_gamma(x);
    return b;
}

double log_ratio_bound(double x, double s, double t, double c) {
    (void)ShiftParam(c);
    detail::require(std::isfinite(s) && std::isfinite(t) && s >= 0.0 && s < t,
                    "log_ratio_bound: need 0 <= s < t");
    detail::require(std::isfinite(x) && x + s > 0.0, "log_ratio_bound: need x + s > 0");
    return (t - s) + (polygamma(1, x + s + c) - polygamma(1, x + t + c)) / 12.0;
}

double log_ratio_target(double x, double s, double t) {
    detail::require(std::isfinite(s) && std::isfinite(t) && s >= 0.0 && s < t,
                    "log_ratio_target: need 0 <= s < t");
    detail::require(std::isfinite(x) && x + s > 0.0, "log_ratio_target: need x + s > 0");
    KahanSum k;
    k.add(ln_gamma(x + s));
    k.add(-ln_gamma(x + t));
    k.add((x + t - 0.5) * std::log(x + t));
    k.add(-(x + s - 0.5) * std::log(x + s));
    return k.value();
}

BoundPair gamma_ratio_bounds(double x, double s, double t, double alpha, double beta) {
    detail::require(beta >= 0.0 && beta < 0.5, "gamma_ratio_bounds: beta must be in [0, 1/2)");
    detail::require(std::isfinite(alpha) && alpha >= 0.5,
                    "gamma_ratio_bounds: alpha must be >= 1/2");
    BoundPair b;
    b.alpha = alpha;
    b.beta = beta;
    b.s = s;
    b.t = t;
    b.lower = log_ratio_bound(x, s, t, alpha);
    b.upper = log_ratio_bound(x, s, t, beta);
    b.target = log_ratio_target(x, s, t);
    return b;
}

CounterexampleSearch gamma_bound_counterexample(BoundSide side, double a, const GridSpec& search,
                                                double dead_band, double bisect_tol) {
    (void)ShiftParam(a);
    detail::require(dead_band > 0.0 && bisect_tol > 0.0,
                    "gamma_bound_counterexample: tolerances must be > 0");
    if (side == BoundSide::lower)
        detail::require(a < 0.5, "gamma_bound_counterexample: lower side needs a < 1/2");
    else
        detail::require(a > 0.0, "gamma_bound_counterexample: upper side needs a > 0");
    // lnGamma - lnBound = -f_a, so margin = -f_a (lower) or +f_a (upper)
    double sign = side == BoundSide::lower ? -1.0 : 1.0;
    auto margin_at = [&](double x) {
        MarginEval e = fa_margin(a, x, 0);
        return MarginEval{sign * e.margin, e.scale};
    };
    CounterexampleSearch res;
    res.searched_lo = search.lo();
    res.searched_hi = search.hi();
    // lower-side violations live at large x, upper-side ones at small x;
    // scan geometrically from the benign end toward the suspect end
    double factor = side == BoundSide::lower ? 2.0 : 0.5;
    double from = side == BoundSide::lower ? res.searched_lo : res.searched_hi;
    double to = side == BoundSide::lower ? res.searched_hi : res.searched_lo;
    double prev = 0.0;
    bool have_prev = false;
    double x = from;
    while (true) {
        MarginEval m = margin_at(x);
        if (m.margin <= -dead_band * m.scale) {
            // bisect [prev, x] in log space; keep the violating end certified
            double bad = x;
            if (have_prev) {
                double ok = prev;
                while (std::abs(bad - ok) / std::min(bad, ok) > bisect_tol) {
                    double mid = std::sqrt(bad * ok);
                    MarginEval mm = margin_at(mid);
                    if (mm.margin <= -dead_band * mm.scale)
                        bad = mid;
                    else
                        ok = mid;
                }
            }
            res.found = Counterexample{bad, side, margin_at(bad).margin};
            return res;
        }
        prev = x;
        have_prev = true;
        if (x == to) break;
        x *= factor;
        if ((side == BoundSide::lower && x > to) || (side == BoundSide::upper && x < to)) x = to;
    }
    res.exhausted = true;
    return res;
}

namespace {

void fold_point(ClaimResult& c, long long idx, double margin) {
    if (idx == c.index_lo || margin < c.min_margin) c.min_margin = margin;
    if (margin <= 0.0 && !c.first_violation) c.first_violation = idx;
}

}  // namespace

std::vector<ClaimResult> lemma_inequalities_check(const GridSpec& grid,
                                                  const std::vector<int>& orders) {
    detail::require(!orders.empty(), "lemma_inequalities_check: orders must be non-empty");
    for (int i : orders)
        detail::require(i >= 1 && i <= 6, "lemma_inequalities_check: orders must be in [1, 6]");
    std::vector<ClaimResult> out;
    auto make = [&](std::string id) {
        ClaimResult c;
        c.claim_id = std::move(id);
        c.index_lo = 1;
        c.index_hi = static_cast<long long>(grid.count());
        return c;
    };
    ClaimResult envelope = make("digamma-envelope");
    std::vector<ClaimResult> windows;
    for (int i : orders) windows.push_back(make("polygamma-window-" + std::to_string(i)));
    ClaimResult shift = make("trigamma-shift");
    long long idx = 0;
    for (double x : grid.points) {
        ++idx;
        double lx = std::log(x);
        double psi = digamma(x);
        fold_point(envelope, idx, std::min(psi - (lx - 1.0 / x), (lx - 0.5 / x) - psi));
        for (std::size_t j = 0; j < orders.size(); ++j) {
            int i = orders[j];
            double head = 1.0, fac = 1.0;
            for (int m = 2; m < i; ++m) head *= m;  // (i-1)!
            fac = head * i;                         // i!
            double xi = std::pow(x, i);
            double mag = std::abs(polygamma(i, x));
            double lo = head / xi + fac / (2.0 * xi * x);
            double hi = head / xi + fac / (xi * x);
            fold_point(windows[j], idx, std::min(mag - lo, hi - mag));
        }
        double u = 1.0 / x - polygamma(1, x + 1.0);
        double base = 1.0 / (2.0 * x * x) - 1.0 / (6.0 * x * x * x);
        double cap = base + 1.0 / (30.0 * std::pow(x, 5));
        fold_point(shift, idx, std::min(u - base, cap - u));
    }
    auto finish = [](ClaimResult& c) { c.holds = !c.first_violation.has_value(); };
    finish(envelope);
    out.push_back(std::move(envelope));
    for (auto& w : windows) {
        finish(w);
        out.push_back(std::move(w));
    }
    finish(shift);
    out.push_back(std::move(shift));
    return out;
}

std::vector<ClaimResult> asymptotic_limit_checks(double x, double tolerance) {
    detail::require(std::isfinite(x) && x >= 100.0, "asymptotic_limit_checks: x must be >= 100");
    detail::require(tolerance > 0.0, "asymptotic_limit_checks: tolerance must be > 0");
    std::vector<ClaimResult> out;
    auto push = [&](std::string id, double value, double expected) {
        ClaimResult c;
        c.claim_id = std::move(id);
        c.index_lo = 0;
        c.index_hi = 0;
        c.min_margin = tolerance - std::abs(value - expected);
        c.holds = c.min_margin > 0.0;
        if (!c.holds) c.first_violation = 0;
        out.push_back(std::move(c));
    };
    push("trigamma-tail", x * x * (polygamma(1, x) - 1.0 / x), 0.5);
    push("digamma-tail", x * (std::log(x) - digamma(x)), 0.5);
    for (double a : {0.0, 0.25, 0.5, 1.0}) {
        char id[32];
        std::snprintf(id, sizeof id, "fa-tail-%g", a);
        push(id, x * x * f_a(a, x), (1.0 - 2.0 * a) / 24.0);
    }
    return out;
}

}  // namespace monocert
