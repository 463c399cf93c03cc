#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdlib>

#include "monocert/cm_verify.hpp"
#include "monocert/paper_functions.hpp"

using namespace monocert;

namespace {

const GridSpec kXGrid = make_grid(0.05, 100.0, 200, GridSpec::Scale::logarithmic);
const GridSpec kTGrid = make_grid(1e-3, 100.0, 150, GridSpec::Scale::logarithmic);

void check_layout(const CMReport& r, const GridSpec& grid, int max_order) {
    std::size_t n = grid.count();
    REQUIRE(r.margins.size() == n * static_cast<std::size_t>(max_order + 1));
    for (int o = 0; o <= max_order; ++o) {
        for (std::size_t j = 0; j < n; ++j) {
            const MarginEntry& e = r.margins[o * n + j];
            CHECK(e.order == o);
            CHECK(e.x == grid.points[j]);
            CHECK(e.band > 0.0);
        }
    }
}

}  // namespace

TEST_CASE("classify_fa certifies complete monotonicity at a = 0") {
    CMReport r = classify_fa(0.0, kXGrid);
    CHECK(r.verdict == Verdict::CompletelyMonotonic);
    CHECK(r.dead_band_hits == 0);
    CHECK(r.violations.empty());
    check_layout(r, kXGrid, 6);
    double min_margin = HUGE_VAL;
    for (const MarginEntry& e : r.margins) {
        CHECK(e.margin >= e.band);
        min_margin = std::min(min_margin, e.margin);
    }
    CHECK(r.worst_witness.margin == min_margin);
    CHECK(r.worst_witness.margin > 0.0);
}

TEST_CASE("classify_fa certifies negative complete monotonicity for a >= 1/2") {
    for (double a : {0.5, 0.7, 1.0, 5.0}) {
        CMReport r = classify_fa(a, kXGrid);
        CHECK(r.verdict == Verdict::NegativeCompletelyMonotonic);
        CHECK(r.dead_band_hits == 0);
        CHECK(r.violations.empty());
        double max_margin = -HUGE_VAL;
        for (const MarginEntry& e : r.margins) {
            CHECK(e.margin <= -e.band);
            max_margin = std::max(max_margin, e.margin);
        }
        CHECK(r.worst_witness.margin == max_margin);
        CHECK(r.worst_witness.margin < 0.0);
    }
}

TEST_CASE("classify_fa reports certified witnesses of both signs in between") {
    for (double a : {0.1, 0.25, 0.4}) {
        CMReport r = classify_fa(a, kXGrid);
        CHECK(r.verdict == Verdict::Neither);
        CHECK(r.dead_band_hits == 0);
        REQUIRE(r.violations.size() == 2);
        CHECK(r.violations[0].margin < 0.0);
        CHECK(r.violations[1].margin > 0.0);
        double worst = std::max(std::abs(r.violations[0].margin),
                                std::abs(r.violations[1].margin));
        CHECK(std::abs(r.worst_witness.margin) == worst);
    }
}

TEST_CASE("classify_fa goes inconclusive when the dead band swallows the margins") {
    ClassifyOptions opt;
    opt.dead_band = 1e2;
    CMReport r = classify_fa(0.5, make_grid(0.5, 50.0, 50, GridSpec::Scale::logarithmic), opt);
    CHECK(r.verdict == Verdict::Inconclusive);
    CHECK(r.dead_band_hits > 0);
    CHECK(!r.violations.empty());
    CHECK(r.violations.size() <= 16);
}

TEST_CASE("classify_fa serial and parallel sweeps are bit-identical") {
    ClassifyOptions serial;
    serial.mode = SweepMode::serial;
    CMReport rs = classify_fa(0.25, kXGrid, serial);
    CMReport rp = classify_fa(0.25, kXGrid);
    REQUIRE(rs.margins.size() == rp.margins.size());
    for (std::size_t i = 0; i < rs.margins.size(); ++i) {
        CHECK(rs.margins[i].margin == rp.margins[i].margin);
        CHECK(rs.margins[i].band == rp.margins[i].band);
    }
    CHECK(rs.verdict == rp.verdict);
}

TEST_CASE("kernel_sign_sweep resolves the sign of phi_a") {
    KernelSweepReport neg = kernel_sign_sweep(0.0, kTGrid);
    CHECK(neg.outcome == KernelSignOutcome::AllNegative);
    CHECK(neg.dead_band_hits == 0);
    REQUIRE(neg.values.size() == kTGrid.count());
    for (const MarginEntry& e : neg.values) CHECK(e.margin < 0.0);

    for (double a : {0.5, 1.0}) {
        KernelSweepReport pos = kernel_sign_sweep(a, kTGrid);
        CHECK(pos.outcome == KernelSignOutcome::AllPositive);
        CHECK(pos.dead_band_hits == 0);
        for (const MarginEntry& e : pos.values) CHECK(e.margin > 0.0);
    }
}

TEST_CASE("kernel_sign_sweep brackets the crossing for intermediate a") {
    const double t_star = 10.2873479080688;
    KernelSweepReport r = kernel_sign_sweep(0.3, kTGrid);
    CHECK(r.outcome == KernelSignOutcome::Mixed);
    CHECK(r.crossing.second - r.crossing.first <= 1e-8);
    CHECK(r.crossing.first - 1e-12 <= t_star);
    CHECK(t_star <= r.crossing.second + 1e-12);
    CHECK(phi_kernel(0.3, r.crossing.first) < 0.0);
    CHECK(phi_kernel(0.3, r.crossing.second) > 0.0);

    KernelSweepReport fine = kernel_sign_sweep(0.3, kTGrid, 1e-13, 1e-10);
    CHECK(fine.crossing.second - fine.crossing.first <= 1e-10);
    CHECK(fine.crossing.first - 1e-12 <= t_star);
    CHECK(t_star <= fine.crossing.second + 1e-12);

    CHECK_THROWS_AS(kernel_sign_sweep(0.3, kTGrid, 0.0), domain_error);
    CHECK_THROWS_AS(kernel_sign_sweep(0.3, kTGrid, 1e-13, 0.0), domain_error);
    CHECK_THROWS_AS(kernel_sign_sweep(-0.1, kTGrid), domain_error);
}

TEST_CASE("threshold_curve_report certifies the threshold curve shape") {
    ThresholdCurveReport r =
        threshold_curve_report(make_grid(1e-3, 100.0, 200, GridSpec::Scale::logarithmic));
    REQUIRE(r.t.size() == 200);
    REQUIRE(r.value.size() == 200);
    CHECK(r.strictly_decreasing);
    CHECK(r.in_range);
    CHECK(r.endpoint_low_residual <= 1e-4);
    CHECK(r.value_at_high < 0.08);

    CHECK_THROWS_AS(
        threshold_curve_report(make_grid(1e-3, 100.0, 99, GridSpec::Scale::logarithmic)),
        domain_error);
    CHECK_THROWS_AS(
        threshold_curve_report(make_grid(0.01, 100.0, 150, GridSpec::Scale::logarithmic)),
        domain_error);
    CHECK_THROWS_AS(
        threshold_curve_report(make_grid(1e-3, 50.0, 150, GridSpec::Scale::logarithmic)),
        domain_error);
}

TEST_CASE("remark_criterion_check reads the difference chain plus tail signs") {
    GridSpec grid = make_grid(0.1, 50.0, 40, GridSpec::Scale::logarithmic);
    RemarkOptions opt;

    CMReport cm = remark_criterion_check(0.0, grid, opt);
    CHECK(cm.verdict == Verdict::CompletelyMonotonic);
    CHECK(cm.note == "finite-order evidence");
    REQUIRE(cm.margins.size() == grid.count() * 6 + 7);
    for (std::size_t i = 0; i < grid.count() * 6; ++i) {
        CHECK(cm.margins[i].order == static_cast<int>(i / grid.count()));
        CHECK(cm.margins[i].margin < 0.0);  // reversed chain
    }
    for (std::size_t i = grid.count() * 6; i < cm.margins.size(); ++i) {
        CHECK(cm.margins[i].x == opt.limit_x);
    }

    CMReport neg = remark_criterion_check(0.5, grid, opt);
    CHECK(neg.verdict == Verdict::NegativeCompletelyMonotonic);
    CHECK(remark_criterion_check(1.0, grid, opt).verdict ==
          Verdict::NegativeCompletelyMonotonic);

    CMReport neither = remark_criterion_check(0.25, grid, opt);
    CHECK(neither.verdict == Verdict::Neither);
    REQUIRE(neither.violations.size() == 2);
    CHECK(neither.violations[0].margin < 0.0);
    CHECK(neither.violations[1].margin > 0.0);
}

TEST_CASE("remark_criterion_check validates its options") {
    GridSpec grid = make_grid(1.0, 10.0, 5, GridSpec::Scale::linear);
    RemarkOptions bad;
    bad.alpha = 0.0;
    CHECK_THROWS_AS(remark_criterion_check(0.0, grid, bad), domain_error);
    bad = {};
    bad.max_order = 0;
    CHECK_THROWS_AS(remark_criterion_check(0.0, grid, bad), domain_error);
    bad = {};
    bad.max_order = 8;
    CHECK_THROWS_AS(remark_criterion_check(0.0, grid, bad), domain_error);
    bad = {};
    bad.dead_band = 0.0;
    CHECK_THROWS_AS(remark_criterion_check(0.0, grid, bad), domain_error);
    bad = {};
    bad.limit_x = 0.0;
    CHECK_THROWS_AS(remark_criterion_check(0.0, grid, bad), domain_error);
}

TEST_CASE("verify_series_claims certifies the integer coefficient claims") {
    auto claims = verify_series_claims(1000);
    REQUIRE(claims.size() == 3);

    CHECK(claims[0].claim_id == "series-coeff-half");
    CHECK(claims[0].index_lo == 5);
    CHECK(claims[0].index_hi == 1000);
    CHECK(claims[0].holds);
    CHECK(!claims[0].first_violation.has_value());
    CHECK(claims[0].min_margin == 4.0);

    CHECK(claims[1].claim_id == "series-coeff-zero");
    CHECK(claims[1].index_lo == 4);
    CHECK(claims[1].holds);
    CHECK(claims[1].min_margin == 12.0);

    CHECK(claims[2].claim_id == "series-coeff-threshold");
    CHECK(claims[2].index_lo == 8);
    CHECK(claims[2].holds);
    CHECK(claims[2].min_margin == 56.0);

    auto edge = verify_series_claims(8);
    REQUIRE(edge.size() == 3);
    for (const auto& c : edge) {
        CHECK(c.holds);
        CHECK(c.index_hi == 8);
    }
    CHECK(edge[2].min_margin == 56.0);

    CHECK_THROWS_AS(verify_series_claims(7), domain_error);
}

TEST_CASE("series_vs_direct ties the exact series to the kernel") {
    for (double a : {0.0, 0.5}) {
        for (double t : {0.1, 0.5, 1.0}) {
            SeriesComparison c = series_vs_direct(a, t);
            CHECK(c.rel_err <= 1e-10);
            CHECK(c.abs_err == std::abs(c.series_value - c.direct_value));
            CHECK(c.direct_value == phi_kernel(a, t));
        }
    }
    CHECK_THROWS_AS(series_vs_direct(0.3, 0.5), domain_error);
    CHECK_THROWS_AS(series_vs_direct(0.0, 1.5), domain_error);
    CHECK_THROWS_AS(series_vs_direct(0.0, 0.0), domain_error);
    CHECK_THROWS_AS(series_vs_direct(0.0, 0.5, 20), domain_error);
}

TEST_CASE("logcm_difference_check classifies the forward difference") {
    GridSpec grid = make_grid(0.1, 100.0, 120, GridSpec::Scale::logarithmic);
    CMReport cm = logcm_difference_check(0.0, 0.0, 1.0, grid);
    CHECK(cm.verdict == Verdict::CompletelyMonotonic);
    check_layout(cm, grid, 6);

    CHECK(logcm_difference_check(1.0, 0.0, 1.0, grid).verdict ==
          Verdict::NegativeCompletelyMonotonic);
    CHECK(logcm_difference_check(0.25, 0.0, 1.0, grid).verdict == Verdict::Neither);

    CHECK_THROWS_AS(logcm_difference_check(0.0, 1.0, 0.0, grid), domain_error);
    CHECK_THROWS_AS(logcm_difference_check(0.0, 0.5, 0.5, grid), domain_error);
    CHECK_THROWS_AS(logcm_difference_check(0.0, -1.0, 1.0, grid), domain_error);
}

TEST_CASE("verdict strings are stable") {
    CHECK(std::string(to_string(Verdict::CompletelyMonotonic)) == "CompletelyMonotonic");
    CHECK(std::string(to_string(Verdict::NegativeCompletelyMonotonic)) ==
          "NegativeCompletelyMonotonic");
    CHECK(std::string(to_string(Verdict::Neither)) == "Neither");
    CHECK(std::string(to_string(Verdict::Inconclusive)) == "Inconclusive");
    CHECK(std::string(to_string(BoundSide::lower)) == "lower");
    CHECK(std::string(to_string(BoundSide::upper)) == "upper");
}
