#include "monocert/cli_app.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "monocert/bounds.hpp"
#include "monocert/cm_verify.hpp"
#include "monocert/grid.hpp"
#include "monocert/paper_functions.hpp"
#include "monocert/quadrature.hpp"
#include "monocert/report.hpp"
#include "monocert/special_functions.hpp"
#include "monocert/sweep.hpp"

namespace monocert::cli {

namespace {

std::string cert_verdict(const MarginEntry& e) {
    if (std::abs(e.margin) < e.band) return "dead-band";
    return e.margin > 0.0 ? "positive" : "negative";
}

// margin = (-1)^order * value, so recover the raw derivative value
double raw_value(const MarginEntry& e) { return e.order % 2 ? -e.margin : e.margin; }

void add_cm_rows(ReportSection& sec, const std::string& series,
                 const std::vector<MarginEntry>& entries, std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
        const MarginEntry& e = entries[i];
        sec.rows.push_back({series, e.order, e.x, raw_value(e), e.margin, cert_verdict(e)});
    }
}

void fold_cm_summary(ReportSummary& sum, const CMReport& r) {
    int n = static_cast<int>(r.margins.size());
    int bad = r.verdict == Verdict::Neither ? static_cast<int>(r.violations.size()) : 0;
    int dead = static_cast<int>(r.dead_band_hits);
    sum.checks_total += n;
    sum.violations += bad;
    sum.inconclusive += dead;
    sum.checks_passed += n - bad - dead;
}

void add_claim_rows(ReportSection& sec, ReportSummary& sum, const std::vector<ClaimResult>& claims,
                    std::optional<double> x = {}) {
    bool all = true;
    for (const ClaimResult& c : claims) {
        ReportRow row;
        row.series = c.claim_id;
        row.x = x;
        row.value = c.min_margin;
        row.margin = c.min_margin;
        row.verdict = c.holds ? "pass" : "fail";
        sec.rows.push_back(std::move(row));
        ++sum.checks_total;
        if (c.holds)
            ++sum.checks_passed;
        else
            ++sum.violations;
        all = all && c.holds;
    }
    sec.verdict = all ? "pass" : "fail";
}

std::string echo_command(int argc, const char* const* argv) {
    std::string cmd = "monocert";
    for (int i = 1; i < argc; ++i) {
        cmd += ' ';
        cmd += argv[i];
    }
    return cmd;
}

struct Options {
    std::string format = "table";
    std::string output;
    bool timing = false;
    bool serial = false;
    std::string fn, grid_text, mode, route = "exp", side;
    double a = 0.0, x = 0.0, s = 0.0, t = 1.0, alpha = -1.0, beta = -1.0, step = 1.0;
    double limit_x = 1e4, dead_band = 1e-13, tolerance = 0.0, bisect_tol = 1e-8;
    double truncation_T = 0.0, series_switch = 0.1;
    int order = 1, min_order = 0, max_order = 6, nodes = 32, terms = 40;
    long long max_index = 1000;
    bool threshold_curve = false, series_check = false;
    bool x_set = false;
};

SweepMode mode_of(const Options& o) { return o.serial ? SweepMode::serial : SweepMode::parallel; }

std::vector<double> points_of(const Options& o) {
    if (!o.grid_text.empty()) return parse_grid(o.grid_text).points;
    detail::require(o.x_set, "provide --x or --grid");
    return {o.x};
}

GridSpec grid_of(const Options& o) {
    detail::require(!o.grid_text.empty(), "provide --grid");
    return parse_grid(o.grid_text);
}

QuadratureConfig quad_of(const Options& o, double default_tol) {
    QuadratureConfig cfg;
    cfg.truncation_T = o.truncation_T;
    cfg.nodes = o.nodes;
    cfg.series_switch = o.series_switch;
    cfg.tolerance = o.tolerance > 0.0 ? o.tolerance : default_tol;
    return cfg;
}

void run_eval(const Options& o, ReportDocument& doc) {
    ReportSection sec;
    sec.name = "eval";
    sec.verdict = "pass";
    bool theta_check = o.fn == "theta_representation_check";
    double check_tol = o.tolerance > 0.0 ? o.tolerance : 1e-9;
    for (double x : points_of(o)) {
        ReportRow row;
        row.series = o.fn;
        row.x = x;
        row.verdict = "ok";
        if (o.fn == "ln_gamma") {
            row.value = ln_gamma(x);
        } else if (o.fn == "digamma") {
            row.value = digamma(x);
        } else if (o.fn == "polygamma") {
            row.order = o.order;
            row.value = polygamma(o.order, x);
        } else if (o.fn == "F_a") {
            row.value = F_a(o.a, x);
        } else if (o.fn == "f_a") {
            row.value = f_a(o.a, x);
        } else if (o.fn == "g_a") {
            row.value = g_a(o.a, x);
        } else if (o.fn == "f_a_derivative") {
            row.order = o.order;
            row.value = f_a_derivative(o.a, x, o.order);
        } else if (o.fn == "difference_closed_form") {
            row.value = difference_closed_form(o.a, x);
        } else if (o.fn == "binet_theta") {
            ThetaRoute route =
                o.route == "arctan" ? ThetaRoute::arctan_kernel : ThetaRoute::exp_kernel;
            ThetaResult r = binet_theta(x, quad_of(o, 1e-10), route);
            row.value = r.value;
            row.margin = r.config.tail_bound;
            row.verdict = "converged";
        } else if (theta_check) {
            row.value = theta_representation_check(o.a, x, quad_of(o, 1e-10));
            row.margin = check_tol - row.value;
            row.verdict = row.value <= check_tol ? "pass" : "fail";
        } else if (o.fn == "phi_kernel") {
            row.value = phi_kernel(o.a, x, o.series_switch);
        } else if (o.fn == "phi1") {
            row.value = phi1(x);
        } else if (o.fn == "phi2") {
            row.value = phi2(x);
        } else if (o.fn == "phi_threshold") {
            row.value = phi_threshold(x);
        } else if (o.fn == "laplace_phi") {
            QuadratureConfig cfg = quad_of(o, 1e-8);
            row.value = laplace_phi(o.a, x, cfg);
            row.verdict = "converged";
        } else {
            throw domain_error("eval: unknown --fn");
        }
        ++doc.summary.checks_total;
        if (row.verdict == "fail") {
            ++doc.summary.violations;
            sec.verdict = "fail";
        } else {
            ++doc.summary.checks_passed;
        }
        sec.rows.push_back(std::move(row));
    }
    doc.sections.push_back(std::move(sec));
}

void run_kernel(const Options& o, ReportDocument& doc) {
    if (o.threshold_curve) {
        ThresholdCurveReport r = threshold_curve_report(grid_of(o));
        ReportSection sec;
        sec.name = "threshold-curve";
        bool pass = r.strictly_decreasing && r.in_range;
        sec.verdict = pass ? "pass" : "fail";
        sec.note = std::string("strictly_decreasing=") + (r.strictly_decreasing ? "yes" : "no") +
                   " in_range=" + (r.in_range ? "yes" : "no") +
                   " endpoint_low_residual=" + format_double(r.endpoint_low_residual) +
                   " value_at_high=" + format_double(r.value_at_high);
        for (std::size_t i = 0; i < r.t.size(); ++i)
            sec.rows.push_back({"phi-threshold", {}, r.t[i], r.value[i], {}, "ok"});
        ++doc.summary.checks_total;
        if (pass)
            ++doc.summary.checks_passed;
        else
            ++doc.summary.violations;
        doc.sections.push_back(std::move(sec));
        return;
    }
    KernelSweepReport r = kernel_sign_sweep(o.a, grid_of(o), o.dead_band, o.bisect_tol);
    ReportSection sec;
    sec.name = "kernel-sign";
    switch (r.outcome) {
        case KernelSignOutcome::AllPositive: sec.verdict = "AllPositive"; break;
        case KernelSignOutcome::AllNegative: sec.verdict = "AllNegative"; break;
        default: sec.verdict = "Mixed"; break;
    }
    for (const MarginEntry& e : r.values)
        sec.rows.push_back({"phi-kernel", {}, e.x, e.margin, e.margin, cert_verdict(e)});
    if (r.outcome == KernelSignOutcome::Mixed) {
        sec.rows.push_back({"crossing-lo", {}, r.crossing.first, phi_kernel(o.a, r.crossing.first),
                            {}, "bracket"});
        sec.rows.push_back({"crossing-hi", {}, r.crossing.second,
                            phi_kernel(o.a, r.crossing.second), {}, "bracket"});
    }
    int n = static_cast<int>(r.values.size());
    doc.summary.checks_total += n;
    doc.summary.inconclusive += static_cast<int>(r.dead_band_hits);
    if (r.outcome == KernelSignOutcome::Mixed) ++doc.summary.violations;
    doc.summary.checks_passed +=
        n - static_cast<int>(r.dead_band_hits) - (r.outcome == KernelSignOutcome::Mixed ? 1 : 0);
    doc.sections.push_back(std::move(sec));
}

void run_verify_cm(const Options& o, ReportDocument& doc) {
    ReportSection sec;
    if (o.mode == "remark") {
        RemarkOptions ro;
        ro.alpha = o.step;
        ro.max_order = o.max_order;
        ro.dead_band = o.dead_band;
        ro.limit_x = o.limit_x;
        ro.mode = mode_of(o);
        CMReport r = remark_criterion_check(o.a, grid_of(o), ro);
        sec.name = "remark-criterion";
        sec.verdict = to_string(r.verdict);
        sec.note = r.note;
        std::size_t chain = r.margins.size() - static_cast<std::size_t>(o.max_order) - 1;
        add_cm_rows(sec, "remark-chain", r.margins, 0, chain);
        add_cm_rows(sec, "remark-tail", r.margins, chain, r.margins.size());
        fold_cm_summary(doc.summary, r);
    } else if (o.mode == "difference") {
        ClassifyOptions co{o.max_order, o.dead_band, mode_of(o)};
        CMReport r = logcm_difference_check(o.a, o.s, o.t, grid_of(o), co);
        sec.name = "difference-cm";
        sec.verdict = to_string(r.verdict);
        sec.note = r.note;
        add_cm_rows(sec, "difference", r.margins, 0, r.margins.size());
        fold_cm_summary(doc.summary, r);
    } else {
        ClassifyOptions co{o.max_order, o.dead_band, mode_of(o)};
        CMReport r = classify_fa(o.a, grid_of(o), co);
        sec.name = "classify";
        sec.verdict = to_string(r.verdict);
        sec.note = r.note;
        add_cm_rows(sec, "f_a", r.margins, 0, r.margins.size());
        fold_cm_summary(doc.summary, r);
    }
    doc.sections.push_back(std::move(sec));
}

void run_verify_claims(const Options& o, ReportDocument& doc) {
    ReportSection sec;
    if (o.series_check) {
        sec.name = "series-vs-direct";
        SeriesComparison r = series_vs_direct(o.a, o.t, o.terms);
        double tol = o.tolerance > 0.0 ? o.tolerance : 1e-8;
        bool pass = r.rel_err <= tol;
        sec.verdict = pass ? "pass" : "fail";
        sec.rows.push_back(
            {"series-vs-direct", {}, o.t, r.series_value, tol - r.rel_err, pass ? "pass" : "fail"});
        ++doc.summary.checks_total;
        if (pass)
            ++doc.summary.checks_passed;
        else
            ++doc.summary.violations;
    } else {
        sec.name = "series-claims";
        add_claim_rows(sec, doc.summary, verify_series_claims(o.max_index));
    }
    doc.sections.push_back(std::move(sec));
}

void run_bounds(const Options& o, ReportDocument& doc) {
    ReportSection sec;
    if (o.mode == "lemmas") {
        sec.name = "lemma-inequalities";
        std::vector<int> orders;
        for (int i = 1; i <= std::min(o.max_order, 6); ++i) orders.push_back(i);
        add_claim_rows(sec, doc.summary, lemma_inequalities_check(grid_of(o), orders));
    } else if (o.mode == "limits") {
        sec.name = "asymptotic-limits";
        double x = o.x_set ? o.x : 1e4;
        double tol = o.tolerance > 0.0 ? o.tolerance : 1e-3;
        add_claim_rows(sec, doc.summary, asymptotic_limit_checks(x, tol), x);
    } else {
        bool ratio = o.mode == "ratio";
        sec.name = ratio ? "ratio-bounds" : "gamma-bounds";
        sec.verdict = "pass";
        for (double x : points_of(o)) {
            BoundPair b;
            if (ratio) {
                double alpha = o.alpha >= 0.0 ? o.alpha : 0.5;
                double beta = o.beta >= 0.0 ? o.beta : 0.0;
                b = gamma_ratio_bounds(x, o.s, o.t, alpha, beta);
            } else {
                double alpha = o.alpha >= 0.0 ? o.alpha : 0.0;
                double beta = o.beta >= 0.0 ? o.beta : 0.5;
                b = gamma_bounds(x, alpha, beta);
            }
            double target = *b.target;
            const char* kind = ratio ? "ratio" : "gamma";
            for (int side = 0; side < 2; ++side) {
                double bound = side == 0 ? b.lower : b.upper;
                double margin = side == 0 ? target - b.lower : b.upper - target;
                double band = o.dead_band * (std::abs(target) + std::abs(bound));
                ReportRow row;
                row.series = std::string(kind) + (side == 0 ? "-lower-bound" : "-upper-bound");
                row.x = x;
                row.value = bound;
                row.margin = margin;
                row.verdict = margin >= band     ? "inside"
                              : margin <= -band  ? "violation"
                                                 : "dead-band";
                ++doc.summary.checks_total;
                if (row.verdict == "inside") {
                    ++doc.summary.checks_passed;
                } else if (row.verdict == "violation") {
                    ++doc.summary.violations;
                    sec.verdict = "fail";
                } else {
                    ++doc.summary.inconclusive;
                    if (sec.verdict == "pass") sec.verdict = "inconclusive";
                }
                sec.rows.push_back(std::move(row));
            }
        }
    }
    doc.sections.push_back(std::move(sec));
}

void run_counterexample(const Options& o, ReportDocument& doc) {
    BoundSide side = o.side == "upper" ? BoundSide::upper : BoundSide::lower;
    CounterexampleSearch r =
        gamma_bound_counterexample(side, o.a, grid_of(o), o.dead_band, o.bisect_tol);
    ReportSection sec;
    sec.name = "counterexample";
    sec.note = "searched [" + format_double(r.searched_lo) + ", " + format_double(r.searched_hi) + "]";
    ++doc.summary.checks_total;
    if (r.found) {
        sec.verdict = "violation-found";
        sec.rows.push_back({std::string("counterexample-") + to_string(side), {},
                            r.found->x_witness, r.found->margin, r.found->margin, "violation"});
        ++doc.summary.violations;
    } else {
        sec.verdict = "exhausted";
        sec.rows.push_back(
            {std::string("counterexample-") + to_string(side), {}, {}, 0.0, {}, "exhausted"});
        ++doc.summary.inconclusive;
    }
    doc.sections.push_back(std::move(sec));
}

void run_sweep(const Options& o, ReportDocument& doc) {
    std::vector<MarginEntry> entries = sweep_fa_margins(o.a, grid_of(o).points, o.min_order,
                                                        o.max_order, o.dead_band, mode_of(o));
    ReportSection sec;
    sec.name = "sweep";
    sec.verdict = "evaluated";
    add_cm_rows(sec, "f_a", entries, 0, entries.size());
    int n = static_cast<int>(entries.size());
    doc.summary.checks_total += n;
    doc.summary.checks_passed += n;
    doc.sections.push_back(std::move(sec));
}

}  // namespace

const std::vector<std::pair<std::string, std::string>>& dispatch_table() {
    static const std::vector<std::pair<std::string, std::string>> table = {
        {"eval", "ln_gamma"},
        {"eval", "digamma"},
        {"eval", "polygamma"},
        {"eval", "F_a"},
        {"eval", "f_a"},
        {"eval", "g_a"},
        {"eval", "f_a_derivative"},
        {"eval", "difference_closed_form"},
        {"eval", "binet_theta"},
        {"eval", "theta_representation_check"},
        {"eval", "phi_kernel"},
        {"eval", "phi1"},
        {"eval", "phi2"},
        {"eval", "phi_threshold"},
        {"eval", "laplace_phi"},
        {"kernel", "kernel_sign_sweep"},
        {"kernel", "threshold_curve_report"},
        {"verify-cm", "classify_fa"},
        {"verify-cm", "remark_criterion_check"},
        {"verify-cm", "logcm_difference_check"},
        {"verify-claims", "verify_series_claims"},
        {"verify-claims", "series_vs_direct"},
        {"bounds", "gamma_bounds"},
        {"bounds", "gamma_ratio_bounds"},
        {"bounds", "lemma_inequalities_check"},
        {"bounds", "asymptotic_limit_checks"},
        {"counterexample", "gamma_bound_counterexample"},
        {"sweep", "sweep_fa_margins"},
    };
    return table;
}

int run(int argc, const char* const* argv) {
    try {
        apply_thread_env();
    } catch (const domain_error& e) {
        std::cerr << e.what() << '\n';
        return 64;
    }

    Options o;
    CLI::App app{"Complete-monotonicity certificates for Stirling-type gamma bounds"};
    app.require_subcommand(1);
    app.add_option("--format", o.format, "Report format")
        ->check(CLI::IsMember({"table", "csv", "json"}))
        ->capture_default_str();
    app.add_option("--output", o.output, "Write the report to a file instead of stdout");
    app.add_flag("--timing", o.timing, "Include elapsed wall time in the report");

    auto add_common = [&](CLI::App* sub, bool with_band = true) {
        sub->fallthrough();  // let --format/--output/--timing follow the subcommand
        sub->add_option("--a", o.a, "Shift parameter a >= 0");
        if (with_band)
            sub->add_option("--dead-band", o.dead_band, "Relative certification dead band")
                ->capture_default_str();
    };

    CLI::App* eval = app.add_subcommand("eval", "Evaluate one function over a point or grid");
    eval->add_option("--fn", o.fn, "Function name")
        ->required()
        ->check(CLI::IsMember({"ln_gamma", "digamma", "polygamma", "F_a", "f_a", "g_a",
                               "f_a_derivative", "difference_closed_form", "binet_theta",
                               "theta_representation_check", "phi_kernel", "phi1", "phi2",
                               "phi_threshold", "laplace_phi"}));
    add_common(eval, false);
    CLI::Option* eval_x = eval->add_option("--x", o.x, "Evaluation point (x, or t for kernel functions)");
    eval->add_option("--grid", o.grid_text, "Grid spec min:max:count:lin|log");
    eval->add_option("--order", o.order, "Derivative order")->capture_default_str();
    eval->add_option("--route", o.route, "Integral representation for binet_theta")
        ->check(CLI::IsMember({"exp", "arctan"}))
        ->capture_default_str();
    eval->add_option("--nodes", o.nodes, "Gauss-Legendre nodes per panel")->capture_default_str();
    eval->add_option("--truncation-T", o.truncation_T,
                     "Upper integration limit (0 = from tail majorant)");
    eval->add_option("--switch", o.series_switch, "Series/direct switch point")
        ->capture_default_str();
    eval->add_option("--tolerance", o.tolerance, "Tolerance (0 = per-operation default)");

    CLI::App* kernel = app.add_subcommand("kernel", "Sign sweep of phi_a or threshold curve scan");
    add_common(kernel);
    kernel->add_option("--grid", o.grid_text, "Grid spec min:max:count:lin|log")->required();
    kernel->add_flag("--threshold-curve", o.threshold_curve, "Scan -phi(t) instead of phi_a");
    kernel->add_option("--bisect-tol", o.bisect_tol, "Sign-change bracket width")
        ->capture_default_str();

    CLI::App* vcm = app.add_subcommand("verify-cm", "Complete-monotonicity verdicts for f_a");
    vcm->add_option("--mode", o.mode, "classify | remark | difference")
        ->check(CLI::IsMember({"classify", "remark", "difference"}))
        ->default_val("classify");
    add_common(vcm);
    vcm->add_option("--grid", o.grid_text, "Grid spec min:max:count:lin|log")->required();
    vcm->add_option("--max-order", o.max_order, "Highest derivative order")->capture_default_str();
    vcm->add_option("--alpha", o.step, "Difference step of the remark chain")
        ->capture_default_str();
    vcm->add_option("--limit-x", o.limit_x, "Tail sign sample point")->capture_default_str();
    vcm->add_option("--s", o.s, "Difference shift s")->capture_default_str();
    vcm->add_option("--t", o.t, "Difference shift t")->capture_default_str();
    vcm->add_flag("--serial", o.serial, "Force the serial sweep path");

    CLI::App* claims = app.add_subcommand("verify-claims", "Exact integer series claims");
    claims->add_option("--max-index", o.max_index, "Highest index checked")->capture_default_str();
    claims->add_flag("--series-check", o.series_check,
                     "Compare the exact-coefficient series against the direct kernel");
    add_common(claims, false);
    claims->add_option("--t", o.t, "Kernel point for --series-check")->capture_default_str();
    claims->add_option("--terms", o.terms, "Series terms for --series-check")
        ->capture_default_str();
    claims->add_option("--tolerance", o.tolerance, "Relative tolerance for --series-check");

    CLI::App* bounds = app.add_subcommand("bounds", "Two-sided bounds and lemma checks");
    bounds->add_option("--mode", o.mode, "gamma | ratio | lemmas | limits")
        ->check(CLI::IsMember({"gamma", "ratio", "lemmas", "limits"}))
        ->default_val("gamma");
    add_common(bounds);
    CLI::Option* bounds_x = bounds->add_option("--x", o.x, "Evaluation point");
    bounds->add_option("--grid", o.grid_text, "Grid spec min:max:count:lin|log");
    bounds->add_option("--alpha", o.alpha, "Shift of the sharp side");
    bounds->add_option("--beta", o.beta, "Shift of the opposite side");
    bounds->add_option("--s", o.s, "Ratio shift s")->capture_default_str();
    bounds->add_option("--t", o.t, "Ratio shift t")->capture_default_str();
    bounds->add_option("--max-order", o.max_order, "Highest lemma order (mode lemmas)")
        ->capture_default_str();
    bounds->add_option("--tolerance", o.tolerance, "Tolerance (0 = per-operation default)");

    CLI::App* cex = app.add_subcommand("counterexample", "Search for a bound violation");
    cex->add_option("--side", o.side, "Bound side")
        ->required()
        ->check(CLI::IsMember({"lower", "upper"}));
    add_common(cex);
    cex->add_option("--grid", o.grid_text, "Search range min:max:count:lin|log")->required();
    cex->add_option("--bisect-tol", o.bisect_tol, "Relative onset bracket width")
        ->capture_default_str();

    CLI::App* sweep = app.add_subcommand("sweep", "Raw margin sweep over a grid");
    add_common(sweep);
    sweep->add_option("--grid", o.grid_text, "Grid spec min:max:count:lin|log")->required();
    sweep->add_option("--min-order", o.min_order, "Lowest derivative order")
        ->capture_default_str();
    sweep->add_option("--max-order", o.max_order, "Highest derivative order")
        ->capture_default_str();
    sweep->add_flag("--serial", o.serial, "Force the serial sweep path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 64;
    }
    o.x_set = eval_x->count() > 0 || bounds_x->count() > 0;

    ReportDocument doc;
    doc.command = echo_command(argc, argv);
    auto t0 = std::chrono::steady_clock::now();
    try {
        if (eval->parsed()) {
            run_eval(o, doc);
        } else if (kernel->parsed()) {
            run_kernel(o, doc);
        } else if (vcm->parsed()) {
            run_verify_cm(o, doc);
        } else if (claims->parsed()) {
            run_verify_claims(o, doc);
        } else if (bounds->parsed()) {
            run_bounds(o, doc);
        } else if (cex->parsed()) {
            run_counterexample(o, doc);
        } else if (sweep->parsed()) {
            run_sweep(o, doc);
        }
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 64;
    } catch (const convergence_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    if (o.timing) {
        std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
        doc.elapsed_seconds = dt.count();
    }

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!o.output.empty()) {
        file.open(o.output);
        if (!file) {
            std::cerr << "error: cannot open output file " << o.output << '\n';
            return 64;
        }
        out = &file;
    }
    if (o.format == "csv")
        emit_csv(doc, *out);
    else if (o.format == "json")
        emit_json(doc, *out);
    else
        emit_table(doc, *out);
    return exit_code_for(doc);
}

}  // namespace monocert::cli
