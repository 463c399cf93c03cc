#include "monocert/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

#include "monocert/constants.hpp"
#include "monocert/domain.hpp"
#include "monocert/special_functions.hpp"

namespace monocert {

namespace quadrature {

namespace {

GaussRule build_rule(int n) {
    GaussRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        // Newton on P_n from the Chebyshev-like initial guess
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 64; ++it) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= n; ++j) {
                double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        r.nodes[n - 1 - i] = x;
        r.weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
    detail::require(n >= 2 && n <= 256, "gauss_legendre: nodes must be in [2, 256]");
    static std::map<int, GaussRule> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build_rule(n)).first;
    return it->second;
}

double integrate_panels(const std::function<double(double)>& f,
                        const std::vector<double>& edges, int n) {
    const GaussRule& rule = gauss_legendre(n);
    KahanSum total;
    for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
        double mid = 0.5 * (edges[p] + edges[p + 1]);
        double half = 0.5 * (edges[p + 1] - edges[p]);
        KahanSum panel;
        for (int i = 0; i < n; ++i) panel.add(rule.weights[i] * f(mid + half * rule.nodes[i]));
        total.add(half * panel.value());
    }
    return total.value();
}

std::vector<double> dyadic_edges(double first_width, double T) {
    std::vector<double> edges{0.0};
    double e = std::min(first_width, T);
    while (e < T) {
        edges.push_back(e);
        e *= 2.0;
    }
    edges.push_back(T);
    return edges;
}

}  // namespace quadrature

namespace {

// (1/(e^t - 1) - 1/t + 1/2)/t: Bernoulli series below the switch, expm1 above.
double binet_kernel_factor(double t, double series_switch) {
    if (t < series_switch) {
        double t2 = t * t;
        return 1.0 / 12.0 +
               t2 * (-1.0 / 720.0 +
                     t2 * (1.0 / 30240.0 +
                           t2 * (-1.0 / 1209600.0 +
                                 t2 * (1.0 / 47900160.0 +
                                       t2 * (-691.0 / (2730.0 * 479001600.0))))));
    }
    return (1.0 / std::expm1(t) - 1.0 / t + 0.5) / t;
}

[[noreturn]] void throw_non_convergence(double x, const QuadratureConfig& cfg, const char* route) {
    std::ostringstream os;
    os << "binet_theta: truncation majorant " << cfg.tail_bound << " exceeds tolerance "
       << cfg.tolerance << " (route=" << route << ", x=" << x << ", truncation_T=" << cfg.truncation_T
       << ", nodes=" << cfg.nodes << ", series_switch=" << cfg.series_switch << ")";
    throw convergence_error(os.str());
}

}  // namespace

ThetaResult binet_theta(double x, QuadratureConfig cfg, ThetaRoute route) {
    (void)PositiveReal(x);
    detail::require(cfg.nodes >= 2, "binet_theta: nodes must be >= 2");
    detail::require(std::isfinite(cfg.series_switch) && cfg.series_switch > 0.0,
                    "binet_theta: series_switch must be > 0");
    detail::require(std::isfinite(cfg.tolerance) && cfg.tolerance > 0.0,
                    "binet_theta: tolerance must be > 0");
    detail::require(cfg.truncation_T >= 0.0, "binet_theta: truncation_T must be >= 0");

    if (route == ThetaRoute::exp_kernel) {
        // integral_0^inf [(1/(e^t-1) - 1/t + 1/2)/t] e^{-xt} dt; the factor is
        // bounded by 1/(2t), so the tail beyond T is at most e^{-xT}/(2Tx)
        auto majorant = [&](double T) { return std::exp(-x * T) / (2.0 * T * x); };
        double T = cfg.truncation_T;
        if (T == 0.0) {
            T = 4.0;
            while (majorant(T) > 0.5 * cfg.tolerance && T < 1e7) T *= 1.25;
        }
        cfg.truncation_T = T;
        cfg.tail_bound = majorant(T);
        if (!(cfg.tail_bound <= cfg.tolerance)) throw_non_convergence(x, cfg, "exp_kernel");
        auto f = [&](double t) { return binet_kernel_factor(t, cfg.series_switch) * std::exp(-x * t); };
        // first panel narrow enough to resolve the e^{-xt} decay
        double w = std::max(std::min(cfg.series_switch, 1.0 / x), T * 0x1p-48);
        double v = quadrature::integrate_panels(f, quadrature::dyadic_edges(w, T), cfg.nodes);
        return {v, cfg};
    }

    // 2 integral_0^inf arctan(t/x)/(e^{2 pi t} - 1) dt; with arctan <= pi/2 the
    // tail beyond T is at most (pi/2) e^{-2 pi T}
    auto majorant = [](double T) { return 0.5 * kPi * std::exp(-2.0 * kPi * T); };
    double T = cfg.truncation_T;
    if (T == 0.0) {
        T = 1.0;
        while (majorant(T) > 0.5 * cfg.tolerance && T < 1e7) T += 0.5;
    }
    cfg.truncation_T = T;
    cfg.tail_bound = majorant(T);
    if (!(cfg.tail_bound <= cfg.tolerance)) throw_non_convergence(x, cfg, "arctan_kernel");
    auto f = [&](double t) { return 2.0 * std::atan(t / x) / std::expm1(2.0 * kPi * t); };
    double w = std::max(std::min(T / 64.0, x), T * 0x1p-48);
    double v = quadrature::integrate_panels(f, quadrature::dyadic_edges(w, T), cfg.nodes);
    return {v, cfg};
}

}  // namespace monocert
