#include "monocert/sweep.hpp"

#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "monocert/paper_functions.hpp"

namespace monocert {

namespace {

template <typename Eval>
std::vector<MarginEntry> sweep_impl(const std::vector<double>& xs, int min_order, int max_order,
                                    double dead_band, SweepMode mode, Eval eval) {
    detail::require(min_order >= 0 && min_order <= max_order && max_order <= 7,
                    "sweep: orders must satisfy 0 <= min <= max <= 7");
    detail::require(dead_band > 0.0, "sweep: dead_band must be > 0");
    detail::require(!xs.empty(), "sweep: empty grid");
    const long long orders = max_order - min_order + 1;
    const long long n = static_cast<long long>(xs.size());
    std::vector<MarginEntry> out(static_cast<std::size_t>(orders * n));
    // each slot is independent, so a static schedule writing by index is
    // bit-identical to the serial loop
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (mode == SweepMode::parallel)
#endif
    for (long long idx = 0; idx < orders * n; ++idx) {
        int order = min_order + static_cast<int>(idx / n);
        double x = xs[static_cast<std::size_t>(idx % n)];
        MarginEval ev = eval(x, order);
        out[static_cast<std::size_t>(idx)] = {order, x, ev.margin, dead_band * ev.scale};
    }
    (void)mode;
    return out;
}

}  // namespace

std::vector<MarginEntry> sweep_fa_margins(double a, const std::vector<double>& xs, int min_order,
                                          int max_order, double dead_band, SweepMode mode) {
    return sweep_impl(xs, min_order, max_order, dead_band, mode,
                      [a](double x, int order) { return fa_margin(a, x, order); });
}

std::vector<MarginEntry> sweep_difference_margins(double a, double s, double t,
                                                  const std::vector<double>& xs, int min_order,
                                                  int max_order, double dead_band, SweepMode mode) {
    detail::require(s >= 0.0 && t > s, "sweep: need 0 <= s < t");
    return sweep_impl(xs, min_order, max_order, dead_band, mode, [a, s, t](double x, int order) {
        MarginEval u = fa_margin(a, x + s, order);
        MarginEval v = fa_margin(a, x + t, order);
        return MarginEval{u.margin - v.margin, u.scale + v.scale};
    });
}

std::optional<int> parse_threads(const std::string& text) {
    if (text.empty()) return std::nullopt;
    std::size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(text, &pos);
    } catch (const std::exception&) {
        return std::nullopt;
    }
    if (pos != text.size() || v <= 0) return std::nullopt;
    return v;
}

std::optional<int> apply_thread_env() {
    const char* env = std::getenv("MONOCERT_THREADS");
    if (env == nullptr) return std::nullopt;
    auto v = parse_threads(env);
    if (!v) throw domain_error("MONOCERT_THREADS must be a positive integer");
#ifdef _OPENMP
    omp_set_num_threads(*v);
#endif
    return v;
}

}  // namespace monocert
