#include "monocert/grid.hpp"

#include <cmath>
#include <sstream>

#include "monocert/domain.hpp"

namespace monocert {

GridSpec make_grid(double lo, double hi, int count, GridSpec::Scale scale) {
    detail::require(std::isfinite(lo) && std::isfinite(hi) && lo > 0.0 && hi > lo,
                    "make_grid: need finite 0 < min < max");
    detail::require(count >= 2, "make_grid: count must be >= 2");
    GridSpec g;
    g.scale = scale;
    g.points.resize(count);
    if (scale == GridSpec::Scale::linear) {
        double step = (hi - lo) / (count - 1);
        for (int i = 0; i < count; ++i) g.points[i] = lo + step * i;
    } else {
        double step = std::log(hi / lo) / (count - 1);
        for (int i = 0; i < count; ++i) g.points[i] = lo * std::exp(step * i);
    }
    g.points.front() = lo;
    g.points.back() = hi;
    for (std::size_t i = 1; i < g.points.size(); ++i)
        detail::require(g.points[i] > g.points[i - 1], "make_grid: points must increase strictly");
    return g;
}

GridSpec parse_grid(const std::string& text) {
    std::istringstream in(text);
    std::string lo_s, hi_s, count_s, scale_s;
    bool ok = std::getline(in, lo_s, ':') && std::getline(in, hi_s, ':') &&
              std::getline(in, count_s, ':') && std::getline(in, scale_s);
    detail::require(ok && in.eof(), "parse_grid: expected min:max:count:lin|log");
    double lo = 0.0, hi = 0.0;
    int count = 0;
    std::size_t pos = 0;
    try {
        lo = std::stod(lo_s, &pos);
        detail::require(pos == lo_s.size(), "parse_grid: bad min");
        hi = std::stod(hi_s, &pos);
        detail::require(pos == hi_s.size(), "parse_grid: bad max");
        count = std::stoi(count_s, &pos);
        detail::require(pos == count_s.size(), "parse_grid: bad count");
    } catch (const domain_error&) {
        throw;
    } catch (const std::exception&) {
        throw domain_error("parse_grid: expected min:max:count:lin|log");
    }
    GridSpec::Scale scale;
    if (scale_s == "lin")
        scale = GridSpec::Scale::linear;
    else if (scale_s == "log")
        scale = GridSpec::Scale::logarithmic;
    else
        throw domain_error("parse_grid: scale must be lin or log");
    return make_grid(lo, hi, count, scale);
}

}  // namespace monocert
