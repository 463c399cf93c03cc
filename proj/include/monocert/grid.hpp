#pragma once

#include <string>
#include <vector>

namespace monocert {

struct GridSpec {
    enum class Scale { linear, logarithmic };
    std::vector<double> points;  // strictly increasing, all > 0
    Scale scale = Scale::linear;
    double lo() const { return points.front(); }
    double hi() const { return points.back(); }
    std::size_t count() const { return points.size(); }
};

// Evenly spaced (linear or log) grid with exact endpoints; count >= 2.
GridSpec make_grid(double lo, double hi, int count, GridSpec::Scale scale);

// Parse "min:max:count:lin" or "min:max:count:log".
GridSpec parse_grid(const std::string& text);

}  // namespace monocert
