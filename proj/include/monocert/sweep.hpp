#pragma once

#include <optional>
#include <vector>

#include "monocert/domain.hpp"

namespace monocert {

enum class SweepMode { serial, parallel };

// Margin entries for orders [min_order, max_order] over xs, order-major with
// xs ascending inside each order.  The parallel mode distributes independent
// (order, point) slots across OpenMP threads and writes by index, so its
// output is bit-identical to the serial mode.
std::vector<MarginEntry> sweep_fa_margins(double a, const std::vector<double>& xs,
                                          int min_order, int max_order, double dead_band,
                                          SweepMode mode = SweepMode::parallel);

// Same layout for difference margins (-1)^n [f_a^(n)(x+s) - f_a^(n)(x+t)].
std::vector<MarginEntry> sweep_difference_margins(double a, double s, double t,
                                                  const std::vector<double>& xs, int min_order,
                                                  int max_order, double dead_band,
                                                  SweepMode mode = SweepMode::parallel);

// Strictly positive integer, else nullopt.
std::optional<int> parse_threads(const std::string& text);

// Apply MONOCERT_THREADS if set; throws domain_error on an invalid value.
// Returns the applied thread count, or nullopt when the variable is unset.
std::optional<int> apply_thread_env();

}  // namespace monocert
