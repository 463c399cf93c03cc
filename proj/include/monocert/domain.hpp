#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace monocert {

struct domain_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct convergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {
inline void require(bool ok, const char* msg) {
    if (!ok) throw domain_error(msg);
}
}  // namespace detail

// Strictly positive finite real (function arguments on (0, inf)).
class PositiveReal {
  public:
    explicit PositiveReal(double v) : v_(v) {
        detail::require(std::isfinite(v) && v > 0.0, "PositiveReal: value must be finite and > 0");
    }
    double value() const { return v_; }
    operator double() const { return v_; }

  private:
    double v_;
};

// Derivative order for polygamma-type operations, 0 <= k <= 8.
class DerivOrder {
  public:
    explicit DerivOrder(int k) : k_(k) {
        detail::require(k >= 0 && k <= 8, "DerivOrder: order must be in [0, 8]");
    }
    int value() const { return k_; }
    operator int() const { return k_; }

  private:
    int k_;
};

// Non-negative finite shift parameter a.
class ShiftParam {
  public:
    explicit ShiftParam(double a) : a_(a) {
        detail::require(std::isfinite(a) && a >= 0.0, "ShiftParam: value must be finite and >= 0");
    }
    double value() const { return a_; }
    operator double() const { return a_; }

  private:
    double a_;
};

// Strictly positive finite kernel abscissa t.
class KernelPoint {
  public:
    explicit KernelPoint(double t) : t_(t) {
        detail::require(std::isfinite(t) && t > 0.0, "KernelPoint: value must be finite and > 0");
    }
    double value() const { return t_; }
    operator double() const { return t_; }

  private:
    double t_;
};

enum class Verdict {
    CompletelyMonotonic,
    NegativeCompletelyMonotonic,
    Neither,
    Inconclusive,
};

const char* to_string(Verdict v);

// One signed margin sample: margin = (-1)^order * f^(order)(x) (or the
// analogous quantity for difference/remark checks), band = certification
// threshold derived from the magnitudes actually summed.
struct MarginEntry {
    int order = 0;
    double x = 0.0;
    double margin = 0.0;
    double band = 0.0;
};

struct WitnessRef {
    int order = 0;
    double x = 0.0;
    double margin = 0.0;
};

struct CMReport {
    Verdict verdict = Verdict::Inconclusive;
    int min_order = 0;
    int max_order = 0;
    std::vector<MarginEntry> margins;      // order-major, x ascending
    WitnessRef worst_witness;
    std::vector<WitnessRef> violations;    // certified adverse samples (both signs for Neither)
    std::size_t dead_band_hits = 0;
    std::string note;
};

struct ClaimResult {
    std::string claim_id;
    long long index_lo = 0;
    long long index_hi = 0;
    bool holds = false;
    std::optional<long long> first_violation;
    double min_margin = 0.0;
};

// Two-sided bound evaluated in log space.
struct BoundPair {
    double lower = 0.0;
    double upper = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
    double s = 0.0;
    double t = 0.0;
    std::optional<double> target;
};

enum class BoundSide { lower, upper };

const char* to_string(BoundSide side);

struct Counterexample {
    double x_witness = 0.0;
    BoundSide side = BoundSide::lower;
    double margin = 0.0;  // signed log-space margin, < 0 at a violation
};

struct CounterexampleSearch {
    std::optional<Counterexample> found;
    bool exhausted = false;   // true when the scan hit the search range edge
    double searched_lo = 0.0;
    double searched_hi = 0.0;
};

}  // namespace monocert
