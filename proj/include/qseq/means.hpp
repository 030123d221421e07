#pragma once

#include <limits>
#include <optional>
#include <span>

#include "qseq/sequences.hpp"

namespace qseq {

/// Selects the r-th power (Hoelder) mean, r in [-inf, +inf].
class MeanSpec {
public:
    explicit constexpr MeanSpec(double exponent) : exponent_(exponent) {}

    static constexpr MeanSpec minimum() { return MeanSpec(-std::numeric_limits<double>::infinity()); }
    static constexpr MeanSpec geometric() { return MeanSpec(0.0); }
    static constexpr MeanSpec arithmetic() { return MeanSpec(1.0); }
    static constexpr MeanSpec maximum() { return MeanSpec(std::numeric_limits<double>::infinity()); }

    [[nodiscard]] constexpr double exponent() const { return exponent_; }
    [[nodiscard]] constexpr bool is_maximum() const { return exponent_ == std::numeric_limits<double>::infinity(); }
    [[nodiscard]] constexpr bool is_minimum() const { return exponent_ == -std::numeric_limits<double>::infinity(); }
    [[nodiscard]] constexpr bool is_geometric() const { return exponent_ == 0.0; }
    [[nodiscard]] constexpr bool is_arithmetic() const { return exponent_ == 1.0; }

    friend constexpr bool operator==(MeanSpec, MeanSpec) = default;

private:
    double exponent_;
};

/// H_{r,k}(u). Entries must be nonnegative; zeros are admitted as the
/// continuous extension (a zero entry makes the mean 0 for r <= 0).
/// The geometric mean is accumulated in log space.
[[nodiscard]] double power_mean(MeanSpec spec, std::span<const double> u);

/// F_{r,k}(u) = u_1^r + sum_{i<k} (1/u_i + u_{i+1})^r + u_k^{-r}, r > 0, u > 0.
[[nodiscard]] double f_rk(double r, std::span<const double> u);

struct FLowerBound {
    double primary = 0.0;    ///< piecewise bound (k = 1; k >= 2 with r <= 1; r >= 1)
    double secondary = 0.0;  ///< k 2^{r + (1-r)/k}
    std::optional<double> odd_bonus;  ///< k + 1, odd k only
    double best = 0.0;
};

[[nodiscard]] FLowerBound f_lower_bound(double r, Index k);

enum class BoundSource { ArithmeticExact, GeometricExact, MaxExact, PowerLower, PowerLowerOdd };

[[nodiscard]] const char* to_string(BoundSource s);

struct BoundReport {
    double value = 0.0;
    bool exact = false;
    BoundSource source = BoundSource::PowerLower;
};

/// Largest C with C <= M(chord ratios of p) for every p on {n..m} with
/// nonnegative endpoints and positive interior, where M = H_{r, m-n-1}.
/// Exact for r in {0, 1, +inf}; a lower bound for other r > 0 (flagged
/// exact only where that bound is known to be attained).
[[nodiscard]] BoundReport c_constant(MeanSpec spec, Index n, Index m);

/// power_mean applied to chord_ratios(p). Requires p_n, p_m >= 0 and a
/// positive interior.
[[nodiscard]] double mean_of_chord_ratios(MeanSpec spec, const WindowSequence& p);

struct Witness {
    WindowSequence sequence;
    bool sharp = false;  ///< attains (or approaches, as epsilon -> 0) c_constant
};

[[nodiscard]] Witness sharpness_witness(MeanSpec spec, Index n, Index m, double epsilon);

/// Sine sequence sin((i-n) pi / (m-n)) on {n..m}; its chord ratios are all
/// cos(pi/(m-n)).
[[nodiscard]] WindowSequence sine_sequence(Index n, Index m);

struct CosineCheck {
    double lhs = 0.0;  ///< (m - 4 + sqrt 2) / (m - 2)
    double rhs = 0.0;  ///< cos(pi / m)
    bool holds = false;
};

[[nodiscard]] CosineCheck cosine_bound_check(Index m, double tol = kDefaultTolerance);

}  // namespace qseq
