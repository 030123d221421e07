#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "qseq/chebyshev.hpp"
#include "qseq/errors.hpp"

namespace qseq {

/// The min-of-averages map on R^n,
///   T(a)_i = min_{1 <= j <= min(i, n+1-i)} ((a_{i-j} + a_{i+j}) / 2 + gamma_j),
/// with the boundary convention a_0 = a_{n+1} = 0, together with the positive
/// weights p_1..p_n of the norm it is measured in.
class ContractionProblem {
public:
    /// n is taken from weights.size(); gamma must have floor((n+1)/2) entries.
    ContractionProblem(std::vector<double> gamma, std::vector<double> weights);

    /// Uses the weights p_i = i (n + 1 - i).
    static ContractionProblem with_default_weights(Index n, std::vector<double> gamma);

    [[nodiscard]] Index dimension() const { return static_cast<Index>(weights_.size()); }
    [[nodiscard]] std::span<const double> gamma() const { return gamma_; }
    [[nodiscard]] std::span<const double> weights() const { return weights_; }

private:
    std::vector<double> gamma_;
    std::vector<double> weights_;
};

/// floor((n + 1) / 2), the number of offsets the map uses.
[[nodiscard]] constexpr Index gamma_length(Index n) { return (n + 1) / 2; }

[[nodiscard]] std::vector<double> default_weights(Index n);

[[nodiscard]] std::vector<double> apply_operator(const ContractionProblem& prob,
                                                 std::span<const double> a);

/// max_i |a_i| / p_i.
[[nodiscard]] double weighted_norm(std::span<const double> weights, std::span<const double> a);

struct ContractionCertificate {
    double q = 0.0;       ///< max chord ratio of the zero-extended weights
    double q_star = 0.0;  ///< q if q <= 1, else T_{floor((n+1)/2)}(q)
    bool is_contraction = false;
};

[[nodiscard]] ContractionCertificate certificate(const ContractionProblem& prob);

struct FixedPointResult {
    std::vector<double> point;
    Index iterations = 0;
    double residual_norm = 0.0;  ///< measured ||T(point) - point||_p
    ContractionCertificate certificate;
};

struct SolveOptions {
    double tol = 1e-9;
    Index max_iter = 1'000'000;
    /// Defaults to the origin.
    std::optional<std::vector<double>> start;
};

class NotContractionError : public PreconditionError {
public:
    explicit NotContractionError(ContractionCertificate cert);
    [[nodiscard]] const ContractionCertificate& certificate() const { return cert_; }

private:
    ContractionCertificate cert_;
};

class NonConvergenceError : public std::runtime_error {
public:
    explicit NonConvergenceError(FixedPointResult best);
    [[nodiscard]] const FixedPointResult& best() const { return best_; }

private:
    FixedPointResult best_;
};

/// Picard iteration x <- T(x), stopped once ||x_{k+1} - x_k||_p <=
/// tol (1 - q*) / q*, which bounds the distance of x_{k+1} to the fixed
/// point by tol. `iterations` counts applications of T.
///
/// Throws NotContractionError when q* >= 1 and NonConvergenceError when
/// max_iter applications do not meet the stopping rule.
[[nodiscard]] FixedPointResult solve_fixed_point(const ContractionProblem& prob,
                                                 const SolveOptions& options = {});

/// Largest ||T(a) - T(b)||_p / ||a - b||_p over `trials` random pairs with
/// entries uniform in [-scale, scale].
[[nodiscard]] double empirical_lipschitz(const ContractionProblem& prob, Index trials,
                                         double scale, std::uint64_t seed = 0x5eed);

}  // namespace qseq
