#include "qseq/contraction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

namespace qseq {
namespace {

void require_finite_values(std::span<const double> v, const char* what) {
    for (double x : v) {
        if (!std::isfinite(x)) throw DomainError(std::string(what) + " must be finite");
    }
}

std::vector<double> difference(std::span<const double> a, std::span<const double> b) {
    std::vector<double> d(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
    return d;
}

}  // namespace

ContractionProblem::ContractionProblem(std::vector<double> gamma, std::vector<double> weights)
    : gamma_(std::move(gamma)), weights_(std::move(weights)) {
    if (weights_.empty()) throw DomainError("ContractionProblem: dimension must be >= 1");
    const Index n = dimension();
    if (static_cast<Index>(gamma_.size()) != gamma_length(n)) {
        throw DomainError("ContractionProblem: gamma must have floor((n+1)/2) = " +
                          std::to_string(gamma_length(n)) + " entries");
    }
    require_finite_values(gamma_, "ContractionProblem: gamma");
    for (double w : weights_) {
        if (!std::isfinite(w) || w <= 0.0) {
            throw DomainError("ContractionProblem: weights must be finite and positive");
        }
    }
}

ContractionProblem ContractionProblem::with_default_weights(Index n, std::vector<double> gamma) {
    return {std::move(gamma), default_weights(n)};
}

std::vector<double> default_weights(Index n) {
    if (n < 1) throw DomainError("default_weights: n must be >= 1");
    std::vector<double> p(static_cast<std::size_t>(n));
    for (Index i = 1; i <= n; ++i) {
        p[static_cast<std::size_t>(i - 1)] = static_cast<double>(i) * static_cast<double>(n + 1 - i);
    }
    return p;
}

std::vector<double> apply_operator(const ContractionProblem& prob, std::span<const double> a) {
    const Index n = prob.dimension();
    if (static_cast<Index>(a.size()) != n) {
        throw DomainError("apply_operator: vector has dimension " + std::to_string(a.size()) +
                          ", expected " + std::to_string(n));
    }
    require_finite_values(a, "apply_operator: argument");

    // a_0 = a_{n+1} = 0
    const auto ext = [&](Index i) {
        return (i == 0 || i == n + 1) ? 0.0 : a[static_cast<std::size_t>(i - 1)];
    };
    const auto gamma = prob.gamma();
    std::vector<double> out(static_cast<std::size_t>(n));
    for (Index i = 1; i <= n; ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (Index j = 1; j <= std::min(i, n + 1 - i); ++j) {
            best = std::min(best, (ext(i - j) + ext(i + j)) / 2.0 +
                                      gamma[static_cast<std::size_t>(j - 1)]);
        }
        out[static_cast<std::size_t>(i - 1)] = best;
    }
    return out;
}

double weighted_norm(std::span<const double> weights, std::span<const double> a) {
    if (weights.size() != a.size()) throw DomainError("weighted_norm: length mismatch");
    double norm = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!(weights[i] > 0.0)) throw DomainError("weighted_norm: weights must be positive");
        norm = std::max(norm, std::abs(a[i]) / weights[i]);
    }
    return norm;
}

ContractionCertificate certificate(const ContractionProblem& prob) {
    const auto p = prob.weights();
    const std::size_t n = p.size();
    const auto ext = [&](std::size_t i) { return (i == 0 || i == n + 1) ? 0.0 : p[i - 1]; };

    ContractionCertificate c;
    for (std::size_t i = 1; i <= n; ++i) {
        c.q = std::max(c.q, (ext(i - 1) + ext(i + 1)) / (2.0 * ext(i)));
    }
    c.q_star = c.q <= 1.0 ? c.q : cheb_t(gamma_length(prob.dimension()), c.q);
    c.is_contraction = c.q_star < 1.0;
    return c;
}

NotContractionError::NotContractionError(ContractionCertificate cert)
    : PreconditionError("solve_fixed_point: map is not a contraction (q* = " +
                        std::to_string(cert.q_star) + ")"),
      cert_(cert) {}

NonConvergenceError::NonConvergenceError(FixedPointResult best)
    : std::runtime_error("solve_fixed_point: stopping rule not met after " +
                         std::to_string(best.iterations) + " iterations"),
      best_(std::move(best)) {}

FixedPointResult solve_fixed_point(const ContractionProblem& prob, const SolveOptions& options) {
    const ContractionCertificate cert = certificate(prob);
    if (!cert.is_contraction) throw NotContractionError(cert);
    if (!std::isfinite(options.tol) || options.tol <= 0.0) {
        throw DomainError("solve_fixed_point: tol must be positive");
    }
    if (options.max_iter < 1) throw DomainError("solve_fixed_point: max_iter must be >= 1");

    const auto weights = prob.weights();
    std::vector<double> x = options.start.value_or(
        std::vector<double>(static_cast<std::size_t>(prob.dimension()), 0.0));
    if (static_cast<Index>(x.size()) != prob.dimension()) {
        throw DomainError("solve_fixed_point: start point has the wrong dimension");
    }
    require_finite_values(x, "solve_fixed_point: start point");

    // With q* = 0 the first step lands on the fixed point.
    const double step_bound = cert.q_star > 0.0
                                  ? options.tol * (1.0 - cert.q_star) / cert.q_star
                                  : std::numeric_limits<double>::infinity();

    FixedPointResult result;
    result.certificate = cert;
    for (Index it = 1; it <= options.max_iter; ++it) {
        std::vector<double> next = apply_operator(prob, x);
        const double step = weighted_norm(weights, difference(next, x));
        x = std::move(next);
        if (step <= step_bound) {
            result.iterations = it;
            result.residual_norm = weighted_norm(weights, difference(apply_operator(prob, x), x));
            result.point = std::move(x);
            return result;
        }
    }
    result.iterations = options.max_iter;
    result.residual_norm = weighted_norm(weights, difference(apply_operator(prob, x), x));
    result.point = std::move(x);
    throw NonConvergenceError(std::move(result));
}

double empirical_lipschitz(const ContractionProblem& prob, Index trials, double scale,
                           std::uint64_t seed) {
    if (trials < 1) throw DomainError("empirical_lipschitz: trials must be >= 1");
    if (!std::isfinite(scale) || scale <= 0.0) {
        throw DomainError("empirical_lipschitz: scale must be positive");
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> entry(-scale, scale);
    const auto weights = prob.weights();
    const auto n = static_cast<std::size_t>(prob.dimension());

    double worst = 0.0;
    std::vector<double> a(n);
    std::vector<double> b(n);
    for (Index t = 0; t < trials; ++t) {
        for (std::size_t i = 0; i < n; ++i) {
            a[i] = entry(rng);
            b[i] = entry(rng);
        }
        const double gap = weighted_norm(weights, difference(a, b));
        if (gap == 0.0) continue;
        const double moved =
            weighted_norm(weights, difference(apply_operator(prob, a), apply_operator(prob, b)));
        worst = std::max(worst, moved / gap);
    }
    return worst;
}

}  // namespace qseq
