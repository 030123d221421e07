#include "qseq/sweeps.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <future>
#include <numbers>
#include <random>

#include "qseq/contraction.hpp"
#include "qseq/means.hpp"
#include "qseq/sequences.hpp"

namespace qseq {
namespace {

using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Index uniform_int(Rng& rng, Index lo, Index hi) {
    return std::uniform_int_distribution<Index>(lo, hi)(rng);
}

// Nonnegative endpoints, positive interior.
WindowSequence random_admissible(Rng& rng, Index max_width) {
    const Index width = uniform_int(rng, 2, max_width);
    std::vector<double> v(static_cast<std::size_t>(width + 1));
    for (auto& x : v) x = uniform(rng, 0.05, 1.0);
    v.front() = uniform(rng, 0.0, 1.0) < 0.3 ? 0.0 : uniform(rng, 0.0, 1.0);
    v.back() = uniform(rng, 0.0, 1.0) < 0.3 ? 0.0 : uniform(rng, 0.0, 1.0);
    return {uniform_int(rng, -5, 5), std::move(v)};
}

WindowSequence random_positive(Rng& rng, Index max_width) {
    const Index width = uniform_int(rng, 2, max_width);
    std::vector<double> v(static_cast<std::size_t>(width + 1));
    for (auto& x : v) x = uniform(rng, 0.05, 1.0);
    return {uniform_int(rng, -5, 5), std::move(v)};
}

double max_ratio(const WindowSequence& p) {
    const auto r = chord_ratios(p);
    return *std::max_element(r.begin(), r.end());
}

SweepResult recurrence_sweep(Rng& rng, double) {
    SweepResult s{"chebyshev.recurrence", false, 0, 0.0, 1e-9};
    for (int t = 0; t < 200; ++t) {
        const double x = uniform(rng, -3.0, 3.0);
        for (Index k = -20; k <= 20; ++k) {
            const double t_next = cheb_t(k + 1, x);
            const double u_next = cheb_u(k + 1, x);
            s.worst = std::max(s.worst, std::abs(t_next - (2 * x * cheb_t(k, x) - cheb_t(k - 1, x))) /
                                            std::max(1.0, std::abs(t_next)));
            s.worst = std::max(s.worst, std::abs(u_next - (2 * x * cheb_u(k, x) - cheb_u(k - 1, x))) /
                                            std::max(1.0, std::abs(u_next)));
            s.samples += 2;
        }
    }
    return s;
}

SweepResult closed_form_sweep(Rng& rng, double) {
    SweepResult s{"chebyshev.closed_forms", false, 0, 0.0, 1e-10};
    for (int t = 0; t < 200; ++t) {
        const double u = uniform(rng, 0.0, std::numbers::pi);
        const double x = std::cos(u);
        for (Index k = -80; k <= 80; ++k) {
            const double kd = static_cast<double>(k);
            s.worst = std::max(s.worst, std::abs(cheb_t(k, x) - std::cos(kd * u)));
            s.worst = std::max(s.worst, std::abs(cheb_u(k, x) * std::sin(u) - std::sin((kd + 1) * u)));
            s.samples += 2;
        }
    }
    return s;
}

SweepResult identity_sweep(Rng& rng, double) {
    SweepResult s{"chebyshev.identities", false, 0, 0.0, 1e-9};
    for (int t = 0; t < 1000; ++t) {
        const auto r = identity_residuals(uniform_int(rng, -8, 8), uniform_int(rng, -8, 8),
                                          uniform_int(rng, -8, 8), uniform(rng, -2.0, 2.0));
        s.worst = std::max(s.worst, r.worst_relative());
        ++s.samples;
    }
    return s;
}

SweepResult alternating_sine_sweep(Rng& rng, double) {
    SweepResult s{"chebyshev.alternating_sines", false, 0, 0.0, 1e-10};
    for (std::size_t n : {1u, 3u, 5u, 7u}) {
        for (int t = 0; t < 100; ++t) {
            std::vector<double> x(n);
            for (auto& v : x) v = uniform(rng, -std::numbers::pi, std::numbers::pi);
            const auto [a, b] = alternating_sine_sums(x);
            s.worst = std::max({s.worst, std::abs(a), std::abs(b)});
            ++s.samples;
        }
    }
    return s;
}

SweepResult affine_roundtrip_sweep(Rng& rng, double tol) {
    SweepResult s{"sequences.affine_roundtrip", false, 0, 0.0, 1e-9};
    for (int t = 0; t < 500; ++t) {
        const AffineRep rep{uniform(rng, -5, 5), uniform(rng, -5, 5), uniform(rng, 0.01, 3.0),
                            uniform_int(rng, -10, 10)};
        const auto p = make_affine(rep, rep.start + uniform_int(rng, 2, 39));
        const auto back = affine_coeffs(p, rep.q, tol);
        const double scale = std::max({1.0, std::abs(rep.a), std::abs(rep.b)});
        s.worst = std::max({s.worst, std::abs(back.a - rep.a) / scale, std::abs(back.b - rep.b) / scale});
        ++s.samples;
    }
    return s;
}

SweepResult three_term_sweep(Rng& rng, double tol) {
    SweepResult s{"sequences.three_term", false, 0, 0.0, tol};
    for (int t = 0; t < 200; ++t) {
        const auto p = random_positive(rng, 12);
        const double q = max_ratio(p);
        for (Index i = p.start(); i <= p.end(); ++i) {
            for (Index j = i + 1; j <= p.end(); ++j) {
                for (Index k = j + 1; k <= p.end(); ++k) {
                    const auto c = three_term_inequality(p, q, i, j, k, tol);
                    if (!c.condition_met) continue;
                    const double excess = (c.lhs - c.rhs) / (1.0 + std::abs(c.lhs) + std::abs(c.rhs));
                    s.worst = std::max(s.worst, excess);
                    ++s.samples;
                }
            }
        }
    }
    return s;
}

SweepResult envelope_sweep(Rng& rng, double tol) {
    SweepResult s{"sequences.envelope", false, 0, 0.0, 1e-9};
    for (int t = 0; t < 200; ++t) {
        const auto p = random_positive(rng, 12);
        const auto members = affine_envelope(p, max_ratio(p), tol);
        s.worst = std::max(s.worst, max_abs_difference(envelope_minimum(members), p));
        ++s.samples;
    }
    return s;
}

SweepResult lemma_f_sweep(Rng& rng, double) {
    SweepResult s{"means.lemma_f", false, 0, 0.0, 1e-9};
    for (int t = 0; t < 1000; ++t) {
        const double r = uniform(rng, 1e-3, 4.0);
        std::vector<double> u(static_cast<std::size_t>(uniform_int(rng, 1, 12)));
        for (auto& v : u) v = uniform(rng, 1e-3, 10.0);
        const double f = f_rk(r, u);
        const double bound = f_lower_bound(r, static_cast<Index>(u.size())).best;
        s.worst = std::max(s.worst, (bound - f) / f);
        ++s.samples;
    }
    return s;
}

SweepResult c_constant_sweep(Rng& rng, double) {
    SweepResult s{"means.c_constant", false, 0, 0.0, 1e-9};
    const MeanSpec specs[] = {MeanSpec::arithmetic(), MeanSpec::geometric(), MeanSpec(2.0),
                              MeanSpec(0.5), MeanSpec::maximum()};
    for (int t = 0; t < 1000; ++t) {
        const auto p = random_admissible(rng, 15);
        for (const auto spec : specs) {
            const double c = c_constant(spec, p.start(), p.end()).value;
            s.worst = std::max(s.worst, c - mean_of_chord_ratios(spec, p));
            ++s.samples;
        }
    }
    return s;
}

SweepResult cosine_sweep(Rng&, double tol) {
    SweepResult s{"means.cosine_bound", false, 0, -1.0, 1e-12};
    for (Index m = 3; m <= 10000; ++m) {
        const auto c = cosine_bound_check(m, tol);
        s.worst = std::max(s.worst, c.lhs - c.rhs);
        ++s.samples;
    }
    return s;
}

SweepResult lipschitz_sweep(Rng& rng, double) {
    SweepResult s{"contraction.lipschitz", false, 0, 0.0, 1e-12};
    for (Index n = 1; n <= 30; ++n) {
        std::vector<double> gamma(static_cast<std::size_t>(gamma_length(n)));
        for (auto& g : gamma) g = uniform(rng, -1.0, 1.0);
        const auto prob = ContractionProblem::with_default_weights(n, gamma);
        const double ratio = empirical_lipschitz(prob, 200, 10.0, rng());
        s.worst = std::max(s.worst, ratio - certificate(prob).q_star);
        s.samples += 200;
    }
    return s;
}

SweepResult fixed_point_sweep(Rng& rng, double tol) {
    SweepResult s{"contraction.fixed_point", false, 0, 0.0, tol};
    for (Index n = 1; n <= 20; ++n) {
        for (int t = 0; t < 3; ++t) {
            std::vector<double> gamma(static_cast<std::size_t>(gamma_length(n)));
            for (auto& g : gamma) g = uniform(rng, -1.0, 1.0);
            const auto prob = ContractionProblem::with_default_weights(n, gamma);
            const auto result = solve_fixed_point(prob, SolveOptions{.tol = tol / 2, .max_iter = 1'000'000, .start = std::nullopt});
            s.worst = std::max(s.worst, result.residual_norm);
            ++s.samples;
        }
    }
    return s;
}

using SweepFn = SweepResult (*)(Rng&, double);

constexpr SweepFn kSweeps[] = {
    recurrence_sweep,  closed_form_sweep, identity_sweep,   alternating_sine_sweep,
    affine_roundtrip_sweep, three_term_sweep, envelope_sweep, lemma_f_sweep,
    c_constant_sweep,  cosine_sweep,      lipschitz_sweep,  fixed_point_sweep,
};

SweepResult run_one(std::size_t index, const SweepOptions& options) {
    // Each sweep owns a stream derived from its position, so the result does
    // not depend on scheduling.
    Rng rng(options.seed + 0x9e3779b97f4a7c15ULL * (index + 1));
    try {
        SweepResult s = kSweeps[index](rng, options.tol);
        s.passed = s.worst <= s.threshold;
        return s;
    } catch (const std::exception&) {
        return {sweep_names()[index], false, 0, std::numeric_limits<double>::infinity(), 0.0};
    }
}

}  // namespace

std::vector<std::string> sweep_names() {
    std::vector<std::string> names;
    for (const char* n : {"chebyshev.recurrence", "chebyshev.closed_forms", "chebyshev.identities",
                          "chebyshev.alternating_sines", "sequences.affine_roundtrip",
                          "sequences.three_term", "sequences.envelope", "means.lemma_f",
                          "means.c_constant", "means.cosine_bound", "contraction.lipschitz",
                          "contraction.fixed_point"}) {
        names.emplace_back(n);
    }
    return names;
}

std::vector<SweepResult> run_sweeps(const SweepOptions& options) {
    std::vector<SweepResult> results;
    results.reserve(std::size(kSweeps));
    if (!options.parallel) {
        for (std::size_t i = 0; i < std::size(kSweeps); ++i) results.push_back(run_one(i, options));
        return results;
    }
    std::vector<std::future<SweepResult>> pending;
    for (std::size_t i = 0; i < std::size(kSweeps); ++i) {
        pending.push_back(std::async(std::launch::async, run_one, i, std::cref(options)));
    }
    for (auto& f : pending) results.push_back(f.get());
    return results;
}

}  // namespace qseq
