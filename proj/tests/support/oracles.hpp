#pragma once

// Reference computations used only by the tests. They deliberately avoid
// the library's own code paths (no reflection formulas, no closed forms,
// no iteration).

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace oracle {

// T_k(x) or U_k(x) by running the three-term recurrence in long double,
// forwards for k >= 0 and backwards (P_{k-1} = 2x P_k - P_{k+1}) for k < 0.
inline long double recurrence(bool first_kind, std::int64_t k, long double x) {
    long double p0 = 1.0L;
    long double p1 = first_kind ? x : 2.0L * x;
    if (k == 0) return p0;
    if (k > 0) {
        for (std::int64_t i = 1; i < k; ++i) {
            const long double next = 2.0L * x * p1 - p0;
            p0 = p1;
            p1 = next;
        }
        return p1;
    }
    // walk down: (p_{-1}, p_0) from (p_0, p_1)
    long double hi = p1;  // P_{i+1}
    long double lo = p0;  // P_i
    for (std::int64_t i = 0; i > k; --i) {
        const long double prev = 2.0L * x * lo - hi;
        hi = lo;
        lo = prev;
    }
    return lo;
}

inline long double t(std::int64_t k, long double x) { return recurrence(true, k, x); }
inline long double u(std::int64_t k, long double x) { return recurrence(false, k, x); }

inline double power_mean(double r, std::span<const double> v) {
    long double acc = 0.0L;
    if (std::isinf(r)) {
        return r > 0 ? *std::max_element(v.begin(), v.end()) : *std::min_element(v.begin(), v.end());
    }
    if (r == 0.0) {
        long double prod = 1.0L;
        for (double x : v) prod *= x;
        return static_cast<double>(std::pow(prod, 1.0L / v.size()));
    }
    for (double x : v) acc += std::pow(static_cast<long double>(x), static_cast<long double>(r));
    return static_cast<double>(std::pow(acc / v.size(), 1.0L / r));
}

// The min-of-averages map written out directly (a_0 = a_{n+1} = 0).
inline std::vector<double> min_map(std::span<const double> gamma, std::span<const double> a) {
    const auto n = static_cast<std::int64_t>(a.size());
    auto at = [&](std::int64_t i) { return (i < 1 || i > n) ? 0.0 : a[static_cast<std::size_t>(i - 1)]; };
    std::vector<double> out;
    for (std::int64_t i = 1; i <= n; ++i) {
        double best = INFINITY;
        for (std::int64_t j = 1; j <= std::min(i, n + 1 - i); ++j) {
            best = std::min(best, 0.5 * (at(i - j) + at(i + j)) + gamma[static_cast<std::size_t>(j - 1)]);
        }
        out.push_back(best);
    }
    return out;
}

// Fixed point of the min map by enumerating, for every component, which
// branch j attains the minimum, solving the resulting linear system, and
// keeping the solution that is consistent with its own branch choice.
inline std::optional<std::vector<double>> brute_force_fixed_point(std::span<const double> gamma,
                                                                  std::int64_t n) {
    std::vector<std::int64_t> branches(static_cast<std::size_t>(n));
    std::vector<std::int64_t> choice(static_cast<std::size_t>(n), 1);
    for (std::int64_t i = 1; i <= n; ++i) branches[static_cast<std::size_t>(i - 1)] = std::min(i, n + 1 - i);

    while (true) {
        Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n, n);
        Eigen::VectorXd rhs(n);
        for (std::int64_t i = 1; i <= n; ++i) {
            const std::int64_t j = choice[static_cast<std::size_t>(i - 1)];
            rhs(i - 1) = gamma[static_cast<std::size_t>(j - 1)];
            if (i - j >= 1) m(i - 1, i - j - 1) -= 0.5;
            if (i + j <= n) m(i - 1, i + j - 1) -= 0.5;
        }
        Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
        if (lu.isInvertible()) {
            const Eigen::VectorXd x = lu.solve(rhs);
            std::vector<double> cand(x.data(), x.data() + n);
            const auto image = min_map(gamma, cand);
            bool consistent = true;
            for (std::int64_t i = 0; i < n; ++i) {
                if (std::abs(image[static_cast<std::size_t>(i)] - cand[static_cast<std::size_t>(i)]) >
                    1e-10 * (1.0 + std::abs(cand[static_cast<std::size_t>(i)]))) {
                    consistent = false;
                }
            }
            if (consistent) return cand;
        }
        // next assignment (mixed radix counter)
        std::int64_t pos = 0;
        while (pos < n) {
            auto& c = choice[static_cast<std::size_t>(pos)];
            if (++c <= branches[static_cast<std::size_t>(pos)]) break;
            c = 1;
            ++pos;
        }
        if (pos == n) return std::nullopt;
    }
}

}  // namespace oracle
