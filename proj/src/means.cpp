#include "qseq/means.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "qseq/errors.hpp"

namespace qseq {
namespace {

void require_positive_exponent(double r, const char* op) {
    if (!std::isfinite(r) || r <= 0.0) {
        throw DomainError(std::string(op) + ": exponent r must be finite and positive");
    }
}

}  // namespace

double power_mean(MeanSpec spec, std::span<const double> u) {
    if (u.empty()) throw DomainError("power_mean: no arguments");
    for (double v : u) {
        if (!std::isfinite(v) || v < 0.0) {
            throw DomainError("power_mean: arguments must be finite and nonnegative");
        }
    }
    const auto [lo_it, hi_it] = std::minmax_element(u.begin(), u.end());
    const double lo = *lo_it;
    const double hi = *hi_it;
    const double r = spec.exponent();
    if (spec.is_minimum()) return lo;
    if (spec.is_maximum()) return hi;
    if (std::isnan(r)) throw DomainError("power_mean: exponent is NaN");

    const double k = static_cast<double>(u.size());
    if (r <= 0.0 && lo == 0.0) return 0.0;
    if (spec.is_geometric()) {
        // Binary exponents are summed exactly; only the mantissa logs carry rounding.
        double log_sum = 0.0;
        long long exp_sum = 0;
        for (double v : u) {
            int e = 0;
            log_sum += std::log(std::frexp(v, &e));
            exp_sum += e;
        }
        const auto n = static_cast<long long>(u.size());
        long long whole = exp_sum / n;
        long long rest = exp_sum % n;
        if (rest < 0) {
            rest += n;
            --whole;
        }
        const double frac = (log_sum + static_cast<double>(rest) * std::numbers::ln2) / k;
        return std::ldexp(std::exp(frac), static_cast<int>(whole));
    }
    // Factor out the extreme value so the powers stay in [0, 1].
    const double pivot = r > 0.0 ? hi : lo;
    if (pivot == 0.0) return 0.0;
    double sum = 0.0;
    for (double v : u) sum += std::pow(v / pivot, r);
    return pivot * std::pow(sum / k, 1.0 / r);
}

double f_rk(double r, std::span<const double> u) {
    require_positive_exponent(r, "f_rk");
    if (u.empty()) throw DomainError("f_rk: no arguments");
    for (double v : u) {
        if (!std::isfinite(v) || v <= 0.0) throw DomainError("f_rk: arguments must be positive");
    }
    double total = std::pow(u.front(), r);
    for (std::size_t i = 0; i + 1 < u.size(); ++i) total += std::pow(1.0 / u[i] + u[i + 1], r);
    total += std::pow(u.back(), -r);
    return total;
}

FLowerBound f_lower_bound(double r, Index k) {
    require_positive_exponent(r, "f_lower_bound");
    if (k < 1) throw DomainError("f_lower_bound: k must be >= 1");
    const double kd = static_cast<double>(k);

    FLowerBound b;
    if (k == 1) {
        b.primary = 2.0;
    } else if (r <= 1.0) {
        b.primary = 2.0 * std::pow(2.0, (r + 1.0) / 2.0) + (kd - 2.0) * std::pow(2.0, r);
    } else {
        const double edge = std::pow(2.0, (1.0 - r) / (2.0 * r));
        b.primary = std::pow(2.0, r) * std::pow(kd, 1.0 - r) * std::pow(2.0 * edge + kd - 2.0, r);
    }
    b.secondary = kd * std::pow(2.0, r + (1.0 - r) / kd);
    b.best = std::max(b.primary, b.secondary);
    if (k % 2 == 1) {
        b.odd_bonus = kd + 1.0;
        b.best = std::max(b.best, *b.odd_bonus);
    }
    return b;
}

const char* to_string(BoundSource s) {
    switch (s) {
        case BoundSource::ArithmeticExact: return "ArithmeticExact";
        case BoundSource::GeometricExact: return "GeometricExact";
        case BoundSource::MaxExact: return "MaxExact";
        case BoundSource::PowerLower: return "PowerLower";
        case BoundSource::PowerLowerOdd: return "PowerLowerOdd";
    }
    return "PowerLower";
}

BoundReport c_constant(MeanSpec spec, Index n, Index m) {
    const Index width = m - n;
    if (width < 2) throw DomainError("c_constant: need m - n >= 2");
    const double d = static_cast<double>(width);

    if (spec.is_arithmetic()) return {(d - 2.0) / (d - 1.0), true, BoundSource::ArithmeticExact};
    if (spec.is_geometric()) {
        // (1 + (-1)^{m-n-1}) / 4
        return {width % 2 == 1 ? 0.5 : 0.0, true, BoundSource::GeometricExact};
    }
    if (spec.is_maximum()) return {std::cos(std::numbers::pi / d), true, BoundSource::MaxExact};

    const double r = spec.exponent();
    if (!(r > 0.0) || !std::isfinite(r)) {
        throw UnsupportedError("c_constant: only r > 0 (or r = 0, +inf) is supported");
    }
    // The single ratio of (0, 1, 0) is 0, and no mean can go lower.
    if (width == 2) return {0.0, true, BoundSource::PowerLower};
    if (width == 3) return {0.5, true, BoundSource::PowerLower};

    BoundReport report;
    report.exact = (width == 4);
    if (r <= 1.0) {
        const double edge = std::pow(2.0, (1.0 - r) / 2.0);
        report.value = std::pow((2.0 * edge + d - 4.0) / (d - 1.0), 1.0 / r);
    } else {
        const double edge = std::pow(2.0, (1.0 - r) / (2.0 * r));
        report.value = std::pow((d - 2.0) / (d - 1.0), 1.0 / r) * (2.0 * edge + d - 4.0) / (d - 2.0);
    }
    if (width % 2 == 1 && report.value < 0.5) {
        report.value = 0.5;
        report.source = BoundSource::PowerLowerOdd;
    }
    return report;
}

double mean_of_chord_ratios(MeanSpec spec, const WindowSequence& p) {
    if (p[p.start()] < 0.0 || p[p.end()] < 0.0) {
        throw DomainError("mean_of_chord_ratios: endpoint values must be nonnegative");
    }
    return power_mean(spec, chord_ratios(p));
}

WindowSequence sine_sequence(Index n, Index m) {
    const Index width = m - n;
    if (width < 2) throw DomainError("sine_sequence: need m - n >= 2");
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(width + 1));
    for (Index offset = 0; offset <= width; ++offset) {
        // Folding about the midpoint keeps the sequence exactly symmetric
        // and makes both endpoints exactly zero.
        const Index folded = std::min(offset, width - offset);
        values.push_back(std::sin(std::numbers::pi * static_cast<double>(folded) /
                                  static_cast<double>(width)));
    }
    return {n, std::move(values)};
}

Witness sharpness_witness(MeanSpec spec, Index n, Index m, double epsilon) {
    const Index width = m - n;
    if (width < 2) throw DomainError("sharpness_witness: need m - n >= 2");
    if (!std::isfinite(epsilon) || epsilon <= 0.0) {
        throw DomainError("sharpness_witness: epsilon must be positive");
    }

    std::vector<double> values(static_cast<std::size_t>(width + 1));
    if (spec.is_arithmetic()) {
        std::fill(values.begin() + 1, values.end() - 1, 1.0);
        return {WindowSequence{n, std::move(values)}, true};
    }
    if (spec.is_geometric()) {
        for (Index i = n; i <= m; ++i) {
            const Index offset = i - n;
            double& v = values[static_cast<std::size_t>(offset)];
            if (width % 2 == 0) {
                v = (offset % 2 == 0) ? epsilon : 1.0;
            } else if (offset % 2 == 0) {
                v = std::pow(epsilon, static_cast<double>(m - i - 1) / 2.0);
            } else {
                v = std::pow(epsilon, static_cast<double>(offset - 1) / 2.0);
            }
        }
        return {WindowSequence{n, std::move(values)}, true};
    }
    return {sine_sequence(n, m), spec.is_maximum()};
}

CosineCheck cosine_bound_check(Index m, double tol) {
    if (m < 3) throw DomainError("cosine_bound_check: need m >= 3");
    const double md = static_cast<double>(m);
    CosineCheck c;
    c.lhs = (md - 4.0 + std::numbers::sqrt2) / (md - 2.0);
    c.rhs = std::cos(std::numbers::pi / md);
    c.holds = c.lhs <= c.rhs + tol;
    return c;
}

}  // namespace qseq
