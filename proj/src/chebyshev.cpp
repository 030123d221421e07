#include "qseq/chebyshev.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <limits>
#include <numbers>
#include <string>

#include "qseq/errors.hpp"

namespace qseq {
namespace {

void require_finite(double x, const char* op) {
    if (!std::isfinite(x)) {
        throw DomainError(std::string(op) + ": argument must be finite");
    }
}

void require_foldable(Index k, const char* op) {
    if (k == std::numeric_limits<Index>::min()) {
        throw DomainError(std::string(op) + ": order out of range");
    }
}

double parity_sign(Index k) { return (k % 2 == 0) ? 1.0 : -1.0; }

// Forward three-term recurrence from (f0, f1) up to order k >= 0.
double recurrence(Index k, double x, double f0, double f1) {
    if (k == 0) return f0;
    const double two_x = 2.0 * x;
    double prev = f0;
    double cur = f1;
    for (Index n = 1; n < k; ++n) {
        const double next = two_x * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

// T_k for k >= 0.
double t_nonnegative(Index k, double x) {
    if (k <= kRecurrenceOrderLimit) return recurrence(k, x, 1.0, x);

    const double ax = std::abs(x);
    const double sign = (x < 0.0) ? parity_sign(k) : 1.0;
    if (ax == 1.0) return sign;
    const double kd = static_cast<double>(k);
    if (ax < 1.0) return std::cos(kd * std::acos(x));
    return sign * std::cosh(kd * std::acosh(ax));
}

// U_k for k >= 0.
double u_nonnegative(Index k, double x) {
    const double ax = std::abs(x);
    const double sign = (x < 0.0) ? parity_sign(k) : 1.0;
    if (ax == 1.0) return sign * static_cast<double>(k + 1);
    if (k <= kRecurrenceOrderLimit) return recurrence(k, x, 1.0, 2.0 * x);

    const double k1 = static_cast<double>(k) + 1.0;
    if (ax < 1.0) {
        const double u = std::acos(ax);
        const double s = std::sin(u);
        if (s == 0.0) return recurrence(k, x, 1.0, 2.0 * x);
        return sign * std::sin(k1 * u) / s;
    }
    const double v = std::acosh(ax);
    const double s = std::sinh(v);
    if (s == 0.0) return recurrence(k, x, 1.0, 2.0 * x);
    return sign * std::sinh(k1 * v) / s;
}

}  // namespace

double cheb_t(Index k, double x) {
    require_finite(x, "cheb_t");
    require_foldable(k, "cheb_t");
    return t_nonnegative(k < 0 ? -k : k, x);
}

double cheb_u(Index k, double x) {
    require_finite(x, "cheb_u");
    require_foldable(k, "cheb_u");
    if (k >= 0) return u_nonnegative(k, x);
    if (k == -1) return 0.0;
    // U_k = -U_{-k-2}
    return -u_nonnegative(-k - 2, x);
}

double cheb(ChebKind kind, Index k, double x) {
    return kind == ChebKind::FirstKind ? cheb_t(k, x) : cheb_u(k, x);
}

double largest_root_t(Index k) {
    if (k < 1) throw DomainError("largest_root_t: order must be >= 1");
    if (k == 1) return 0.0;
    return std::cos(std::numbers::pi / (2.0 * static_cast<double>(k)));
}

double largest_root_u(Index k) {
    if (k < 1) throw DomainError("largest_root_u: order must be >= 1");
    if (k == 1) return 0.0;
    return std::cos(std::numbers::pi / (static_cast<double>(k) + 1.0));
}

Index tau(double x) {
    if (!(x >= 0.0 && x < 1.0)) throw DomainError("tau: argument must lie in [0, 1)");
    const double quotient = std::numbers::pi / std::acos(x);
    const double nearest = std::round(quotient);
    if (std::abs(quotient - nearest) <= 1e-12) return static_cast<Index>(nearest);
    return static_cast<Index>(std::floor(quotient));
}

bool Residual::within(double atol, double rtol) const {
    return std::abs(value) <= atol + rtol * scale;
}

double Residual::relative() const {
    if (value == 0.0) return 0.0;
    return std::abs(value) / std::max(scale, std::numeric_limits<double>::min());
}

bool IdentityResiduals::all_within(double atol, double rtol) const {
    for (const Residual* r : {&idU_u, &idU_t, &ut_u, &ut_t, &ut1, &ut2}) {
        if (!r->within(atol, rtol)) return false;
    }
    return true;
}

double IdentityResiduals::worst_relative() const {
    double worst = 0.0;
    for (const Residual* r : {&idU_u, &idU_t, &ut_u, &ut_t, &ut1, &ut2}) {
        worst = std::max(worst, r->relative());
    }
    return worst;
}

namespace {

Residual make_residual(double lhs1, double lhs2, double rhs) {
    return {lhs1 + lhs2 - rhs, std::max({std::abs(lhs1), std::abs(lhs2), std::abs(rhs)})};
}

}  // namespace

IdentityResiduals identity_residuals(Index i, Index j, Index k, double q) {
    require_finite(q, "identity_residuals");
    const auto T = [q](Index n) { return cheb_t(n, q); };
    const auto U = [q](Index n) { return cheb_u(n, q); };

    IdentityResiduals r;
    r.idU_u = make_residual(U(k - j - 1) * U(i), U(j - i - 1) * U(k), U(k - i - 1) * U(j));
    r.idU_t = make_residual(U(k - j - 1) * T(i), U(j - i - 1) * T(k), U(k - i - 1) * T(j));
    r.ut_u = make_residual(U(i - j), U(i + j), 2.0 * T(j) * U(i));
    r.ut_t = make_residual(T(i - j), T(i + j), 2.0 * T(j) * T(i));
    r.ut1 = make_residual(U(i + j), -U(i - j), 2.0 * T(i + 1) * U(j - 1));
    r.ut2 = make_residual(T(j - i), -T(j + i), 2.0 * (1.0 - q * q) * U(j - 1) * U(i - 1));
    return r;
}

std::pair<double, double> alternating_sine_sums(std::span<const double> x) {
    const std::size_t n = x.size();
    if (n == 0 || n % 2 == 0) {
        throw DomainError("alternating_sine_sums: number of angles must be odd");
    }
    double with_sin = 0.0;
    double with_cos = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double y = 0.0;
        for (std::size_t j = 1; j < n; ++j) {
            const double term = x[(i + j) % n];
            y += (j % 2 == 0) ? term : -term;
        }
        const double s = std::sin(y);
        with_sin += s * std::sin(x[i]);
        with_cos += s * std::cos(x[i]);
    }
    return {with_sin, with_cos};
}

}  // namespace qseq
