#pragma once

#include <cstdint>
#include <span>
#include <utility>

namespace qseq {

using Index = std::int64_t;

enum class ChebKind { FirstKind, SecondKind };

/// Orders with |k| above this are evaluated from the trigonometric or
/// hyperbolic closed forms; smaller orders use the three-term recurrence.
inline constexpr Index kRecurrenceOrderLimit = 64;

/// Chebyshev polynomial of the first kind, T_k(x), for any integer order.
///
/// Negative orders are folded with T_{-k} = T_k before evaluation, so the
/// reflection holds bitwise. Throws DomainError for non-finite x.
[[nodiscard]] double cheb_t(Index k, double x);

/// Chebyshev polynomial of the second kind, U_k(x), for any integer order.
///
/// Negative orders are folded with U_{-k} = -U_{k-2} (so U_{-1} = 0).
/// At x = +-1 the limit values U_k(1) = k+1, U_k(-1) = (-1)^k (k+1) are
/// returned directly. Throws DomainError for non-finite x.
[[nodiscard]] double cheb_u(Index k, double x);

[[nodiscard]] double cheb(ChebKind kind, Index k, double x);

/// Largest root of T_k, cos(pi/(2k)). Requires k >= 1.
[[nodiscard]] double largest_root_t(Index k);

/// Largest root of U_k, cos(pi/(k+1)). Requires k >= 1.
[[nodiscard]] double largest_root_u(Index k);

/// floor(pi / arccos(x)) for x in [0, 1): the last order through which
/// T_1(x), T_2(x), ... is strictly decreasing. Quotients within 1e-12 of an
/// integer are snapped to it before flooring.
[[nodiscard]] Index tau(double x);

/// A left-minus-right residual together with the magnitude of the largest
/// term that entered it, so callers can apply mixed tolerances.
struct Residual {
    double value = 0.0;
    double scale = 0.0;

    [[nodiscard]] bool within(double atol, double rtol) const;
    [[nodiscard]] double relative() const;
};

struct IdentityResiduals {
    Residual idU_u;  ///< U_{k-j-1}U_i + U_{j-i-1}U_k - U_{k-i-1}U_j
    Residual idU_t;  ///< U_{k-j-1}T_i + U_{j-i-1}T_k - U_{k-i-1}T_j
    Residual ut_u;   ///< U_{i-j} + U_{i+j} - 2 T_j U_i
    Residual ut_t;   ///< T_{i-j} + T_{i+j} - 2 T_j T_i
    Residual ut1;    ///< U_{i+j} - U_{i-j} - 2 T_{i+1} U_{j-1}
    Residual ut2;    ///< T_{j-i} - T_{j+i} - 2 (1 - q^2) U_{j-1} U_{i-1}

    [[nodiscard]] bool all_within(double atol, double rtol) const;
    [[nodiscard]] double worst_relative() const;
};

[[nodiscard]] IdentityResiduals identity_residuals(Index i, Index j, Index k, double q);

/// For an odd count of angles x_1..x_n (cyclically extended), returns
///   sum_i sin(sum_{j=1}^{n-1} (-1)^j x_{i+j}) sin(x_i)   and
///   sum_i sin(sum_{j=1}^{n-1} (-1)^j x_{i+j}) cos(x_i),
/// both of which vanish identically. Throws DomainError for even or zero n.
[[nodiscard]] std::pair<double, double> alternating_sine_sums(std::span<const double> x);

}  // namespace qseq
