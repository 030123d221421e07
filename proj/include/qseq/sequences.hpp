#pragma once

#include <optional>
#include <span>
#include <vector>

#include "qseq/chebyshev.hpp"

namespace qseq {

inline constexpr double kDefaultTolerance = 1e-9;

/// A finite real sequence p_n, ..., p_m on the integer window {n, ..., m}.
///
/// The window always holds at least three points (m - n >= 2) and every
/// value is finite. Values are immutable after construction; indexing is by
/// the absolute index i in {n, ..., m}, never by offset.
class WindowSequence {
public:
    WindowSequence(Index start, std::vector<double> values);

    [[nodiscard]] Index start() const { return start_; }
    [[nodiscard]] Index end() const { return start_ + static_cast<Index>(values_.size()) - 1; }
    [[nodiscard]] std::size_t size() const { return values_.size(); }
    [[nodiscard]] std::span<const double> values() const { return values_; }

    [[nodiscard]] bool contains(Index i) const { return i >= start_ && i <= end(); }

    /// Value at absolute index i; unchecked.
    [[nodiscard]] double operator[](Index i) const {
        return values_[static_cast<std::size_t>(i - start_)];
    }

    /// Value at absolute index i; throws DomainError outside the window.
    [[nodiscard]] double at(Index i) const;

    [[nodiscard]] bool same_window(const WindowSequence& other) const {
        return start_ == other.start_ && values_.size() == other.values_.size();
    }

    /// True when every interior value p_{n+1}, ..., p_{m-1} is positive.
    [[nodiscard]] bool interior_positive() const;

    friend bool operator==(const WindowSequence&, const WindowSequence&) = default;

private:
    Index start_;
    std::vector<double> values_;
};

/// Coefficients of the q-affine sequence p_i = a U_{i-n}(q) + b T_{i-n}(q).
struct AffineRep {
    double a = 0.0;
    double b = 0.0;
    double q = 1.0;
    Index start = 0;
};

enum class Verdict { QConvex, QConcave, QAffine, Neither };

[[nodiscard]] const char* to_string(Verdict v);

struct Classification {
    /// min of the chord ratios; p is q-convex iff q <= this. Present only
    /// when the interior of p is positive.
    std::optional<double> convexity_threshold;
    /// max of the chord ratios; p is q-concave iff q >= this. Present only
    /// when the interior of p is positive.
    std::optional<double> concavity_threshold;
    Verdict verdict = Verdict::Neither;
};

/// (p_{i-1} + p_{i+1}) / (2 p_i) for i = n+1, ..., m-1.
/// Throws DomainError if some interior p_i <= 0.
[[nodiscard]] std::vector<double> chord_ratios(const WindowSequence& p);

/// Checks 2q p_i <= p_{i-1} + p_{i+1} (and its reverse) at every interior
/// index, each with slack tol * (1 + |p_{i-1}| + |p_{i+1}| + 2q|p_i|).
[[nodiscard]] Classification classify(const WindowSequence& p, double q,
                                      double tol = kDefaultTolerance);

[[nodiscard]] bool is_q_concave(const WindowSequence& p, double q, double tol = kDefaultTolerance);
[[nodiscard]] bool is_q_convex(const WindowSequence& p, double q, double tol = kDefaultTolerance);

/// Materializes a U_{i-n}(q) + b T_{i-n}(q) for i = rep.start, ..., end.
[[nodiscard]] WindowSequence make_affine(const AffineRep& rep, Index end);

/// Recovers (a, b) from a q-affine sequence using its first two values.
/// Throws PreconditionError if p is not q-affine within tol.
[[nodiscard]] AffineRep affine_coeffs(const WindowSequence& p, double q,
                                      double tol = kDefaultTolerance);

struct ThreeTermCheck {
    double lhs = 0.0;  ///< U_{k-j-1}(q) p_i + U_{j-i-1}(q) p_k
    double rhs = 0.0;  ///< U_{k-i-1}(q) p_j
    bool condition_met = false;  ///< q >= cos(pi / max(j-i, k-j))
    bool holds = false;          ///< lhs <= rhs up to tolerance
};

/// Requires start <= i < j < k <= end.
[[nodiscard]] ThreeTermCheck three_term_inequality(const WindowSequence& p, double q, Index i,
                                                   Index j, Index k,
                                                   double tol = kDefaultTolerance);

struct SymmetricCheck {
    double lhs = 0.0;  ///< p_{i-j} + p_{i+j}
    double rhs = 0.0;  ///< 2 T_j(q) p_i
    bool condition_met = false;  ///< q > cos(pi / j)
    bool holds = false;
};

/// Requires i interior and 1 <= j <= min(i - n, m - i).
[[nodiscard]] SymmetricCheck symmetric_inequality(const WindowSequence& p, double q, Index i,
                                                  Index j, double tol = kDefaultTolerance);

/// The q-affine sequence through (j, p_j) and (k, p_k):
///   r_i = (p_k U_{i-j-1}(q) + p_j U_{k-i-1}(q)) / U_{k-j-1}(q).
/// For q-concave p it lies below p strictly between j and k and above it
/// outside. Requires start <= j < k <= end, q > cos(pi/(k-j)) and p
/// q-concave; throws PreconditionError otherwise.
[[nodiscard]] WindowSequence support_chord(const WindowSequence& p, double q, Index j, Index k,
                                           double tol = kDefaultTolerance);

struct EnvelopeMember {
    Index anchor = 0;  ///< the member touches p at anchor and anchor + 1
    AffineRep rep;
    WindowSequence values;
};

/// One dominating q-affine sequence per consecutive pair (j, j+1) of the
/// window, so that p is their pointwise minimum.
///
/// Requires positive interior, q-concavity at q, and q >= cos(pi/(m-n));
/// the PreconditionError message names the violated condition.
[[nodiscard]] std::vector<EnvelopeMember> affine_envelope(const WindowSequence& p, double q,
                                                          double tol = kDefaultTolerance);

/// Pointwise minimum of the materialized members.
[[nodiscard]] WindowSequence envelope_minimum(std::span<const EnvelopeMember> members);

[[nodiscard]] WindowSequence pointwise_min(std::span<const WindowSequence> ps);
[[nodiscard]] WindowSequence pointwise_max(std::span<const WindowSequence> ps);

/// max_i |a_i - b_i| over a shared window.
[[nodiscard]] double max_abs_difference(const WindowSequence& a, const WindowSequence& b);

}  // namespace qseq
