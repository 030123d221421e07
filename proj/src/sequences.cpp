#include "qseq/sequences.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qseq/errors.hpp"

namespace qseq {
namespace {

void require_positive_q(double q, const char* op) {
    if (!std::isfinite(q) || q <= 0.0) {
        throw DomainError(std::string(op) + ": q must be finite and positive");
    }
}

void require_finite_q(double q, const char* op) {
    if (!std::isfinite(q)) throw DomainError(std::string(op) + ": q must be finite");
}

double cos_pi_over(Index d) { return std::cos(std::numbers::pi / static_cast<double>(d)); }

// Support chord through (j, p_j), (k, p_k); caller has validated everything.
std::vector<double> chord_values(const WindowSequence& p, double q, Index j, Index k,
                                 double denom) {
    std::vector<double> r;
    r.reserve(p.size());
    for (Index i = p.start(); i <= p.end(); ++i) {
        if (i == j) {
            r.push_back(p[j]);
        } else if (i == k) {
            r.push_back(p[k]);
        } else {
            r.push_back((p[k] * cheb_u(i - j - 1, q) + p[j] * cheb_u(k - i - 1, q)) / denom);
        }
    }
    return r;
}

AffineRep rep_from_leading_pair(double first, double second, double q, Index start) {
    const double scaled = second / q;
    return {scaled - first, 2.0 * first - scaled, q, start};
}

template <typename Pick>
WindowSequence pointwise(std::span<const WindowSequence> ps, const char* op, Pick pick) {
    if (ps.empty()) throw DomainError(std::string(op) + ": no sequences given");
    std::vector<double> out(ps.front().values().begin(), ps.front().values().end());
    for (const auto& p : ps.subspan(1)) {
        if (!p.same_window(ps.front())) {
            throw DomainError(std::string(op) + ": sequences live on different windows");
        }
        const auto v = p.values();
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = pick(out[i], v[i]);
    }
    return {ps.front().start(), std::move(out)};
}

}  // namespace

WindowSequence::WindowSequence(Index start, std::vector<double> values)
    : start_(start), values_(std::move(values)) {
    if (values_.size() < 3) {
        throw DomainError("WindowSequence: window {n..m} needs m - n >= 2");
    }
    for (double v : values_) {
        if (!std::isfinite(v)) throw DomainError("WindowSequence: values must be finite");
    }
}

double WindowSequence::at(Index i) const {
    if (!contains(i)) {
        throw DomainError("WindowSequence: index " + std::to_string(i) + " outside window {" +
                          std::to_string(start()) + ".." + std::to_string(end()) + "}");
    }
    return (*this)[i];
}

bool WindowSequence::interior_positive() const {
    return std::all_of(values_.begin() + 1, values_.end() - 1, [](double v) { return v > 0.0; });
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::QConvex: return "QConvex";
        case Verdict::QConcave: return "QConcave";
        case Verdict::QAffine: return "QAffine";
        case Verdict::Neither: return "Neither";
    }
    return "Neither";
}

std::vector<double> chord_ratios(const WindowSequence& p) {
    std::vector<double> ratios;
    ratios.reserve(p.size() - 2);
    for (Index i = p.start() + 1; i < p.end(); ++i) {
        if (!(p[i] > 0.0)) {
            throw DomainError("chord_ratios: interior value p_" + std::to_string(i) +
                              " must be positive");
        }
        ratios.push_back((p[i - 1] + p[i + 1]) / (2.0 * p[i]));
    }
    return ratios;
}

Classification classify(const WindowSequence& p, double q, double tol) {
    require_positive_q(q, "classify");
    bool convex = true;
    bool concave = true;
    for (Index i = p.start() + 1; i < p.end(); ++i) {
        const double mid = 2.0 * q * p[i];
        const double sides = p[i - 1] + p[i + 1];
        const double slack =
            tol * (1.0 + std::abs(p[i - 1]) + std::abs(p[i + 1]) + std::abs(mid));
        convex = convex && mid <= sides + slack;
        concave = concave && sides <= mid + slack;
    }

    Classification c;
    if (convex && concave) {
        c.verdict = Verdict::QAffine;
    } else if (convex) {
        c.verdict = Verdict::QConvex;
    } else if (concave) {
        c.verdict = Verdict::QConcave;
    }
    if (p.interior_positive()) {
        const auto ratios = chord_ratios(p);
        const auto [lo, hi] = std::minmax_element(ratios.begin(), ratios.end());
        c.convexity_threshold = *lo;
        c.concavity_threshold = *hi;
    }
    return c;
}

bool is_q_concave(const WindowSequence& p, double q, double tol) {
    const Verdict v = classify(p, q, tol).verdict;
    return v == Verdict::QConcave || v == Verdict::QAffine;
}

bool is_q_convex(const WindowSequence& p, double q, double tol) {
    const Verdict v = classify(p, q, tol).verdict;
    return v == Verdict::QConvex || v == Verdict::QAffine;
}

WindowSequence make_affine(const AffineRep& rep, Index end) {
    require_positive_q(rep.q, "make_affine");
    if (!std::isfinite(rep.a) || !std::isfinite(rep.b)) {
        throw DomainError("make_affine: coefficients must be finite");
    }
    if (end - rep.start < 2) throw DomainError("make_affine: window needs m - n >= 2");
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(end - rep.start + 1));
    for (Index offset = 0; offset <= end - rep.start; ++offset) {
        values.push_back(rep.a * cheb_u(offset, rep.q) + rep.b * cheb_t(offset, rep.q));
    }
    return {rep.start, std::move(values)};
}

AffineRep affine_coeffs(const WindowSequence& p, double q, double tol) {
    if (classify(p, q, tol).verdict != Verdict::QAffine) {
        throw PreconditionError("affine_coeffs: sequence is not q-affine at q = " +
                                std::to_string(q));
    }
    return rep_from_leading_pair(p[p.start()], p[p.start() + 1], q, p.start());
}

ThreeTermCheck three_term_inequality(const WindowSequence& p, double q, Index i, Index j, Index k,
                                     double tol) {
    require_finite_q(q, "three_term_inequality");
    if (!(p.start() <= i && i < j && j < k && k <= p.end())) {
        throw DomainError("three_term_inequality: need n <= i < j < k <= m");
    }
    const double left = cheb_u(k - j - 1, q) * p[i];
    const double right = cheb_u(j - i - 1, q) * p[k];
    ThreeTermCheck c;
    c.lhs = left + right;
    c.rhs = cheb_u(k - i - 1, q) * p[j];
    c.condition_met = q >= cos_pi_over(std::max(j - i, k - j));
    const double slack = tol * (1.0 + std::abs(left) + std::abs(right) + std::abs(c.rhs));
    c.holds = c.lhs <= c.rhs + slack;
    return c;
}

SymmetricCheck symmetric_inequality(const WindowSequence& p, double q, Index i, Index j,
                                    double tol) {
    require_finite_q(q, "symmetric_inequality");
    if (!(p.start() < i && i < p.end())) {
        throw DomainError("symmetric_inequality: i must be an interior index");
    }
    if (j < 1 || j > std::min(i - p.start(), p.end() - i)) {
        throw DomainError("symmetric_inequality: need 1 <= j <= min(i - n, m - i)");
    }
    SymmetricCheck c;
    c.lhs = p[i - j] + p[i + j];
    c.rhs = 2.0 * cheb_t(j, q) * p[i];
    c.condition_met = q > cos_pi_over(j);
    const double slack =
        tol * (1.0 + std::abs(p[i - j]) + std::abs(p[i + j]) + std::abs(c.rhs));
    c.holds = c.lhs <= c.rhs + slack;
    return c;
}

WindowSequence support_chord(const WindowSequence& p, double q, Index j, Index k, double tol) {
    if (!(p.start() <= j && j < k && k <= p.end())) {
        throw DomainError("support_chord: need n <= j < k <= m");
    }
    require_positive_q(q, "support_chord");
    if (!(q > cos_pi_over(k - j))) {
        throw PreconditionError("support_chord: q must exceed cos(pi/(k-j))");
    }
    if (!is_q_concave(p, q, tol)) {
        throw PreconditionError("support_chord: sequence is not q-concave");
    }
    const double denom = cheb_u(k - j - 1, q);
    if (!(denom > 1e-14)) {
        throw PreconditionError("support_chord: U_{k-j-1}(q) is not positive");
    }
    return {p.start(), chord_values(p, q, j, k, denom)};
}

std::vector<EnvelopeMember> affine_envelope(const WindowSequence& p, double q, double tol) {
    require_positive_q(q, "affine_envelope");
    if (!p.interior_positive()) {
        throw PreconditionError("affine_envelope: interior of the sequence must be positive");
    }
    const Index width = p.end() - p.start();
    if (q < cos_pi_over(width) - tol) {
        throw PreconditionError("affine_envelope: q must be at least cos(pi/(m-n))");
    }
    if (!is_q_concave(p, q, tol)) {
        throw PreconditionError("affine_envelope: sequence is not q-concave");
    }

    std::vector<EnvelopeMember> members;
    members.reserve(static_cast<std::size_t>(width));
    for (Index j = p.start(); j < p.end(); ++j) {
        WindowSequence values{p.start(), chord_values(p, q, j, j + 1, 1.0)};
        AffineRep rep =
            rep_from_leading_pair(values[p.start()], values[p.start() + 1], q, p.start());
        members.push_back({j, rep, std::move(values)});
    }
    return members;
}

WindowSequence envelope_minimum(std::span<const EnvelopeMember> members) {
    std::vector<WindowSequence> seqs;
    seqs.reserve(members.size());
    for (const auto& m : members) seqs.push_back(m.values);
    return pointwise_min(seqs);
}

WindowSequence pointwise_min(std::span<const WindowSequence> ps) {
    return pointwise(ps, "pointwise_min", [](double a, double b) { return std::min(a, b); });
}

WindowSequence pointwise_max(std::span<const WindowSequence> ps) {
    return pointwise(ps, "pointwise_max", [](double a, double b) { return std::max(a, b); });
}

double max_abs_difference(const WindowSequence& a, const WindowSequence& b) {
    if (!a.same_window(b)) throw DomainError("max_abs_difference: windows differ");
    double worst = 0.0;
    for (Index i = a.start(); i <= a.end(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

}  // namespace qseq
