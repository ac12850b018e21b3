#pragma once

#include <map>
#include <vector>

#include "smf2/core.hpp"

namespace smf2 {

/// Sparse q-expansion over F_p: a map from positive semidefinite T-matrices
/// (with trace <= max_trace) to coefficient vectors of length r + 1, entries
/// in the canonical representative [0, p). Stored vectors are nonzero.
/// Values are immutable after construction; operations return new values.
class QExpansion {
public:
    using CoeffMap = std::map<TMatrix, std::vector<Int>>;

    QExpansion(Prime p, Int level, Weight weight, Int max_trace, CoeffMap coeffs = {});

    const Prime& p() const noexcept { return p_; }
    Int level() const noexcept { return level_; }
    const Weight& weight() const noexcept { return weight_; }
    Int max_trace() const noexcept { return max_trace_; }
    const CoeffMap& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Coefficient vector at T (all-zero vector if T is not stored).
    std::vector<Int> coefficient(const TMatrix& t) const;
    FpElem coefficient_at(const TMatrix& t, Int component) const;

    /// Same expansion restricted to trace <= new_max_trace.
    QExpansion truncated(Int new_max_trace) const;

    /// Scalar multiple (mod p); zero vectors pruned.
    QExpansion scaled(Int scalar) const;

private:
    Prime p_;
    Int level_;
    Weight weight_;
    Int max_trace_;
    CoeffMap coeffs_;
};

/// Coefficient-wise sum; requires identical (p, N, weight). The result is
/// truncated at the smaller max_trace.
QExpansion qexp_add(const QExpansion& f, const QExpansion& g);

/// Cauchy product over the T-support; requires identical (p, N) and at least
/// one scalar-weight (r = 0) factor. Weights add; the result is truncated at
/// the smaller max_trace.
QExpansion qexp_multiply(const QExpansion& f, const QExpansion& g);

/// q-expansion action of the big theta operator: every coefficient vector at
/// T is scaled by det(T) * (N^2)^{-1} mod p, and the weight moves to
/// theta_target_weight(p, weight). Coefficients at T with p | det T vanish.
QExpansion theta_qexp(const QExpansion& f);

/// j-fold composition of theta_qexp (j = 0 is the identity).
QExpansion theta_iterate(const QExpansion& f, Int j);

/// True iff every stored T has p | det T. A truncated expansion can only
/// certify this within its max_trace; the zero expansion qualifies vacuously.
bool is_weakly_p_singular(const QExpansion& f);

/// Weight shift of the small theta operator: w + (p+1, p-1).
Weight theta3_weight(const Prime& p, const Weight& w);

/// The Hasse invariant as a q-expansion datum: the constant 1 of parallel
/// weight (p-1, p-1).
struct HasseConstant {
    Prime p;

    Weight weight() const { return Weight(p.value() - 1, p.value() - 1); }
    QExpansion q_expansion(Int level, Int max_trace) const;
};

}  // namespace smf2
