#pragma once

#include "smf2/sympoly.hpp"

namespace smf2::sym {

/// The three u-component coefficients of the first covariant-derivative step
/// applied to a section with components F_0..F_r, evaluated at component
/// index n. b2 pairs with u2, b1 with u1, b0 with u0. c21 is already
/// identified with c12 in the returned polynomials.
struct Psi1Coefficients {
    SymPoly b2, b1, b0;
};

Psi1Coefficients psi1_coefficients(Int r, Int n);

/// Transcription of the general local coefficient A_n of the theta operator
/// for weight (k1, k2) kept formal; terms whose F-index falls outside [0, r]
/// are omitted. Requires 0 <= n <= r.
SymPoly theta_local_general(Int r, Int n);

/// Specialised local coefficient for scalar weight (k, k), component 0.
SymPoly theta_local_r0();

/// Specialised local coefficients for weight (k+1, k); n is 0 or 1.
SymPoly theta_local_r1(Int n);

/// Independent re-derivation of A_n: Leibniz-expand the second covariant
/// derivative of the first-step output, rewrite derivatives of the c-symbols,
/// rewrite the derivative action on the basis sections (the unique linear
/// rules consistent with the first-step coefficient table), identify c21
/// with c12, and project with weights (2, -1, 2).
SymPoly derive_theta_local(Int r, Int n);

/// Exact difference a - b; empty iff a = b.
SymPoly sympoly_diff(const SymPoly& a, const SymPoly& b);

Int pole_order(const SymPoly& p);

/// Formal derivative in one direction (Leibniz over symbol factors).
SymPoly nabla(Dir d, const SymPoly& p);

/// Monomial classes used by the block-wise comparisons.
enum class Block { second_order, det_block, c_squared, c_nabla, other };

Block classify(const Monomial& m);
SymPoly block_of(const SymPoly& p, Block b);

/// k1 -> k, k2 -> k (scalar weight).
SymPoly specialize_equal_weights(const SymPoly& p);
/// k1 -> k+1, k2 -> k.
SymPoly specialize_adjacent_weights(const SymPoly& p);

}  // namespace smf2::sym
