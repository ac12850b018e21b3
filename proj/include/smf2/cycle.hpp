#pragma once

#include <vector>

#include "smf2/core.hpp"

namespace smf2 {

/// One fall of the filtration inside a theta cycle. type 1 fires when the
/// previous second-entry value v has v + r ≡ 0 mod p, type 2 when
/// 2v - 1 ≡ 0 mod p. low_number counts theta applications since the previous
/// low point (or the start), jumping_number is the fall size in units of
/// p - 1, anchor is the second-entry filtration value at the low point.
struct LowPoint {
    int type;
    Int low_number;
    Int jumping_number;
    Int anchor;

    friend bool operator==(const LowPoint&, const LowPoint&) = default;
};

enum class CycleProvenance { closed_form, solver, degenerate };

/// Second entries of the filtrations along a theta cycle: (p-1)/2 values for
/// odd p, one value for p = 2. First entries are reconstructible as
/// value + r since theta preserves r.
struct CycleResult {
    Int p;
    Int r;
    Int k;
    bool semi_ordinary = false;
    std::vector<Int> values;
    std::vector<LowPoint> low_points;
    CycleProvenance provenance = CycleProvenance::closed_form;
    /// p = 3 only: the two trigger congruences coincide, so the type label
    /// is not determined by the value sequence.
    bool trigger_collision = false;

    friend bool operator==(const CycleResult&, const CycleResult&) = default;
};

/// Rejects k ≡ 1, (p+3)/2, p mod p for odd p, r = 1, non-semi-ordinary
/// (error CongruenceExcluded); everything else passes.
void validate_cycle_input(const Prime& p, Int r, Int k, bool semi_ordinary);

/// Closed-form theta cycle.
///   p = 2: (k + 2).                      r > 1, odd p: (k + 2p, ..., k + (p-1)p).
///   r = 1, odd p: the non-semi-ordinary and semi-ordinary closed forms.
/// Errors: UnsupportedClosedForm for r = 0 (use cycle_solver);
/// IndeterminateStep for semi-ordinary with p | (k0+1)(2k0-1).
CycleResult cycle_closed_form(const Prime& p, Int r, Int k, bool semi_ordinary);

/// Constraint-enumeration solver over low-point structures (odd p, r in
/// {0, 1}). Enumerates all (types, low numbers, jumping numbers) satisfying
/// the length and fall budgets, the trigger congruences at each jump, the
/// anchor recursion, and closure at k (non-semi). For semi-ordinary inputs
/// the enumeration is anchored at k + (p+1); if p | (k0+1)(2k0-1) the size
/// of the first fall is undetermined and candidates for every b >= 0 within
/// the fall budget are returned. Results are sorted by (s, types, c-vector).
std::vector<CycleResult> cycle_solver(const Prime& p, Int r, Int k, bool semi_ordinary);

/// Position of a weight-w representation in a theta cycle: the unique j with
/// 0 <= j < (p-1)/2 and w ≡ 2j (use_theta3 = false) or w ≡ 2j + 1
/// (use_theta3 = true) mod p - 1. Requires p odd.
struct SelectorResult {
    Int j;
    bool use_theta3;

    friend bool operator==(const SelectorResult&, const SelectorResult&) = default;
};

SelectorResult selector(const Prime& p, Int w);

}  // namespace smf2
