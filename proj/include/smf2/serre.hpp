#pragma once

#include <array>
#include <optional>
#include <vector>

#include "smf2/core.hpp"

namespace smf2 {

/// Ramification class of a local extension class. tres and ramified
/// contribute p - 1 to the weight formulas, peu contributes 0.
enum class RamFlag { peu, ramified, tres };

Int r_value(const Prime& p, RamFlag flag);

/// Classical Serre weight triple. k1 >= k2 holds for outputs computed from
/// valid descriptors; the k2 >= 3 bound is case-dependent and only reported.
struct SerreWeight {
    Int k1;
    Int k2;
    Int w;

    friend bool operator==(const SerreWeight&, const SerreWeight&) = default;
};

/// True iff k1 >= k2 >= 3 (the bound the weight recipes target; some
/// Klingen inputs land below it).
bool meets_classical_bound(const SerreWeight& sw);

/// Borel-ordinary local data. Ranges: 0 <= a, b <= p - 1, excluding the
/// non-canonical pair (a, b) = (0, p-1) (same characters as (0, 0)).
/// ram_t0 may be tres only when b = 1 and ramified only when b = 0.
struct BorelDescriptor {
    Prime p;
    Int a;
    Int b;
    Int c;
    RamFlag ram_b1 = RamFlag::peu;
    RamFlag ram_b2 = RamFlag::peu;
    RamFlag ram_b3 = RamFlag::peu;
    RamFlag ram_t0 = RamFlag::peu;
};

/// Which extension classes enter the max in the a > b row: the uniform
/// formula uses all three; the Hodge-Tate-pair variant omits the first.
enum class BorelMaxMode { all_classes, upper_pair };

SerreWeight serre_weight_borel(const BorelDescriptor& d,
                               BorelMaxMode mode = BorelMaxMode::all_classes);

/// Siegel-ordinary local data, 0 <= b < a <= p.
struct SiegelDescriptor {
    Prime p;
    Int a;
    Int b;
    Int c;
    RamFlag ram_t3 = RamFlag::peu;
};

SerreWeight serre_weight_siegel(const SiegelDescriptor& d);

/// Klingen-ordinary local data, 0 <= b < a <= p with (p+1) not dividing
/// 2(a-b).
struct KlingenGenericDescriptor {
    Prime p;
    Int a;
    Int b;
    Int c;
    RamFlag ram_t = RamFlag::peu;
};

/// Klingen-ordinary split case, a - b = (p+1)/2; the flag encodes the
/// maximum ramification value over the three summands.
struct KlingenSplitDescriptor {
    Prime p;
    Int a;
    Int b;
    Int c;
    RamFlag ram_max = RamFlag::peu;
};

SerreWeight serre_weight_klingen(const KlingenGenericDescriptor& d);
SerreWeight serre_weight_klingen(const KlingenSplitDescriptor& d);

/// p = 2 Klingen case: the generic formula at p = 2 with (a, b) = (1, 0).
SerreWeight serre_weight_klingen_p2(Int c, RamFlag ram);

struct EndoscopicDescriptor {
    Prime p;
    std::vector<SerreWeight> candidates;
};

struct IrreducibleDescriptor {
    Prime p;
    Int a;
    Int c;
    std::optional<std::vector<SerreWeight>> candidates;
};

/// Lexicographic minimum comparing k2 first, then k1, then w.
/// Errors on an empty set.
SerreWeight sw_min(const std::vector<SerreWeight>& candidates);

SerreWeight serre_weight_endoscopic(const EndoscopicDescriptor& d);
SerreWeight serre_weight_irreducible(const IrreducibleDescriptor& d);

/// The unique (a', b') with 0 <= b' < a' <= p and (a', b') = (a, b) +
/// m(p-1, p-1); where two such representatives exist the one with the
/// smaller b' is returned. Errors with NoValidRepresentative when no shift
/// reaches the window.
std::pair<Int, Int> omega2_normalize(const Prime& p, Int a, Int b);

/// Base-p digits of a mod p^4 - 1 and the distinctness verdict of the
/// level-4 character exponent (the liftability criterion for the
/// irreducible case).
struct Omega4Digits {
    std::array<Int, 4> digits;
    bool distinct;

    friend bool operator==(const Omega4Digits&, const Omega4Digits&) = default;
};

Omega4Digits omega4_digits(const Prime& p, Int a);

}  // namespace smf2
