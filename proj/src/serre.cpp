#include "smf2/serre.hpp"

#include <algorithm>

namespace smf2 {

namespace {

void require_range(const char* what, Int value, Int lo, Int hi) {
    if (value < lo || value > hi)
        throw Error("InvalidDescriptor", std::string(what) + " out of range",
                    {{"value", value}, {"lo", lo}, {"hi", hi}});
}

void require_siegel_window(const Prime& p, Int a, Int b) {
    if (!(0 <= b && b < a && a <= p.value()))
        throw Error("InvalidDescriptor", "parameters must satisfy 0 <= b < a <= p",
                    {{"a", a}, {"b", b}, {"p", p.value()}});
}

SerreWeight klingen_formula(const Prime& p, Int a, Int b, Int c, Int r) {
    const Int pv = p.value();
    if (2 * b > c - r)
        return SerreWeight{1 + (a + b - c + r), 2 + (a - b), c - r - a};
    return SerreWeight{1 + (a + b + 2 * (pv - 1) - c + r), 2 + (a - b),
                       c - r - a - (pv - 1)};
}

}  // namespace

Int r_value(const Prime& p, RamFlag flag) {
    return flag == RamFlag::peu ? 0 : p.value() - 1;
}

bool meets_classical_bound(const SerreWeight& sw) {
    return sw.k1 >= sw.k2 && sw.k2 >= 3;
}

SerreWeight serre_weight_borel(const BorelDescriptor& d, BorelMaxMode mode) {
    const Int pv = d.p.value();
    require_range("a", d.a, 0, pv - 1);
    require_range("b", d.b, 0, pv - 1);
    if (d.a == 0 && d.b == pv - 1)
        throw Error("InvalidDescriptor",
                    "(a, b) = (0, p-1) is the non-canonical form of (0, 0)",
                    {{"a", d.a}, {"b", d.b}});
    if (d.ram_t0 == RamFlag::tres && d.b != 1)
        throw Error("InvalidDescriptor", "a tres ramifiee t0 requires b = 1", {{"b", d.b}});
    if (d.ram_t0 == RamFlag::ramified && d.b != 0)
        throw Error("InvalidDescriptor", "a ramified t0 requires b = 0", {{"b", d.b}});

    const Int r1 = r_value(d.p, d.ram_b1);
    const Int r2 = r_value(d.p, d.ram_b2);
    const Int r3 = r_value(d.p, d.ram_b3);
    const Int rt = r_value(d.p, d.ram_t0);

    Int k1, k2;
    if (d.a > d.b) {
        const Int rmax = mode == BorelMaxMode::all_classes ? std::max({r1, r2, r3})
                                                           : std::max(r2, r3);
        const Weight delta = delta_p(d.p, d.b, 0);
        k1 = 1 + d.a + rmax + rt + delta.k1;
        k2 = 2 + d.b + rt + delta.k2;
    } else if (d.a == d.b) {
        const Weight delta = delta_p(d.p, d.a, 0);
        k1 = 1 + d.a + (pv - 1) + rt + delta.k1;
        k2 = 2 + d.a + rt + delta.k2;
    } else {
        k1 = 1 + d.a + (pv - 1) + r3 + rt;
        k2 = 2 + d.b + rt;
    }
    return SerreWeight{k1, k2, d.c};
}

SerreWeight serre_weight_siegel(const SiegelDescriptor& d) {
    require_siegel_window(d.p, d.a, d.b);
    const Int r = r_value(d.p, d.ram_t3);
    const Weight delta = delta_p(d.p, d.b, 0);
    return SerreWeight{1 + d.a + r + delta.k1, 2 + d.b + r + delta.k2, d.c};
}

SerreWeight serre_weight_klingen(const KlingenGenericDescriptor& d) {
    require_siegel_window(d.p, d.a, d.b);
    if (mod_floor(2 * (d.a - d.b), d.p.value() + 1) == 0)
        throw Error("InvalidDescriptor",
                    "(p+1) | 2(a-b): this is the split case, not the generic one",
                    {{"a", d.a}, {"b", d.b}, {"p", d.p.value()}});
    return klingen_formula(d.p, d.a, d.b, d.c, r_value(d.p, d.ram_t));
}

SerreWeight serre_weight_klingen(const KlingenSplitDescriptor& d) {
    require_siegel_window(d.p, d.a, d.b);
    if (!d.p.is_odd() || d.a - d.b != (d.p.value() + 1) / 2)
        throw Error("InvalidDescriptor", "the split case requires a - b = (p+1)/2",
                    {{"a", d.a}, {"b", d.b}, {"p", d.p.value()}});
    return klingen_formula(d.p, d.a, d.b, d.c, r_value(d.p, d.ram_max));
}

SerreWeight serre_weight_klingen_p2(Int c, RamFlag ram) {
    const Prime two(2);
    return klingen_formula(two, 1, 0, c, r_value(two, ram));
}

SerreWeight sw_min(const std::vector<SerreWeight>& candidates) {
    if (candidates.empty())
        throw Error("EmptyCandidateSet", "the lexicographic minimum needs a nonempty set");
    return *std::min_element(candidates.begin(), candidates.end(),
                             [](const SerreWeight& x, const SerreWeight& y) {
                                 if (x.k2 != y.k2) return x.k2 < y.k2;
                                 if (x.k1 != y.k1) return x.k1 < y.k1;
                                 return x.w < y.w;
                             });
}

SerreWeight serre_weight_endoscopic(const EndoscopicDescriptor& d) {
    return sw_min(d.candidates);
}

SerreWeight serre_weight_irreducible(const IrreducibleDescriptor& d) {
    if (!d.candidates.has_value())
        throw Error("CandidatesRequired",
                    "the irreducible case is a minimum over caller-supplied candidates");
    return sw_min(*d.candidates);
}

std::pair<Int, Int> omega2_normalize(const Prime& p, Int a, Int b) {
    const Int pv = p.value();
    const Int d = a - b;
    if (d >= 1) {
        const Int beta = mod_floor(b, pv - 1);  // smallest b' >= 0 in the shift class
        if (beta + d <= pv) return {beta + d, beta};
    }
    throw Error("NoValidRepresentative",
                "no shift by multiples of (p-1, p-1) reaches 0 <= b < a <= p",
                {{"a", a}, {"b", b}, {"p", pv}});
}

Omega4Digits omega4_digits(const Prime& p, Int a) {
    const Int pv = p.value();
    const Int modulus = pv * pv * pv * pv - 1;
    Int m = mod_floor(a, modulus);
    Omega4Digits out{};
    for (int i = 0; i < 4; ++i) {
        out.digits[static_cast<std::size_t>(i)] = m % pv;
        m /= pv;
    }
    out.distinct = true;
    for (int i = 0; i < 4 && out.distinct; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (out.digits[static_cast<std::size_t>(i)] ==
                out.digits[static_cast<std::size_t>(j)]) {
                out.distinct = false;
                break;
            }
    return out;
}

}  // namespace smf2
