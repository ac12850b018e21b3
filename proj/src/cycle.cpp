#include "smf2/cycle.hpp"

#include <algorithm>
#include <cassert>

namespace smf2 {

namespace {

// Low-point structure: per run, the type, the low number c and the jumping
// number b.
struct Structure {
    std::vector<int> types;
    std::vector<Int> cs;
    std::vector<Int> bs;
};

Int k0_of(Int p, Int k) { return mod_floor(k - 1, p) + 1; }

void walk(Int p, Int start, const Structure& st, std::vector<Int>& values,
          std::vector<LowPoint>& lows) {
    Int v = start;
    for (std::size_t i = 0; i < st.cs.size(); ++i) {
        for (Int j = 0; j + 1 < st.cs[i]; ++j) {
            v += p + 1;
            values.push_back(v);
        }
        v += (p + 1) - st.bs[i] * (p - 1);
        values.push_back(v);
        lows.push_back(LowPoint{st.types[i], st.cs[i], st.bs[i], v});
    }
}

Structure nonsemi_structure(Int p, Int k0) {
    const Int half_up = (p + 1) / 2, half_down = (p - 1) / 2;
    if (k0 == half_up) return {{1}, {half_down}, {half_up}};
    if (k0 == 2) return {{2}, {half_down}, {half_up}};
    if (k0 >= (p + 5) / 2 && k0 <= p - 1)
        return {{1, 2}, {p - k0, k0 - half_up}, {p + 2 - k0, k0 - (p + 3) / 2}};
    if (k0 >= 3 && k0 <= half_down)
        return {{2, 1}, {(p + 3) / 2 - k0, k0 - 2}, {half_up - k0, k0}};
    throw Error("CongruenceExcluded", "no closed-form row for this residue", {{"k0", k0}});
}

// All admissible structures for a walk that starts at `anchor`, spends
// exactly `total_c` theta applications, spends exactly `total_b` units of
// fall, jumps only where the matching trigger congruence holds, and lands on
// `closure` after the last fall. At most four runs are explored; the budgets
// cap everything far below that.
void search(Int p, Int r, Int anchor, Int closure, Int rem_c, Int rem_b, Structure& cur,
            std::vector<Structure>& out) {
    for (Int t = 0; t < rem_c; ++t) {
        const Int v = anchor + t * (p + 1);
        const bool fires1 = mod_floor(v + r, p) == 0;
        const bool fires2 = mod_floor(2 * v - 1, p) == 0;
        for (int type = 1; type <= 2; ++type) {
            if (type == 1 ? !fires1 : !fires2) continue;
            const Int c = t + 1;
            if (c == rem_c) {
                const Int b = rem_b;
                if (b < 1) continue;
                if (v + (p + 1) - b * (p - 1) != closure) continue;
                cur.types.push_back(type);
                cur.cs.push_back(c);
                cur.bs.push_back(b);
                out.push_back(cur);
                cur.types.pop_back();
                cur.cs.pop_back();
                cur.bs.pop_back();
            } else if (cur.types.size() + 1 < 4) {
                for (Int b = 1; b + 1 <= rem_b; ++b) {
                    cur.types.push_back(type);
                    cur.cs.push_back(c);
                    cur.bs.push_back(b);
                    search(p, r, v + (p + 1) - b * (p - 1), closure, rem_c - c, rem_b - b, cur,
                           out);
                    cur.types.pop_back();
                    cur.cs.pop_back();
                    cur.bs.pop_back();
                }
            }
        }
    }
}

std::vector<Structure> enumerate_structures(Int p, Int r, Int anchor, Int closure) {
    std::vector<Structure> out;
    Structure cur;
    search(p, r, anchor, closure, (p - 1) / 2, (p + 1) / 2, cur, out);
    std::sort(out.begin(), out.end(), [](const Structure& a, const Structure& b) {
        if (a.types.size() != b.types.size()) return a.types.size() < b.types.size();
        if (a.types != b.types) return a.types < b.types;
        if (a.cs != b.cs) return a.cs < b.cs;
        return a.bs < b.bs;
    });
    return out;
}

CycleResult base_result(const Prime& p, Int r, Int k, bool semi, CycleProvenance prov) {
    CycleResult res;
    res.p = p.value();
    res.r = r;
    res.k = k;
    res.semi_ordinary = semi;
    res.provenance = prov;
    return res;
}

// Cycle of f from a structure of g = theta(f): prepend the anchor (the
// filtration of theta(f)) and drop the final return-to-anchor entry. Low
// points shift one application later; only those landing inside the window
// survive, and the run leading to the first one is one step longer.
void render_shifted(Int p, Int anchor, const Structure& st, CycleResult& res,
                    bool first_run_extended) {
    std::vector<Int> g_values;
    std::vector<LowPoint> g_lows;
    walk(p, anchor, st, g_values, g_lows);
    res.values.push_back(anchor);
    res.values.insert(res.values.end(), g_values.begin(), g_values.end() - 1);
    Int pos = 0;
    for (std::size_t i = 0; i < g_lows.size(); ++i) {
        pos += st.cs[i];
        if (pos + 1 > (p - 1) / 2) continue;
        LowPoint lp = g_lows[i];
        if (i == 0 && first_run_extended) lp.low_number += 1;
        res.low_points.push_back(lp);
    }
}

}  // namespace

void validate_cycle_input(const Prime& p, Int r, Int k, bool semi_ordinary) {
    if (r < 0)
        throw Error("InvalidArgument", "r must be >= 0", {{"r", r}});
    if (k < 1)
        throw Error("InvalidArgument", "k must be >= 1", {{"k", k}});
    if (p.is_odd() && r == 1 && !semi_ordinary) {
        const Int k0 = k0_of(p.value(), k);
        if (k0 == 1 || k0 == (p.value() + 3) / 2 || k0 == p.value())
            throw Error("CongruenceExcluded",
                        "non-semi-ordinary forms cannot have this filtration residue",
                        {{"k0", k0}, {"p", p.value()}});
    }
}

CycleResult cycle_closed_form(const Prime& p, Int r, Int k, bool semi_ordinary) {
    validate_cycle_input(p, r, k, semi_ordinary);
    const Int pv = p.value();

    if (pv == 2) {
        CycleResult res = base_result(p, r, k, semi_ordinary, CycleProvenance::degenerate);
        res.values = {k + 2};
        return res;
    }
    if (r == 0)
        throw Error("UnsupportedClosedForm",
                    "no closed form is provided for r = 0; use the solver",
                    {{"r", r}});
    if (r > 1) {
        // Each application raises the filtration by (2,2) + (2p-2,2p-2).
        CycleResult res = base_result(p, r, k, semi_ordinary, CycleProvenance::degenerate);
        for (Int j = 1; j <= (pv - 1) / 2; ++j) res.values.push_back(k + 2 * pv * j);
        return res;
    }

    const Int k0 = k0_of(pv, k);
    CycleResult res = base_result(p, r, k, semi_ordinary, CycleProvenance::closed_form);

    if (!semi_ordinary) {
        Structure st = nonsemi_structure(pv, k0);
        walk(pv, k, st, res.values, res.low_points);
        assert(res.values.size() == static_cast<std::size_t>((pv - 1) / 2));
        assert(res.values.back() == k);
        res.trigger_collision = (pv == 3 && !res.low_points.empty());
        return res;
    }

    if (p.divides(k0 + 1) || p.divides(2 * k0 - 1))
        throw Error("IndeterminateStep",
                    "the first fall of a semi-ordinary form at this residue is undetermined",
                    {{"k0", k0}, {"p", pv}});

    auto ascend = [&](Int times) {
        Int v = res.values.empty() ? k : res.values.back();
        for (Int j = 0; j < times; ++j) {
            v += pv + 1;
            res.values.push_back(v);
        }
    };
    auto fall = [&](int type, Int c, Int b) {
        Int v = res.values.back() + (pv + 1) - b * (pv - 1);
        res.values.push_back(v);
        res.low_points.push_back(LowPoint{type, c, b, v});
    };

    if (k0 == 1 || k0 == (pv - 1) / 2 || k0 == pv) {
        ascend((pv - 1) / 2);
    } else if (k0 >= (pv + 3) / 2 && k0 <= pv - 2) {
        ascend(pv - 1 - k0);
        fall(1, pv - k0, pv + 1 - k0);
        ascend(k0 - (pv + 1) / 2);
    } else if (k0 >= 2 && k0 <= (pv - 3) / 2) {
        ascend((pv + 1) / 2 - k0);
        fall(2, (pv + 3) / 2 - k0, (pv - 1) / 2 - k0);
        ascend(k0 - 2);
    } else {
        throw Error("InternalError", "unhandled semi-ordinary residue", {{"k0", k0}});
    }
    assert(res.values.size() == static_cast<std::size_t>((pv - 1) / 2));
    res.trigger_collision = (pv == 3 && !res.low_points.empty());
    return res;
}

std::vector<CycleResult> cycle_solver(const Prime& p, Int r, Int k, bool semi_ordinary) {
    validate_cycle_input(p, r, k, semi_ordinary);
    if (!p.is_odd())
        throw Error("InvalidArgument", "the solver requires p odd", {{"p", p.value()}});
    if (r != 0 && r != 1)
        throw Error("InvalidArgument", "the solver covers r in {0, 1}", {{"r", r}});
    const Int pv = p.value();
    std::vector<CycleResult> out;

    if (!semi_ordinary) {
        for (const Structure& st : enumerate_structures(pv, r, k, k)) {
            CycleResult res = base_result(p, r, k, false, CycleProvenance::solver);
            walk(pv, k, st, res.values, res.low_points);
            res.trigger_collision = (pv == 3 && !res.low_points.empty());
            out.push_back(std::move(res));
        }
        return out;
    }

    const bool trigger1_at_start = mod_floor(k + r, pv) == 0;
    const bool trigger2_at_start = mod_floor(2 * k - 1, pv) == 0;
    if (!trigger1_at_start && !trigger2_at_start) {
        // First step is a plain ascent; the remaining cycle is the cycle of
        // theta(f), rotated.
        const Int anchor = k + pv + 1;
        for (const Structure& st : enumerate_structures(pv, r, anchor, anchor)) {
            CycleResult res = base_result(p, r, k, true, CycleProvenance::solver);
            render_shifted(pv, anchor, st, res, /*first_run_extended=*/true);
            res.trigger_collision = (pv == 3 && !res.low_points.empty());
            out.push_back(std::move(res));
        }
        return out;
    }

    // A trigger congruence holds at f itself, so the size b of the first
    // fall is not determined by the cycle combinatorics. Enumerate
    // candidates for every b within the fall budget; b = 0 is the no-fall
    // candidate.
    for (Int b0 = 0; b0 <= (pv + 1) / 2; ++b0) {
        const Int anchor = k + (pv + 1) - b0 * (pv - 1);
        for (const Structure& st : enumerate_structures(pv, r, anchor, anchor)) {
            for (int type = 1; type <= 2; ++type) {
                if (type == 1 ? !trigger1_at_start : !trigger2_at_start) continue;
                CycleResult res = base_result(p, r, k, true, CycleProvenance::solver);
                render_shifted(pv, anchor, st, res, /*first_run_extended=*/b0 == 0);
                if (b0 >= 1)
                    res.low_points.insert(res.low_points.begin(), LowPoint{type, 1, b0, anchor});
                res.trigger_collision = (pv == 3);
                out.push_back(std::move(res));
                if (b0 == 0) break;  // no fall, no type label to vary
            }
        }
    }
    return out;
}

SelectorResult selector(const Prime& p, Int w) {
    if (!p.is_odd())
        throw Error("SelectorRequiresOddPrime", "selector is defined for odd p",
                    {{"p", p.value()}});
    const Int rho = mod_floor(w, p.value() - 1);
    if (rho % 2 == 0) return SelectorResult{rho / 2, false};
    return SelectorResult{(rho - 1) / 2, true};
}

}  // namespace smf2
