#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <vector>

#include "smf2/cycle.hpp"
#include "test_util.hpp"

using namespace smf2;

namespace {

std::vector<Int> odd_primes_to(Int bound) {
    std::vector<Int> ps;
    for (Int p = 3; p <= bound; p += 2)
        if (is_prime(p)) ps.push_back(p);
    return ps;
}

bool admissible_nonsemi(Int p, Int k) {
    const Int k0 = mod_floor(k - 1, p) + 1;
    return k0 != 1 && k0 != (p + 3) / 2 && k0 != p;
}

// The matching congruence of a consecutive low-point pair: c of the next run
// plus b of the previous one, including the wrap-around pair.
void check_pair_congruences(Int p, const CycleResult& r) {
    const auto& lows = r.low_points;
    REQUIRE(!lows.empty());
    for (std::size_t i = 0; i < lows.size(); ++i) {
        const LowPoint& prev = lows[i];
        const LowPoint& next = lows[(i + 1) % lows.size()];
        const Int sum = next.low_number + prev.jumping_number;
        if (prev.type == 1 && next.type == 1) CHECK(mod_floor(sum, p) == 0);
        if (prev.type == 1 && next.type == 2) CHECK(mod_floor(sum, p) == (p + 3) / 2);
        if (prev.type == 2 && next.type == 1) CHECK(mod_floor(sum, p) == (p - 3) / 2);
        if (prev.type == 2 && next.type == 2) CHECK(mod_floor(sum, p) == 0);
    }
}

// Semi-ordinary oracle: the non-semi machinery anchored at k + (p+1), with
// the cycle rotated one step (last entry to the front). An anchor residue of
// 1 never fires a trigger inside the window, so the cycle is a pure ascent.
CycleResult semi_via_reduction(const Prime& p, Int k) {
    const Int pv = p.value();
    const Int anchor = k + pv + 1;
    CycleResult out;
    out.p = pv;
    out.r = 1;
    out.k = k;
    out.semi_ordinary = true;
    out.provenance = CycleProvenance::closed_form;
    if (mod_floor(anchor - 1, pv) + 1 == 1) {
        for (Int j = 1; j <= (pv - 1) / 2; ++j) out.values.push_back(k + j * (pv + 1));
        return out;
    }
    CycleResult g = cycle_closed_form(p, 1, anchor, false);
    out.values.push_back(anchor);
    out.values.insert(out.values.end(), g.values.begin(), g.values.end() - 1);
    Int pos = 0;
    for (std::size_t i = 0; i < g.low_points.size(); ++i) {
        pos += g.low_points[i].low_number;
        if (pos + 1 > (pv - 1) / 2) continue;
        LowPoint lp = g.low_points[i];
        if (i == 0) lp.low_number += 1;
        out.low_points.push_back(lp);
    }
    out.trigger_collision = (pv == 3 && !out.low_points.empty());
    return out;
}

}  // namespace

TEST_CASE("input validation") {
    CHECK_THROWS_AS(validate_cycle_input(Prime(7), 1, 5, false), Error);   // k0 = (p+3)/2
    CHECK_NOTHROW(validate_cycle_input(Prime(7), 1, 6, false));
    CHECK_NOTHROW(validate_cycle_input(Prime(2), 1, 5, false));
    CHECK_NOTHROW(validate_cycle_input(Prime(7), 1, 8, true));             // k0 = 1, semi ok
    CHECK_THROWS_AS(validate_cycle_input(Prime(7), 1, 0, false), Error);   // k >= 1
    try {
        validate_cycle_input(Prime(7), 1, 12, false);
        FAIL("expected CongruenceExcluded");
    } catch (const Error& e) {
        CHECK(e.code() == "CongruenceExcluded");
        CHECK(e.params().at("k0") == 5);
    }
}

TEST_CASE("worked cycles") {
    CHECK(cycle_closed_form(Prime(5), 1, 13, false).values == std::vector<Int>{19, 13});
    CHECK(cycle_closed_form(Prime(7), 1, 13, false).values == std::vector<Int>{3, 11, 13});
    CHECK(cycle_closed_form(Prime(7), 1, 10, false).values == std::vector<Int>{18, 20, 10});
    CHECK(cycle_closed_form(Prime(2), 1, 9, false).values == std::vector<Int>{11});
    CHECK(cycle_closed_form(Prime(2), 0, 4, false).values == std::vector<Int>{6});
    CHECK(cycle_closed_form(Prime(5), 3, 10, false).values == std::vector<Int>{20, 30});
    CHECK(cycle_closed_form(Prime(5), 1, 11, true).values == std::vector<Int>{17, 23});

    auto c13 = cycle_closed_form(Prime(7), 1, 13, false);
    REQUIRE(c13.low_points.size() == 2);
    CHECK(c13.low_points[0] == LowPoint{1, 1, 3, 3});
    CHECK(c13.low_points[1] == LowPoint{2, 2, 1, 13});

    auto c10 = cycle_closed_form(Prime(7), 1, 10, false);
    REQUIRE(c10.low_points.size() == 2);
    CHECK(c10.low_points[0] == LowPoint{2, 2, 1, 20});
    CHECK(c10.low_points[1] == LowPoint{1, 1, 3, 10});

    CHECK(cycle_closed_form(Prime(2), 1, 9, false).provenance == CycleProvenance::degenerate);
    CHECK(cycle_closed_form(Prime(5), 3, 10, false).provenance == CycleProvenance::degenerate);
}

TEST_CASE("error branches") {
    CHECK_THROWS_AS(cycle_closed_form(Prime(5), 0, 7, false), Error);  // r = 0 unsupported
    try {
        cycle_closed_form(Prime(7), 1, 6, true);  // k0 = 6 = p-1, p | k0+1
        FAIL("expected IndeterminateStep");
    } catch (const Error& e) {
        CHECK(e.code() == "IndeterminateStep");
    }
    CHECK_THROWS_AS(cycle_closed_form(Prime(7), 1, 4, true), Error);  // k0 = (p+1)/2
}

TEST_CASE("closed form self-consistency over all odd p <= 97") {
    for (Int pv : odd_primes_to(97)) {
        const Prime p(pv);
        for (Int k0 = 1; k0 <= pv; ++k0) {
            const Int k = pv + k0;  // a = 1 representative
            if (!admissible_nonsemi(pv, k)) continue;
            auto r = cycle_closed_form(p, 1, k, false);
            CHECK(r.values.size() == static_cast<std::size_t>((pv - 1) / 2));
            CHECK(r.values.back() == k);
            Int csum = 0, bsum = 0;
            for (const auto& lp : r.low_points) {
                csum += lp.low_number;
                bsum += lp.jumping_number;
                CHECK(lp.low_number >= 1);
                CHECK(lp.jumping_number >= 1);
            }
            CHECK(csum == (pv - 1) / 2);
            CHECK(bsum == (pv + 1) / 2);
            check_pair_congruences(pv, r);
            CHECK(r.low_points.size() <= 2);

            // every step is +(p+1) or a fall by a positive multiple of p-1
            Int prev = k;
            for (Int v : r.values) {
                const Int diff = prev + pv + 1 - v;
                CHECK(diff % (pv - 1) == 0);
                CHECK(diff >= 0);
                prev = v;
            }
        }
    }
}

TEST_CASE("solver equals the closed form for p >= 5") {
    for (Int pv : odd_primes_to(31)) {
        if (pv < 5) continue;
        const Prime p(pv);
        for (Int k0 = 1; k0 <= pv; ++k0) {
            const Int k = 2 * pv + k0;
            if (!admissible_nonsemi(pv, k)) continue;
            auto sols = cycle_solver(p, 1, k, false);
            REQUIRE(sols.size() == 1);
            auto cf = cycle_closed_form(p, 1, k, false);
            CHECK(sols[0].values == cf.values);
            CHECK(sols[0].low_points == cf.low_points);
            CHECK(sols[0].provenance == CycleProvenance::solver);
            CHECK(sols[0].low_points.size() <= 2);
        }
    }
}

TEST_CASE("p = 3 trigger collision yields both labellings") {
    auto sols = cycle_solver(Prime(3), 1, 2, false);
    REQUIRE(sols.size() == 2);
    CHECK(sols[0].values == sols[1].values);
    CHECK(sols[0].low_points[0].type == 1);
    CHECK(sols[1].low_points[0].type == 2);
    CHECK(sols[0].trigger_collision);
    CHECK(sols[1].trigger_collision);
    auto cf = cycle_closed_form(Prime(3), 1, 2, false);
    CHECK(cf.trigger_collision);
    CHECK(cf.values == sols[0].values);
}

TEST_CASE("semi-ordinary closed form equals the rotated non-semi machinery") {
    for (Int pv : odd_primes_to(31)) {
        const Prime p(pv);
        for (Int k0 = 1; k0 <= pv; ++k0) {
            if (mod_floor(k0 + 1, pv) == 0 || mod_floor(2 * k0 - 1, pv) == 0) continue;
            const Int k = pv + k0;
            auto direct = cycle_closed_form(p, 1, k, true);
            auto reduced = semi_via_reduction(p, k);
            CHECK(direct.values == reduced.values);
            CHECK(direct.low_points == reduced.low_points);
        }
    }
}

TEST_CASE("semi-ordinary solver agrees with the closed form") {
    for (Int pv : {5LL, 7LL, 11LL, 13LL}) {
        const Prime p(pv);
        for (Int k0 = 1; k0 <= pv; ++k0) {
            if (mod_floor(k0 + 1, pv) == 0 || mod_floor(2 * k0 - 1, pv) == 0) continue;
            const Int k = pv + k0;
            auto cf = cycle_closed_form(p, 1, k, true);
            auto sols = cycle_solver(p, 1, k, true);
            if (k0 == pv) {
                // anchor residue 1: no trigger fires, no structure to find
                CHECK(sols.empty());
                CHECK(cf.low_points.empty());
            } else {
                REQUIRE(sols.size() == 1);
                CHECK(sols[0].values == cf.values);
                CHECK(sols[0].low_points == cf.low_points);
            }
        }
    }
}

TEST_CASE("semi-ordinary indeterminate branch enumerates both congruence classes") {
    // p = 7, k0 = 6: p | k0 + 1, type-1 side; candidates exist for several b
    auto sols = cycle_solver(Prime(7), 1, 13 * 7 + 6, true);
    CHECK(!sols.empty());
    for (const auto& s : sols) {
        CHECK(s.values.size() == 3);
        if (!s.low_points.empty() && s.low_points[0].low_number == 1) {
            // first fall at theta(f): its anchor is congruent to b mod p
            const auto& lp = s.low_points[0];
            CHECK(lp.type == 1);
            CHECK(mod_floor(lp.anchor, 7) == mod_floor(lp.jumping_number, 7));
        }
    }
    // p = 7, k0 = 4: p | 2 k0 - 1, type-2 side: anchor ≡ (p+3)/2 + b
    auto sols2 = cycle_solver(Prime(7), 1, 7 + 4, true);
    CHECK(!sols2.empty());
    for (const auto& s : sols2) {
        if (!s.low_points.empty() && s.low_points[0].low_number == 1) {
            const auto& lp = s.low_points[0];
            CHECK(lp.type == 2);
            CHECK(mod_floor(lp.anchor, 7) == mod_floor(5 + lp.jumping_number, 7));
        }
    }
}

TEST_CASE("r = 0 solver") {
    // Constraint enumeration only; structures satisfy the same budgets.
    for (Int pv : {5LL, 7LL, 11LL}) {
        const Prime p(pv);
        for (Int k = pv + 1; k <= 2 * pv; ++k) {
            for (const auto& s : cycle_solver(p, 0, k, false)) {
                CHECK(s.values.size() == static_cast<std::size_t>((pv - 1) / 2));
                CHECK(s.values.back() == k);
                Int csum = 0, bsum = 0;
                for (const auto& lp : s.low_points) {
                    csum += lp.low_number;
                    bsum += lp.jumping_number;
                }
                CHECK(csum == (pv - 1) / 2);
                CHECK(bsum == (pv + 1) / 2);
                CHECK(s.provenance == CycleProvenance::solver);
            }
        }
    }
    CHECK_THROWS_AS(cycle_solver(Prime(5), 2, 7, false), Error);
    CHECK_THROWS_AS(cycle_solver(Prime(2), 1, 7, false), Error);
}

TEST_CASE("selector") {
    CHECK(selector(Prime(7), 10) == SelectorResult{2, false});
    CHECK(selector(Prime(5), 3) == SelectorResult{1, true});
    CHECK(selector(Prime(5), 0) == SelectorResult{0, false});
    CHECK(selector(Prime(5), -1) == SelectorResult{1, true});  // -1 ≡ 3 mod 4
    CHECK_THROWS_AS(selector(Prime(2), 1), Error);

    // totality and uniqueness over every residue class, all odd p <= 97
    for (Int pv : odd_primes_to(97)) {
        const Prime p(pv);
        for (Int w = 0; w < pv - 1; ++w) {
            auto s = selector(p, w);
            CHECK(s.j >= 0);
            CHECK(s.j < (pv - 1) / 2);
            const Int rep = s.use_theta3 ? 2 * s.j + 1 : 2 * s.j;
            CHECK(mod_floor(w - rep, pv - 1) == 0);
            // uniqueness: the other parity class cannot also represent w
            const Int other = s.use_theta3 ? 2 * s.j : 2 * s.j + 1;
            CHECK(mod_floor(w - other, pv - 1) != 0);
        }
    }
}
