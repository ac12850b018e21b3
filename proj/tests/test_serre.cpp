#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "smf2/json_io.hpp"
#include "smf2/serre.hpp"
#include "test_util.hpp"

using namespace smf2;

namespace {

const RamFlag kFlags[] = {RamFlag::peu, RamFlag::ramified, RamFlag::tres};

std::vector<Int> primes_in(Int lo, Int hi) {
    std::vector<Int> ps;
    for (Int p = lo; p <= hi; ++p)
        if (is_prime(p)) ps.push_back(p);
    return ps;
}

bool borel_valid(const BorelDescriptor& d) {
    try {
        serre_weight_borel(d);
        return true;
    } catch (const Error&) {
        return false;
    }
}

}  // namespace

TEST_CASE("ramification values") {
    CHECK(r_value(Prime(7), RamFlag::tres) == 6);
    CHECK(r_value(Prime(7), RamFlag::peu) == 0);
    CHECK(r_value(Prime(2), RamFlag::ramified) == 1);
}

TEST_CASE("Borel weights") {
    CHECK(serre_weight_borel({Prime(7), 3, 1, 0}) == SerreWeight{4, 3, 0});
    CHECK(serre_weight_borel({Prime(5), 2, 2, 1}) == SerreWeight{7, 4, 1});
    CHECK(serre_weight_borel({Prime(5), 0, 3, 0, RamFlag::peu, RamFlag::peu, RamFlag::tres,
                              RamFlag::peu}) == SerreWeight{9, 5, 0});

    // t0 compatibility and ranges
    CHECK_THROWS_AS(serre_weight_borel({Prime(5), 3, 2, 0, RamFlag::peu, RamFlag::peu,
                                        RamFlag::peu, RamFlag::tres}),
                    Error);
    CHECK_NOTHROW(serre_weight_borel({Prime(5), 3, 1, 0, RamFlag::peu, RamFlag::peu,
                                      RamFlag::peu, RamFlag::tres}));
    CHECK_NOTHROW(serre_weight_borel({Prime(5), 3, 0, 0, RamFlag::peu, RamFlag::peu,
                                      RamFlag::peu, RamFlag::ramified}));
    CHECK_THROWS_AS(serre_weight_borel({Prime(5), 5, 0, 0}), Error);
    CHECK_THROWS_AS(serre_weight_borel({Prime(5), 0, 4, 0}), Error);  // non-canonical (0, p-1)

    // the a > b row max-mode variant drops the first class
    BorelDescriptor d{Prime(7), 3, 1, 0, RamFlag::tres, RamFlag::peu, RamFlag::peu,
                      RamFlag::peu};
    CHECK(serre_weight_borel(d).k1 == 4 + 6);
    CHECK(serre_weight_borel(d, BorelMaxMode::upper_pair).k1 == 4);
}

TEST_CASE("Siegel weights") {
    CHECK(serre_weight_siegel({Prime(7), 2, 1, 3}) == SerreWeight{3, 3, 3});
    CHECK(serre_weight_siegel({Prime(7), 2, 0, 0}) == SerreWeight{9, 8, 0});
    CHECK(serre_weight_siegel({Prime(5), 3, 1, 0, RamFlag::ramified}) == SerreWeight{8, 7, 0});
    CHECK_THROWS_AS(serre_weight_siegel({Prime(5), 2, 2, 0}), Error);
    CHECK_THROWS_AS(serre_weight_siegel({Prime(5), 6, 1, 0}), Error);
}

TEST_CASE("Klingen weights") {
    CHECK(serre_weight_klingen(KlingenGenericDescriptor{Prime(7), 2, 1, 0}) ==
          SerreWeight{4, 3, -2});
    CHECK(serre_weight_klingen(KlingenGenericDescriptor{Prime(7), 2, 1, 5}) ==
          SerreWeight{11, 3, -3});
    CHECK(serre_weight_klingen(KlingenSplitDescriptor{Prime(5), 4, 1, 0}) ==
          SerreWeight{6, 5, -4});

    // case mismatches
    CHECK_THROWS_AS(serre_weight_klingen(KlingenGenericDescriptor{Prime(5), 4, 1, 0}), Error);
    CHECK_THROWS_AS(serre_weight_klingen(KlingenSplitDescriptor{Prime(5), 3, 1, 0}), Error);
}

TEST_CASE("Klingen p = 2") {
    CHECK(serre_weight_klingen_p2(0, RamFlag::peu) == SerreWeight{4, 3, -2});
    CHECK(serre_weight_klingen_p2(1, RamFlag::peu) == SerreWeight{3, 3, -1});
    CHECK(serre_weight_klingen_p2(-1, RamFlag::peu) == SerreWeight{3, 3, -2});

    // definitional consistency with the generic formula at p = 2, (a, b) = (1, 0)
    for (Int c = -2; c <= 3; ++c)
        for (RamFlag f : kFlags)
            CHECK(serre_weight_klingen_p2(c, f) ==
                  serre_weight_klingen(KlingenGenericDescriptor{Prime(2), 1, 0, c, f}));
}

TEST_CASE("lexicographic minimum") {
    std::vector<SerreWeight> s1{{4, 3, 0}, {3, 3, 5}, {5, 2, 0}};
    CHECK(sw_min(s1) == SerreWeight{5, 2, 0});
    std::vector<SerreWeight> s2{{4, 3, 0}, {3, 3, 5}};
    CHECK(sw_min(s2) == SerreWeight{3, 3, 5});
    std::vector<SerreWeight> s3{{3, 3, 5}, {3, 3, 2}};
    CHECK(sw_min(s3) == SerreWeight{3, 3, 2});
    CHECK_THROWS_AS(sw_min({}), Error);

    // permutation invariance and idempotence on singletons
    std::mt19937_64 rng(test_seed());
    std::uniform_int_distribution<Int> d(-5, 9);
    for (int i = 0; i < 500; ++i) {
        std::vector<SerreWeight> set;
        const int n = 1 + static_cast<int>(d(rng) + 5) % 6;
        for (int j = 0; j < n; ++j) {
            Int k2 = d(rng);
            set.push_back(SerreWeight{k2 + std::abs(d(rng)), k2, d(rng)});
        }
        auto base = sw_min(set);
        std::shuffle(set.begin(), set.end(), rng);
        CHECK(sw_min(set) == base);
        CHECK(sw_min({base}) == base);
    }
}

TEST_CASE("endoscopic and irreducible reduce to the minimum") {
    EndoscopicDescriptor e{Prime(5), {{4, 3, 0}, {3, 3, 5}}};
    CHECK(serre_weight_endoscopic(e) == SerreWeight{3, 3, 5});
    IrreducibleDescriptor ir{Prime(5), 586, 0, std::vector<SerreWeight>{{4, 4, 1}, {4, 3, 2}}};
    CHECK(serre_weight_irreducible(ir) == SerreWeight{4, 3, 2});
    IrreducibleDescriptor none{Prime(5), 586, 0, std::nullopt};
    CHECK_THROWS_AS(serre_weight_irreducible(none), Error);
}

TEST_CASE("omega2 normalisation") {
    CHECK(omega2_normalize(Prime(5), 6, 4) == std::pair<Int, Int>{2, 0});
    CHECK(omega2_normalize(Prime(5), 3, 1) == std::pair<Int, Int>{3, 1});
    CHECK_THROWS_AS(omega2_normalize(Prime(5), 1, 3), Error);
    // the doubled-representative corner picks the smaller b'
    CHECK(omega2_normalize(Prime(5), 5, 4) == std::pair<Int, Int>{1, 0});

    // Siegel weight is invariant across the shift class
    std::mt19937_64 rng(test_seed() ^ 1);
    for (Int pv : primes_in(3, 13)) {
        const Prime p(pv);
        for (Int a = 1; a <= pv; ++a)
            for (Int b = 0; b < a; ++b)
                for (RamFlag f : kFlags) {
                    std::uniform_int_distribution<Int> shift(-2, 2);
                    const Int m = shift(rng);
                    auto [na, nb] = omega2_normalize(p, a + m * (pv - 1), b + m * (pv - 1));
                    auto base = serre_weight_siegel({p, a, b, 0, f});
                    CHECK(serre_weight_siegel({p, na, nb, 0, f}) == base);
                }
        // both representatives of the ambiguous corner agree
        for (RamFlag f : kFlags)
            CHECK(serre_weight_siegel({p, 1, 0, 0, f}) ==
                  serre_weight_siegel({p, pv, pv - 1, 0, f}));
    }
}

TEST_CASE("omega4 digits") {
    CHECK(omega4_digits(Prime(5), 586) == Omega4Digits{{1, 2, 3, 4}, true});
    CHECK(omega4_digits(Prime(5), 0) == Omega4Digits{{0, 0, 0, 0}, false});
    CHECK(omega4_digits(Prime(3), 32) == Omega4Digits{{2, 1, 0, 1}, false});
    // reduction mod p^4 - 1
    CHECK(omega4_digits(Prime(5), 586 + 624) == omega4_digits(Prime(5), 586));
    CHECK(omega4_digits(Prime(5), -38) == omega4_digits(Prime(5), 586));
}

TEST_CASE("k1 >= k2 exhaustively over in-range descriptors, 3 <= p <= 23") {
    for (Int pv : primes_in(3, 23)) {
        const Prime p(pv);
        for (Int a = 0; a <= pv - 1; ++a)
            for (Int b = 0; b <= pv - 1; ++b)
                for (RamFlag f1 : kFlags)
                    for (RamFlag f3 : kFlags)
                        for (RamFlag ft : kFlags) {
                            BorelDescriptor d{p, a, b, 0, f1, RamFlag::peu, f3, ft};
                            if (!borel_valid(d)) continue;
                            auto sw = serre_weight_borel(d);
                            CHECK(sw.k1 >= sw.k2);
                            auto sw2 = serre_weight_borel(d, BorelMaxMode::upper_pair);
                            CHECK(sw2.k1 >= sw2.k2);
                        }
        for (Int a = 1; a <= pv; ++a)
            for (Int b = 0; b < a; ++b)
                for (RamFlag f : kFlags) {
                    auto sw = serre_weight_siegel({p, a, b, 0, f});
                    CHECK(sw.k1 >= sw.k2);
                    for (Int c = 0; c <= pv - 2; ++c) {
                        if (a - b == (pv + 1) / 2) {
                            auto kw = serre_weight_klingen(
                                KlingenSplitDescriptor{p, a, b, c, f});
                            CHECK(kw.k1 >= kw.k2);
                            CHECK(kw.k2 >= 3);
                        } else {
                            auto kw = serre_weight_klingen(
                                KlingenGenericDescriptor{p, a, b, c, f});
                            CHECK(kw.k1 >= kw.k2);
                            CHECK(kw.k2 >= 3);
                        }
                    }
                }
    }
    // p = 2 Klingen inputs within the window where the order is guaranteed
    for (RamFlag f : kFlags)
        for (Int c = -2; c <= r_value(Prime(2), f) + 1; ++c) {
            auto sw = serre_weight_klingen_p2(c, f);
            CHECK(sw.k1 >= sw.k2);
        }
}

TEST_CASE("upgrading a ramification flag never lowers the weight pair") {
    for (Int pv : primes_in(3, 13)) {
        const Prime p(pv);
        for (Int a = 0; a <= pv - 1; ++a)
            for (Int b = 0; b <= pv - 1; ++b) {
                BorelDescriptor base{p, a, b, 0};
                if (!borel_valid(base)) continue;
                auto sw0 = serre_weight_borel(base);
                for (int slot = 0; slot < 4; ++slot) {
                    BorelDescriptor up = base;
                    (slot == 0   ? up.ram_b1
                     : slot == 1 ? up.ram_b2
                     : slot == 2 ? up.ram_b3
                                 : up.ram_t0) = RamFlag::tres;
                    if (!borel_valid(up)) continue;
                    auto sw1 = serre_weight_borel(up);
                    CHECK(sw1.k1 >= sw0.k1);
                    CHECK(sw1.k2 >= sw0.k2);
                }
            }
    }
}

TEST_CASE("descriptor JSON round trip") {
    std::mt19937_64 rng(test_seed() ^ 2);
    std::uniform_int_distribution<int> flag(0, 2);
    for (int i = 0; i < 300; ++i) {
        Json j;
        switch (i % 4) {
            case 0:
                j = {{"type", "borel"}, {"p", 7}, {"a", 3}, {"b", 1}, {"c", i % 5},
                     {"ram",
                      {{"b1", ram_flag_str(kFlags[flag(rng)])},
                       {"b2", ram_flag_str(kFlags[flag(rng)])},
                       {"b3", ram_flag_str(kFlags[flag(rng)])},
                       {"t0", "peu"}}}};
                break;
            case 1:
                j = {{"type", "siegel"}, {"p", 11}, {"a", 4}, {"b", 2}, {"c", i % 7},
                     {"ram", {{"t3", ram_flag_str(kFlags[flag(rng)])}}}};
                break;
            case 2:
                j = {{"type", "klingen"}, {"p", 7}, {"a", 5}, {"b", 1}, {"c", i % 5},
                     {"ram", {{"t", ram_flag_str(kFlags[flag(rng)])}}}};
                break;
            default:
                j = {{"type", "endoscopic"}, {"p", 5},
                     {"candidates", Json::array({Json::array({4, 3, i % 9}),
                                                 Json::array({5, 3, 0})})}};
                break;
        }
        auto d = descriptor_from_json(j);
        const std::string s = dump_canonical(descriptor_to_json(d));
        auto d2 = descriptor_from_json(Json::parse(s));
        CHECK(dump_canonical(descriptor_to_json(d2)) == s);
    }

    // klingen split detection: a - b = (p+1)/2
    auto d = descriptor_from_json(Json{{"type", "klingen"}, {"p", 5}, {"a", 4}, {"b", 1},
                                       {"c", 0}, {"ram", {{"t", "peu"}}}});
    const auto& lrd = std::get<LocalRepDescriptor>(d);
    CHECK(std::holds_alternative<KlingenSplitDescriptor>(lrd));
    CHECK_THROWS_AS(descriptor_from_json(Json{{"type", "nonsense"}}), Error);
}
