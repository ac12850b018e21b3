#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "smf2/core.hpp"
#include "test_util.hpp"

using namespace smf2;

TEST_CASE("m_shift cases") {
    CHECK(m_shift(Prime(2), Weight(5, 3)) == Weight(0, 0));
    CHECK(m_shift(Prime(5), Weight(4, 4)) == Weight(4, 4));
    CHECK(m_shift(Prime(5), Weight(5, 4)) == Weight(4, 4));
    CHECK(m_shift(Prime(5), Weight(7, 4)) == Weight(8, 8));
}

TEST_CASE("theta_target_weight") {
    CHECK(theta_target_weight(Prime(5), Weight(4, 4)) == Weight(10, 10));
    CHECK(theta_target_weight(Prime(2), Weight(3, 2)) == Weight(5, 4));
    CHECK(theta_target_weight(Prime(7), Weight(10, 3)) == Weight(24, 17));
}

TEST_CASE("weight_lex_le compares second entries first") {
    CHECK(weight_lex_le(Weight(5, 3), Weight(4, 4)));
    CHECK(weight_lex_le(Weight(5, 3), Weight(5, 3)));
    CHECK_FALSE(weight_lex_le(Weight(9, 4), Weight(6, 4)));
}

TEST_CASE("det_t") {
    CHECK(det_t(TMatrix{1, 1, 1}) == 3);
    CHECK(det_t(TMatrix{0, 0, 0}) == 0);
    CHECK(det_t(TMatrix{2, 1, 1}) == 7);
}

TEST_CASE("delta_p") {
    CHECK(delta_p(Prime(5), 0, 0) == Weight(4, 4));
    CHECK(delta_p(Prime(5), 1, 0) == Weight(0, 0));
    CHECK(delta_p(Prime(2), 3, 3) == Weight(1, 1));
}

TEST_CASE("weight validation") {
    CHECK_THROWS_AS(Weight(1, 2), Error);
    CHECK(Weight(1, -3).r() == 4);
    CHECK_THROWS_AS(Prime(9), Error);
    CHECK(Prime(2).value() == 2);
}

TEST_CASE("lex order is total, antisymmetric and transitive") {
    std::mt19937_64 rng(test_seed());
    std::uniform_int_distribution<Int> d(-10, 10);
    auto random_weight = [&] {
        Int k2 = d(rng);
        Int r = std::abs(d(rng));
        return Weight(k2 + r, k2);
    };
    for (int i = 0; i < 2000; ++i) {
        Weight a = random_weight(), b = random_weight(), c = random_weight();
        CHECK((weight_lex_le(a, b) || weight_lex_le(b, a)));
        if (weight_lex_le(a, b) && weight_lex_le(b, a)) CHECK(a == b);
        if (weight_lex_le(a, b) && weight_lex_le(b, c)) CHECK(weight_lex_le(a, c));
    }
}

TEST_CASE("theta target preserves r and m_shift is constant on the theta orbit") {
    std::mt19937_64 rng(test_seed() ^ 1);
    std::uniform_int_distribution<Int> d(-6, 12);
    const Int primes[] = {2, 3, 5, 7, 13};
    for (int i = 0; i < 500; ++i) {
        Prime p(primes[static_cast<std::size_t>(i) % 5]);
        Int k2 = d(rng);
        Int r = std::abs(d(rng)) % 5;
        Weight w(k2 + r, k2);
        Weight t = theta_target_weight(p, w);
        CHECK(t.r() == w.r());
        CHECK(m_shift(p, w) == m_shift(p, t));
    }
}

TEST_CASE("positive semidefinite T has nonnegative determinant") {
    std::mt19937_64 rng(test_seed() ^ 2);
    for (int i = 0; i < 2000; ++i) {
        TMatrix t = random_psd_t(rng, 30);
        REQUIRE(is_positive_semidefinite(t));
        CHECK(det_t(t) >= 0);
    }
}

TEST_CASE("F_p arithmetic") {
    Prime p(7);
    FpElem a(10, p);
    CHECK(a.value() == 3);
    CHECK((a * a.inverse()).value() == 1);
    CHECK((a + (-a)).is_zero());
    CHECK((FpElem(-1, p)).value() == 6);
    CHECK_THROWS_AS(FpElem(0, p).inverse(), Error);
    CHECK_THROWS_AS(FpElem(1, p) + FpElem(1, Prime(5)), Error);
}
