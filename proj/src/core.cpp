#include "smf2/core.hpp"

namespace smf2 {

Int mod_pow(Int base, Int exp, Int m) {
    Int acc = 1 % m;
    Int b = mod_floor(base, m);
    while (exp > 0) {
        if (exp & 1) acc = mod_floor(acc * b, m);
        b = mod_floor(b * b, m);
        exp >>= 1;
    }
    return acc;
}

Int mod_inverse(Int x, Int p) {
    return mod_pow(x, p - 2, p);
}

bool is_prime(Int n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (Int d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

bool weight_lex_le(const Weight& w1, const Weight& w2) {
    if (w1.k2 != w2.k2) return w1.k2 < w2.k2;
    return w1.k1 <= w2.k1;
}

Int det_t(const TMatrix& t) {
    return 4 * t.a * t.c - t.b * t.b;
}

bool is_positive_semidefinite(const TMatrix& t) {
    return t.a >= 0 && t.c >= 0 && det_t(t) >= 0;
}

Weight m_shift(const Prime& p, const Weight& w) {
    if (p.value() == 2) return Weight(0, 0);
    if (w.r() <= 1) return Weight(p.value() - 1, p.value() - 1);
    return Weight(2 * p.value() - 2, 2 * p.value() - 2);
}

Weight theta_target_weight(const Prime& p, const Weight& w) {
    return w + Weight(2, 2) + m_shift(p, w);
}

Weight delta_p(const Prime& p, Int i, Int j) {
    return i == j ? Weight(p.value() - 1, p.value() - 1) : Weight(0, 0);
}

}  // namespace smf2
