#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace smf2 {

using Int = std::int64_t;

/// Error with a stable machine-readable code plus integer parameters.
/// The CLI renders these as JSON error objects (exit code 2).
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message,
          std::map<std::string, Int> params = {})
        : std::runtime_error(message),
          code_(std::move(code)),
          params_(std::move(params)) {}

    const std::string& code() const noexcept { return code_; }
    const std::map<std::string, Int>& params() const noexcept { return params_; }

private:
    std::string code_;
    std::map<std::string, Int> params_;
};

// x mod m in [0, m), m > 0.
inline Int mod_floor(Int x, Int m) {
    Int r = x % m;
    return r < 0 ? r + m : r;
}

Int mod_pow(Int base, Int exp, Int m);
Int mod_inverse(Int x, Int p);  // p prime, x not divisible by p

bool is_prime(Int n);

/// Prime modulus. Primality is checked at construction; p = 2 is allowed.
class Prime {
public:
    explicit Prime(Int p) : p_(p) {
        if (!is_prime(p))
            throw Error("InvalidPrime", "not a prime: " + std::to_string(p), {{"p", p}});
    }
    Int value() const noexcept { return p_; }
    bool is_odd() const noexcept { return p_ != 2; }
    bool divides(Int x) const noexcept { return mod_floor(x, p_) == 0; }

    friend bool operator==(const Prime& a, const Prime& b) noexcept { return a.p_ == b.p_; }
    friend bool operator!=(const Prime& a, const Prime& b) noexcept { return a.p_ != b.p_; }

private:
    Int p_;
};

/// Weight pair (k1, k2) with k1 >= k2; k2 may be negative. r = k1 - k2.
struct Weight {
    Int k1;
    Int k2;

    Weight(Int k1_, Int k2_) : k1(k1_), k2(k2_) {
        if (k1 < k2)
            throw Error("InvalidWeight", "weight requires k1 >= k2",
                        {{"k1", k1_}, {"k2", k2_}});
    }
    Int r() const noexcept { return k1 - k2; }

    Weight operator+(const Weight& o) const { return Weight(k1 + o.k1, k2 + o.k2); }
    friend bool operator==(const Weight& a, const Weight& b) noexcept {
        return a.k1 == b.k1 && a.k2 == b.k2;
    }
    friend bool operator!=(const Weight& a, const Weight& b) noexcept { return !(a == b); }
};

/// True iff w1 <= w2 in the lexicographic order that compares second entries first.
bool weight_lex_le(const Weight& w1, const Weight& w2);

/// Half-integral symmetric matrix [[2a, b], [b, 2c]] stored as (a, b, c).
struct TMatrix {
    Int a = 0;
    Int b = 0;
    Int c = 0;

    Int trace() const noexcept { return a + c; }

    friend bool operator==(const TMatrix& s, const TMatrix& t) noexcept {
        return s.a == t.a && s.b == t.b && s.c == t.c;
    }
    friend bool operator!=(const TMatrix& s, const TMatrix& t) noexcept { return !(s == t); }
    friend bool operator<(const TMatrix& s, const TMatrix& t) noexcept {
        if (s.a != t.a) return s.a < t.a;
        if (s.b != t.b) return s.b < t.b;
        return s.c < t.c;
    }
    friend TMatrix operator+(const TMatrix& s, const TMatrix& t) noexcept {
        return TMatrix{s.a + t.a, s.b + t.b, s.c + t.c};
    }
};

/// det [[2a, b], [b, 2c]] = 4ac - b^2.
Int det_t(const TMatrix& t);

bool is_positive_semidefinite(const TMatrix& t);

/// Weight shift of a single big-theta application:
/// (0,0) for p = 2; (p-1,p-1) for p > 2, r <= 1; (2p-2,2p-2) for p > 2, r > 1.
Weight m_shift(const Prime& p, const Weight& w);

/// w + (2,2) + m_shift(p, w).
Weight theta_target_weight(const Prime& p, const Weight& w);

/// (p-1, p-1) when i = j, else (0, 0).
Weight delta_p(const Prime& p, Int i, Int j);

/// Element of F_p in the canonical representative [0, p).
class FpElem {
public:
    FpElem(Int value, const Prime& p) : v_(mod_floor(value, p.value())), p_(p.value()) {}

    Int value() const noexcept { return v_; }
    Int modulus() const noexcept { return p_; }
    bool is_zero() const noexcept { return v_ == 0; }

    FpElem operator+(const FpElem& o) const { check(o); return raw(mod_floor(v_ + o.v_, p_)); }
    FpElem operator-(const FpElem& o) const { check(o); return raw(mod_floor(v_ - o.v_, p_)); }
    FpElem operator*(const FpElem& o) const { check(o); return raw(mod_floor(v_ * o.v_, p_)); }
    FpElem operator-() const { return raw(mod_floor(-v_, p_)); }

    FpElem inverse() const {
        if (v_ == 0)
            throw Error("DivisionByZero", "inverse of 0 mod " + std::to_string(p_));
        return raw(mod_inverse(v_, p_));
    }

    friend bool operator==(const FpElem& a, const FpElem& b) noexcept {
        return a.p_ == b.p_ && a.v_ == b.v_;
    }
    friend bool operator!=(const FpElem& a, const FpElem& b) noexcept { return !(a == b); }

private:
    FpElem raw(Int v) const {
        FpElem e = *this;
        e.v_ = v;
        return e;
    }
    void check(const FpElem& o) const {
        if (p_ != o.p_)
            throw Error("MismatchedParameters", "F_p elements with different moduli",
                        {{"p1", p_}, {"p2", o.p_}});
    }

    Int v_;
    Int p_;
};

}  // namespace smf2
