#pragma once

#include <array>
#include <compare>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "smf2/core.hpp"

namespace smf2::sym {

/// Formal parameters of monomial coefficients: the weight entries k1, k2,
/// the component index n, and the scalar weight k used by specialisations.
enum class Param : std::uint8_t { k1 = 0, k2 = 1, n = 2, k = 3 };

/// Polynomial over Z in the four formal parameters. Zero coefficients are
/// never stored, so map equality is canonical equality.
class ParamPoly {
public:
    using Expo = std::array<std::uint8_t, 4>;

    ParamPoly() = default;
    static ParamPoly constant(Int c);
    static ParamPoly var(Param v);

    bool is_zero() const noexcept { return terms_.empty(); }

    ParamPoly operator-() const;
    ParamPoly operator+(const ParamPoly& o) const;
    ParamPoly operator-(const ParamPoly& o) const;
    ParamPoly operator*(const ParamPoly& o) const;

    /// Substitute `value` for the parameter `v`.
    ParamPoly substituted(Param v, const ParamPoly& value) const;

    Int evaluated(Int k1, Int k2, Int n, Int k) const;

    /// Canonical text form; terms in descending exponent order.
    std::string str() const;

    friend bool operator==(const ParamPoly&, const ParamPoly&) = default;
    friend std::strong_ordering operator<=>(const ParamPoly& a, const ParamPoly& b) {
        return a.terms_ <=> b.terms_;
    }

    const std::map<Expo, Int>& terms() const noexcept { return terms_; }

private:
    void add_term(const Expo& e, Int c);
    std::map<Expo, Int> terms_;
};

ParamPoly operator*(Int c, const ParamPoly& p);
ParamPoly operator+(const ParamPoly& p, Int c);
ParamPoly operator-(const ParamPoly& p, Int c);

/// Derivative directions; d12 is the mixed one.
enum class Dir : std::uint8_t { d11 = 0, d12 = 1, d22 = 2 };

std::string dir_str(Dir d);

/// One formal factor: a local unit-root symbol c_ij, the atomic det(C),
/// a coefficient function F_m, or a first/second derivative of F_m.
/// Second-derivative direction pairs are stored sorted (the directions
/// commute by hypothesis). c21 appears only in intermediate computations;
/// public results identify it with c12.
struct Symbol {
    enum class Kind : std::uint8_t { c11, c12, c21, c22, det_c, f, d, dd };

    Kind kind;
    Int index = 0;  // F-index for f / d / dd
    Dir d1 = Dir::d11;
    Dir d2 = Dir::d11;

    static Symbol c11() { return {Kind::c11}; }
    static Symbol c12() { return {Kind::c12}; }
    static Symbol c21() { return {Kind::c21}; }
    static Symbol c22() { return {Kind::c22}; }
    static Symbol det_c() { return {Kind::det_c}; }
    static Symbol f(Int m) { return {Kind::f, m}; }
    static Symbol d(Dir dir, Int m) { return {Kind::d, m, dir}; }
    static Symbol dd(Dir a, Dir b, Int m) {
        if (static_cast<int>(a) > static_cast<int>(b)) std::swap(a, b);
        return {Kind::dd, m, a, b};
    }

    bool is_c_like() const noexcept {
        return kind == Kind::c11 || kind == Kind::c12 || kind == Kind::c21 ||
               kind == Kind::c22 || kind == Kind::det_c;
    }

    std::string str() const;

    friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

/// Multiset of symbols, kept sorted.
struct Monomial {
    std::vector<Symbol> factors;

    Monomial() = default;
    Monomial(std::initializer_list<Symbol> fs);
    explicit Monomial(std::vector<Symbol> fs);

    Monomial times(const Monomial& o) const;

    /// Count of c_ij and det(C) factors; each contributes one potential
    /// pole along the vanishing locus of the Hasse invariant.
    Int pole_count() const;

    Int count_kind(Symbol::Kind k) const;
    bool empty() const noexcept { return factors.empty(); }

    std::string str() const;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Sparse polynomial in the symbols with ParamPoly coefficients.
class SymPoly {
public:
    SymPoly() = default;

    static SymPoly term(Monomial m, ParamPoly coeff);
    static SymPoly term(Monomial m, Int coeff) { return term(std::move(m), ParamPoly::constant(coeff)); }

    bool is_zero() const noexcept { return terms_.empty(); }

    SymPoly operator-() const;
    SymPoly operator+(const SymPoly& o) const;
    SymPoly operator-(const SymPoly& o) const;
    SymPoly operator*(const SymPoly& o) const;
    SymPoly scaled(const ParamPoly& c) const;

    /// Substitute a parameter in every coefficient.
    SymPoly substituted(Param v, const ParamPoly& value) const;

    /// Rewrite each symbol factor; used for the c21 -> c12 identification.
    SymPoly with_symbols(const std::function<Symbol(const Symbol&)>& f) const;

    /// Expand det(C) -> c11*c22 - c12*c12 (valid after the c21
    /// identification); used when comparing against the re-derived form,
    /// which never produces the atomic determinant symbol.
    SymPoly expanded_det() const;

    SymPoly filtered(const std::function<bool(const Monomial&)>& keep) const;

    /// Coefficient of an exact monomial (zero polynomial if absent).
    ParamPoly coefficient(const Monomial& m) const;

    /// Max over monomials of the c/det(C) factor count.
    Int pole_order() const;

    bool contains_kind(Symbol::Kind k) const;

    /// Canonical text form: "(coeff)*mono + ..." with sorted monomials.
    std::string str() const;

    const std::map<Monomial, ParamPoly>& terms() const noexcept { return terms_; }

    friend bool operator==(const SymPoly&, const SymPoly&) = default;

private:
    void add_term(const Monomial& m, const ParamPoly& c);
    std::map<Monomial, ParamPoly> terms_;
};

}  // namespace smf2::sym
