#include "smf2/sympoly.hpp"

#include <algorithm>
#include <sstream>

namespace smf2::sym {

ParamPoly ParamPoly::constant(Int c) {
    ParamPoly p;
    if (c != 0) p.terms_[{0, 0, 0, 0}] = c;
    return p;
}

ParamPoly ParamPoly::var(Param v) {
    ParamPoly p;
    Expo e{0, 0, 0, 0};
    e[static_cast<std::size_t>(v)] = 1;
    p.terms_[e] = 1;
    return p;
}

void ParamPoly::add_term(const Expo& e, Int c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

ParamPoly ParamPoly::operator+(const ParamPoly& o) const {
    ParamPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

ParamPoly ParamPoly::operator-(const ParamPoly& o) const {
    ParamPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

ParamPoly ParamPoly::operator*(const ParamPoly& o) const {
    ParamPoly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Expo e;
            for (std::size_t i = 0; i < 4; ++i)
                e[i] = static_cast<std::uint8_t>(e1[i] + e2[i]);
            r.add_term(e, c1 * c2);
        }
    return r;
}

ParamPoly ParamPoly::substituted(Param v, const ParamPoly& value) const {
    const auto vi = static_cast<std::size_t>(v);
    ParamPoly r;
    for (const auto& [e, c] : terms_) {
        Expo rest = e;
        const unsigned deg = rest[vi];
        rest[vi] = 0;
        ParamPoly t;
        t.terms_[rest] = c;
        for (unsigned i = 0; i < deg; ++i) t = t * value;
        r = r + t;
    }
    return r;
}

Int ParamPoly::evaluated(Int k1, Int k2, Int n, Int k) const {
    const Int vals[4] = {k1, k2, n, k};
    Int total = 0;
    for (const auto& [e, c] : terms_) {
        Int t = c;
        for (std::size_t i = 0; i < 4; ++i)
            for (unsigned j = 0; j < e[i]; ++j) t *= vals[i];
        total += t;
    }
    return total;
}

namespace {
const char* kParamNames[4] = {"k1", "k2", "n", "k"};
}

std::string ParamPoly::str() const {
    if (terms_.empty()) return "0";
    // Descending exponent order reads leading-term-first.
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Int coeff = c;
        if (first) {
            if (coeff < 0) {
                os << "-";
                coeff = -coeff;
            }
        } else {
            os << (coeff < 0 ? " - " : " + ");
            coeff = coeff < 0 ? -coeff : coeff;
        }
        first = false;
        const bool is_const = e == Expo{0, 0, 0, 0};
        if (coeff != 1 || is_const) os << coeff;
        bool printed = coeff != 1 || is_const;
        for (std::size_t i = 0; i < 4; ++i) {
            if (e[i] == 0) continue;
            if (printed) os << "*";
            os << kParamNames[i];
            if (e[i] > 1) os << "^" << static_cast<int>(e[i]);
            printed = true;
        }
    }
    return os.str();
}

ParamPoly operator*(Int c, const ParamPoly& p) { return ParamPoly::constant(c) * p; }
ParamPoly operator+(const ParamPoly& p, Int c) { return p + ParamPoly::constant(c); }
ParamPoly operator-(const ParamPoly& p, Int c) { return p - ParamPoly::constant(c); }

std::string dir_str(Dir d) {
    switch (d) {
        case Dir::d11: return "11";
        case Dir::d12: return "12";
        case Dir::d22: return "22";
    }
    return "??";
}

std::string Symbol::str() const {
    switch (kind) {
        case Kind::c11: return "c11";
        case Kind::c12: return "c12";
        case Kind::c21: return "c21";
        case Kind::c22: return "c22";
        case Kind::det_c: return "detC";
        case Kind::f: return "F" + std::to_string(index);
        case Kind::d: return "D" + dir_str(d1) + "(F" + std::to_string(index) + ")";
        case Kind::dd:
            return "D" + dir_str(d1) + "D" + dir_str(d2) + "(F" + std::to_string(index) + ")";
    }
    return "?";
}

Monomial::Monomial(std::initializer_list<Symbol> fs) : factors(fs) {
    std::sort(factors.begin(), factors.end());
}

Monomial::Monomial(std::vector<Symbol> fs) : factors(std::move(fs)) {
    std::sort(factors.begin(), factors.end());
}

Monomial Monomial::times(const Monomial& o) const {
    std::vector<Symbol> fs;
    fs.reserve(factors.size() + o.factors.size());
    std::merge(factors.begin(), factors.end(), o.factors.begin(), o.factors.end(),
               std::back_inserter(fs));
    Monomial m;
    m.factors = std::move(fs);
    return m;
}

Int Monomial::pole_count() const {
    Int n = 0;
    for (const auto& s : factors)
        if (s.is_c_like()) ++n;
    return n;
}

Int Monomial::count_kind(Symbol::Kind k) const {
    Int n = 0;
    for (const auto& s : factors)
        if (s.kind == k) ++n;
    return n;
}

std::string Monomial::str() const {
    if (factors.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) s += "*";
        s += factors[i].str();
    }
    return s;
}

SymPoly SymPoly::term(Monomial m, ParamPoly coeff) {
    SymPoly p;
    if (!coeff.is_zero()) p.terms_.emplace(std::move(m), std::move(coeff));
    return p;
}

void SymPoly::add_term(const Monomial& m, const ParamPoly& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SymPoly SymPoly::operator-() const {
    SymPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

SymPoly SymPoly::operator+(const SymPoly& o) const {
    SymPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

SymPoly SymPoly::operator-(const SymPoly& o) const {
    SymPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

SymPoly SymPoly::operator*(const SymPoly& o) const {
    SymPoly r;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) r.add_term(m1.times(m2), c1 * c2);
    return r;
}

SymPoly SymPoly::scaled(const ParamPoly& c) const {
    SymPoly r;
    if (c.is_zero()) return r;
    for (const auto& [m, pc] : terms_) r.add_term(m, pc * c);
    return r;
}

SymPoly SymPoly::substituted(Param v, const ParamPoly& value) const {
    SymPoly r;
    for (const auto& [m, c] : terms_) r.add_term(m, c.substituted(v, value));
    return r;
}

SymPoly SymPoly::with_symbols(const std::function<Symbol(const Symbol&)>& f) const {
    SymPoly r;
    for (const auto& [m, c] : terms_) {
        std::vector<Symbol> fs;
        fs.reserve(m.factors.size());
        for (const auto& s : m.factors) fs.push_back(f(s));
        r.add_term(Monomial(std::move(fs)), c);
    }
    return r;
}

SymPoly SymPoly::expanded_det() const {
    SymPoly r;
    for (const auto& [m, c] : terms_) {
        SymPoly t = SymPoly::term(Monomial{}, c);
        for (const auto& s : m.factors) {
            if (s.kind == Symbol::Kind::det_c) {
                SymPoly det = SymPoly::term(Monomial{Symbol::c11(), Symbol::c22()}, 1) -
                              SymPoly::term(Monomial{Symbol::c12(), Symbol::c12()}, 1);
                t = t * det;
            } else {
                t = t * SymPoly::term(Monomial{s}, 1);
            }
        }
        r = r + t;
    }
    return r;
}

SymPoly SymPoly::filtered(const std::function<bool(const Monomial&)>& keep) const {
    SymPoly r;
    for (const auto& [m, c] : terms_)
        if (keep(m)) r.terms_.emplace(m, c);
    return r;
}

ParamPoly SymPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? ParamPoly() : it->second;
}

Int SymPoly::pole_order() const {
    Int n = 0;
    for (const auto& [m, c] : terms_) n = std::max(n, m.pole_count());
    return n;
}

bool SymPoly::contains_kind(Symbol::Kind k) const {
    for (const auto& [m, c] : terms_)
        if (m.count_kind(k) > 0) return true;
    return false;
}

std::string SymPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (!m.empty()) os << "*" << m.str();
    }
    return os.str();
}

}  // namespace smf2::sym
