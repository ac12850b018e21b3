#include "smf2/qexp.hpp"

#include <algorithm>
#include <iostream>

namespace smf2 {

namespace {

bool all_zero(const std::vector<Int>& v) {
    return std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; });
}

}  // namespace

QExpansion::QExpansion(Prime p, Int level, Weight weight, Int max_trace, CoeffMap coeffs)
    : p_(p), level_(level), weight_(weight), max_trace_(max_trace), coeffs_(std::move(coeffs)) {
    if (level_ < 3)
        throw Error("InvalidLevel", "level must be >= 3", {{"N", level_}});
    if (p_.divides(level_))
        throw Error("InvalidLevel", "p must not divide the level",
                    {{"p", p_.value()}, {"N", level_}});
    if (max_trace_ < 0)
        throw Error("InvalidTruncation", "max_trace must be >= 0", {{"max_trace", max_trace_}});
    if (weight_.k2 < 0)
        std::cerr << "smf2: note: weight (" << weight_.k1 << "," << weight_.k2
                  << ") has negative second entry; these spaces vanish once |k2| is large\n";
    const auto len = static_cast<std::size_t>(weight_.r() + 1);
    for (const auto& [t, v] : coeffs_) {
        if (!is_positive_semidefinite(t))
            throw Error("InvalidTMatrix", "T-support must be positive semidefinite",
                        {{"a", t.a}, {"b", t.b}, {"c", t.c}});
        if (t.trace() > max_trace_)
            throw Error("InvalidTruncation", "stored T exceeds max_trace",
                        {{"trace", t.trace()}, {"max_trace", max_trace_}});
        if (v.size() != len)
            throw Error("InvalidCoefficientVector", "vector length must be r + 1",
                        {{"expected", static_cast<Int>(len)},
                         {"got", static_cast<Int>(v.size())}});
        for (Int x : v)
            if (x < 0 || x >= p_.value())
                throw Error("InvalidCoefficientVector", "entries must lie in [0, p)",
                            {{"value", x}, {"p", p_.value()}});
        if (all_zero(v))
            throw Error("InvalidCoefficientVector", "stored vectors must be nonzero");
    }
}

std::vector<Int> QExpansion::coefficient(const TMatrix& t) const {
    auto it = coeffs_.find(t);
    if (it != coeffs_.end()) return it->second;
    return std::vector<Int>(static_cast<std::size_t>(weight_.r() + 1), 0);
}

FpElem QExpansion::coefficient_at(const TMatrix& t, Int component) const {
    if (component < 0 || component > weight_.r())
        throw Error("IndexOutOfRange", "component outside [0, r]", {{"n", component}});
    return FpElem(coefficient(t)[static_cast<std::size_t>(component)], p_);
}

QExpansion QExpansion::truncated(Int new_max_trace) const {
    if (new_max_trace < 0)
        throw Error("InvalidTruncation", "max_trace must be >= 0", {{"max_trace", new_max_trace}});
    CoeffMap kept;
    for (const auto& [t, v] : coeffs_)
        if (t.trace() <= new_max_trace) kept.emplace(t, v);
    return QExpansion(p_, level_, weight_, new_max_trace, std::move(kept));
}

QExpansion QExpansion::scaled(Int scalar) const {
    const Int s = mod_floor(scalar, p_.value());
    CoeffMap out;
    if (s != 0) {
        for (const auto& [t, v] : coeffs_) {
            std::vector<Int> w(v.size());
            for (std::size_t i = 0; i < v.size(); ++i) w[i] = mod_floor(v[i] * s, p_.value());
            if (!all_zero(w)) out.emplace(t, std::move(w));
        }
    }
    return QExpansion(p_, level_, weight_, max_trace_, std::move(out));
}

QExpansion qexp_add(const QExpansion& f, const QExpansion& g) {
    if (f.p() != g.p() || f.level() != g.level() || f.weight() != g.weight())
        throw Error("MismatchedParameters", "sum requires identical (p, N, weight)");
    const Int p = f.p().value();
    const Int mt = std::min(f.max_trace(), g.max_trace());
    QExpansion::CoeffMap out;
    for (const auto& [t, v] : f.coeffs())
        if (t.trace() <= mt) out.emplace(t, v);
    for (const auto& [t, v] : g.coeffs()) {
        if (t.trace() > mt) continue;
        auto it = out.find(t);
        if (it == out.end()) {
            out.emplace(t, v);
            continue;
        }
        for (std::size_t i = 0; i < v.size(); ++i)
            it->second[i] = mod_floor(it->second[i] + v[i], p);
        if (all_zero(it->second)) out.erase(it);
    }
    return QExpansion(f.p(), f.level(), f.weight(), mt, std::move(out));
}

QExpansion qexp_multiply(const QExpansion& f, const QExpansion& g) {
    if (f.p() != g.p() || f.level() != g.level())
        throw Error("MismatchedParameters", "product requires identical (p, N)");
    if (f.weight().r() > 0 && g.weight().r() > 0)
        throw Error("UnsupportedProduct",
                    "product of two vector-valued expansions is not supported",
                    {{"r1", f.weight().r()}, {"r2", g.weight().r()}});
    // Make the left factor the scalar one.
    const QExpansion& s = f.weight().r() == 0 ? f : g;
    const QExpansion& v = f.weight().r() == 0 ? g : f;
    const Int p = f.p().value();
    const Int mt = std::min(f.max_trace(), g.max_trace());
    QExpansion::CoeffMap out;
    for (const auto& [t1, c1] : s.coeffs()) {
        for (const auto& [t2, c2] : v.coeffs()) {
            const TMatrix t = t1 + t2;
            if (t.trace() > mt) continue;
            auto [it, inserted] = out.try_emplace(t, std::vector<Int>(c2.size(), 0));
            for (std::size_t i = 0; i < c2.size(); ++i)
                it->second[i] = mod_floor(it->second[i] + c1[0] * c2[i], p);
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = all_zero(it->second) ? out.erase(it) : std::next(it);
    return QExpansion(f.p(), f.level(), f.weight() + g.weight(), mt, std::move(out));
}

QExpansion theta_qexp(const QExpansion& f) {
    const Int p = f.p().value();
    const Int inv_nsq = mod_inverse(mod_floor(f.level() * f.level(), p), p);
    QExpansion::CoeffMap out;
    for (const auto& [t, v] : f.coeffs()) {
        const Int mult = mod_floor(mod_floor(det_t(t), p) * inv_nsq, p);
        if (mult == 0) continue;
        std::vector<Int> w(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) w[i] = mod_floor(v[i] * mult, p);
        out.emplace(t, std::move(w));
    }
    return QExpansion(f.p(), f.level(), theta_target_weight(f.p(), f.weight()), f.max_trace(),
                      std::move(out));
}

QExpansion theta_iterate(const QExpansion& f, Int j) {
    if (j < 0)
        throw Error("InvalidArgument", "iteration count must be >= 0", {{"j", j}});
    QExpansion g = f;
    for (Int i = 0; i < j; ++i) g = theta_qexp(g);
    return g;
}

bool is_weakly_p_singular(const QExpansion& f) {
    for (const auto& [t, v] : f.coeffs())
        if (!f.p().divides(det_t(t))) return false;
    return true;
}

Weight theta3_weight(const Prime& p, const Weight& w) {
    return w + Weight(p.value() + 1, p.value() - 1);
}

QExpansion HasseConstant::q_expansion(Int level, Int max_trace) const {
    QExpansion::CoeffMap coeffs;
    coeffs.emplace(TMatrix{0, 0, 0}, std::vector<Int>{1});
    return QExpansion(p, level, weight(), max_trace, std::move(coeffs));
}

}  // namespace smf2
