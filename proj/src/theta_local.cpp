#include "smf2/theta_local.hpp"

#include <utility>

namespace smf2::sym {

namespace {

using K = Symbol::Kind;

ParamPoly pvar(Param v) { return ParamPoly::var(v); }
ParamPoly pc(Int c) { return ParamPoly::constant(c); }

SymPoly sym1(Symbol s) { return SymPoly::term(Monomial{std::move(s)}, 1); }
SymPoly sym2(Symbol a, Symbol b) { return SymPoly::term(Monomial{std::move(a), std::move(b)}, 1); }

struct Psi1Raw {
    SymPoly b[3];  // index i = u-component
};

// First-step coefficient table at component n for weight (k1, k2) formal,
// with c21 kept distinct. F-indices outside [0, r] are omitted.
Psi1Raw psi1_raw(Int r, Int n) {
    if (n < 0 || n > r)
        throw Error("IndexOutOfRange", "component index outside [0, r]", {{"r", r}, {"n", n}});
    const ParamPoly K1 = pvar(Param::k1), K2 = pvar(Param::k2);
    const ParamPoly R = K1 - K2;

    Psi1Raw out;
    // b2 = D11(Fn) - (k1-n) Fn c11 - (r+1-n) F_{n-1} c12
    out.b[2] = sym1(Symbol::d(Dir::d11, n)) -
               sym2(Symbol::f(n), Symbol::c11()).scaled(K1 - n);
    if (n - 1 >= 0)
        out.b[2] = out.b[2] - sym2(Symbol::f(n - 1), Symbol::c12()).scaled(R - (n - 1));

    // b1 = D12(Fn) - (n+1) F_{n+1} c11 - Fn {(k1-n) c21 + (k2+n) c12} - (r+1-n) F_{n-1} c22
    out.b[1] = sym1(Symbol::d(Dir::d12, n)) -
               sym2(Symbol::f(n), Symbol::c21()).scaled(K1 - n) -
               sym2(Symbol::f(n), Symbol::c12()).scaled(K2 + n);
    if (n + 1 <= r)
        out.b[1] = out.b[1] - sym2(Symbol::f(n + 1), Symbol::c11()).scaled(pc(n + 1));
    if (n - 1 >= 0)
        out.b[1] = out.b[1] - sym2(Symbol::f(n - 1), Symbol::c22()).scaled(R - (n - 1));

    // b0 = D22(Fn) - (k2+n) Fn c22 - (n+1) F_{n+1} c21
    out.b[0] = sym1(Symbol::d(Dir::d22, n)) -
               sym2(Symbol::f(n), Symbol::c22()).scaled(K2 + n);
    if (n + 1 <= r)
        out.b[0] = out.b[0] - sym2(Symbol::f(n + 1), Symbol::c21()).scaled(pc(n + 1));

    return out;
}

Symbol identify_c21(const Symbol& s) {
    return s.kind == K::c21 ? Symbol::c12() : s;
}

// Derivative of a single c-symbol (commuting-derivative rules).
SymPoly c_derivative(Dir d, K kind) {
    switch (d) {
        case Dir::d11:
            switch (kind) {
                case K::c11: return sym2(Symbol::c11(), Symbol::c11());
                case K::c12: return sym2(Symbol::c11(), Symbol::c12());
                case K::c21: return sym2(Symbol::c11(), Symbol::c21());
                case K::c22: return sym2(Symbol::c12(), Symbol::c21());
                default: break;
            }
            break;
        case Dir::d12:
            switch (kind) {
                case K::c11:
                    return sym2(Symbol::c11(), Symbol::c12()) + sym2(Symbol::c11(), Symbol::c21());
                case K::c12:
                    return sym2(Symbol::c11(), Symbol::c22()) + sym2(Symbol::c12(), Symbol::c12());
                case K::c21:
                    return sym2(Symbol::c11(), Symbol::c22()) + sym2(Symbol::c21(), Symbol::c21());
                case K::c22:
                    return sym2(Symbol::c12(), Symbol::c22()) + sym2(Symbol::c21(), Symbol::c22());
                default: break;
            }
            break;
        case Dir::d22:
            switch (kind) {
                case K::c11: return sym2(Symbol::c12(), Symbol::c21());
                case K::c12: return sym2(Symbol::c12(), Symbol::c22());
                case K::c21: return sym2(Symbol::c21(), Symbol::c22());
                case K::c22: return sym2(Symbol::c22(), Symbol::c22());
                default: break;
            }
            break;
    }
    throw Error("UnsupportedDerivative", "no derivative rule for symbol kind");
}

SymPoly symbol_derivative(Dir d, const Symbol& s) {
    switch (s.kind) {
        case K::f: return sym1(Symbol::d(d, s.index));
        case K::d: return sym1(Symbol::dd(d, s.d1, s.index));
        case K::c11:
        case K::c12:
        case K::c21:
        case K::c22: return c_derivative(d, s.kind);
        default:
            throw Error("UnsupportedDerivative",
                        "derivative of " + s.str() + " is not needed and not defined here");
    }
}

// One component of the derivative action on the graded basis sections of a
// weight-(k1, k2) bundle: nabla_d(delta_m) = sum coeff(target) * delta_target.
// Read off from the first-step coefficient table; k1, k2 are passed as
// polynomials so the same rules serve the main sections (formal weight) and
// the u-basis (weight (2, 0)).
std::vector<std::pair<Int, SymPoly>> delta_rule(Dir d, Int m, const ParamPoly& k1,
                                                const ParamPoly& k2) {
    const ParamPoly R = k1 - k2;
    std::vector<std::pair<Int, SymPoly>> out;
    switch (d) {
        case Dir::d11:
            out.emplace_back(m, -sym1(Symbol::c11()).scaled(k1 - m));
            out.emplace_back(m + 1, -sym1(Symbol::c12()).scaled(R - m));
            break;
        case Dir::d12:
            out.emplace_back(m - 1, -sym1(Symbol::c11()).scaled(pc(m)));
            out.emplace_back(m, -(sym1(Symbol::c21()).scaled(k1 - m) +
                                  sym1(Symbol::c12()).scaled(k2 + m)));
            out.emplace_back(m + 1, -sym1(Symbol::c22()).scaled(R - m));
            break;
        case Dir::d22:
            out.emplace_back(m, -sym1(Symbol::c22()).scaled(k2 + m));
            out.emplace_back(m - 1, -sym1(Symbol::c21()).scaled(pc(m)));
            break;
    }
    return out;
}

}  // namespace

SymPoly nabla(Dir d, const SymPoly& p) {
    SymPoly out;
    for (const auto& [mono, coeff] : p.terms()) {
        for (std::size_t j = 0; j < mono.factors.size(); ++j) {
            SymPoly rest = SymPoly::term(Monomial{}, coeff);
            for (std::size_t i = 0; i < mono.factors.size(); ++i) {
                if (i == j) continue;
                rest = rest * sym1(mono.factors[i]);
            }
            out = out + rest * symbol_derivative(d, mono.factors[j]);
        }
    }
    return out;
}

Psi1Coefficients psi1_coefficients(Int r, Int n) {
    Psi1Raw raw = psi1_raw(r, n);
    Psi1Coefficients out;
    out.b2 = raw.b[2].with_symbols(identify_c21);
    out.b1 = raw.b[1].with_symbols(identify_c21);
    out.b0 = raw.b[0].with_symbols(identify_c21);
    return out;
}

SymPoly theta_local_general(Int r, Int n) {
    if (n < 0 || n > r)
        throw Error("IndexOutOfRange", "component index outside [0, r]", {{"r", r}, {"n", n}});
    const ParamPoly K1 = pvar(Param::k1), K2 = pvar(Param::k2);
    const ParamPoly R = K1 - K2;
    const ParamPoly N = pc(n);

    SymPoly a;
    // det(2 D11, D12; D12, 2 D22)(F_n)
    a = a + sym1(Symbol::dd(Dir::d11, Dir::d22, n)).scaled(pc(4)) -
        sym1(Symbol::dd(Dir::d12, Dir::d12, n));
    // 2 {k1 (2 k2 - 1) + (k1 - k2 - n) n} det(C) F_n
    a = a + sym2(Symbol::det_c(), Symbol::f(n))
                .scaled(2 * (K1 * (2 * K2 - 1) + (R - n) * N));
    // -2 (2 k2 + 2 n - 1) c22 D11(F_n)
    a = a - sym2(Symbol::c22(), Symbol::d(Dir::d11, n)).scaled(2 * (2 * K2 + 2 * n - 1));
    // +2 (2 k1 + 2 k2 - 1) c12 D12(F_n)
    a = a + sym2(Symbol::c12(), Symbol::d(Dir::d12, n)).scaled(2 * (2 * K1 + 2 * K2 - 1));
    // +2 (1 - 2 k1 + 2 n) c11 D22(F_n)
    a = a + sym2(Symbol::c11(), Symbol::d(Dir::d22, n)).scaled(2 * (pc(1 + 2 * n) - 2 * K1));
    // -{(k1 - k2 - 1)(k1 - k2) - 6 (k1 - k2 - n) n} c12^2 F_n
    a = a - SymPoly::term(Monomial{Symbol::c12(), Symbol::c12(), Symbol::f(n)},
                          (R - 1) * R - 6 * (R - n) * N);
    if (n - 1 >= 0) {
        // +2 (1 + k1 - k2 - n) c22 D12(F_{n-1}) - 4 (1 + k1 - k2 - n) c12 D22(F_{n-1})
        a = a + sym2(Symbol::c22(), Symbol::d(Dir::d12, n - 1)).scaled(2 * (R - n + 1));
        a = a - sym2(Symbol::c12(), Symbol::d(Dir::d22, n - 1)).scaled(4 * (R - n + 1));
        // +2 (1 + k1 - k2 - n)(-1 + k2 - k1 + 2 n) c12 c22 F_{n-1}
        a = a + SymPoly::term(Monomial{Symbol::c12(), Symbol::c22(), Symbol::f(n - 1)},
                              2 * ((R - n + 1) * (pc(2 * n - 1) - R)));
    }
    if (n + 1 <= r) {
        // -4 (n+1) c12 D11(F_{n+1}) + 2 (n+1) c11 D12(F_{n+1})
        a = a - sym2(Symbol::c12(), Symbol::d(Dir::d11, n + 1)).scaled(pc(4 * (n + 1)));
        a = a + sym2(Symbol::c11(), Symbol::d(Dir::d12, n + 1)).scaled(pc(2 * (n + 1)));
        // -2 (1+n)(-k1 + k2 + 1 + 2 n) c11 c12 F_{n+1}
        a = a - SymPoly::term(Monomial{Symbol::c11(), Symbol::c12(), Symbol::f(n + 1)},
                              2 * (n + 1) * (pc(1 + 2 * n) - R));
    }
    if (n - 2 >= 0)
        // -(1 + k1 - k2 - n)(2 + k1 - k2 - n) c22^2 F_{n-2}
        a = a - SymPoly::term(Monomial{Symbol::c22(), Symbol::c22(), Symbol::f(n - 2)},
                              (R - n + 1) * (R - n + 2));
    if (n + 2 <= r)
        // -(1+n)(2+n) c11^2 F_{n+2}
        a = a - SymPoly::term(Monomial{Symbol::c11(), Symbol::c11(), Symbol::f(n + 2)},
                              pc((n + 1) * (n + 2)));
    return a;
}

SymPoly theta_local_r0() {
    const ParamPoly Kk = pvar(Param::k);
    SymPoly a;
    a = a + sym1(Symbol::dd(Dir::d11, Dir::d22, 0)).scaled(pc(4)) -
        sym1(Symbol::dd(Dir::d12, Dir::d12, 0));
    a = a + sym2(Symbol::det_c(), Symbol::f(0)).scaled(2 * Kk * (2 * Kk - 1));
    a = a - sym2(Symbol::c22(), Symbol::d(Dir::d11, 0)).scaled(2 * (2 * Kk - 1));
    a = a + sym2(Symbol::c12(), Symbol::d(Dir::d12, 0)).scaled(2 * (2 * Kk - 1));
    a = a - sym2(Symbol::c11(), Symbol::d(Dir::d22, 0)).scaled(2 * (2 * Kk - 1));
    return a;
}

SymPoly theta_local_r1(Int n) {
    if (n != 0 && n != 1)
        throw Error("IndexOutOfRange", "component index must be 0 or 1 here", {{"n", n}});
    const ParamPoly Kk = pvar(Param::k);
    SymPoly a;
    a = a + sym1(Symbol::dd(Dir::d11, Dir::d22, n)).scaled(pc(4)) -
        sym1(Symbol::dd(Dir::d12, Dir::d12, n));
    a = a + sym2(Symbol::det_c(), Symbol::f(n)).scaled(2 * (Kk + 1) * (2 * Kk - 1));
    if (n == 0) {
        a = a - sym2(Symbol::c22(), Symbol::d(Dir::d11, 0)).scaled(2 * (2 * Kk - 1));
        a = a + sym2(Symbol::c12(), Symbol::d(Dir::d12, 0)).scaled(4 * Kk);
        a = a - sym2(Symbol::c11(), Symbol::d(Dir::d22, 0)).scaled(2 * (2 * Kk + 1));
        a = a - sym2(Symbol::c12(), Symbol::d(Dir::d11, 1)).scaled(pc(4));
        a = a + sym2(Symbol::c11(), Symbol::d(Dir::d12, 1)).scaled(pc(2));
    } else {
        a = a - sym2(Symbol::c22(), Symbol::d(Dir::d11, 1)).scaled(2 * (2 * Kk + 1));
        a = a + sym2(Symbol::c12(), Symbol::d(Dir::d12, 1)).scaled(2 * (4 * Kk + 1));
        a = a + sym2(Symbol::c11(), Symbol::d(Dir::d22, 1)).scaled(pc(2) - 4 * Kk);
        a = a + sym2(Symbol::c22(), Symbol::d(Dir::d12, 0)).scaled(pc(2));
        a = a - sym2(Symbol::c12(), Symbol::d(Dir::d22, 0)).scaled(pc(4));
    }
    return a;
}

SymPoly derive_theta_local(Int r, Int n) {
    if (n < 0 || n > r)
        throw Error("IndexOutOfRange", "component index outside [0, r]", {{"r", r}, {"n", n}});
    const ParamPoly K1 = pvar(Param::k1), K2 = pvar(Param::k2);

    std::vector<Psi1Raw> b;
    b.reserve(static_cast<std::size_t>(r) + 1);
    for (Int m = 0; m <= r; ++m) b.push_back(psi1_raw(r, m));

    // Component (delta_n tensor u_i) of the direction-d derivative of the
    // first-step section sum_{m,i'} b[m][i'] delta_m u_{i'}.
    auto second_step = [&](Dir d, Int i_target) {
        SymPoly acc = nabla(d, b[static_cast<std::size_t>(n)].b[i_target]);
        // Action on the delta_m basis (weight (k1, k2) formal).
        for (Int m = std::max<Int>(0, n - 1); m <= std::min(r, n + 1); ++m) {
            for (const auto& [target, coeff] : delta_rule(d, m, K1, K2)) {
                if (target != n) continue;
                acc = acc + b[static_cast<std::size_t>(m)].b[i_target] * coeff;
            }
        }
        // Action on the u_i basis: u_i is the graded basis section of index
        // 2 - i for weight (2, 0).
        for (Int i_src = 0; i_src <= 2; ++i_src) {
            for (const auto& [target, coeff] : delta_rule(d, 2 - i_src, pc(2), pc(0))) {
                if (2 - target != i_target) continue;
                acc = acc + b[static_cast<std::size_t>(n)].b[i_src] * coeff;
            }
        }
        return acc;
    };

    // Projection weights (2, -1, 2) on u2 v0, u1 v1, u0 v2; direction 11
    // pairs with v2, 12 with v1, 22 with v0.
    SymPoly a = second_step(Dir::d22, 2).scaled(pc(2)) - second_step(Dir::d12, 1) +
                second_step(Dir::d11, 0).scaled(pc(2));
    return a.with_symbols(identify_c21);
}

SymPoly sympoly_diff(const SymPoly& a, const SymPoly& b) { return a - b; }

Int pole_order(const SymPoly& p) { return p.pole_order(); }

Block classify(const Monomial& m) {
    if (m.count_kind(K::dd) > 0) return Block::second_order;
    if (m.count_kind(K::det_c) > 0) return Block::det_block;
    const Int c_count = m.count_kind(K::c11) + m.count_kind(K::c12) + m.count_kind(K::c21) +
                        m.count_kind(K::c22);
    if (c_count >= 2) return Block::c_squared;
    if (c_count == 1 && m.count_kind(K::d) > 0) return Block::c_nabla;
    return Block::other;
}

SymPoly block_of(const SymPoly& p, Block b) {
    return p.filtered([b](const Monomial& m) { return classify(m) == b; });
}

SymPoly specialize_equal_weights(const SymPoly& p) {
    const ParamPoly Kk = ParamPoly::var(Param::k);
    return p.substituted(Param::k1, Kk).substituted(Param::k2, Kk);
}

SymPoly specialize_adjacent_weights(const SymPoly& p) {
    const ParamPoly Kk = ParamPoly::var(Param::k);
    return p.substituted(Param::k1, Kk + 1).substituted(Param::k2, Kk);
}

}  // namespace smf2::sym
