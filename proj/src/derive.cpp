#include "trisub/derive.hpp"

#include <utility>
#include <vector>

namespace trisub {

namespace {

Poly derive_normal(const Poly& p, int i, const RewriteSystem& rules);

Poly normalized_symbol(Base b, const RewriteSystem& rules) {
    if (const Poly* sub = rules.base_substitution(b)) return *sub;
    return Poly::symbol(b);
}

// [e_a, e_b] for a < b: [e1,e3] = k1 e3, [e2,e3] = k2 e3,
// [e1,e2] = f1 e1 + f2 e2 - 2 sigma e3.
std::vector<std::pair<Poly, int>> bracket_terms(int a, int b, const RewriteSystem& rules) {
    std::vector<std::pair<Poly, int>> out;
    if (a == 1 && b == 3) {
        out.emplace_back(normalized_symbol(Base::K1, rules), 3);
    } else if (a == 2 && b == 3) {
        out.emplace_back(normalized_symbol(Base::K2, rules), 3);
    } else if (a == 1 && b == 2) {
        out.emplace_back(normalized_symbol(Base::F1, rules), 1);
        out.emplace_back(normalized_symbol(Base::F2, rules), 2);
        out.emplace_back(Rational(-2) * normalized_symbol(Base::Sigma, rules), 3);
    }
    return out;
}

// Applies e_i to the atom (b, w), w already in normal form. Out-of-order
// appends bubble through e_i e_b = e_b e_i + [e_i, e_b]; the recursion
// strictly reduces (inversions, word length) and so terminates.
Poly append_derivation(Base b, const FrameWord& w, int i, const RewriteSystem& rules) {
    if (const Poly* sub = rules.base_substitution(b)) {
        Poly q = *sub;
        for (auto idx : w) q = derive_normal(q, idx, rules);
        return derive_normal(q, i, rules);
    }
    if (w.empty() || w.back() <= i) {
        DerivedSymbol cand{b, w};
        cand.word.push_back(static_cast<std::uint8_t>(i));
        if (const Poly* r = rules.exact_rule(cand)) return *r;
        // e3 annihilates f1, f2 and all their horizontal derivatives.
        if (i == 3 && (b == Base::F1 || b == Base::F2)) return Poly{};
        return Poly::atom(std::move(cand));
    }
    const int outer = w.back();
    const FrameWord inner(w.begin(), w.end() - 1);
    Poly out = derive_normal(append_derivation(b, inner, i, rules), outer, rules);
    for (const auto& [coef, k] : bracket_terms(i, outer, rules))
        out += coef * append_derivation(b, inner, k, rules);
    return out;
}

// Leibniz rule over every term; assumes p is normal under `rules`.
Poly derive_normal(const Poly& p, int i, const RewriteSystem& rules) {
    Poly out;
    for (const auto& [mono, coef] : p.terms()) {
        for (const auto& [s, e] : mono) {
            Monomial rest = mono;
            if (e == 1)
                rest.erase(s);
            else
                rest[s] = e - 1;
            out += Poly::term(std::move(rest), coef * Rational(e)) *
                   append_derivation(s.base, s.word, i, rules);
        }
    }
    return out;
}

}  // namespace

Poly normalize(const Poly& p, const RewriteSystem& rules) {
    Poly out;
    for (const auto& [mono, coef] : p.terms()) {
        Poly t = Poly::constant(coef);
        for (const auto& [s, e] : mono) {
            Poly a = normalized_symbol(s.base, rules);
            for (auto idx : s.word) a = derive_normal(a, idx, rules);
            t = t * poly_pow(a, static_cast<unsigned>(e));
            if (t.is_zero()) break;
        }
        out += t;
    }
    return out;
}

Poly derive(const Poly& p, int i, const RewriteSystem& rules) {
    return derive_normal(normalize(p, rules), i, rules);
}

Poly normalize_word(Base base, const FrameWord& word, const RewriteSystem& rules) {
    Poly q = normalized_symbol(base, rules);
    for (auto idx : word) q = derive_normal(q, idx, rules);
    return q;
}

Poly laplacian(const Poly& p, const RewriteSystem& rules) {
    const Poly q = normalize(p, rules);
    Poly out;
    for (int i : {1, 2, 3}) out += derive_normal(derive_normal(q, i, rules), i, rules);
    out += normalized_symbol(Base::F1, rules) * derive_normal(q, 2, rules);
    out -= normalized_symbol(Base::F2, rules) * derive_normal(q, 1, rules);
    out -= normalized_symbol(Base::K1, rules) * derive_normal(q, 1, rules);
    out -= normalized_symbol(Base::K2, rules) * derive_normal(q, 2, rules);
    return out;
}

Rational evaluate(const Poly& p, const PointAssignment& at, const RewriteSystem& rules) {
    return evaluate(normalize(p, rules), at);
}

Poly substitute_curvature_relation(const Poly& p) {
    const DerivedSymbol k1{Base::K1, {}};
    const DerivedSymbol f2{Base::F2, {}};
    const Poly repl =
        Poly::symbol(Base::Sigma) * Poly::symbol(Base::Sigma) - Poly::symbol(Base::C);
    Poly cur = p;
    for (;;) {
        Poly next;
        bool changed = false;
        for (const auto& [mono, coef] : cur.terms()) {
            const auto ik = mono.find(k1);
            const auto jf = mono.find(f2);
            if (ik == mono.end() || jf == mono.end()) {
                next += Poly::term(mono, coef);
                continue;
            }
            changed = true;
            Monomial rest = mono;
            if (ik->second == 1)
                rest.erase(k1);
            else
                rest[k1] = ik->second - 1;
            if (jf->second == 1)
                rest.erase(f2);
            else
                rest[f2] = jf->second - 1;
            next += Poly::term(std::move(rest), coef) * repl;
        }
        cur = std::move(next);
        if (!changed) return cur;
    }
}

}  // namespace trisub
