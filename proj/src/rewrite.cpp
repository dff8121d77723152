#include "trisub/rewrite.hpp"

namespace trisub {

namespace {

Poly sym(Base b) { return Poly::symbol(b); }
Poly at(Base b, FrameWord w) { return Poly::atom(DerivedSymbol{b, std::move(w)}); }

}  // namespace

RewriteSystem build_generic_rules() {
    std::map<DerivedSymbol, Poly> rules;
    // f1, f2 are constant along the fibers.
    rules[{Base::F1, {3}}] = Poly{};
    rules[{Base::F2, {3}}] = Poly{};
    // c is the constant sectional curvature.
    for (std::uint8_t i : {1, 2, 3}) rules[{Base::C, {i}}] = Poly{};
    // Jacobi identity of the frame brackets, oriented to keep e2(k1) in
    // normal form: e1(k2) = e2(k1) + 2 e3(sigma) + k1 f1 + k2 f2.
    rules[{Base::K2, {1}}] =
        at(Base::K1, {2}) + Rational(2) * at(Base::Sigma, {3}) + sym(Base::K1) * sym(Base::F1) +
        sym(Base::K2) * sym(Base::F2);
    return RewriteSystem(Mode::Generic, std::move(rules));
}

RewriteSystem build_omega_rules() {
    std::map<DerivedSymbol, Poly> rules;
    rules[{Base::K2, {}}] = Poly{};
    rules[{Base::F1, {}}] = Poly{};
    rules[{Base::Sigma, {1}}] = Rational(2) * (sym(Base::K1) * sym(Base::Sigma));
    rules[{Base::K1, {1}}] = sym(Base::K1) * sym(Base::K1) - sym(Base::K1) * sym(Base::F2);
    rules[{Base::F2, {1}}] = sym(Base::F2) * sym(Base::F2) - sym(Base::K1) * sym(Base::F2) +
                             Rational(4) * (sym(Base::Sigma) * sym(Base::Sigma));
    rules[{Base::C, {1}}] = Poly{};
    for (Base b : kAllBases) {
        rules[{b, {2}}] = Poly{};
        rules[{b, {3}}] = Poly{};
    }
    return RewriteSystem(Mode::Omega, std::move(rules));
}

const RewriteSystem& RewriteSystem::generic() {
    static const RewriteSystem rs = build_generic_rules();
    return rs;
}

const RewriteSystem& RewriteSystem::omega() {
    static const RewriteSystem rs = build_omega_rules();
    return rs;
}

RewriteSystem RewriteSystem::with_vanishing(const std::set<Base>& bases) const {
    RewriteSystem out = *this;
    for (Base b : bases) out.rules_[{b, {}}] = Poly{};
    return out;
}

const Poly* RewriteSystem::exact_rule(const DerivedSymbol& s) const {
    auto it = rules_.find(s);
    return it == rules_.end() ? nullptr : &it->second;
}

const Poly* RewriteSystem::base_substitution(Base b) const {
    return exact_rule(DerivedSymbol{b, {}});
}

}  // namespace trisub
