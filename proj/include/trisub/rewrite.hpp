#pragma once

#include <map>
#include <set>

#include "trisub/poly.hpp"

namespace trisub {

enum class Mode { Generic, Omega };

// Resolves derivatives of base symbols. A rule keyed on an empty word
// substitutes the whole base symbol (and thereby kills every derivative of
// it); a rule keyed on (base, {i}) resolves e_i(base).
//
// Generic mode carries only the identities every adapted frame satisfies:
// e3(f1) = e3(f2) = 0 (f1, f2 are pullbacks of target functions), the Jacobi
// relation resolving e1(k2), and constancy of c. Everything else stays a
// fresh derived symbol with a normalized word.
//
// Omega mode is the constrained system of the open set where k1 does not
// vanish: k2 = 0 and f1 = 0 as substitutions, e1(sigma) = 2*k1*sigma,
// e1(k1) = k1^2 - k1*f2, e1(f2) = f2^2 - k1*f2 + 4*sigma^2, and e2(x) =
// e3(x) = 0 for every base x. The e1(f2) rule divides by k1 in its
// derivation, so Omega mode is only valid where k1 is nonvanishing.
class RewriteSystem {
public:
    static const RewriteSystem& generic();
    static const RewriteSystem& omega();

    // Copy of this system with the given bases substituted to zero (their
    // derivatives vanish with them).
    RewriteSystem with_vanishing(const std::set<Base>& bases) const;

    Mode mode() const { return mode_; }
    const Poly* exact_rule(const DerivedSymbol& s) const;
    const Poly* base_substitution(Base b) const;

private:
    RewriteSystem(Mode mode, std::map<DerivedSymbol, Poly> rules)
        : mode_(mode), rules_(std::move(rules)) {}

    Mode mode_;
    std::map<DerivedSymbol, Poly> rules_;

    friend RewriteSystem build_omega_rules();
    friend RewriteSystem build_generic_rules();
};

// The constrained rewrite system valid on the set where k1 is nonvanishing.
RewriteSystem build_omega_rules();
RewriteSystem build_generic_rules();

}  // namespace trisub
