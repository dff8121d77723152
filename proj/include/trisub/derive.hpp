#pragma once

#include "trisub/poly.hpp"
#include "trisub/rewrite.hpp"

namespace trisub {

// Applies the frame derivation e_i by the Leibniz rule over every term.
// Base-symbol derivatives are resolved by the rewrite system; unresolved
// derivatives become fresh derived symbols with normalized words. Output is
// in normal form under `rules`.
Poly derive(const Poly& p, int i, const RewriteSystem& rules);

// Renormalizes an arbitrary polynomial under the given rewrite system:
// every derivation word is rebuilt from the base symbol, so rule
// substitutions and word normalization apply throughout.
Poly normalize(const Poly& p, const RewriteSystem& rules);

// Expresses the iterated derivative word (innermost index first) applied to
// a base symbol as a polynomial in normal-form derived symbols, using
// e_i e_j = e_j e_i + [e_i, e_j] with the brackets of the adapted frame.
Poly normalize_word(Base base, const FrameWord& word,
                    const RewriteSystem& rules = RewriteSystem::generic());

// The frame Laplacian: sum_i e_i e_i (p) + f1 e2(p) - f2 e1(p) - k1 e1(p)
// - k2 e2(p). In Omega mode this collapses to e1e1(p) - f2 e1(p) - k1 e1(p).
Poly laplacian(const Poly& p, const RewriteSystem& rules);

// Normalizes under `rules`, then evaluates; the normal form must contain
// only base symbols covered by the assignment.
Rational evaluate(const Poly& p, const PointAssignment& at, const RewriteSystem& rules);

// Rewrites every monomial containing both k1 and f2 using the space-form
// relation k1*f2 = sigma^2 - c, until no monomial contains the pair. This is
// the substitution of the constant-curvature constraint into a chain
// equation.
Poly substitute_curvature_relation(const Poly& p);

}  // namespace trisub
