#pragma once

#include <map>
#include <string>

#include "trisub/rational.hpp"
#include "trisub/symbols.hpp"

namespace trisub {

// Power product of derived symbols; exponents are strictly positive, the
// empty map is the unit monomial.
using Monomial = std::map<DerivedSymbol, int>;

// Graded order: higher total degree first, ties broken lexicographically on
// the symbol order (larger power of an earlier symbol first). Used both as
// the Poly term order and as the printing order.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

int total_degree(const Monomial& m);

// Sparse multivariate polynomial over derived symbols with exact rational
// coefficients. Zero coefficients are stripped eagerly; two values are equal
// iff their term maps are equal, so the representation is canonical.
class Poly {
public:
    using TermMap = std::map<Monomial, Rational, MonomialOrder>;

    Poly() = default;

    static Poly constant(Rational c);
    static Poly constant(long c) { return constant(Rational(c)); }
    static Poly symbol(Base b) { return atom(DerivedSymbol{b, {}}); }
    static Poly atom(DerivedSymbol s);
    static Poly term(Monomial m, Rational c);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    // Coefficient of the given monomial (zero if absent).
    Rational coefficient(const Monomial& m) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rational& c, const Poly& p);

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }

private:
    void add_term(const Monomial& m, const Rational& c);
    TermMap terms_;
};

// Repeated multiplication; poly_pow(p, 0) is the unit polynomial (empty
// product convention, so poly_pow(0, 0) == 1).
Poly poly_pow(const Poly& base, unsigned n);

// Replaces every occurrence of the exact symbol `target` (base and word must
// both match) by `replacement` and renormalizes. Atoms with the same base but
// a different derivation word are distinct symbols and are not touched.
Poly substitute(const Poly& p, const DerivedSymbol& target, const Poly& replacement);

// Returns q with p == s^m * q; throws NotDivisibleError if any term lacks the
// factor s^m.
Poly factor_out_power(const Poly& p, const DerivedSymbol& s, int m);

// Assignment of exact rational values to base symbols.
using PointAssignment = std::map<Base, Rational>;

// Evaluates a polynomial whose symbols are all underived base symbols covered
// by the assignment; throws UnboundSymbolError otherwise. Evaluation is a
// ring homomorphism.
Rational evaluate(const Poly& p, const PointAssignment& at);

// Canonical text rendering: deterministic term order, '^' for powers,
// explicit '*', e.g. "-9*k1^5 + 19*k1^4*f2".
std::string render(const Poly& p);
std::string render(const Rational& r);

}  // namespace trisub
