#include "trisub/poly.hpp"

#include <sstream>

#include "trisub/errors.hpp"

namespace trisub {

std::string_view base_name(Base b) {
    switch (b) {
        case Base::K1: return "k1";
        case Base::F2: return "f2";
        case Base::Sigma: return "sigma";
        case Base::C: return "c";
        case Base::K2: return "k2";
        case Base::F1: return "f1";
    }
    return "?";
}

std::optional<Base> base_from_name(std::string_view name) {
    for (Base b : kAllBases)
        if (base_name(b) == name) return b;
    return std::nullopt;
}

std::string render(const DerivedSymbol& s) {
    std::string out{base_name(s.base)};
    for (auto idx : s.word) out = "e" + std::to_string(idx) + "(" + out + ")";
    return out;
}

int total_degree(const Monomial& m) {
    int d = 0;
    for (const auto& [sym, e] : m) d += e;
    return d;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    const int da = total_degree(a);
    const int db = total_degree(b);
    if (da != db) return da > db;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (ia->first != ib->first) return ia->first < ib->first;
        if (ia->second != ib->second) return ia->second > ib->second;
        ++ia;
        ++ib;
    }
    return false;  // identical (equal degree rules out a proper prefix)
}

Poly Poly::constant(Rational c) {
    Poly p;
    p.add_term(Monomial{}, c);
    return p;
}

Poly Poly::atom(DerivedSymbol s) {
    Poly p;
    p.add_term(Monomial{{std::move(s), 1}}, Rational(1));
    return p;
}

Poly Poly::term(Monomial m, Rational c) {
    Poly p;
    p.add_term(m, c);
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational Poly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m = ma;
            for (const auto& [sym, e] : mb) {
                auto [it, inserted] = m.emplace(sym, e);
                if (!inserted) it->second += e;
            }
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

Poly operator*(const Rational& c, const Poly& p) {
    Poly out;
    if (c.is_zero()) return out;
    for (const auto& [m, pc] : p.terms()) out.add_term(m, c * pc);
    return out;
}

Poly poly_pow(const Poly& base, unsigned n) {
    Poly result = Poly::constant(1);
    Poly acc = base;
    while (n > 0) {
        if (n & 1u) result = result * acc;
        n >>= 1u;
        if (n > 0) acc = acc * acc;
    }
    return result;
}

Poly substitute(const Poly& p, const DerivedSymbol& target, const Poly& replacement) {
    Poly out;
    for (const auto& [m, c] : p.terms()) {
        auto it = m.find(target);
        if (it == m.end()) {
            out += Poly::term(m, c);
            continue;
        }
        Monomial rest = m;
        const int e = it->second;
        rest.erase(target);
        out += Poly::term(rest, c) * poly_pow(replacement, static_cast<unsigned>(e));
    }
    return out;
}

Poly factor_out_power(const Poly& p, const DerivedSymbol& s, int m) {
    Poly out;
    for (const auto& [mono, c] : p.terms()) {
        auto it = mono.find(s);
        const int have = it == mono.end() ? 0 : it->second;
        if (have < m)
            throw NotDivisibleError("factor_out_power: term " + render(Poly::term(mono, c)) +
                                    " is not divisible by " + render(s) + "^" + std::to_string(m));
        Monomial reduced = mono;
        if (have == m)
            reduced.erase(s);
        else
            reduced[s] = have - m;
        out += Poly::term(reduced, c);
    }
    return out;
}

Rational evaluate(const Poly& p, const PointAssignment& at) {
    Rational sum(0);
    for (const auto& [mono, c] : p.terms()) {
        Rational v = c;
        for (const auto& [sym, e] : mono) {
            if (!sym.word.empty())
                throw UnboundSymbolError("evaluate: derived symbol " + render(sym) +
                                         " has no value; normalize under a total rewrite "
                                         "system first");
            auto it = at.find(sym.base);
            if (it == at.end())
                throw UnboundSymbolError("evaluate: no value assigned to " +
                                         std::string(base_name(sym.base)));
            v *= it->second.pow(static_cast<unsigned>(e));
        }
        sum += v;
    }
    return sum;
}

std::string render(const Rational& r) { return r.str(); }

namespace {

std::string render_monomial(const Monomial& m) {
    std::string out;
    for (const auto& [sym, e] : m) {
        if (!out.empty()) out += "*";
        out += render(sym);
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

}  // namespace

std::string render(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        const Rational a = c.abs();
        std::string body;
        if (m.empty())
            body = a.str();
        else if (a.is_one())
            body = render_monomial(m);
        else
            body = a.str() + "*" + render_monomial(m);
        if (first) {
            out = (c.sign() < 0 ? "-" : "") + body;
            first = false;
        } else {
            out += (c.sign() < 0 ? " - " : " + ") + body;
        }
    }
    return out;
}

}  // namespace trisub
