#include "trisub/proof.hpp"

#include <json.hpp>

#include <sstream>
#include <utility>

#include "trisub/errors.hpp"
#include "trisub/parser.hpp"

namespace trisub {

namespace {

const std::string kA =
    "-L(k1) - f1*e1(k2) - e1(k2*f1) - f2*e2(k2) - e2(k2*f2) + k1*k2*f1 + f2*k2^2 + k1*f1^2 + "
    "k1*f2^2";
const std::string kB =
    "-L(k2) + f1*e1(k1) + e1(k1*f1) + f2*e2(k1) + e2(k1*f2) - k1*k2*f2 - f1*k1^2 + k2*f1^2 + "
    "k2*f2^2";
const std::string kKN = "e1(f2) - e2(f1) - f1^2 - f2^2";
const std::string kAp = "-L(k1) + k1*f1^2 + k1*f2^2";
const std::string kBp = "f1*e1(k1) + e1(k1*f1) + f2*e2(k1) + e2(k1*f2) - f1*k1^2";

std::string wrap(const std::string& s) { return "(" + s + ")"; }

std::map<std::string, ReferenceEquation> build_reference_equations() {
    std::map<std::string, ReferenceEquation> t;
    const std::string A = wrap(kA);
    const std::string B = wrap(kB);
    const std::string KN = wrap(kKN);
    const std::string Ap = wrap(kAp);
    const std::string Bp = wrap(kBp);

    t["A"] = {kA, ""};
    t["B"] = {kB, ""};
    t["KN"] = {kKN, ""};
    t["3.1-eps1"] = {"L" + A + " + f1*e1" + B + " + e1(" + B + "*f1) + f2*e2" + B + " + e2(" + B +
                         "*f2) - f1*k1*" + B + " - k2*f2*" + B + " - " + A + "*(" + KN +
                         " + f1^2 + f2^2) + " + KN +
                         "*(-e2(k1)*k2 + e2(k2)*k1 - k1^2*f2 - k2^2*f2)",
                     ""};
    t["3.1-eps2"] = {"L" + B + " - f1*e1" + A + " - e1(" + A + "*f1) - f2*e2" + A + " - e2(" + A +
                         "*f2) + f1*k1*" + A + " + f2*k2*" + A + " - " + B + "*(" + KN +
                         " + f1^2 + f2^2) + " + KN + "*(e1(k1)*k2 - e1(k2)*k1 + k1^2*f1 + k2^2*f1)",
                     ""};
    t["cor3.2-A'"] = {kAp, ""};
    t["cor3.2-B'"] = {kBp, ""};
    t["cor3.2-eps1"] = {"L" + Ap + " + f1*e1" + Bp + " + e1(" + Bp + "*f1) + f2*e2" + Bp +
                            " + e2(" + Bp + "*f2) - f1*k1*" + Bp + " - " + Ap + "*(" + KN +
                            " + f1^2 + f2^2) - " + KN + "*(k1^2*f2)",
                        ""};
    t["cor3.2-eps2"] = {"L" + Bp + " - f1*e1" + Ap + " - e1(" + Ap + "*f1) - f2*e2" + Ap +
                            " - e2(" + Ap + "*f2) + f1*k1*" + Ap + " - " + Bp + "*(" + KN +
                            " + f1^2 + f2^2) + " + KN + "*(k1^2*f1)",
                        ""};
    t["cor4.1-eps1"] = {"-L(k1) + k1*(-" + KN + " + f1^2 + f2^2)", ""};
    t["cor4.1-eps2"] = {"f1*e1(k1) + e1(k1*f1) + f2*e2(k1) + e2(k1*f2) - k1^2*f1", ""};

    t["3.5-1"] = {"e1(sigma) - 2*k1*sigma", ""};
    t["3.5-2"] = {"e1(k1) + sigma^2 - k1^2 - c", ""};
    t["3.5-3"] = {"k1*f1", ""};
    t["3.5-4"] = {"-(e2(f1) - e1(f2) + f1^2 + f2^2 + 3*sigma^2) - c", ""};
    t["3.5-5"] = {"e2(sigma)", ""};
    t["3.5-6"] = {"e2(k1)", ""};
    t["3.5-7"] = {"sigma^2 - k1*f2 - c", ""};

    t["3.6"] = {"2*k1*sigma", ""};
    t["3.7"] = {"k1^2 - k1*f2", ""};
    t["3.8"] = {"f2^2 - k1*f2 + 4*sigma^2", ""};
    t["3.9"] = {"-k1^3 + 2*f2*k1^2 + 4*sigma^2*k1", ""};
    t["3.10"] = {"L" + wrap("-k1^3 + 2*f2*k1^2 + 4*sigma^2*k1") +
                     " - (-k1^3 + 2*f2*k1^2 + 4*sigma^2*k1)*(e1(f2)) - (e1(f2) - "
                     "f2^2)*(f2*k1^2)",
                 ""};
    t["3.11"] = {"-9*k1^5 + 19*f2*k1^4 + (164*sigma^2 - 9*f2^2)*k1^3 - 120*sigma^2*f2*k1^2 - "
                 "32*sigma^4*k1",
                 "display ends -32*sigma^4*k; the missing subscript reads k1"};
    t["3.12"] = {"-9*k1^4 + 19*f2*k1^3 + (164*sigma^2 - 9*f2^2)*k1^2 - 120*sigma^2*f2*k1 - "
                 "32*sigma^4",
                 ""};
    t["3.13"] = {"-18*k1^4 + 37*f2*k1^3 + (-19*f2^2 + 530*sigma^2)*k1^2 - 440*sigma^2*f2*k1 - "
                 "368*sigma^4",
                 "display opens -18k^4; the missing subscript reads k1^4"};
    t["3.14"] = {"f2*k1^3 + (-202*sigma^2 + f2^2)*k1^2 + 200*sigma^2*f2*k1 + 304*sigma^4",
                 "display opens f2*k^3; the missing subscript reads k1^3"};
    t["3.15"] = {"f2*k1^3 + (-f2^2 - 604*sigma^2)*k1^2 + 606*sigma^2*f2*k1 + 1616*sigma^4", ""};
    t["3.16"] = {"(201*sigma^2 + f2^2)*k1^2 - 203*sigma^2*f2*k1 - 656*sigma^4", ""};
    t["3.16a"] = {"-f2^2*k1^2 + 2*sigma^2*f2*k1 - 354*sigma^4", ""};
    t["3.17"] = {"-353*sigma^4 - c^2", ""};
    t["3.17-e1"] = {"sigma^4*k1", ""};
    t["3.16-sigma0"] = {"f2^2*k1^2", "stated as k1*f2 = 0; the engine retains the square"};
    t["3.5-7-omega"] = {"-c", ""};
    t["k1^5"] = {"k1^5", "the Laplacian reduction carries the positive scalar 9"};
    t["dk-a"] = {"5*k1*sigma^2 - k1^3 - k1*c + f2*(k1^2 - sigma^2 + c)", ""};
    t["4.4r"] = {"3*k1*sigma^2 - k1^3 - 3*c*k1",
                 "display shows k1^2*(3*sigma^2 - k1^2 - 3*c); the engine obtains the factor k1 "
                 "to the first power"};
    t["4.5"] = {"3*sigma^2 - k1^2 - 3*c", ""};
    t["4.6"] = {"k1^2 - 7*sigma^2 + c", ""};
    return t;
}

Poly expected_poly(const std::string& id, const std::map<std::string, ReferenceEquation>& table) {
    auto it = table.find(id);
    if (it == table.end()) throw InvalidRefError("no reference equation with id '" + id + "'");
    return parse_poly(it->second.text, RewriteSystem::generic());
}

const Poly& out_of(const std::vector<StepOutcome>& state, int ref) {
    if (ref < 0 || ref >= static_cast<int>(state.size()))
        throw InvalidRefError("step references output " + std::to_string(ref) +
                              " which does not exist yet");
    return state[static_cast<std::size_t>(ref)].result;
}

struct Justification {
    bool forced = false;
    std::string rule;
    int degree = 0;
};

bool all_exponents_even(const Monomial& m, bool* touches, Base s) {
    for (const auto& [sym, e] : m) {
        if (!sym.word.empty()) return false;  // real-valuedness argument needs base symbols
        if (e % 2 != 0) return false;
        if (sym.base == s) *touches = true;
    }
    return true;
}

// Syntactic check that p == 0 on Omega forces s == 0 there.
Justification justify_vanishing(const Poly& p, Base s) {
    if (p.is_zero()) return {};
    const DerivedSymbol k1{Base::K1, {}};
    const DerivedSymbol target{s, {}};

    if (s == Base::K1) {
        if (p.term_count() == 1) {
            const auto& [mono, coef] = *p.terms().begin();
            if (mono.size() == 1 && mono.begin()->first == k1)
                return {true, "single monomial k1^" + std::to_string(mono.begin()->second),
                        mono.begin()->second};
        }
        return {};
    }

    int content = -1;
    for (const auto& [mono, coef] : p.terms()) {
        auto it = mono.find(k1);
        const int e = it == mono.end() ? 0 : it->second;
        content = content < 0 ? e : std::min(content, e);
    }
    const Poly q = content > 0 ? factor_out_power(p, k1, content) : p;
    const std::string prefix =
        content > 0 ? "k1^" + std::to_string(content) + " factored (k1 != 0 on Omega); " : "";

    if (q.term_count() == 1) {
        const auto& [mono, coef] = *q.terms().begin();
        if (mono.size() == 1 && mono.begin()->first == target)
            return {true,
                    prefix + "single monomial " + std::string(base_name(s)) + "^" +
                        std::to_string(mono.begin()->second),
                    mono.begin()->second};
        return {};
    }

    // Sum of same-sign terms, every exponent even: each term vanishes on its
    // own, and some term carries a positive even power of s.
    const int sign = q.terms().begin()->second.sign();
    bool touches = false;
    for (const auto& [mono, coef] : q.terms()) {
        if (coef.sign() != sign) return {};
        if (!all_exponents_even(mono, &touches, s)) return {};
    }
    if (!touches) return {};
    return {true, prefix + "same-sign sum of even powers", 2};
}

ProofStep seed(SeedSource src, std::string eq = {}) {
    ProofStep st;
    st.kind = StepKind::Seed;
    st.source = src;
    st.paper_eq = std::move(eq);
    return st;
}

ProofStep apply_e1(int ref, int k1_division, std::string eq = {}) {
    ProofStep st;
    st.kind = StepKind::ApplyE1;
    st.ref_a = ref;
    st.power = k1_division;
    st.paper_eq = std::move(eq);
    return st;
}

ProofStep divide(int ref, Base s, int m, std::string eq = {}) {
    ProofStep st;
    st.kind = StepKind::DivideByPower;
    st.ref_a = ref;
    st.symbol = s;
    st.power = m;
    st.paper_eq = std::move(eq);
    return st;
}

ProofStep combine(Rational ca, int ra, Rational cb, int rb, std::string eq = {}) {
    ProofStep st;
    st.kind = StepKind::LinearCombine;
    st.coeff_a = std::move(ca);
    st.ref_a = ra;
    st.coeff_b = std::move(cb);
    st.ref_b = rb;
    st.paper_eq = std::move(eq);
    return st;
}

ProofStep substitute_c(int ref, std::string eq = {}) {
    ProofStep st;
    st.kind = StepKind::SubstituteC;
    st.ref_a = ref;
    st.paper_eq = std::move(eq);
    return st;
}

ProofStep conclude(Base s, int ref, std::string eq = {}) {
    ProofStep st;
    st.kind = StepKind::ConcludeVanishes;
    st.symbol = s;
    st.ref_a = ref;
    st.paper_eq = std::move(eq);
    return st;
}

}  // namespace

const std::map<std::string, ReferenceEquation>& reference_equations() {
    static const auto table = build_reference_equations();
    return table;
}

std::vector<std::string> reference_corpus() {
    std::vector<std::string> out;
    for (const auto& [id, eq] : reference_equations()) out.push_back(eq.text);
    return out;
}

StepComparison compare_up_to_scalar(const Poly& got, const Poly& expected) {
    StepComparison cmp;
    if (expected.is_zero() || got.is_zero()) {
        if (expected.is_zero() && got.is_zero()) {
            cmp.kind = CompareKind::ExactMatch;
            return cmp;
        }
        cmp.kind = CompareKind::Mismatch;
        cmp.diff = got - expected;
        return cmp;
    }
    const auto& [lead, lead_coef] = *expected.terms().begin();
    const Rational got_coef = got.coefficient(lead);
    if (got_coef.is_zero()) {
        cmp.kind = CompareKind::Mismatch;
        cmp.diff = got - expected;
        return cmp;
    }
    const Rational lambda = got_coef / lead_coef;
    const Poly diff = got - lambda * expected;
    if (diff.is_zero()) {
        cmp.kind = lambda.is_one() ? CompareKind::ExactMatch : CompareKind::ScalarMatch;
        cmp.scalar = lambda;
        return cmp;
    }
    cmp.kind = CompareKind::Mismatch;
    cmp.scalar = lambda;
    cmp.diff = diff;
    return cmp;
}

StepOutcome apply_step(const std::vector<StepOutcome>& state, const ProofStep& step,
                       const RewriteSystem& rules, const std::set<Base>& vanished) {
    const RewriteSystem eff = vanished.empty() ? rules : rules.with_vanishing(vanished);
    const DerivedSymbol k1{Base::K1, {}};
    StepOutcome out;
    switch (step.kind) {
        case StepKind::Seed:
            switch (step.source) {
                case SeedSource::TriharmonicOmega:
                    out.result = normalize(tritension_components().first, eff);
                    break;
                case SeedSource::BiharmonicOmega:
                    out.result = normalize(bitension_components().first, eff);
                    break;
                case SeedSource::SpaceFormRow7:
                    out.result = normalize(space_form_constraints()[6], eff);
                    break;
                case SeedSource::Literal:
                    out.result = parse_poly(step.literal, eff);
                    break;
            }
            break;
        case StepKind::ApplyE1: {
            Poly r = derive(out_of(state, step.ref_a), 1, eff);
            if (step.power > 0) r = factor_out_power(r, k1, step.power);
            out.result = std::move(r);
            break;
        }
        case StepKind::LinearCombine: {
            const Poly& a = out_of(state, step.ref_a);
            const Poly& b = out_of(state, step.ref_b);
            out.result = normalize(step.coeff_a * a + step.coeff_b * b, eff);
            break;
        }
        case StepKind::DivideByPower:
            out.result = normalize(
                factor_out_power(out_of(state, step.ref_a), {step.symbol, {}}, step.power), eff);
            break;
        case StepKind::SubstituteC:
            out.result = normalize(substitute_curvature_relation(out_of(state, step.ref_a)), eff);
            break;
        case StepKind::ConcludeVanishes: {
            out.result = normalize(out_of(state, step.ref_a), eff);
            const Justification j = justify_vanishing(out.result, step.symbol);
            if (!j.forced)
                throw std::runtime_error("ConcludeVanishes(" + std::string(base_name(step.symbol)) +
                                         ") is not algebraically forced by " + render(out.result));
            out.note = j.rule;
            break;
        }
    }
    return out;
}

ProofScript builtin_triharmonic_script() {
    ProofScript s;
    s.id = "triharmonic-main";
    s.steps = {
        seed(SeedSource::TriharmonicOmega, "3.11"),       // 0: reduced condition
        divide(0, Base::K1, 1, "3.12"),                   // 1
        apply_e1(1, 1, "3.13"),                           // 2: e1, then /k1 (scalar 2)
        combine(Rational(2), 1, Rational(-1, 2), 2, "3.14"),  // 3: 2*(3.12) - (3.13)
        apply_e1(3, 1, "3.15"),                           // 4: e1, then /k1 (scalar 2)
        combine(Rational(-1, 4), 4, Rational(1, 2), 3, "3.16"),  // 5: -((3.15)-(3.14))/2
        apply_e1(5, 1),                                   // 6: e1, then /k1 (= 6*Q)
        combine(Rational(1, 6), 6, Rational(-1), 5, "3.16a"),    // 7: Q - (3.16)
        substitute_c(7, "3.17"),                          // 8
        apply_e1(8, 0, "3.17-e1"),                        // 9: -2824*sigma^4*k1
        conclude(Base::Sigma, 9),                         // 10
        conclude(Base::F2, 5, "3.16-sigma0"),             // 11: (3.16) at sigma = 0
        seed(SeedSource::SpaceFormRow7, "3.5-7-omega"),   // 12: -c after sigma = f2 = 0
        conclude(Base::C, 12),                            // 13
        conclude(Base::K1, 0, "k1^5"),                    // 14: -9*k1^5, contradiction
    };
    return s;
}

ProofScript builtin_biharmonic_script() {
    ProofScript s;
    s.id = "biharmonic-appendix";
    s.steps = {
        seed(SeedSource::BiharmonicOmega),                // 0: k1^2*(3*f2 - k1)
        substitute_c(0, "4.4r"),                          // 1: k1*(3*sigma^2 - k1^2 - 3*c)
        divide(1, Base::K1, 1, "4.5"),                    // 2
        apply_e1(2, 1),                                   // 3: 2*(6*sigma^2 - k1^2 + k1*f2)
        combine(Rational(1, 2), 3, Rational(0), 3),       // 4
        substitute_c(4, "4.6"),                           // 5: 7*sigma^2 - k1^2 - c
        apply_e1(5, 1),                                   // 6
        combine(Rational(1, 2), 6, Rational(0), 6),       // 7: 14*sigma^2 - k1^2 + k1*f2
        substitute_c(7),                                  // 8: 15*sigma^2 - k1^2 - c
        combine(Rational(1), 8, Rational(-1), 5),         // 9: 8*sigma^2
        conclude(Base::Sigma, 9),                         // 10
        combine(Rational(1), 5, Rational(-1), 2),         // 11: 4*sigma^2 + 2*c -> 2*c
        conclude(Base::C, 11),                            // 12
        combine(Rational(1), 5, Rational(0), 5),          // 13: -k1^2
        conclude(Base::K1, 13),                           // 14: contradiction
    };
    return s;
}

Report replay_script(const ProofScript& script, const RewriteSystem& rules,
                     const std::map<std::string, ReferenceEquation>& table) {
    Report report;
    report.script_id = script.id;
    report.complete = true;
    std::set<Base> vanished;
    std::vector<StepOutcome> state;
    for (std::size_t i = 0; i < script.steps.size(); ++i) {
        const ProofStep& step = script.steps[i];
        StepOutcome outcome;
        try {
            outcome = apply_step(state, step, rules, vanished);
        } catch (const std::exception& e) {
            outcome.comparison.kind = CompareKind::Mismatch;
            report.steps.push_back(step);
            report.outcomes.push_back(outcome);
            report.complete = false;
            report.failed_step = static_cast<int>(i);
            report.failure = e.what();
            return report;
        }
        if (!step.paper_eq.empty()) {
            outcome.comparison = compare_up_to_scalar(outcome.result, expected_poly(step.paper_eq, table));
            auto it = table.find(step.paper_eq);
            if (it != table.end() && !it->second.note.empty()) {
                if (!outcome.note.empty()) outcome.note += "; ";
                outcome.note += it->second.note;
            }
        }
        report.steps.push_back(step);
        report.outcomes.push_back(outcome);
        if (outcome.comparison.kind == CompareKind::Mismatch) {
            report.complete = false;
            report.failed_step = static_cast<int>(i);
            report.failure = "expected display equation " + step.paper_eq;
            return report;
        }
        if (step.kind == StepKind::ConcludeVanishes) {
            vanished.insert(step.symbol);
            if (step.symbol == Base::K1) {
                const auto j = justify_vanishing(outcome.result, Base::K1);
                report.conclusions.push_back("k1^" + std::to_string(j.degree) + " = 0 on Omega");
                report.conclusions.push_back("contradiction: k1 vanishes on Omega where k1 != 0");
            } else {
                report.conclusions.push_back(std::string(base_name(step.symbol)) +
                                             " = 0 on Omega [" + outcome.note + "]");
            }
        }
        state.push_back(report.outcomes.back());
    }
    return report;
}

std::string_view step_kind_name(StepKind k) {
    switch (k) {
        case StepKind::Seed: return "Seed";
        case StepKind::ApplyE1: return "ApplyE1";
        case StepKind::LinearCombine: return "LinearCombine";
        case StepKind::DivideByPower: return "DivideByPower";
        case StepKind::SubstituteC: return "SubstituteC";
        case StepKind::ConcludeVanishes: return "ConcludeVanishes";
    }
    return "?";
}

std::string_view compare_kind_name(CompareKind k) {
    switch (k) {
        case CompareKind::ExactMatch: return "ExactMatch";
        case CompareKind::ScalarMatch: return "ScalarMatch";
        case CompareKind::NoExpectation: return "NoExpectation";
        case CompareKind::Mismatch: return "Mismatch";
    }
    return "?";
}

namespace {

std::string render_text_report(const Report& r) {
    std::ostringstream os;
    os << "script: " << r.script_id << "\n";
    if (r.steps.empty()) {
        os << "0 steps\n";
    } else {
        os << r.steps.size() << " steps\n";
        for (std::size_t i = 0; i < r.steps.size(); ++i) {
            const ProofStep& st = r.steps[i];
            const StepOutcome& oc = r.outcomes[i];
            os << "  [" << (i < 10 ? " " : "") << i << "] ";
            std::string kind{step_kind_name(st.kind)};
            if (st.kind == StepKind::DivideByPower || st.kind == StepKind::ConcludeVanishes)
                kind += "(" + std::string(base_name(st.symbol)) + ")";
            os << kind;
            for (std::size_t pad = kind.size(); pad < 24; ++pad) os << ' ';
            std::string eq = st.paper_eq.empty() ? "-" : st.paper_eq;
            os << eq;
            for (std::size_t pad = eq.size(); pad < 12; ++pad) os << ' ';
            std::string cmp{compare_kind_name(oc.comparison.kind)};
            if (oc.comparison.kind == CompareKind::ScalarMatch)
                cmp += "(" + oc.comparison.scalar.str() + ")";
            os << cmp;
            for (std::size_t pad = cmp.size(); pad < 18; ++pad) os << ' ';
            os << render(oc.result);
            if (!oc.note.empty()) os << "   ; " << oc.note;
            os << "\n";
        }
    }
    if (r.complete) {
        os << "verdict: ProofComplete\n";
    } else {
        os << "verdict: Failed at step " << r.failed_step << " (" << r.failure << ")\n";
        if (r.failed_step >= 0 &&
            r.failed_step < static_cast<int>(r.outcomes.size())) {
            const auto& cmp = r.outcomes[static_cast<std::size_t>(r.failed_step)].comparison;
            if (!cmp.diff.is_zero()) os << "residual: " << render(cmp.diff) << "\n";
        }
    }
    os << "conclusions:" << (r.conclusions.empty() ? " none" : "") << "\n";
    for (const auto& c : r.conclusions) os << "  - " << c << "\n";
    return os.str();
}

std::string render_json_report(const Report& r) {
    nlohmann::ordered_json doc;
    doc["schema_version"] = 1;
    doc["script_id"] = r.script_id;
    nlohmann::ordered_json steps = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < r.steps.size(); ++i) {
        const ProofStep& st = r.steps[i];
        const StepOutcome& oc = r.outcomes[i];
        nlohmann::ordered_json s;
        s["index"] = i;
        s["kind"] = std::string(step_kind_name(st.kind));
        if (st.paper_eq.empty())
            s["paper_eq"] = nullptr;
        else
            s["paper_eq"] = st.paper_eq;
        s["polynomial"] = render(oc.result);
        s["comparison"] = std::string(compare_kind_name(oc.comparison.kind));
        if (oc.comparison.kind == CompareKind::ScalarMatch)
            s["scalar"] = oc.comparison.scalar.str();
        else
            s["scalar"] = nullptr;
        steps.push_back(std::move(s));
    }
    doc["steps"] = std::move(steps);
    doc["verdict"] =
        r.complete ? std::string("ProofComplete")
                   : std::string("Failed at step " + std::to_string(r.failed_step));
    doc["conclusions"] = r.conclusions;
    return doc.dump(2) + "\n";
}

}  // namespace

std::string emit_report(const Report& report, ReportFormat format) {
    return format == ReportFormat::Text ? render_text_report(report) : render_json_report(report);
}

}  // namespace trisub
