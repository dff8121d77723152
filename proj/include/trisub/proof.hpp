#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "trisub/geometry.hpp"

namespace trisub {

enum class StepKind { Seed, ApplyE1, LinearCombine, DivideByPower, SubstituteC, ConcludeVanishes };

enum class SeedSource {
    TriharmonicOmega,  // first triharmonic component, reduced on Omega
    BiharmonicOmega,   // first biharmonic component, reduced on Omega
    SpaceFormRow7,     // sigma^2 - k1*f2 - c
    Literal,           // an expression in the surface syntax
};

// A single elimination move. Every ref points at an earlier step's output,
// so scripts are acyclic by construction. A step may carry the id of a
// reference display equation; its output is then compared against the table
// (exactly or up to a nonzero rational scalar).
struct ProofStep {
    StepKind kind = StepKind::Seed;
    SeedSource source = SeedSource::Literal;
    std::string literal;        // Seed(Literal)
    int ref_a = -1;
    int ref_b = -1;
    Rational coeff_a;           // LinearCombine: coeff_a * ref_a + coeff_b * ref_b
    Rational coeff_b;
    Base symbol = Base::K1;     // DivideByPower / ConcludeVanishes
    int power = 0;              // DivideByPower exponent; ApplyE1 trailing k1 division
    std::string paper_eq;       // display-equation id, empty when none
};

struct ProofScript {
    std::string id;
    std::vector<ProofStep> steps;
};

enum class CompareKind { ExactMatch, ScalarMatch, NoExpectation, Mismatch };

struct StepComparison {
    CompareKind kind = CompareKind::NoExpectation;
    Rational scalar = Rational(1);  // ScalarMatch: result == scalar * expected
    Poly diff;                      // Mismatch: result - scalar * expected
};

struct StepOutcome {
    Poly result;
    StepComparison comparison;
    std::string note;  // vanishing-rule justification, display typo flags
};

struct Report {
    std::string script_id;
    std::vector<ProofStep> steps;
    std::vector<StepOutcome> outcomes;
    bool complete = false;
    int failed_step = -1;
    std::string failure;
    std::vector<std::string> conclusions;
};

struct ReferenceEquation {
    std::string text;  // surface-syntax transcription of the display
    std::string note;  // set when the display carries a documented typo
};

// Display equations the builtin scripts are checked against, keyed by id.
const std::map<std::string, ReferenceEquation>& reference_equations();

// Every transcribed display, for parser round-trip coverage.
std::vector<std::string> reference_corpus();

// ExactMatch, ScalarMatch(lambda) with got == lambda * expected, or Mismatch
// with the residual after the best rescaling.
StepComparison compare_up_to_scalar(const Poly& got, const Poly& expected);

// Executes one step against the outputs of earlier steps. `vanished` holds
// symbols already concluded zero; results are reduced modulo them. Throws
// InvalidRefError / NotDivisibleError; an unforced ConcludeVanishes throws
// std::runtime_error.
StepOutcome apply_step(const std::vector<StepOutcome>& state, const ProofStep& step,
                       const RewriteSystem& rules, const std::set<Base>& vanished = {});

// The elimination chain of the triharmonic theorem: the reduced condition,
// divisions by k1, repeated e1 applications, the linear combinations pinning
// each display, the curvature-relation substitution, and the vanishing
// conclusions ending in the contradiction on Omega.
ProofScript builtin_triharmonic_script();

// The biharmonic chain: reduced condition, the two displayed consequences,
// and the combination forcing k1 = sigma = c = 0 on Omega.
ProofScript builtin_biharmonic_script();

// Replays steps in order. The verdict is ProofComplete only if every
// expectation matched (exactly or up to scalar) and every vanishing
// conclusion was algebraically forced; otherwise the first failing step is
// surfaced with its residual.
Report replay_script(const ProofScript& script, const RewriteSystem& rules,
                     const std::map<std::string, ReferenceEquation>& table = reference_equations());

enum class ReportFormat { Text, Json };

// Text: one step per line plus verdict and conclusions. Json: the versioned
// schema {schema_version, script_id, steps:[{index, kind, paper_eq,
// polynomial, comparison, scalar}], verdict, conclusions}; byte-stable for a
// fixed report.
std::string emit_report(const Report& report, ReportFormat format);

std::string_view step_kind_name(StepKind k);
std::string_view compare_kind_name(CompareKind k);

}  // namespace trisub
