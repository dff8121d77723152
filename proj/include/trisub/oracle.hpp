#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "trisub/derive.hpp"

namespace trisub {

// Deterministic random rational points over the base symbols; k1 is drawn
// with rejection so it never vanishes (the premise of Omega).
std::vector<PointAssignment> sample_points(std::size_t n, std::uint64_t seed);

// Serial reference implementation of pointwise evaluation.
std::vector<Rational> evaluate_at_points_serial(const Poly& p,
                                                const std::vector<PointAssignment>& points);

// OpenMP kernel; bit-identical to the serial reference.
std::vector<Rational> evaluate_at_points(const Poly& p,
                                         const std::vector<PointAssignment>& points);

struct CrossCheckResult {
    bool pass = false;
    std::optional<PointAssignment> witness;
};

// Normalizes p under the rewrite system and evaluates at random rational
// points: passes iff the normal form is identically zero (every sampled
// value is then exactly zero); otherwise a witness point is recorded.
CrossCheckResult numeric_cross_check(const Poly& p, const RewriteSystem& rules,
                                     std::size_t samples, std::uint64_t seed = 0x5eedULL);

std::string render(const PointAssignment& at);

}  // namespace trisub
