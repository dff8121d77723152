#include "trisub/oracle.hpp"

#include <random>

namespace trisub {

std::vector<PointAssignment> sample_points(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    std::vector<PointAssignment> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        PointAssignment pa;
        for (Base b : kAllBases) {
            long p = num(rng);
            while (b == Base::K1 && p == 0) p = num(rng);
            pa[b] = Rational(p, den(rng));
        }
        out.push_back(std::move(pa));
    }
    return out;
}

std::vector<Rational> evaluate_at_points_serial(const Poly& p,
                                                const std::vector<PointAssignment>& points) {
    std::vector<Rational> out(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) out[i] = evaluate(p, points[i]);
    return out;
}

std::vector<Rational> evaluate_at_points(const Poly& p,
                                         const std::vector<PointAssignment>& points) {
    std::vector<Rational> out(points.size());
    const auto n = static_cast<std::ptrdiff_t>(points.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i)
        out[static_cast<std::size_t>(i)] = evaluate(p, points[static_cast<std::size_t>(i)]);
    return out;
}

CrossCheckResult numeric_cross_check(const Poly& p, const RewriteSystem& rules,
                                     std::size_t samples, std::uint64_t seed) {
    const Poly q = normalize(p, rules);
    const auto points = sample_points(samples, seed);
    const auto values = evaluate_at_points(q, points);
    if (q.is_zero()) {
        for (const auto& v : values)
            if (!v.is_zero()) return {false, std::nullopt};  // unreachable for a canonical zero
        return {true, std::nullopt};
    }
    for (std::size_t i = 0; i < values.size(); ++i)
        if (!values[i].is_zero()) return {false, points[i]};
    return {false, std::nullopt};
}

std::string render(const PointAssignment& at) {
    std::string out;
    for (const auto& [b, v] : at) {
        if (!out.empty()) out += ", ";
        out += std::string(base_name(b)) + " = " + v.str();
    }
    return out;
}

}  // namespace trisub
