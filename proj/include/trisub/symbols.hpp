#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace trisub {

// Scalar fields of the adapted frame, plus the constant sectional curvature c.
// The enumerator order is the canonical symbol order used for printing and
// leading-term extraction: k1 < f2 < sigma < c < k2 < f1.
enum class Base : std::uint8_t { K1 = 0, F2, Sigma, C, K2, F1 };

inline constexpr std::array<Base, 6> kAllBases = {Base::K1, Base::F2, Base::Sigma,
                                                  Base::C,  Base::K2, Base::F1};

std::string_view base_name(Base b);
std::optional<Base> base_from_name(std::string_view name);

// Word of frame derivations, innermost application first. The normal form has
// non-decreasing indices; the bubble rewrite in the derivation engine strictly
// reduces (inversions, length), so normalization terminates.
using FrameWord = std::vector<std::uint8_t>;

// A base scalar tagged with a canonical derivation word, e.g. e3(e1(k1)) has
// base k1 and word {1,3}. Base c never carries a word (c is constant).
struct DerivedSymbol {
    Base base = Base::K1;
    FrameWord word;

    bool operator==(const DerivedSymbol&) const = default;
};

// Base symbols come before derived ones, then order by base, word length, word.
inline std::strong_ordering operator<=>(const DerivedSymbol& a, const DerivedSymbol& b) {
    const int ga = a.word.empty() ? 0 : 1;
    const int gb = b.word.empty() ? 0 : 1;
    if (ga != gb) return ga <=> gb;
    if (a.base != b.base) return static_cast<int>(a.base) <=> static_cast<int>(b.base);
    if (a.word.size() != b.word.size()) return a.word.size() <=> b.word.size();
    return std::lexicographical_compare_three_way(a.word.begin(), a.word.end(), b.word.begin(),
                                                  b.word.end());
}

// Renders e.g. (k1, {1,3}) as "e3(e1(k1))".
std::string render(const DerivedSymbol& s);

}  // namespace trisub
