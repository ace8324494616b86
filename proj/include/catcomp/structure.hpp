#pragma once
// Boolean category structures over d binary dimensions (d <= 8).
//
// Conventions used throughout the library:
//   - A stimulus is a d-character bitstring; character j is the value of
//     dimension j. Encoded as an integer with dimension 0 in the most
//     significant bit ("big-endian"): with d = 3, "011" -> 3, "100" -> 4.
//   - Category A is the listed stimulus set, category B the complement in
//     the 2^d stimulus space. A is never empty and never the whole space.
//   - Structural equivalence is generated by dimension permutations and
//     per-dimension value flips (the hyperoctahedral group, d! * 2^d
//     elements); whole-category complementation joins the action only when
//     |A| == |B|, otherwise complements are related by the up-parity
//     convention (the smaller side is listed as A).
//   - The canonical form of a class is the member whose ascending stimulus
//     list is lexicographically smallest, after complementing down to
//     |A| <= |B| when needed.
//
// All functions are pure; the type is immutable after construction.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "catcomp/error.hpp"

namespace catcomp {

using Stimulus = std::uint16_t;

inline constexpr int kMaxDims = 8;

class CategoryStructure {
public:
    // a_set is stored sorted; throws RangeError for dims outside
    // [1, kMaxDims] or stimuli outside the space, ParseError for an empty,
    // full, or duplicated set.
    CategoryStructure(int dims, std::vector<Stimulus> a_set);

    int dims() const { return dims_; }
    int space_size() const { return 1 << dims_; }
    const std::vector<Stimulus>& a_set() const { return a_set_; }
    int a_size() const { return static_cast<int>(a_set_.size()); }
    bool contains(Stimulus s) const {
        return (mask_[s >> 6] >> (s & 63)) & 1u;
    }

    bool operator==(const CategoryStructure& o) const {
        return dims_ == o.dims_ && a_set_ == o.a_set_;
    }
    bool operator!=(const CategoryStructure& o) const { return !(*this == o); }
    // Orders by (dims, ascending stimulus list); the same lexicographic
    // order that defines canonical forms.
    bool operator<(const CategoryStructure& o) const;

private:
    int dims_;
    std::vector<Stimulus> a_set_;
    std::array<std::uint64_t, 4> mask_{}; // presence bitset over the space
};

// Parses "{000,001,010,011}" / "000,001" / "000|001"; braces and blanks are
// ignored, ',' and '|' both separate. Every token must be exactly dims
// binary digits. Throws ParseError (message cites the 1-based token).
CategoryStructure parse_structure(const std::string& text, int dims);
// Same, but takes dims from the first token's length.
CategoryStructure parse_structure(const std::string& text);

std::string format_stimulus(Stimulus s, int dims);
// "{000,001}" with ascending bitstrings.
std::string format_structure(const CategoryStructure& s);

// Swaps the category labels: A becomes the complement set.
CategoryStructure complement(const CategoryStructure& s);

// Every structure reachable by dimension permutation + value flips, plus
// complements of those when |A| == |B|. Sorted ascending, contains s.
std::vector<CategoryStructure> symmetry_orbit(const CategoryStructure& s);

// Class representative: lexicographically smallest orbit member with
// |A| <= |B| (complements first when |A| > |B|). Idempotent; constant on
// each orbit.
CategoryStructure canonical_form(const CategoryStructure& s);

// All equivalence classes of p-element categories in d dimensions, as
// canonical forms in ascending order. Requires 1 <= p <= 2^dims / 2.
std::vector<CategoryStructure> enumerate_classes(int dims, int p);

// d! * 2^dims, doubled when complementation joins the action.
std::uint64_t symmetry_group_order(int dims, bool with_complement);

} // namespace catcomp
