#pragma once
// Boolean complexity: the literal count of a minimal disjunctive normal
// form that covers category A exactly (all of A, nothing of B).
//
// An implicant is a conjunction of literals over dimensions a, b, c, ...
// (letter j = dimension j), i.e. a subcube of the stimulus space. It is
// stored with the stimulus bit convention of structure.hpp: care_mask marks
// the constrained dimensions, values their required bits (values is a
// subset of care_mask). Minimization is exact: all prime implicants (maximal
// subcubes of A) are enumerated, then a branch-and-bound exact cover search
// finds the fewest-literal cover, breaking ties by fewer implicants, then by
// lexicographic implicant order.
//
// Implicant order: dimension by dimension, positive literal < negated
// literal < unconstrained. That makes "ab" sort before "a'b'" and minterm
// lists print in descending truth-table order.

#include <string>
#include <vector>

#include "catcomp/structure.hpp"

namespace catcomp {

struct Implicant {
    int dims = 0;
    Stimulus care_mask = 0;
    Stimulus values = 0;

    int literal_count() const;
    bool covers(Stimulus x) const {
        return ((x ^ values) & care_mask) == 0;
    }
    // "ab'" style; unconstrained dimensions are omitted.
    std::string render() const;

    bool operator==(const Implicant& o) const {
        return dims == o.dims && care_mask == o.care_mask && values == o.values;
    }
};

bool implicant_less(const Implicant& lhs, const Implicant& rhs);

// All stimuli the implicant covers, ascending.
std::vector<Stimulus> implicant_stimuli(const Implicant& imp);

// All maximal subcubes of A, in implicant order.
std::vector<Implicant> prime_implicants(const CategoryStructure& s);

struct BoolComplexityResult {
    int literal_count = 0;
    std::vector<Implicant> minimal_cover; // implicant order
    std::string formula_text;             // "ab + a'b'"
};

// Exact minimum-literal DNF cover of A.
BoolComplexityResult boolean_complexity(const CategoryStructure& s);

// Implicants joined with " + " in implicant order.
std::string render_formula(std::vector<Implicant> cover);

} // namespace catcomp
