#pragma once
// Structural manifold: per-dimension invariance proportions of category A.
//
// Binding (ignoring) dimension i projects every member of A onto the
// remaining dimensions; a member is invariant under i when its projection
// coincides with another member's projection. proportions[i] is the share
// of invariant members, and phi_hat is the Euclidean norm of the proportion
// vector. Larger phi_hat means more within-category regularity, i.e. an
// easier category.
//
// For binary dimensions the projection-collision test is equivalent to
// "flipping dimension i stays inside A"; the library computes the
// projection form, tests cross-check the flip form.

#include <string>
#include <vector>

#include "catcomp/structure.hpp"

namespace catcomp {

struct StructuralManifold {
    std::vector<double> proportions; // one per dimension, each in [0, 1]
    double phi_hat = 0.0;            // sqrt(sum of squared proportions)
};

StructuralManifold structural_manifold(const CategoryStructure& s);

// "(0,0,1)"; proportions rendered with shortest exact-looking form.
std::string format_manifold(const StructuralManifold& m);

} // namespace catcomp
