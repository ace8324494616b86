#pragma once
// Information complexity of a category structure.
//
// Fixing the values of n of the d dimensions partitions the stimulus space
// into 2^n cells. The remaining classification uncertainty of a cell is
//   Q(cell) = J(p(A|cell)) + J(p(B|cell)),  J(p) = -p*log2(p),
// i.e. the entropy of the category label within the cell. For a chosen set
// of n dimensions, the partition's uncertainty is the plain average of Q
// over its cells (cells are equal-sized, so this is the conditional entropy
// of the label given the fixed values under uniform stimulus weighting).
//
// U(n) collects one such average per size-n dimension subset, subsets in
// lexicographic order of their index lists. u_G(n) aggregates U(n) with
// G = min or mean, and the summary metric is u_hat = sum over n = 0..d of
// u_G(n). A weighted two-level variant blends levels 1 and 2 of the min
// aggregator: alpha * u_min(1) + (1 - alpha) * u_min(2).

#include <vector>

#include "catcomp/structure.hpp"

namespace catcomp {

enum class AggregatorKind { Min, Mean, Weighted };

struct Aggregator {
    AggregatorKind kind = AggregatorKind::Min;
    double alpha = 0.0; // Weighted only
};

Aggregator min_aggregator();
Aggregator mean_aggregator();
Aggregator weighted_aggregator(double alpha); // alpha in [0, 1]

const char* aggregator_name(AggregatorKind kind); // "min" / "mean" / "weighted"

// J(p) = -p*log2(p); exactly 0 at p = 0 and p = 1. Throws RangeError
// outside [0, 1].
double entropy_term(double p);

// Q of an explicit, nonempty cell of stimuli.
double cell_entropy(const CategoryStructure& s, const std::vector<Stimulus>& cell);

// U(n): binomial(d, n) entries, lexicographic subset order. n in [0, d].
std::vector<double> level_uncertainties(const CategoryStructure& s, int n);

// u_G(n) for G = min or mean (Weighted is rejected here; it is not a
// per-level aggregator).
double level_metric(const CategoryStructure& s, int n, const Aggregator& g);

struct LevelProfile {
    int dims = 0;
    AggregatorKind aggregator = AggregatorKind::Min;
    double alpha = 0.0;                        // Weighted only
    std::vector<std::vector<double>> u_vectors; // U(n) for n = 0..dims
    std::vector<double> u_levels;               // u_G(n) for n = 0..dims
    double u_hat = 0.0;                         // sum of u_levels
};

// Full per-level profile plus u_hat for G = min or mean.
LevelProfile aggregate_metric(const CategoryStructure& s, const Aggregator& g);

// alpha * u_min(1) + (1 - alpha) * u_min(2); requires dims >= 2 and
// alpha in [0, 1].
double weighted_two_level(const CategoryStructure& s, double alpha);

} // namespace catcomp
