#include "catcomp/infocomp.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

namespace catcomp {

Aggregator min_aggregator() { return {AggregatorKind::Min, 0.0}; }
Aggregator mean_aggregator() { return {AggregatorKind::Mean, 0.0}; }

Aggregator weighted_aggregator(double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw RangeError("alpha " + std::to_string(alpha) +
                         " is outside [0, 1]");
    return {AggregatorKind::Weighted, alpha};
}

const char* aggregator_name(AggregatorKind kind) {
    switch (kind) {
    case AggregatorKind::Min:
        return "min";
    case AggregatorKind::Mean:
        return "mean";
    case AggregatorKind::Weighted:
        return "weighted";
    }
    return "unknown";
}

double entropy_term(double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw RangeError("probability " + std::to_string(p) +
                         " is outside [0, 1]");
    if (p == 0.0 || p == 1.0)
        return 0.0;
    return -p * std::log2(p);
}

double cell_entropy(const CategoryStructure& s,
                    const std::vector<Stimulus>& cell) {
    if (cell.empty())
        throw RangeError("cell is empty");
    size_t in_a = 0;
    for (Stimulus x : cell)
        if (s.contains(x))
            ++in_a;
    const double p = static_cast<double>(in_a) / static_cast<double>(cell.size());
    return entropy_term(p) + entropy_term(1.0 - p);
}

namespace {

// Visits the size-n subsets of {0, ..., d-1} in lexicographic order of
// their ascending index lists, passing each as a dimension bitmask
// (dimension j <-> stimulus bit d-1-j).
template <typename Fn>
void for_each_subset(int d, int n, Fn&& fn) {
    std::vector<int> pick(n);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        Stimulus mask = 0;
        for (int dim : pick)
            mask = static_cast<Stimulus>(mask | (1u << (d - 1 - dim)));
        fn(mask);
        int i = n - 1;
        while (i >= 0 && pick[i] == d - n + i)
            --i;
        if (i < 0)
            break;
        ++pick[i];
        for (int j = i + 1; j < n; ++j)
            pick[j] = pick[j - 1] + 1;
    }
}

// Average cell entropy of the partition induced by fixing the masked
// dimensions: one cell per value assignment, all cells the same size.
double partition_uncertainty(const CategoryStructure& s, Stimulus mask) {
    const int space = s.space_size();
    const int cell_size = space >> std::popcount(static_cast<unsigned>(mask));
    double total = 0.0;
    int cells = 0;
    // Enumerate one representative per cell: every sub-setting of mask.
    Stimulus fixed = 0;
    while (true) {
        int in_a = 0;
        for (Stimulus x = 0; x < space; ++x)
            if ((x & mask) == fixed && s.contains(x))
                ++in_a;
        const double p = static_cast<double>(in_a) / cell_size;
        total += entropy_term(p) + entropy_term(1.0 - p);
        ++cells;
        if (fixed == mask)
            break;
        fixed = static_cast<Stimulus>((fixed - mask) & mask); // next subset
    }
    return total / cells;
}

} // namespace

std::vector<double> level_uncertainties(const CategoryStructure& s, int n) {
    if (n < 0 || n > s.dims())
        throw RangeError("level " + std::to_string(n) + " is outside [0, " +
                         std::to_string(s.dims()) + "]");
    std::vector<double> entries;
    if (n == 0) {
        std::vector<Stimulus> space(s.space_size());
        std::iota(space.begin(), space.end(), Stimulus{0});
        entries.push_back(cell_entropy(s, space));
        return entries;
    }
    for_each_subset(s.dims(), n, [&](Stimulus mask) {
        entries.push_back(partition_uncertainty(s, mask));
    });
    return entries;
}

double level_metric(const CategoryStructure& s, int n, const Aggregator& g) {
    const auto entries = level_uncertainties(s, n);
    switch (g.kind) {
    case AggregatorKind::Min:
        return *std::min_element(entries.begin(), entries.end());
    case AggregatorKind::Mean:
        return std::accumulate(entries.begin(), entries.end(), 0.0) /
               static_cast<double>(entries.size());
    case AggregatorKind::Weighted:
        break;
    }
    throw RangeError("the weighted aggregator is not a per-level aggregator");
}

LevelProfile aggregate_metric(const CategoryStructure& s, const Aggregator& g) {
    if (g.kind == AggregatorKind::Weighted)
        throw RangeError("the weighted aggregator has no per-level profile; "
                         "use weighted_two_level");
    LevelProfile profile;
    profile.dims = s.dims();
    profile.aggregator = g.kind;
    profile.alpha = g.alpha;
    for (int n = 0; n <= s.dims(); ++n) {
        profile.u_vectors.push_back(level_uncertainties(s, n));
        profile.u_levels.push_back(level_metric(s, n, g));
        profile.u_hat += profile.u_levels.back();
    }
    return profile;
}

double weighted_two_level(const CategoryStructure& s, double alpha) {
    if (s.dims() < 2)
        throw RangeError("the two-level blend needs at least 2 dimensions");
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw RangeError("alpha " + std::to_string(alpha) +
                         " is outside [0, 1]");
    const Aggregator g = min_aggregator();
    return alpha * level_metric(s, 1, g) + (1.0 - alpha) * level_metric(s, 2, g);
}

} // namespace catcomp
