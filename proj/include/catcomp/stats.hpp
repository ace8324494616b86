#pragma once
// Order and correlation statistics for comparing a metric against observed
// difficulty (error rates), plus ingestion of human-data CSV files.
//
// CSV schema (UTF-8, header required):
//   structure,error_rate
//   000|001|010|101,0.21
//   3[4]-II,0.39
// The structure field is either a pipe-separated stimulus set or a catalog
// id "D[P]-k" (k = enumeration index, or a Roman numeral I..VI in the 3[4]
// block). error_rate must lie in [0, 1].

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "catcomp/structure.hpp"

namespace catcomp {

// Identifiers sorted by value into groups; values whose gap to the previous
// value is <= epsilon chain into the same tie group (transitive merging).
struct OrderedPartition {
    std::vector<std::vector<std::string>> groups; // ascending value order
    double epsilon = 0.0;
};

OrderedPartition induced_order(const std::vector<std::pair<std::string, double>>& values,
                               double epsilon);

// "I < II < {III,IV,V} < VI"
std::string format_order(const OrderedPartition& p);

// Average-rank ranks (ties get the mean of the ranks they span), 1-based.
std::vector<double> fractional_ranks(const std::vector<double>& xs);

// nullopt when either side has zero variance. Throws RangeError on length
// mismatch or fewer than two points. r_squared is the squared Pearson
// correlation; pearson_r carries the sign.
std::optional<double> pearson_r(const std::vector<double>& xs, const std::vector<double>& ys);
std::optional<double> spearman_rho(const std::vector<double>& xs, const std::vector<double>& ys);
std::optional<double> r_squared(const std::vector<double>& metric,
                                const std::vector<double>& error_rates);

struct OrderAgreement {
    int concordant = 0;        // same strict direction
    int discordant = 0;        // opposite strict directions
    int tie_disagreements = 0; // tied on exactly one side
    int both_tied = 0;         // tied on both sides
    bool exact_match = false;  // identical groups in identical order
};

// Pairwise agreement between two partitions over the same identifiers.
// Throws RangeError when the identifier sets differ.
OrderAgreement compare_orders(const OrderedPartition& predicted,
                              const OrderedPartition& observed);

struct HumanObservation {
    std::string id;              // structure field as written
    CategoryStructure structure; // resolved
    double error_rate = 0.0;
};

struct HumanDataset {
    std::string label; // file path or caller-supplied name
    std::vector<HumanObservation> observations;
};

// Throws DataError with "<label>:<line>:" context for every schema problem.
HumanDataset parse_human_csv(std::istream& in, const std::string& label);
HumanDataset load_human_csv(const std::string& path);

} // namespace catcomp
