#include "catcomp/commands.hpp"

#include <cstdio>

#include "catcomp/boolcomp.hpp"
#include "catcomp/catalog.hpp"
#include "catcomp/gist.hpp"
#include "catcomp/infocomp.hpp"
#include "catcomp/stats.hpp"
#include "catcomp/structure.hpp"

namespace catcomp {

namespace {

constexpr double kOrderEpsilon = 1e-9; // tie threshold for derived orders
const char* kBoolcMethodNote =
    "boolean formula: exact minimal-DNF cover (prime implicants plus "
    "branch-and-bound)";

std::string format_vector(const std::vector<double>& xs) {
    std::string out = "(";
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i > 0)
            out += ',';
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%g", xs[i]);
        out += buf;
    }
    out += ')';
    return out;
}

void check_precision(int precision) {
    if (precision < 0 || precision > 17)
        throw RangeError("precision " + std::to_string(precision) +
                         " is outside [0, 17]");
}

// Difficulty value of one structure under a named fit metric.
double metric_value(const std::string& metric, const CategoryStructure& s) {
    if (metric == "umin")
        return aggregate_metric(s, min_aggregator()).u_hat;
    if (metric == "umean")
        return aggregate_metric(s, mean_aggregator()).u_hat;
    if (metric == "boolc")
        return static_cast<double>(boolean_complexity(s).literal_count);
    if (metric == "gist")
        // larger phi means an easier category, so difficulty is its negation
        return -structural_manifold(s).phi_hat;
    throw RangeError("unknown metric \"" + metric +
                     "\" (expected umin, umean, boolc, or gist)");
}

} // namespace

OutputDocument cmd_metric(const std::string& structure_text,
                          std::optional<int> dims, const std::string& metric,
                          bool per_level, int precision) {
    check_precision(precision);
    const bool all = metric == "all";
    if (!all && metric != "umin" && metric != "umean" && metric != "boolc" &&
        metric != "gist")
        throw RangeError("unknown metric \"" + metric +
                         "\" (expected umin, umean, boolc, gist, or all)");
    const CategoryStructure s = dims ? parse_structure(structure_text, *dims)
                                     : parse_structure(structure_text);

    OutputDocument doc;
    doc.precision = precision;
    doc.columns = {"quantity", "value", "detail"};
    doc.rows.push_back({std::string("structure"), format_structure(s),
                        std::to_string(s.dims()) + " dimensions"});

    const auto add_profile = [&](const Aggregator& g, const std::string& name) {
        const auto profile = aggregate_metric(s, g);
        if (per_level)
            for (int n = 0; n <= s.dims(); ++n)
                doc.rows.push_back({name + "(" + std::to_string(n) + ")",
                                    profile.u_levels[n],
                                    format_vector(profile.u_vectors[n])});
        doc.rows.push_back({name + "_hat", profile.u_hat, std::string()});
    };
    if (all || metric == "umin")
        add_profile(min_aggregator(), "u_min");
    if (all || metric == "umean")
        add_profile(mean_aggregator(), "u_mean");
    if (all || metric == "boolc") {
        const auto result = boolean_complexity(s);
        doc.rows.push_back({std::string("boolc"),
                            static_cast<std::int64_t>(result.literal_count),
                            result.formula_text});
        doc.footers.push_back(kBoolcMethodNote);
    }
    if (all || metric == "gist") {
        const auto m = structural_manifold(s);
        doc.rows.push_back(
            {std::string("phi_hat"), m.phi_hat, format_manifold(m)});
    }
    return doc;
}

OutputDocument cmd_enumerate(int dims, int p, int precision) {
    check_precision(precision);
    const auto classes = enumerate_classes(dims, p);

    OutputDocument doc;
    doc.precision = precision;
    doc.columns = {"id", "a", "u_min_hat", "u_mean_hat", "boolc", "phi_hat"};
    for (const auto& cls : classes) {
        doc.rows.push_back(
            {catalog_id(cls), format_structure(cls),
             aggregate_metric(cls, min_aggregator()).u_hat,
             aggregate_metric(cls, mean_aggregator()).u_hat,
             static_cast<std::int64_t>(boolean_complexity(cls).literal_count),
             structural_manifold(cls).phi_hat});
    }
    doc.footers.push_back(kBoolcMethodNote);
    return doc;
}

namespace {

OutputDocument six_way_table(const Aggregator& g, const std::string& name,
                             int precision) {
    OutputDocument doc;
    doc.precision = precision;
    doc.columns = {"quantity", "I", "II", "III", "IV", "V", "VI"};

    std::vector<LevelProfile> profiles;
    std::vector<std::pair<std::string, double>> hats;
    for (int type = 1; type <= 6; ++type) {
        profiles.push_back(aggregate_metric(shj_structure(type), g));
        hats.emplace_back(doc.columns[type], profiles.back().u_hat);
    }
    for (int n = 0; n <= 3; ++n) {
        std::vector<Cell> row{name + "(" + std::to_string(n) + ")"};
        for (const auto& profile : profiles)
            row.push_back(profile.u_levels[n]);
        doc.rows.push_back(std::move(row));
    }
    std::vector<Cell> total{name + "_hat"};
    for (const auto& profile : profiles)
        total.push_back(profile.u_hat);
    doc.rows.push_back(std::move(total));

    doc.footers.push_back("difficulty order (" + name + "_hat): " +
                          format_order(induced_order(hats, kOrderEpsilon)));
    return doc;
}

} // namespace

OutputDocument cmd_tables(const std::string& selector, int precision) {
    check_precision(precision);
    if (selector == "shj-min")
        return six_way_table(min_aggregator(), "u_min", precision);
    if (selector == "shj-mean")
        return six_way_table(mean_aggregator(), "u_mean", precision);
    if (selector != "sweep")
        throw RangeError("unknown table \"" + selector +
                         "\" (expected shj-min, shj-mean, or sweep)");

    OutputDocument doc;
    doc.precision = precision;
    doc.columns = {"id", "a", "alias", "u_min_hat", "u_mean_hat"};
    for (const auto& row : catalog_rows()) {
        doc.rows.push_back(
            {catalog_id(row.structure), format_structure(row.structure),
             row.alias, aggregate_metric(row.structure, min_aggregator()).u_hat,
             aggregate_metric(row.structure, mean_aggregator()).u_hat});
    }
    return doc;
}

OutputDocument cmd_fit(const std::string& metric, const std::string& csv_path,
                       const std::string& stat, double epsilon, int precision) {
    check_precision(precision);
    if (epsilon < 0.0)
        throw RangeError("epsilon " + std::to_string(epsilon) + " is negative");
    if (metric != "umin" && metric != "umean" && metric != "boolc" &&
        metric != "gist")
        throw RangeError("unknown metric \"" + metric +
                         "\" (expected umin, umean, boolc, or gist)");
    if (stat != "r2" && stat != "spearman" && stat != "order")
        throw RangeError("unknown statistic \"" + stat +
                         "\" (expected r2, spearman, or order)");

    const auto ds = load_human_csv(csv_path);
    std::vector<double> values, rates;
    std::vector<std::pair<std::string, double>> predicted, observed;
    for (const auto& obs : ds.observations) {
        const double v = metric_value(metric, obs.structure);
        values.push_back(v);
        rates.push_back(obs.error_rate);
        predicted.emplace_back(obs.id, v);
        observed.emplace_back(obs.id, obs.error_rate);
    }

    OutputDocument doc;
    doc.precision = precision;
    doc.columns = {"statistic", "value"};
    const auto add_number = [&](const std::string& key,
                                const std::optional<double>& value) {
        if (value)
            doc.rows.push_back({key, *value});
        else
            doc.rows.push_back({key, std::string("undefined")});
    };

    if (stat == "r2") {
        add_number("r_squared", r_squared(values, rates));
        add_number("pearson_r", pearson_r(values, rates));
        doc.rows.push_back(
            {std::string("n"), static_cast<std::int64_t>(values.size())});
    } else if (stat == "spearman") {
        add_number("spearman_rho", spearman_rho(values, rates));
        doc.rows.push_back(
            {std::string("n"), static_cast<std::int64_t>(values.size())});
    } else {
        const auto pred = induced_order(predicted, epsilon);
        const auto obsv = induced_order(observed, 0.0);
        const auto agreement = compare_orders(pred, obsv);
        doc.rows.push_back({std::string("exact_match"),
                            std::string(agreement.exact_match ? "true"
                                                              : "false")});
        doc.rows.push_back({std::string("concordant"),
                            static_cast<std::int64_t>(agreement.concordant)});
        doc.rows.push_back({std::string("discordant"),
                            static_cast<std::int64_t>(agreement.discordant)});
        doc.rows.push_back(
            {std::string("tie_disagreements"),
             static_cast<std::int64_t>(agreement.tie_disagreements)});
        doc.rows.push_back({std::string("both_tied"),
                            static_cast<std::int64_t>(agreement.both_tied)});
        doc.footers.push_back("predicted: " + format_order(pred));
        doc.footers.push_back("observed: " + format_order(obsv));
    }
    doc.footers.push_back("metric: " + metric + " over " + ds.label);
    return doc;
}

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const ParseError*>(&e) != nullptr)
        return kExitParse;
    if (dynamic_cast<const RangeError*>(&e) != nullptr)
        return kExitRange;
    if (dynamic_cast<const DataError*>(&e) != nullptr)
        return kExitData;
    return 1;
}

} // namespace catcomp
