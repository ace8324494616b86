#include "catcomp/stats.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>

#include "catcomp/catalog.hpp"

namespace catcomp {

OrderedPartition induced_order(
    const std::vector<std::pair<std::string, double>>& values, double epsilon) {
    if (epsilon < 0.0)
        throw RangeError("epsilon " + std::to_string(epsilon) + " is negative");
    OrderedPartition partition;
    partition.epsilon = epsilon;
    auto sorted = values;
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) {
                  return a.second != b.second ? a.second < b.second
                                              : a.first < b.first;
              });
    for (size_t i = 0; i < sorted.size(); ++i) {
        const bool chained =
            i > 0 && sorted[i].second - sorted[i - 1].second <= epsilon;
        if (!chained)
            partition.groups.emplace_back();
        partition.groups.back().push_back(sorted[i].first);
    }
    for (auto& group : partition.groups)
        std::sort(group.begin(), group.end());
    return partition;
}

std::string format_order(const OrderedPartition& p) {
    std::string out;
    for (size_t g = 0; g < p.groups.size(); ++g) {
        if (g > 0)
            out += " < ";
        if (p.groups[g].size() == 1) {
            out += p.groups[g][0];
            continue;
        }
        out += '{';
        for (size_t i = 0; i < p.groups[g].size(); ++i) {
            if (i > 0)
                out += ',';
            out += p.groups[g][i];
        }
        out += '}';
    }
    return out;
}

std::vector<double> fractional_ranks(const std::vector<double>& xs) {
    const size_t n = xs.size();
    std::vector<size_t> idx(n);
    std::iota(idx.begin(), idx.end(), size_t{0});
    std::sort(idx.begin(), idx.end(),
              [&](size_t a, size_t b) { return xs[a] < xs[b]; });
    std::vector<double> ranks(n, 0.0);
    size_t i = 0;
    while (i < n) {
        size_t j = i;
        while (j + 1 < n && xs[idx[j + 1]] == xs[idx[i]])
            ++j;
        // positions i..j (0-based) share the average of ranks i+1..j+1
        const double shared = (static_cast<double>(i + 1) +
                               static_cast<double>(j + 1)) /
                              2.0;
        for (size_t k = i; k <= j; ++k)
            ranks[idx[k]] = shared;
        i = j + 1;
    }
    return ranks;
}

std::optional<double> pearson_r(const std::vector<double>& xs,
                                const std::vector<double>& ys) {
    if (xs.size() != ys.size())
        throw RangeError("series lengths differ: " + std::to_string(xs.size()) +
                         " vs " + std::to_string(ys.size()));
    const size_t n = xs.size();
    if (n < 2)
        throw RangeError("need at least two points, got " + std::to_string(n));
    const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
    const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (size_t i = 0; i < n; ++i) {
        const double dx = xs[i] - mx;
        const double dy = ys[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0)
        return std::nullopt;
    return sxy / std::sqrt(sxx * syy);
}

std::optional<double> spearman_rho(const std::vector<double>& xs,
                                   const std::vector<double>& ys) {
    if (xs.size() != ys.size())
        throw RangeError("series lengths differ: " + std::to_string(xs.size()) +
                         " vs " + std::to_string(ys.size()));
    if (xs.size() < 2)
        throw RangeError("need at least two points, got " +
                         std::to_string(xs.size()));
    return pearson_r(fractional_ranks(xs), fractional_ranks(ys));
}

std::optional<double> r_squared(const std::vector<double>& metric,
                                const std::vector<double>& error_rates) {
    const auto r = pearson_r(metric, error_rates);
    if (!r)
        return std::nullopt;
    return *r * *r;
}

namespace {

int group_of(const OrderedPartition& p, const std::string& id) {
    for (size_t g = 0; g < p.groups.size(); ++g)
        for (const auto& member : p.groups[g])
            if (member == id)
                return static_cast<int>(g);
    return -1;
}

std::vector<std::string> all_ids(const OrderedPartition& p) {
    std::vector<std::string> ids;
    for (const auto& group : p.groups)
        ids.insert(ids.end(), group.begin(), group.end());
    std::sort(ids.begin(), ids.end());
    return ids;
}

} // namespace

OrderAgreement compare_orders(const OrderedPartition& predicted,
                              const OrderedPartition& observed) {
    const auto ids = all_ids(predicted);
    if (ids != all_ids(observed))
        throw RangeError("the two orders rank different identifier sets");
    OrderAgreement agreement;
    for (size_t i = 0; i < ids.size(); ++i) {
        for (size_t j = i + 1; j < ids.size(); ++j) {
            const int pa = group_of(predicted, ids[i]);
            const int pb = group_of(predicted, ids[j]);
            const int oa = group_of(observed, ids[i]);
            const int ob = group_of(observed, ids[j]);
            const bool ptied = pa == pb;
            const bool otied = oa == ob;
            if (ptied && otied)
                ++agreement.both_tied;
            else if (ptied != otied)
                ++agreement.tie_disagreements;
            else if ((pa < pb) == (oa < ob))
                ++agreement.concordant;
            else
                ++agreement.discordant;
        }
    }
    agreement.exact_match = predicted.groups == observed.groups;
    return agreement;
}

namespace {

std::string trim(const std::string& s) {
    size_t begin = 0, end = s.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(s[begin])))
        ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1])))
        --end;
    return s.substr(begin, end - begin);
}

bool roman_alias_like(const std::string& s) {
    if (s.empty())
        return false;
    for (char c : s)
        if (c != 'I' && c != 'V' && c != 'X')
            return false;
    return true;
}

[[noreturn]] void fail(const std::string& label, size_t line,
                       const std::string& message) {
    throw DataError(label + ":" + std::to_string(line) + ": " + message);
}

} // namespace

HumanDataset parse_human_csv(std::istream& in, const std::string& label) {
    HumanDataset ds;
    ds.label = label;
    std::string line;
    size_t lineno = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (trim(line).empty())
            continue;
        if (!header_seen) {
            if (trim(line) != "structure,error_rate")
                fail(label, lineno,
                     "expected header \"structure,error_rate\", got \"" + line +
                         "\"");
            header_seen = true;
            continue;
        }
        const size_t comma = line.rfind(',');
        if (comma == std::string::npos)
            fail(label, lineno, "expected two comma-separated fields");
        const std::string structure_field = trim(line.substr(0, comma));
        const std::string rate_field = trim(line.substr(comma + 1));
        if (structure_field.empty())
            fail(label, lineno, "structure field is empty");
        if (rate_field.empty())
            fail(label, lineno, "error_rate field is empty");

        double rate = 0.0;
        try {
            size_t used = 0;
            rate = std::stod(rate_field, &used);
            if (used != rate_field.size())
                fail(label, lineno,
                     "error_rate \"" + rate_field + "\" is not a number");
        } catch (const DataError&) {
            throw;
        } catch (const std::exception&) {
            fail(label, lineno,
                 "error_rate \"" + rate_field + "\" is not a number");
        }
        if (!(rate >= 0.0 && rate <= 1.0))
            fail(label, lineno, "error_rate " + rate_field +
                                    " is outside [0, 1]");

        HumanObservation obs{structure_field,
                             CategoryStructure(1, {Stimulus{0}}), rate};
        try {
            if (structure_field.find('[') != std::string::npos ||
                roman_alias_like(structure_field))
                obs.structure = resolve_structure_id(structure_field);
            else
                obs.structure = parse_structure(structure_field);
        } catch (const Error& e) {
            fail(label, lineno, e.what());
        }

        for (const auto& prev : ds.observations)
            if (prev.structure == obs.structure)
                fail(label, lineno, "structure \"" + structure_field +
                                        "\" duplicates an earlier row");
        ds.observations.push_back(std::move(obs));
    }
    if (!header_seen)
        throw DataError(label + ": the file is empty");
    if (ds.observations.empty())
        throw DataError(label + ": no data rows after the header");
    return ds;
}

HumanDataset load_human_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw DataError(path + ": cannot open the file");
    return parse_human_csv(in, path);
}

} // namespace catcomp
