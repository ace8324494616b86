#include "catcomp/output.hpp"

#include <cmath>
#include <cstdio>

#include "json.hpp"

namespace catcomp {

double round_half_even(double x, int digits) {
    double scale = 1.0;
    for (int i = 0; i < digits; ++i)
        scale *= 10.0;
    // nearbyint honors the default to-nearest-even rounding mode
    return std::nearbyint(x * scale) / scale;
}

std::string format_number(double x, int digits) {
    double v = round_half_even(x, digits);
    if (v == 0.0)
        v = 0.0; // normalize -0
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
    return buf;
}

std::string OutputDocument::to_tsv() const {
    std::string out;
    for (size_t c = 0; c < columns.size(); ++c) {
        if (c > 0)
            out += '\t';
        out += columns[c];
    }
    out += '\n';
    for (const auto& row : rows) {
        for (size_t c = 0; c < row.size(); ++c) {
            if (c > 0)
                out += '\t';
            if (std::holds_alternative<std::string>(row[c]))
                out += std::get<std::string>(row[c]);
            else if (std::holds_alternative<double>(row[c]))
                out += format_number(std::get<double>(row[c]), precision);
            else
                out += std::to_string(std::get<std::int64_t>(row[c]));
        }
        out += '\n';
    }
    for (const auto& footer : footers)
        out += "# " + footer + "\n";
    return out;
}

std::string OutputDocument::to_json() const {
    nlohmann::json j;
    j["columns"] = columns;
    j["precision"] = precision;
    j["rows"] = nlohmann::json::array();
    for (const auto& row : rows) {
        nlohmann::json obj = nlohmann::json::object();
        for (size_t c = 0; c < row.size() && c < columns.size(); ++c) {
            if (std::holds_alternative<std::string>(row[c]))
                obj[columns[c]] = std::get<std::string>(row[c]);
            else if (std::holds_alternative<double>(row[c]))
                obj[columns[c]] = std::get<double>(row[c]);
            else
                obj[columns[c]] = std::get<std::int64_t>(row[c]);
        }
        j["rows"].push_back(std::move(obj));
    }
    j["footers"] = footers;
    return j.dump(2) + "\n";
}

std::string OutputDocument::render(DocFormat fmt) const {
    return fmt == DocFormat::Json ? to_json() : to_tsv();
}

} // namespace catcomp
