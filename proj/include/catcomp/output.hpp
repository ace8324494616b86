#pragma once
// Tabular output shared by the CLI commands. One document renders to TSV
// (display-rounded numbers) or to a structured JSON object (full-precision
// numbers plus the display precision), so both formats carry identical
// underlying values and rounding never feeds back into computation.

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace catcomp {

enum class DocFormat { Tsv, Json };

using Cell = std::variant<std::string, double, std::int64_t>;

struct OutputDocument {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows; // each row matches columns
    std::vector<std::string> footers;    // order lines and similar trailers
    int precision = 2;                   // display digits for doubles

    std::string to_tsv() const;
    std::string to_json() const;
    std::string render(DocFormat fmt) const;
};

// Banker's rounding (round half to even) at the given number of decimals.
double round_half_even(double x, int digits);

// Fixed-point text of round_half_even(x, digits); "-0.00" normalizes to "0.00".
std::string format_number(double x, int digits);

} // namespace catcomp
