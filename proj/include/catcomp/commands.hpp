#pragma once
// CLI command implementations, kept callable from tests. The thin main()
// only parses argv and maps thrown errors onto exit codes.

#include <optional>
#include <string>

#include "catcomp/output.hpp"

namespace catcomp {

// Exit codes: one per error class, stable across commands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2; // malformed structure text
inline constexpr int kExitRange = 3; // argument outside its domain
inline constexpr int kExitData = 4;  // data file problems

// metric <structure> [--dims D] [--metric umin|umean|boolc|gist|all]
//        [--per-level] — one key/value/detail row per requested metric.
OutputDocument cmd_metric(const std::string& structure_text, std::optional<int> dims,
                          const std::string& metric, bool per_level, int precision);

// enumerate --dims D --p P — one row per equivalence class, ascending
// canonical order: id, canonical A set, u_min_hat, u_mean_hat, boolc,
// phi_hat.
OutputDocument cmd_enumerate(int dims, int p, int precision);

// tables shj-min | shj-mean | sweep — the reference tables, and for the
// six-way tables the induced difficulty order as a footer.
OutputDocument cmd_tables(const std::string& selector, int precision);

// fit --metric M --data FILE --stat r2|spearman|order [--epsilon E]
OutputDocument cmd_fit(const std::string& metric, const std::string& csv_path,
                       const std::string& stat, double epsilon, int precision);

// Maps a thrown exception to the exit codes above (unknown -> 1).
int exit_code_for(const std::exception& e);

} // namespace catcomp
