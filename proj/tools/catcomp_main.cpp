// Command-line front end: argument parsing and exit-code mapping only; all
// behavior lives in the library so it stays testable.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "catcomp/commands.hpp"
#include "catcomp/error.hpp"

namespace {

struct CommonFlags {
    std::string format = "tsv";
    int precision = 2;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--format", flags.format, "output format")
        ->check(CLI::IsMember({"tsv", "json"}))
        ->capture_default_str();
    cmd->add_option("--precision", flags.precision,
                    "display digits for numbers")
        ->capture_default_str();
}

catcomp::DocFormat doc_format(const CommonFlags& flags) {
    return flags.format == "json" ? catcomp::DocFormat::Json
                                  : catcomp::DocFormat::Tsv;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"complexity metrics for Boolean category structures"};
    app.require_subcommand(1);

    // metric
    auto* metric_cmd = app.add_subcommand(
        "metric", "metrics of one structure, e.g. metric \"000,001,110,111\"");
    std::string structure_text;
    std::optional<int> dims;
    std::string metric_name = "all";
    bool per_level = false;
    CommonFlags metric_flags;
    metric_cmd->add_option("structure", structure_text,
                           "stimulus list, e.g. \"{000,001}\" or \"000|001\"")
        ->required();
    metric_cmd->add_option("--dims", dims,
                           "dimension count (default: first token's length)");
    metric_cmd->add_option("--metric", metric_name,
                           "umin, umean, boolc, gist, or all")
        ->capture_default_str();
    metric_cmd->add_flag("--per-level", per_level,
                         "also list the per-level uncertainties");
    add_common(metric_cmd, metric_flags);

    // enumerate
    auto* enum_cmd = app.add_subcommand(
        "enumerate", "all equivalence classes with |A| = P over D dimensions");
    int enum_dims = 0;
    int enum_p = 0;
    CommonFlags enum_flags;
    enum_cmd->add_option("--dims", enum_dims, "dimension count")->required();
    enum_cmd->add_option("--p", enum_p, "category A size")->required();
    add_common(enum_cmd, enum_flags);

    // tables
    auto* tables_cmd =
        app.add_subcommand("tables", "reference tables: shj-min, shj-mean, sweep");
    std::string selector;
    CommonFlags tables_flags;
    tables_cmd->add_option("table", selector, "shj-min, shj-mean, or sweep")
        ->required();
    add_common(tables_cmd, tables_flags);

    // fit
    auto* fit_cmd = app.add_subcommand(
        "fit", "compare a metric against observed error rates from a CSV file");
    std::string fit_metric = "umin";
    std::string fit_data;
    std::string fit_stat = "r2";
    double fit_epsilon = 1e-9;
    CommonFlags fit_flags;
    fit_cmd->add_option("--metric", fit_metric, "umin, umean, boolc, or gist")
        ->capture_default_str();
    fit_cmd->add_option("--data", fit_data,
                        "CSV file with a structure,error_rate header")
        ->required();
    fit_cmd->add_option("--stat", fit_stat, "r2, spearman, or order")
        ->capture_default_str();
    fit_cmd->add_option("--epsilon", fit_epsilon,
                        "tie threshold for the predicted order")
        ->capture_default_str();
    add_common(fit_cmd, fit_flags);

    CLI11_PARSE(app, argc, argv);

    try {
        catcomp::OutputDocument doc;
        CommonFlags flags;
        if (metric_cmd->parsed()) {
            doc = catcomp::cmd_metric(structure_text, dims, metric_name,
                                      per_level, metric_flags.precision);
            flags = metric_flags;
        } else if (enum_cmd->parsed()) {
            doc = catcomp::cmd_enumerate(enum_dims, enum_p, enum_flags.precision);
            flags = enum_flags;
        } else if (tables_cmd->parsed()) {
            doc = catcomp::cmd_tables(selector, tables_flags.precision);
            flags = tables_flags;
        } else {
            doc = catcomp::cmd_fit(fit_metric, fit_data, fit_stat, fit_epsilon,
                                   fit_flags.precision);
            flags = fit_flags;
        }
        std::cout << doc.render(doc_format(flags));
        return catcomp::kExitOk;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return catcomp::exit_code_for(e);
    }
}
