#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jacring/report.hpp"

int main(int argc, char** argv) {
    CLI::App app{
        "jacring: exact graded Jacobian-ring invariants of projective hypersurfaces "
        "with ADE singularities"};
    app.require_subcommand(1);

    std::vector<std::string> paths;
    jacring::CommandOptions opts;
    std::string range_text;
    int degree = 0;
    bool has_degree = false;

    auto add_common = [&](CLI::App* sub, bool multi_instance) {
        auto* pos = sub->add_option("instance", paths, "instance file (JSON)");
        pos->required();
        if (!multi_instance) pos->expected(1);
        sub->add_option("--degree", degree, "single degree m")
            ->each([&](const std::string&) { has_degree = true; });
        sub->add_option("--degree-range", range_text, "degree range a..b");
        sub->add_option("--nmax", [&](const CLI::results_t& r) {
            opts.nmax = std::stoi(r[0]);
            return true;
        }, "jet truncation cutoff");
        sub->add_option("--budget", [&](const CLI::results_t& r) {
            opts.budget = std::stol(r[0]);
            return true;
        }, "largest allowed monomial basis");
        sub->add_option("--json", opts.json_path, "write the machine-readable report here");
        sub->add_flag("--strict-parity", opts.strict_parity,
                      "reject odd n for algebraic commands instead of warning");
    };

    const std::vector<std::pair<std::string, std::string>> commands = {
        {"analyze", "singular-point records, total Tjurina number, completeness certificate"},
        {"hilbert", "graded dimensions of J, I, A/J, I/J over a degree range"},
        {"duality", "symmetry table dim (I/J)_m vs dim (I/J)_{sigma-m}"},
        {"hodge", "Hodge-filtration graded dimensions"},
        {"torelli", "infinitesimal Torelli injectivity test on the equisingular stratum"},
        {"koszul", "Koszul cohomology of the partials and the evaluation identity"},
        {"pvalue", "h^1 sweep of the singular ideal sheaf and its p-value"},
    };
    for (const auto& [name, desc] : commands)
        add_common(app.add_subcommand(name, desc), name == "pvalue");

    CLI11_PARSE(app, argc, argv);

    if (!range_text.empty()) {
        const auto sep = range_text.find("..");
        if (sep == std::string::npos) {
            std::cerr << "error: --degree-range expects a..b\n";
            return 1;
        }
        try {
            opts.degree_range = {std::stoi(range_text.substr(0, sep)),
                                 std::stoi(range_text.substr(sep + 2))};
        } catch (const std::exception&) {
            std::cerr << "error: --degree-range expects a..b\n";
            return 1;
        }
    }
    if (has_degree) opts.degree = degree;

    const std::string command = app.get_subcommands().front()->get_name();
    return jacring::run_command(command, paths, opts, std::cout);
}
