#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "vfg/report.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Verification harness for unit-group exponents of 2-group algebras over GF(2)"};

    std::vector<std::string> suite_names = {"structure", "exponent", "theorem", "lemmas",
                                            "witnesses"};
    vfg::RunConfig config;
    std::string format = "tsv";

    app.add_option("--suites", suite_names,
                   "Suites to run (structure, exponent, theorem, lemmas, witnesses)")
        ->delimiter(',')
        ->envname("VFG_SUITES");
    app.add_option("--max-exhaustive-order", config.max_exhaustive_order,
                   "Largest group order enumerated exhaustively (8, 16 or 32; 32 is heavy mode)")
        ->check(CLI::IsMember({8, 16, 32}))
        ->envname("VFG_MAX_EXHAUSTIVE_ORDER");
    app.add_option("--samples", config.sample_count,
                   "Random samples per group beyond the exhaustive cap")
        ->envname("VFG_SAMPLES");
    app.add_option("--seed", config.seed, "Seed for all sampled computations")
        ->envname("VFG_SEED");
    app.add_option("--threads", config.threads, "Worker threads")
        ->check(CLI::PositiveNumber)
        ->envname("VFG_THREADS");
    app.add_option("--catalog", config.catalog_paths,
                   "Extra catalog file (Cayley table or presentation); repeatable")
        ->envname("VFG_CATALOG");
    app.add_option("--out", config.output_path, "Report path (default: stdout)")
        ->envname("VFG_OUT");
    app.add_option("--format", format, "Report format: tsv or jsonl")
        ->check(CLI::IsMember({"tsv", "jsonl"}))
        ->envname("VFG_FORMAT");

    CLI11_PARSE(app, argc, argv);

    config.suites.clear();
    try {
        for (const std::string& name : suite_names) config.suites.push_back(vfg::parse_suite(name));
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    config.format = format == "jsonl" ? vfg::ReportFormat::jsonl : vfg::ReportFormat::tsv;

    return vfg::run_and_emit(config, std::cout, std::cerr);
}
