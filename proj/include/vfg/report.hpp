#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "vfg/exponent.hpp"
#include "vfg/theorem.hpp"

namespace vfg {

inline constexpr const char* kToolName = "vfg-verify";
inline constexpr const char* kToolVersion = "0.1.0";

enum class Suite { structure, exponent, theorem, lemmas, witnesses };
const char* to_string(Suite s);
Suite parse_suite(const std::string& name);

enum class ReportFormat { tsv, jsonl };

struct RunConfig {
    std::vector<Suite> suites = {Suite::structure, Suite::exponent, Suite::theorem,
                                 Suite::lemmas, Suite::witnesses};
    int max_exhaustive_order = 16;  // 32 enables heavy mode
    std::uint64_t sample_count = 10000;
    std::uint64_t seed = 1;
    int threads = 1;
    std::vector<std::string> catalog_paths;
    std::string output_path;  // empty = stdout
    ReportFormat format = ReportFormat::tsv;

    bool has_suite(Suite s) const;
    void validate() const;  // throws std::invalid_argument
};

struct ReportCheck {
    std::string suite;
    std::string name;
    std::string status;  // "pass" | "fail" | "skip"
    std::string detail;
};

struct VerificationReport {
    std::vector<PredicateVerdict> rows;  // sorted by (order, label)
    std::vector<std::string> methods;    // per row: "exhaustive" | "sampled" | "-"
    std::vector<ReportCheck> checks;

    bool all_passed() const;
};

// Runs the enabled suites over the builtin catalog plus any files named in
// catalog_paths. Deterministic for fixed config and seed, independent of the
// thread count. Throws ParseError/ValidationError on bad catalog files and
// AnomalyError when a guaranteed witness cannot be found.
VerificationReport run(const RunConfig& config);

// Byte-deterministic renderings. Thread count and timing are deliberately
// absent so reports compare equal across runs.
std::string render(const VerificationReport& report, const RunConfig& config);
std::string render_tsv(const VerificationReport& report, const RunConfig& config);
std::string render_jsonl(const VerificationReport& report, const RunConfig& config);

// Full driver: run, write to config.output_path (or stdout), map errors to the
// process exit contract: 0 all checks pass, 1 check failure, 2 file error,
// 3 internal anomaly. Diagnostics go to `diag`.
int run_and_emit(const RunConfig& config, std::ostream& out, std::ostream& diag);

}  // namespace vfg
