#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "vfg/report.hpp"

using namespace vfg;

namespace {

RunConfig fast_config() {
    RunConfig cfg;
    cfg.suites = {Suite::exponent, Suite::theorem, Suite::witnesses};
    cfg.sample_count = 500;
    cfg.seed = 42;
    return cfg;
}

int run_verify(const std::string& args) {
    std::string cmd = std::string(VERIFY_BIN) + " " + args + " >/dev/null 2>/dev/null";
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

}  // namespace

TEST_CASE("suite name round-trip and config validation") {
    for (const char* s : {"structure", "exponent", "theorem", "lemmas", "witnesses"})
        CHECK(std::string(to_string(parse_suite(s))) == s);
    CHECK_THROWS_AS(parse_suite("bogus"), std::invalid_argument);

    RunConfig bad;
    bad.max_exhaustive_order = 24;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = RunConfig{};
    bad.threads = 0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("a fast run passes every enabled check") {
    VerificationReport report = run(fast_config());
    CHECK(!report.rows.empty());
    CHECK(report.rows.size() == report.methods.size());
    CHECK(report.all_passed());
    // rows sorted by (order, label)
    for (std::size_t i = 1; i < report.rows.size(); ++i) {
        auto ka = std::pair(report.rows[i - 1].order, report.rows[i - 1].group_label);
        auto kb = std::pair(report.rows[i].order, report.rows[i].group_label);
        CHECK(ka < kb);
    }
}

TEST_CASE("reports are byte-identical across runs and thread counts") {
    RunConfig one = fast_config();
    RunConfig four = fast_config();
    four.threads = 4;
    std::string a = render_tsv(run(one), one);
    std::string b = render_tsv(run(one), one);
    std::string c = render_tsv(run(four), four);
    CHECK(a == b);
    CHECK(a == c);  // thread count must not leak into the report
}

TEST_CASE("empty suite selection produces a header-only report") {
    RunConfig cfg;
    cfg.suites = {};
    VerificationReport report = run(cfg);
    CHECK(report.rows.empty());
    CHECK(report.checks.empty());
    std::string text = render_tsv(report, cfg);
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) CHECK(line.rfind("# ", 0) == 0);
}

TEST_CASE("jsonl output is one valid object per line mirroring the TSV fields") {
    RunConfig cfg = fast_config();
    cfg.format = ReportFormat::jsonl;
    VerificationReport report = run(cfg);
    std::istringstream in(render_jsonl(report, cfg));
    std::string line;
    std::size_t rows = 0, checks = 0, headers = 0;
    while (std::getline(in, line)) {
        nlohmann::json j = nlohmann::json::parse(line);  // throws on malformed output
        std::string kind = j.at("kind");
        if (kind == "row") {
            ++rows;
            CHECK(j.contains("label"));
            CHECK(j.contains("predicted_exp4"));
            CHECK(j.contains("exponent"));
            CHECK(j.contains("agreement"));
        } else if (kind == "check") {
            ++checks;
            CHECK(j.contains("status"));
        } else {
            CHECK(kind == "header");
            ++headers;
        }
    }
    CHECK(headers == 1);
    CHECK(rows == report.rows.size());
    CHECK(checks == report.checks.size());
}

TEST_CASE("extra catalog files join the run") {
    // a presentation file for C4 x C2
    std::string path = "/tmp/vfg_extra_cat.pres";
    {
        std::ofstream out(path);
        out << "gens 2\n"
               "g1^4\n"
               "g2^2\n"
               "[g1,g2]\n";
    }
    RunConfig cfg;
    cfg.suites = {Suite::exponent, Suite::theorem};
    cfg.catalog_paths = {path};
    VerificationReport report = run(cfg);
    bool found = false;
    for (const PredicateVerdict& v : report.rows)
        if (v.group_label == "vfg_extra_cat") {
            found = true;
            CHECK(v.order == 8);
            CHECK(*v.computed_exponent == 4);
            CHECK(*v.agreement);
        }
    CHECK(found);
    std::remove(path.c_str());
}

TEST_CASE("cli exit codes follow the contract") {
    SUBCASE("clean pass is exit 0") {
        CHECK(run_verify("--suites witnesses") == 0);
    }
    SUBCASE("missing catalog file is exit 2") {
        CHECK(run_verify("--suites exponent --catalog /tmp/vfg_no_such_file.tbl") == 2);
    }
    SUBCASE("malformed catalog file is exit 2") {
        std::string path = "/tmp/vfg_malformed.tbl";
        {
            std::ofstream out(path);
            out << "order 2\n0 1\n1 q\n";
        }
        CHECK(run_verify("--suites exponent --catalog " + path) == 2);
        std::remove(path.c_str());
    }
    SUBCASE("invalid flag value is rejected") {
        CHECK(run_verify("--max-exhaustive-order 24") != 0);
    }
    SUBCASE("unwritable output path is exit 2") {
        CHECK(run_verify("--suites witnesses --out /no/such/dir/report.tsv") == 2);
    }
}

TEST_CASE("cli writes byte-identical reports for identical config and seed") {
    std::string p1 = "/tmp/vfg_rep1.tsv", p2 = "/tmp/vfg_rep2.tsv";
    REQUIRE(run_verify("--suites exponent,theorem --samples 300 --seed 9 --out " + p1) == 0);
    REQUIRE(run_verify("--suites exponent,theorem --samples 300 --seed 9 --threads 3 --out " +
                       p2) == 0);
    std::string a = slurp(p1), b = slurp(p2);
    CHECK(!a.empty());
    CHECK(a == b);
    std::remove(p1.c_str());
    std::remove(p2.c_str());
}
