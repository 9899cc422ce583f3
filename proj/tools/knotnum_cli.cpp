// knotnum: build, query and verify the knot/number classification table, and
// run the number-theoretic audits.

#include "knotnum/knotnum.h"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace {

namespace fs = std::filesystem;

struct StringDeleter {
    void operator()(char* s) const { kn_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

struct TableDeleter {
    void operator()(kn_table* t) const { kn_table_free(t); }
};
using Table = std::unique_ptr<kn_table, TableDeleter>;

void report(kn_status s) { std::cerr << "knotnum: " << kn_status_name(s) << ": " << kn_last_error() << '\n'; }

// Writes to stdout, or atomically to `path` (temp file in the same
// directory, then rename).
bool emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        std::cout.flush();
        return static_cast<bool>(std::cout);
    }
    const fs::path target(path);
    const fs::path dir = target.has_parent_path() ? target.parent_path() : fs::path(".");
    std::random_device rd;
    const fs::path tmp = dir / ("." + target.filename().string() + ".tmp" + std::to_string(rd()));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            return false;
        out << text;
        out.close();
        if (!out) {
            std::error_code ec;
            fs::remove(tmp, ec);
            return false;
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        return false;
    }
    return true;
}

std::optional<Table> build(int max_step) {
    kn_table* t = nullptr;
    if (auto s = kn_table_build(max_step, &t); s != KN_OK) {
        report(s);
        return std::nullopt;
    }
    return Table(t);
}

int step_covering(uint64_t m) {
    int n = 1;
    while (n < 64 && (uint64_t{1} << n) < m)
        ++n;
    return n;
}

struct Options {
    int max_step = 7;
    std::string format = "tsv";
    std::string out;
    std::optional<uint64_t> number;
    std::string knot;
    std::vector<std::string> inject;
    std::string claim;
    uint64_t limit = 10000;
    int audit_max_step = 20;
    unsigned threads = 1;
    double budget_secs = 0;
    bool no_timing = false;
    int jumper_step = 0;
};

int cmd_generate(const Options& o) {
    auto t = build(o.max_step);
    if (!t)
        return 2;
    char* text = nullptr;
    if (auto s = kn_table_serialize(t->get(), o.format == "json" ? KN_FORMAT_JSON : KN_FORMAT_TSV, &text);
        s != KN_OK) {
        report(s);
        return 2;
    }
    CString owned(text);
    if (!emit(text, o.out)) {
        std::cerr << "knotnum: cannot write " << (o.out.empty() ? "stdout" : o.out) << '\n';
        return 3;
    }
    return 0;
}

int cmd_query(const Options& o) {
    if (o.number) {
        const uint64_t m = *o.number;
        if (m == 2) {
            std::cout << "unassigned (reserved; related to 3_1)\n";
            return 0;
        }
        const int n = std::max(1, step_covering(m));
        if (m == 0 || n > 16) {
            std::cerr << "knotnum: " << m << " is outside positions 1.." << (uint64_t{1} << 16) << '\n';
            return 1;
        }
        auto t = build(n);
        if (!t)
            return 2;
        char* k = nullptr;
        if (auto s = kn_table_knot_at(t->get(), m, &k); s != KN_OK) {
            report(s);
            return 1;
        }
        CString owned(k);
        std::cout << k << '\n';
        return 0;
    }
    auto t = build(o.max_step);
    if (!t)
        return 2;
    uint64_t pos = 0;
    if (auto s = kn_table_position_of(t->get(), o.knot.c_str(), &pos); s != KN_OK) {
        report(s);
        return s == KN_ERR_PARSE ? 4 : 1;
    }
    std::cout << pos << '\n';
    return 0;
}

int cmd_verify(const Options& o) {
    auto t = build(o.max_step);
    if (!t)
        return 2;
    for (const auto& spec : o.inject) {
        const auto eq = spec.find('=');
        if (eq == std::string::npos) {
            std::cerr << "knotnum: --inject expects POS=KNOT, got '" << spec << "'\n";
            return 2;
        }
        uint64_t pos = 0;
        try {
            pos = std::stoull(spec.substr(0, eq));
        } catch (const std::exception&) {
            std::cerr << "knotnum: bad position in --inject '" << spec << "'\n";
            return 2;
        }
        if (auto s = kn_table_override(t->get(), pos, spec.substr(eq + 1).c_str()); s != KN_OK) {
            report(s);
            return 2;
        }
    }
    size_t mismatches = 0;
    char* text = nullptr;
    if (auto s = kn_table_verify(t->get(), &mismatches, nullptr, &text); s != KN_OK) {
        report(s);
        return 2;
    }
    CString owned(text);
    const uint64_t through = std::min<uint64_t>(kn_table_max_position(t->get()), 128);
    if (mismatches == 0) {
        std::cout << through << "-position fixture check: PASS\n";
        return 0;
    }
    std::cout << "position\tfield\texpected\tactual\n" << text;
    std::cout << through << "-position fixture check: FAIL (" << mismatches << " mismatch"
              << (mismatches == 1 ? "" : "es") << ")\n";
    return 1;
}

int cmd_audit(const Options& o) {
    kn_audit_options a{};
    a.limit = o.limit;
    a.max_step = o.audit_max_step;
    a.threads = o.threads;
    a.budget_secs = o.budget_secs;
    char* json = nullptr;
    kn_verdict v = KN_VERDICT_FAIL;
    if (auto s = kn_audit(o.claim.c_str(), &a, o.no_timing ? 0 : 1, &json, &v); s != KN_OK) {
        report(s);
        return 2;
    }
    CString owned(json);
    if (!emit(std::string(json) + "\n", o.out)) {
        std::cerr << "knotnum: cannot write " << o.out << '\n';
        return 3;
    }
    switch (v) {
    case KN_VERDICT_PASS:
        return 0;
    case KN_VERDICT_FAIL:
        return 1;
    case KN_VERDICT_TRUNCATED:
        return 5;
    }
    return 1;
}

int cmd_jumpers(const Options& o) {
    char* json = nullptr;
    if (auto s = kn_jumpers_json(o.jumper_step, &json); s != KN_OK) {
        report(s);
        return 2;
    }
    CString owned(json);
    std::cout << json << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Knot/number classification table and number-theoretic audits"};
    app.require_subcommand(1);
    Options o;

    auto* gen = app.add_subcommand("generate", "Build the table and print it");
    gen->add_option("--max-step", o.max_step, "Last dyadic step (positions up to 2^N)")
        ->check(CLI::Range(1, 16));
    gen->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"tsv", "json"}));
    gen->add_option("--out", o.out, "Write to this file instead of stdout");

    auto* query = app.add_subcommand("query", "Look up the knot at a number, or the number of a knot");
    auto* qn = query->add_option("--number", o.number, "Position to look up");
    auto* qk = query->add_option("--knot", o.knot, "Knot notation to look up, e.g. \"3_1*4_1\"");
    qn->excludes(qk);
    query->add_option("--max-step", o.max_step, "Table size for --knot lookups")->check(CLI::Range(1, 16));

    auto* verify = app.add_subcommand("verify", "Compare the built table with the reference table");
    verify->add_option("--max-step", o.max_step, "Last dyadic step")->check(CLI::Range(1, 16));
    verify->add_option("--inject", o.inject, "Overwrite a position before checking (POS=KNOT)");

    auto* audit = app.add_subcommand("audit", "Empirical check of a number-theoretic claim");
    audit->add_option("claim", o.claim, "goldbach | twin-steps | strong-twin")
        ->required()
        ->check(CLI::IsMember({"goldbach", "twin-steps", "strong-twin"}));
    audit->add_option("--limit", o.limit, "Largest even number checked")->check(CLI::Range(6ULL, 1ULL << 34));
    audit->add_option("--max-step", o.audit_max_step, "Last step for twin-steps")->check(CLI::Range(3, 32));
    audit->add_option("--threads", o.threads, "Worker threads")->check(CLI::Range(1u, 256u));
    audit->add_option("--budget-secs", o.budget_secs, "Wall-clock budget (0 = none)")->check(CLI::NonNegativeNumber);
    audit->add_option("--out", o.out, "Write the JSON report to this file");
    audit->add_flag("--no-timing", o.no_timing, "Omit elapsed_ms from the report");

    auto* jump = app.add_subcommand("jumpers", "Print the jumping-over numbers of a step as JSON");
    jump->add_option("--step", o.jumper_step, "Step index")->required()->check(CLI::Range(2, 30));

    CLI11_PARSE(app, argc, argv);

    if (query->parsed() && !o.number && o.knot.empty()) {
        std::cerr << "knotnum: query needs --number or --knot\n";
        return 2;
    }

    if (gen->parsed())
        return cmd_generate(o);
    if (query->parsed())
        return cmd_query(o);
    if (verify->parsed())
        return cmd_verify(o);
    if (audit->parsed())
        return cmd_audit(o);
    return cmd_jumpers(o);
}
