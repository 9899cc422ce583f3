#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(KNOTNUM_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p)
        return r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0)
        r.out.append(buf, n);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::size_t count_lines(const std::string& s) {
    std::size_t n = 0;
    for (char c : s)
        n += c == '\n';
    return n;
}

} // namespace

TEST(Cli, GenerateTsv) {
    const auto r = run("generate --max-step 5 --format tsv");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(count_lines(r.out), 32u);
    EXPECT_NE(r.out.find("\n18\t3_1x4_1\t\n"), std::string::npos);
    EXPECT_EQ(run("generate --max-step 1").out, "position\tknot\treplaced\n1\t3_1\t\n");
}

TEST(Cli, GenerateJson) {
    const auto r = run("generate --max-step 7 --format json");
    EXPECT_EQ(r.code, 0);
    std::size_t entries = 0;
    for (std::size_t at = r.out.find("\"position\""); at != std::string::npos; at = r.out.find("\"position\"", at + 1))
        ++entries;
    EXPECT_EQ(entries, 127u);
    EXPECT_NE(r.out.find("\"position\": 127,\n    \"knot\": \"8_17\""), std::string::npos);
}

TEST(Cli, GenerateDeterministic) {
    const auto a = run("generate --max-step 7");
    const auto b = run("generate --max-step 7");
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, GenerateOutFile) {
    const auto dir = std::filesystem::temp_directory_path() / "knotnum_cli_test";
    std::filesystem::create_directories(dir);
    const auto path = dir / "table.tsv";
    std::filesystem::remove(path);
    EXPECT_EQ(run("generate --max-step 4 --out " + path.string()).code, 0);
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_EQ(ss.str(), run("generate --max-step 4").out);
    std::size_t files = 0;
    for ([[maybe_unused]] const auto& e : std::filesystem::directory_iterator(dir))
        ++files;
    EXPECT_EQ(files, 1u);
    EXPECT_EQ(run("generate --max-step 4 --out /nonexistent-dir/x.tsv").code, 3);
    std::filesystem::remove_all(dir);
}

TEST(Cli, GenerateRejectsBadStep) {
    EXPECT_NE(run("generate --max-step 17").code, 0);
    EXPECT_NE(run("generate --format xml").code, 0);
}

TEST(Cli, Query) {
    auto r = run("query --number 9");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "3_1x3_1\n");
    r = run("query --knot \"3_1*4_1\"");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "6\n");
    r = run("query --number 2");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "unassigned (reserved; related to 3_1)\n");
    const auto table = run("generate --max-step 10").out;
    const auto row = table.find("\n1000\t");
    ASSERT_NE(row, std::string::npos);
    const auto knot = table.substr(row + 6, table.find('\t', row + 6) - row - 6);
    EXPECT_EQ(run("query --number 1000").out, knot + "\n");
    EXPECT_EQ(run("query --knot \"3_1**4_1\"").code, 4);
    EXPECT_EQ(run("query --knot \"8_21*8_21\"").code, 1);
    EXPECT_EQ(run("query --number 200000").code, 1);
}

TEST(Cli, Verify) {
    auto r = run("verify");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "128-position fixture check: PASS\n");
    r = run("verify --max-step 4");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "16-position fixture check: PASS\n");
    r = run("verify --inject \"45=3_1*3_1*3_1*5_1\"");
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("45\tknot\t4_1x4_1\t3_1*3_1*3_1*5_1\n"), std::string::npos);
    EXPECT_NE(r.out.find("FAIL (1 mismatch)"), std::string::npos);
}

TEST(Cli, Audit) {
    auto r = run("audit strong-twin --limit 10000 --no-timing");
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("\"counterexamples\": [\n    94,"), std::string::npos);
    EXPECT_EQ(run("audit goldbach --limit 100000").code, 0);
    EXPECT_EQ(run("audit twin-steps --max-step 20").code, 0);
    EXPECT_EQ(run("audit goldbach --limit 20000000 --budget-secs 0.000001").code, 5);
    EXPECT_NE(run("audit collatz").code, 0);
}

TEST(Cli, AuditThreadInvariant) {
    const auto a = run("audit goldbach --limit 200000 --no-timing --threads 1");
    const auto b = run("audit goldbach --limit 200000 --no-timing --threads 6");
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, Jumpers) {
    const auto r = run("jumpers --step 6");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "[45,50,51,54,55,57,60,63]\n");
}
