#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "paircount/cli.hpp"
#include "paircount/counting.hpp"

using namespace paircount;

namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int status = cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

std::size_t line_count(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST(Cli, CountExamples) {
    EXPECT_EQ(run({"count", "--n", "8", "--k", "2", "--m", "2", "--circular"}).out, "36\n");
    EXPECT_EQ(run({"count", "--n", "5", "--k", "1", "--m", "1", "--circular"}).out, "0\n");
    EXPECT_EQ(run({"count", "--n", "8", "--k", "2", "--m", "2"}).out, "9\n");
    const auto r = run({"count", "--n", "500", "--k", "120", "--m", "80"});
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, to_decimal(z_auto(500, 120, 80)) + "\n");
}

TEST(Cli, EveryMethodPrintsTheSameValue) {
    for (int n = 1; n <= 10; ++n) {
        for (int k = 0; k <= n; ++k) {
            for (int m = 0; m <= n; ++m) {
                const std::vector<std::string> base{"count", "--n", std::to_string(n), "--k", std::to_string(k),
                                                    "--m", std::to_string(m)};
                const auto expected = run(base).out;
                for (const char* method : {"oracle", "split", "first-one", "reduce", "closed"}) {
                    if (std::string(method) == "closed" && m != 0) continue;
                    auto args = base;
                    args.insert(args.end(), {"--method", method});
                    ASSERT_EQ(run(args).out, expected) << method;
                    if (n >= 2 && std::string(method) != "closed") {
                        auto circ = args;
                        circ.push_back("--circular");
                        auto plain = base;
                        plain.push_back("--circular");
                        ASSERT_EQ(run(circ).out, run(plain).out) << method;
                    }
                }
            }
        }
    }
}

TEST(Cli, EnumerateLineCountMatchesCount) {
    for (int n = 1; n <= 12; ++n) {
        for (int k = 0; k <= n; ++k) {
            for (int m = 0; m <= n; ++m) {
                const std::vector<std::string> tail{"--n", std::to_string(n), "--k", std::to_string(k), "--m",
                                                    std::to_string(m)};
                std::vector<std::string> e{"enumerate"}, c{"count"};
                e.insert(e.end(), tail.begin(), tail.end());
                c.insert(c.end(), tail.begin(), tail.end());
                ASSERT_EQ(std::to_string(line_count(run(e).out)) + "\n", run(c).out);
                if (n < 2) continue;
                e.push_back("--circular");
                c.push_back("--circular");
                ASSERT_EQ(std::to_string(line_count(run(e).out)) + "\n", run(c).out);
            }
        }
    }
}

TEST(Cli, Enumerate) {
    EXPECT_EQ(run({"enumerate", "--n", "4", "--k", "1", "--m", "1", "--circular"}).out, "0011\n0110\n1001\n1100\n");
    EXPECT_EQ(run({"enumerate", "--n", "4", "--k", "1", "--m", "0"}).out, "0010\n0100\n");
}

TEST(Cli, Bijection) {
    EXPECT_EQ(run({"bijection", "--string", "001010001010001"}).out, "1,6,7,12,13\n");
    EXPECT_EQ(run({"bijection", "--sequence", "1,6,7,12,13", "--n", "15"}).out, "001010001010001\n");
    EXPECT_EQ(run({"bijection", "--string", "0101"}).out, "\n");
    EXPECT_EQ(run({"bijection", "--sequence", "", "--n", "4"}).out, "0101\n");

    auto bad = run({"bijection", "--sequence", "1,3", "--n", "5"});
    EXPECT_EQ(bad.status, cli::kExitUsage);
    EXPECT_NE(bad.err.find("alternation"), std::string::npos);
    EXPECT_EQ(line_count(bad.err), 1U);
    EXPECT_NE(run({"bijection", "--sequence", "2", "--n", "5"}).err.find("start parity"), std::string::npos);
    EXPECT_NE(run({"bijection", "--sequence", "1,8", "--n", "5"}).err.find("bound"), std::string::npos);
    EXPECT_EQ(run({"bijection", "--string", "0110"}).status, cli::kExitUsage);
    EXPECT_EQ(run({"bijection", "--sequence", "1"}).status, cli::kExitUsage);
    EXPECT_EQ(run({"bijection"}).status, cli::kExitUsage);
}

TEST(Cli, Verify) {
    const auto ok = run({"verify", "--max-n", "8"});
    EXPECT_EQ(ok.status, cli::kExitOk);
    EXPECT_NE(ok.out.find("mismatches=0"), std::string::npos);
    EXPECT_EQ(run({"verify", "--max-n", "8", "--mode", "linear"}).status, cli::kExitOk);
    EXPECT_EQ(run({"verify", "--max-n", "8", "--mode", "sideways"}).status, cli::kExitUsage);
    EXPECT_EQ(run({"verify", "--max-n", "25"}).status, cli::kExitUsage);
}

TEST(Cli, TableAndTriangle) {
    const auto table = run({"table", "--n", "3", "--format", "csv"});
    EXPECT_EQ(table.status, 0);
    EXPECT_NE(table.out.find("\n3,0,1,1\n"), std::string::npos);
    EXPECT_NE(run({"table", "--n", "4", "--circular", "--format", "json"}).out.find("\"count\":4"), std::string::npos);
    const auto bad = run({"table", "--n", "3", "--format", "xml"});
    EXPECT_EQ(bad.status, cli::kExitUsage);
    EXPECT_NE(bad.err.find("csv, tsv, json"), std::string::npos);

    const auto tri = run({"triangle", "--rows", "3", "--format", "bfile"});
    EXPECT_EQ(tri.out, "1 1\n2 1\n3 1\n4 1\n5 1\n6 1\n");
    EXPECT_EQ(run({"triangle", "--rows", "0", "--format", "csv"}).status, cli::kExitUsage);
}

TEST(Cli, OutWritesFile) {
    const auto path = std::filesystem::temp_directory_path() / "paircount_cli_test_table.tsv";
    const auto r = run({"table", "--n", "3", "--format", "tsv", "--out", path.string()});
    EXPECT_EQ(r.status, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    std::stringstream content;
    content << in.rdbuf();
    EXPECT_EQ(content.str().substr(0, 14), "n\tk\tm\tcount\n3\t");
    std::filesystem::remove(path);
}

TEST(Cli, UsageErrors) {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {},
             {"count", "--n", "3"},
             {"count", "--n", "-3", "--k", "0", "--m", "0"},
             {"count", "--n", "x", "--k", "0", "--m", "0"},
             {"count", "--n", "3", "--k", "0", "--m", "0", "--bogus"},
             {"count", "--n", "3", "--k", "0", "--m", "0", "--method", "magic"},
             {"count", "--n", "3", "--k", "0", "--m", "1", "--method", "closed"},
             {"count", "--n", "30", "--k", "0", "--m", "1", "--method", "oracle"},
             {"count", "--n", "1", "--k", "0", "--m", "0", "--circular"},
             {"frobnicate"},
         }) {
        const auto r = run(args);
        EXPECT_EQ(r.status, cli::kExitUsage) << (args.empty() ? "" : args[0]);
        EXPECT_EQ(line_count(r.err), 1U) << r.err;
        EXPECT_TRUE(r.out.empty());
    }
}

TEST(Cli, OracleLimitOverride) {
    EXPECT_EQ(run({"--oracle-limit", "22", "count", "--n", "21", "--k", "3", "--m", "3", "--method", "oracle"}).out,
              run({"count", "--n", "21", "--k", "3", "--m", "3"}).out);
    EXPECT_EQ(run({"--oracle-limit", "6", "count", "--n", "7", "--k", "0", "--m", "0", "--method", "oracle"}).status,
              cli::kExitUsage);
    ::setenv(cli::kOracleLimitEnv, "6", 1);
    EXPECT_EQ(run({"count", "--n", "7", "--k", "0", "--m", "0", "--method", "oracle"}).status, cli::kExitUsage);
    ::setenv(cli::kOracleLimitEnv, "junk", 1);
    EXPECT_EQ(run({"count", "--n", "7", "--k", "0", "--m", "0"}).status, cli::kExitUsage);
    ::unsetenv(cli::kOracleLimitEnv);
}

TEST(Cli, Help) {
    const auto r = run({"--help"});
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("count"), std::string::npos);
}
