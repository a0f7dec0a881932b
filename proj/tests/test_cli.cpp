#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result forge_run(std::vector<std::string> args) {
    args.insert(args.begin(), "forge");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = forge::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

std::size_t columns(const std::string& line) { return static_cast<std::size_t>(std::count(line.begin(), line.end(), '\t')) + 1; }

void expect_constant_columns(const std::string& text) {
    const auto ls = lines(text);
    ASSERT_FALSE(ls.empty());
    for (const auto& l : ls) EXPECT_EQ(columns(l), columns(ls.front())) << l;
}

void expect_json_lines(const std::string& text) {
    for (const auto& l : lines(text)) {
        const auto j = nlohmann::json::parse(l);
        EXPECT_TRUE(j.is_object());
    }
}

const std::vector<std::string> kX11 = {"--a", "-1/3", "--b", "19/108"};

std::vector<std::string> x11(std::string cmd, std::vector<std::string> extra = {}) {
    std::vector<std::string> args{std::move(cmd)};
    args.insert(args.end(), kX11.begin(), kX11.end());
    args.insert(args.end(), extra.begin(), extra.end());
    return args;
}

}  // namespace

TEST(Cli, PolyCommand) {
    const Result r = forge_run(x11("poly"));
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("x^8 - 6*x^4 + 19*x^2 - 3"), std::string::npos);
    EXPECT_NE(r.out.find("{2,3,11}"), std::string::npos);

    const Result s = forge_run({"poly", "--a", "0", "--b", "2"});
    EXPECT_EQ(s.code, 0);
    EXPECT_NE(s.out.find("x^6 + 216"), std::string::npos);
    EXPECT_NE(s.out.find("special"), std::string::npos);

    const Result bad = forge_run({"poly", "--a", "0", "--b", "0"});
    EXPECT_EQ(bad.code, 2);
    EXPECT_NE(bad.err.find("singular curve"), std::string::npos);

    expect_json_lines(forge_run(x11("poly", {"--format", "json"})).out);
}

TEST(Cli, AscendCommand) {
    const Result r = forge_run(x11("ascend", {"--x", "1..5", "--format", "json"}));
    EXPECT_EQ(r.code, 0);
    const auto ls = lines(r.out);
    EXPECT_EQ(ls.size(), 5u);
    expect_json_lines(r.out);
    EXPECT_EQ(nlohmann::json::parse(ls[0])["m0"], 22);
    EXPECT_NE(r.err.find("distinct_m0=5"), std::string::npos);

    const Result s = forge_run({"ascend", "--a", "0", "--b", "2", "--x", "1..3"});
    EXPECT_EQ(s.code, 0);
    EXPECT_EQ(lines(s.out).size(), 4u);  // header + 3 records
    EXPECT_NE(s.out.find("\t434\t"), std::string::npos);
    expect_constant_columns(s.out);

    const Result z = forge_run(x11("ascend", {"--x", "0..0"}));
    EXPECT_EQ(z.code, 0);
    EXPECT_EQ(lines(z.out).size(), 1u);
    EXPECT_NE(z.err.find("notice"), std::string::npos);

    const Result h = forge_run({"ascend", "--a", "0", "--b", "31/108", "--rational-height", "2", "--skip-trivial"});
    EXPECT_EQ(h.code, 0);
    expect_constant_columns(h.out);
}

TEST(Cli, ScanCommand) {
    const Result c = forge_run(x11("scan", {"--mode", "correlate", "--max-l", "500"}));
    EXPECT_EQ(c.code, 0);
    EXPECT_NE(c.err.find("mismatches=0"), std::string::npos);
    expect_constant_columns(c.out);

    const Result p = forge_run(x11("scan", {"--mode", "patterns", "--max-l", "500", "--class", "2mod3"}));
    EXPECT_EQ(p.code, 0);
    const auto ls = lines(p.out);
    for (std::size_t i = 1; i < ls.size(); ++i) {
        const std::string pattern = ls[i].substr(ls[i].find('\t') + 1);
        EXPECT_TRUE(pattern == "(1,1,2,2,2)" || pattern == "(8)") << ls[i];
    }

    const Result w = forge_run({"scan", "--a", "0", "--b", "2", "--mode", "correlate"});
    EXPECT_EQ(w.code, 2);
    EXPECT_NE(w.err.find("generic branch required"), std::string::npos);

    const Result a = forge_run({"scan", "--a", "0", "--b", "2", "--mode", "anomalous", "--max-l", "100", "--format", "json"});
    EXPECT_EQ(a.code, 0);
    expect_json_lines(a.out);
}

TEST(Cli, VerifyCommand) {
    const Result s = forge_run({"verify", "--a", "0", "--b", "2"});
    EXPECT_EQ(s.code, 0);
    EXPECT_NE(s.err.find("skipped"), std::string::npos);

    // phi and psi3 pass; the exponent-3 discriminant closed form fails
    const Result r = forge_run(x11("verify"));
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("phi-identity\tpass"), std::string::npos);
    EXPECT_NE(r.out.find("psi3-identity\tpass"), std::string::npos);
    EXPECT_NE(r.out.find("fitted_exponent=4"), std::string::npos);

    EXPECT_EQ(forge_run({"verify", "--a", "0", "--b", "2", "--random", "5", "--seed", "9"}).code, 0);
}

TEST(Cli, InvalidInputExitsTwo) {
    EXPECT_EQ(forge_run({}).code, 2);
    EXPECT_EQ(forge_run({"frobnicate"}).code, 2);
    EXPECT_EQ(forge_run({"poly", "--a", "1.5", "--b", "1"}).code, 2);
    EXPECT_EQ(forge_run({"poly", "--b", "1"}).code, 2);
    EXPECT_EQ(forge_run(x11("ascend", {"--x", "5..1"})).code, 2);
    EXPECT_EQ(forge_run(x11("ascend", {"--x", "abc"})).code, 2);
    EXPECT_EQ(forge_run(x11("scan", {"--mode", "bogus"})).code, 2);
    EXPECT_EQ(forge_run(x11("scan", {"--max-l", "1"})).code, 2);
    EXPECT_EQ(forge_run(x11("poly", {"--format", "xml"})).code, 2);
}

TEST(Cli, OutputIndependentOfJobs) {
    for (const auto& cmd : {x11("ascend", {"--x", "-4..15"}), x11("scan", {"--mode", "correlate", "--max-l", "700"}),
                            x11("scan", {"--mode", "patterns", "--format", "json"})}) {
        auto one = cmd, four = cmd;
        one.insert(one.end(), {"--jobs", "1"});
        four.insert(four.end(), {"--jobs", "4"});
        const Result a = forge_run(one), b = forge_run(four);
        EXPECT_EQ(a.code, b.code);
        EXPECT_EQ(a.out, b.out);
        EXPECT_EQ(a.err, b.err);
    }
}
