#include "oracles.hpp"

#include "dfw/cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace dfw;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args)
{
    args.insert(args.begin(), "dfw");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content)
{
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << content;
    return path.string();
}

std::vector<std::string> lines(const std::string& s)
{
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);)
        out.push_back(l);
    return out;
}

} // namespace

TEST(Parse, Examples)
{
    Expr e = parse_expression("L1SP^2(Z/2 + Z/4)");
    EXPECT_EQ(e.kind, ExprKind::apply);
    EXPECT_EQ(e.functor, "L1SP");
    EXPECT_EQ(e.degree, 2u);
    ASSERT_EQ(e.args.size(), 1u);
    EXPECT_EQ(e.args[0].kind, ExprKind::sum);
    EXPECT_EQ(e.args[0].args.size(), 2u);

    Expr t = parse_expression("Tor(Z/4, Z/6)");
    EXPECT_EQ(t.functor, "Tor");
    EXPECT_EQ(t.args.size(), 2u);

    EXPECT_EQ(parse_expression("Z^3").value, 3);
    EXPECT_EQ(parse_expression(" ( Z + Z/3 ) ").kind, ExprKind::sum);
}

TEST(Parse, SemanticErrors)
{
    try {
        parse_expression("Z/1");
        FAIL() << "Z/1 accepted";
    } catch (const ExprError& e) {
        EXPECT_FALSE(e.is_syntax_error());
    }
    for (const char* bad : {"SP^6(Z)", "L1SP^5(Z/2)", "Lambda^4(Z)", "Tor(Z/2)", "H2(Z, Z)"}) {
        try {
            parse_expression(bad);
            ADD_FAILURE() << bad << " accepted";
        } catch (const ExprError& e) {
            EXPECT_FALSE(e.is_syntax_error()) << bad;
        }
    }
}

TEST(Parse, SyntaxErrorsCarryOffsets)
{
    struct Case {
        const char* text;
        std::size_t offset;
    };
    for (Case c : {Case{"Z +", 3}, Case{"Z/2 Z", 4}, Case{"Foo(Z)", 0}, Case{"(Z", 2}, Case{"", 0}, Case{"SP(Z)", 2}}) {
        try {
            parse_expression(c.text);
            ADD_FAILURE() << c.text << " accepted";
        } catch (const ExprError& e) {
            EXPECT_TRUE(e.is_syntax_error()) << c.text;
            EXPECT_EQ(e.offset(), c.offset) << c.text;
        }
    }
}

TEST(Eval, Examples)
{
    EXPECT_EQ(evaluate_text("Tor(Z/4, Z/6)").to_string(), "Z/2");
    EXPECT_EQ(evaluate_text("L1SP^2(Z/2 + Z/4)").to_string(), "Z/2");
    EXPECT_EQ(evaluate_text("L2Ls3(Z/5)").to_string(), "0");
    EXPECT_EQ(evaluate_text("SP^2(Z/6)").to_string(), "Z/6");
    EXPECT_EQ(evaluate_text("Lambda^2(Z/2 + Z/2)").to_string(), "Z/2");
    EXPECT_EQ(evaluate_text("Ls3(Z)").to_string(), "Z/3");
    EXPECT_EQ(evaluate_text("H2(Z^3)").to_string(), "Z^3");
    EXPECT_EQ(evaluate_text("Lie3embed-rank(Z^2)").to_string(), "Z^2");
    EXPECT_EQ(evaluate_text("Z + Z/2 + (Z/3 + 0)").to_string(), "Z + Z/6");
    EXPECT_EQ(evaluate_text("Tor(L1SP^2(Z/2 + Z/4), Z/8)").to_string(), "Z/2");
}

TEST(Eval, PrintParseRoundTrip)
{
    Sampler s(1234);
    for (int trial = 0; trial < 100; ++trial) {
        CanonicalForm c = canonical_form(s.presentation(5, 8).quotient());
        EXPECT_EQ(evaluate_text(c.to_string()), c) << c.to_string();
    }
}

TEST(Cli, EvalCommand)
{
    CliRun r = run({"eval", "Tor(Z/4, Z/6)"});
    EXPECT_EQ(r.code, cli::ok);
    EXPECT_EQ(r.out, "Z/2\n");
    EXPECT_EQ(run({"eval", "L1SP^2(Z/2 + Z/4)"}).out, "Z/2\n");
    EXPECT_EQ(run({"eval", "L2Ls3(Z/5)"}).out, "0\n");

    CliRun bad = run({"eval", "Z/1"});
    EXPECT_EQ(bad.code, cli::usage_error);
    EXPECT_NE(bad.err.find("error"), std::string::npos);
    CliRun syntax = run({"eval", "Z + + Z"});
    EXPECT_EQ(syntax.code, cli::usage_error);
    EXPECT_NE(syntax.err.find("syntax error at byte 4"), std::string::npos);
    EXPECT_EQ(run({"eval"}).code, cli::usage_error);
    EXPECT_EQ(run({"eval", "R"}).code, cli::usage_error);
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run({}).code, cli::usage_error);
    EXPECT_EQ(run({"frobnicate"}).code, cli::usage_error);
    EXPECT_EQ(run({"check", "thm31", "--trials", "0"}).code, cli::usage_error);
    EXPECT_EQ(run({"check", "thm31", "--max-rank", "0"}).code, cli::usage_error);
    EXPECT_EQ(run({"check", "thm31", "--max-entry", "-3"}).code, cli::usage_error);
    EXPECT_EQ(run({"check", "nosuch"}).code, cli::usage_error);
    EXPECT_EQ(run({"check", "thm31", "--format", "xml"}).code, cli::usage_error);
    EXPECT_EQ(run({"check"}).code, cli::usage_error);
    EXPECT_EQ(run({"check", "thm31", "--seed", "abc"}).code, cli::usage_error);
    EXPECT_EQ(run({"eval", "Z", "--relations", "/nonexistent/file"}).code, cli::usage_error);
    EXPECT_EQ(run({"--help"}).code, cli::ok);
}

TEST(Cli, CheckAllPasses)
{
    CliRun r = run({"check", "all", "--seed", "7", "--trials", "50"});
    EXPECT_EQ(r.code, cli::ok) << r.out;
    std::vector<std::string> summary = lines(r.out);
    ASSERT_EQ(summary.size(), 5u) << r.out;
    for (std::size_t i = 0; i < 5; ++i)
        EXPECT_EQ(summary[i], check_suite_names()[i] + ": 50 trials, 50 passed, 0 failed");
}

TEST(Cli, ReportsAreByteIdentical)
{
    for (const char* fmt : {"text", "json", "tsv"}) {
        CliRun a = run({"check", "all", "--seed", "11", "--trials", "5", "--format", fmt});
        CliRun b = run({"check", "all", "--seed", "11", "--trials", "5", "--format", fmt});
        EXPECT_EQ(a.code, cli::ok);
        EXPECT_EQ(a.out, b.out) << fmt;
    }
}

TEST(Cli, TsvFormat)
{
    CliRun r = run({"check", "exact4", "--seed", "1", "--trials", "4", "--format", "tsv"});
    ASSERT_EQ(r.code, cli::ok);
    std::vector<std::string> rows = lines(r.out);
    ASSERT_EQ(rows.size(), 4u);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::vector<std::string> fields;
        std::istringstream in(rows[i]);
        for (std::string f; std::getline(in, f, '\t');)
            fields.push_back(f);
        ASSERT_EQ(fields.size(), 5u) << rows[i];
        EXPECT_EQ(fields[0], "exact4");
        EXPECT_EQ(fields[1], std::to_string(i));
        EXPECT_EQ(fields[2], "pass");
    }
}

TEST(Cli, JsonFormat)
{
    CliRun r = run({"check", "crosseffect", "--seed", "2", "--trials", "3", "--format", "json"});
    ASSERT_EQ(r.code, cli::ok);
    auto j = nlohmann::json::parse(r.out);
    ASSERT_TRUE(j.is_array());
    ASSERT_EQ(j.size(), 3u);
    for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_EQ(j[i]["suite"], "crosseffect");
        EXPECT_EQ(j[i]["trial"], i);
        EXPECT_EQ(j[i]["status"], "pass");
        EXPECT_TRUE(j[i]["lhs"].is_string());
        EXPECT_TRUE(j[i]["rhs"].is_string());
        EXPECT_TRUE(j[i]["counterexample"].is_null());
    }
}

TEST(Cli, FailingRecordsCarryReplayableInstances)
{
    Verdict v{"exact4", 1, 1, {}, std::nullopt};
    v.records.push_back({0, true, "0", "0", "r=1;U=[[2]]"});
    v.records.push_back({1, false, "Z/2", "0", "r=2;U=[[2,0],[0,4]]"});
    std::ostringstream tsv, json, text;
    cli::write_tsv(tsv, {v});
    cli::write_json(json, {v});
    cli::write_text(text, {v});
    EXPECT_EQ(tsv.str(), "exact4\t0\tpass\t0\t0\nexact4\t1\tfail\tZ/2\t0\tr=2;U=[[2,0],[0,4]]\n");
    auto j = nlohmann::json::parse(json.str());
    EXPECT_TRUE(j[0]["counterexample"].is_null());
    EXPECT_EQ(j[1]["counterexample"], "r=2;U=[[2,0],[0,4]]");
    EXPECT_NE(text.str().find("replay: r=2;U=[[2,0],[0,4]]"), std::string::npos);
    EXPECT_TRUE(replay("exact4", j[1]["counterexample"].get<std::string>()).passed);
}

TEST(Cli, SeedFromEnvironment)
{
    ::setenv("DFW_SEED", "19", 1);
    CliRun env = run({"check", "thm32", "--trials", "3", "--format", "tsv"});
    ::unsetenv("DFW_SEED");
    CliRun flag = run({"check", "thm32", "--trials", "3", "--format", "tsv", "--seed", "19"});
    CliRun zero = run({"check", "thm32", "--trials", "3", "--format", "tsv"});
    CliRun flag0 = run({"check", "thm32", "--trials", "3", "--format", "tsv", "--seed", "0"});
    EXPECT_EQ(env.out, flag.out);
    EXPECT_EQ(zero.out, flag0.out);
    ::setenv("DFW_SEED", "nope", 1);
    EXPECT_EQ(run({"check", "thm32", "--trials", "1"}).code, cli::usage_error);
    ::unsetenv("DFW_SEED");
}

TEST(Cli, RelationsFile)
{
    // columns are relations: Z^3 / <(2,0,0), (0,4,0)> = Z + Z/2 + Z/4
    std::string path = temp_file("dfw_relations_test.txt", "# two relations on three generators\n"
                                                            "2 0\n"
                                                            "\n"
                                                            "0 4   # second\n"
                                                            "0 0\n");
    EXPECT_EQ(run({"eval", "--relations", path}).out, "Z + Z/2 + Z/4\n");
    EXPECT_EQ(run({"eval", "L1SP^2(R)", "--relations", path}).out, "Z/2\n");
    EXPECT_EQ(run({"eval", "Tor(R, R + Z/2)", "--relations", path}).out, "Z/2 + Z/2 + Z/2 + Z/2 + Z/2 + Z/4\n");

    std::string ragged = temp_file("dfw_relations_ragged.txt", "1 2\n3\n");
    EXPECT_EQ(run({"eval", "--relations", ragged}).code, cli::usage_error);
    std::string junk = temp_file("dfw_relations_junk.txt", "1 x\n");
    EXPECT_EQ(run({"eval", "--relations", junk}).code, cli::usage_error);
}

TEST(Cli, Section4Command)
{
    CliRun r = run({"section4", "Z/2 + Z/2"});
    EXPECT_EQ(r.code, cli::ok);
    EXPECT_EQ(r.out, "H2 = Z/2\nL1SP2(H2) = 0\nL2Ls3(H2) = 0\nL1SP3(Gab) = Z/2 + Z/2\nL1SP4(Gab) = Z/2 + Z/2 + Z/2\n");
    for (const char* g : {"Z/5", "Z^3"}) {
        std::vector<std::string> out = lines(run({"section4", g}).out);
        ASSERT_EQ(out.size(), 5u);
        EXPECT_EQ(out[1], "L1SP2(H2) = 0");
        EXPECT_EQ(out[2], "L2Ls3(H2) = 0");
        EXPECT_EQ(out[3], "L1SP3(Gab) = 0");
        EXPECT_EQ(out[4], "L1SP4(Gab) = 0");
    }
    EXPECT_EQ(lines(run({"section4", "Z/5"}).out)[0], "H2 = 0");
    EXPECT_EQ(run({"section4", "Z/"}).code, cli::usage_error);
}
