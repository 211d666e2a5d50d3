#pragma once

// Command-line front end: `eval`, `check` and `section4`.
// Exit codes: 0 success, 1 a check failed, 2 usage or parse error.

#include "dfw/expr.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

namespace dfw::cli {

enum ExitCode : int { ok = 0, check_failed = 1, usage_error = 2 };

enum class ReportFormat { text, json, tsv };

inline std::string status_string(const TrialRecord& r) { return r.passed ? "pass" : "fail"; }

/// tsv: `suite<TAB>trial<TAB>status<TAB>lhs<TAB>rhs`, one record per trial;
/// failing records carry the serialized instance as a sixth field.
inline void write_tsv(std::ostream& out, const std::vector<Verdict>& verdicts)
{
    for (const auto& v : verdicts)
        for (const auto& r : v.records) {
            out << v.suite << '\t' << r.trial << '\t' << status_string(r) << '\t' << r.lhs << '\t' << r.rhs;
            if (!r.passed)
                out << '\t' << r.instance;
            out << '\n';
        }
}

inline void write_json(std::ostream& out, const std::vector<Verdict>& verdicts)
{
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& v : verdicts)
        for (const auto& r : v.records) {
            nlohmann::ordered_json rec;
            rec["suite"] = v.suite;
            rec["trial"] = r.trial;
            rec["status"] = status_string(r);
            rec["lhs"] = r.lhs;
            rec["rhs"] = r.rhs;
            rec["counterexample"] = r.passed ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(r.instance);
            arr.push_back(std::move(rec));
        }
    out << arr.dump(2) << '\n';
}

inline void write_text(std::ostream& out, const std::vector<Verdict>& verdicts)
{
    for (const auto& v : verdicts) {
        out << v.suite << ": " << v.trials() << " trials, " << v.passed << " passed, " << v.failed << " failed\n";
        for (const auto& r : v.records)
            if (!r.passed)
                out << "  trial " << r.trial << ": lhs = " << r.lhs << ", rhs = " << r.rhs << "\n    replay: " << r.instance
                    << '\n';
    }
}

inline std::uint64_t default_seed()
{
    if (const char* env = std::getenv("DFW_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("DFW_SEED is not an unsigned integer: ") + env);
        }
    }
    return 0;
}

inline std::optional<PresentedGroup> load_relations(const std::string& path)
{
    if (path.empty())
        return std::nullopt;
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open relations file " + path);
    return parse_relations_file(in);
}

inline void report_expr_error(std::ostream& err, const std::string& text, const ExprError& e)
{
    err << (e.is_syntax_error() ? "syntax error" : "error") << " at byte " << e.offset() << ": " << e.what() << '\n'
        << "  " << text << '\n'
        << "  " << std::string(std::min(e.offset(), text.size()), ' ') << "^\n";
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Derived functors of symmetric, exterior and super-Lie powers of abelian groups"};
    app.require_subcommand(1);

    std::string expr_text;
    std::string relations_path;
    auto* eval = app.add_subcommand("eval", "Evaluate a group or functor expression to its canonical form");
    eval->add_option("expr", expr_text, "Expression, e.g. \"L1SP^2(Z/2 + Z/4)\"");
    eval->add_option("--relations", relations_path, "Relation matrix file; the expression refers to it as R");

    std::string suite;
    std::uint64_t seed = 0;
    long long trials = 100, max_rank = 4, max_entry = 6;
    std::string format = "text";
    auto* check = app.add_subcommand("check", "Run a randomized verification suite");
    check->add_option("suite", suite, "thm31, thm32, exact4, crosseffect, presindep or all")->required();
    auto* seed_opt = check->add_option("--seed", seed, "RNG seed (default: $DFW_SEED, else 0)");
    check->add_option("--trials", trials, "Trials per suite");
    check->add_option("--max-rank", max_rank, "Bound on the ambient lattice rank");
    check->add_option("--max-entry", max_entry, "Bound on |lattice entries|");
    check->add_option("--format", format, "text, json or tsv");

    std::string group_text;
    auto* section4 = app.add_subcommand("section4", "Derived-functor values attached to an abelian group");
    section4->add_option("group", group_text, "Abelian group expression, e.g. \"Z/2 + Z/2\"");
    section4->add_option("--relations", relations_path, "Relation matrix file; the expression refers to it as R");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return usage_error;
    }

    EvalContext ctx;
    try {
        ctx.relations = load_relations(relations_path);
    } catch (const std::exception& e) {
        err << e.what() << '\n';
        return usage_error;
    }

    if (*eval || *section4) {
        std::string& text = *eval ? expr_text : group_text;
        if (text.empty()) {
            if (!ctx.relations) {
                err << "an expression (or --relations) is required\n";
                return usage_error;
            }
            text = "R";
        }
        try {
            if (*eval) {
                out << evaluate_text(text, ctx).to_string() << '\n';
                return ok;
            }
            PresentedGroup g = evaluate(parse_expression(text), ctx);
            Section4Report r = evaluate_section4(g);
            out << "H2 = " << r.h2.to_string() << '\n'
                << "L1SP2(H2) = " << r.l1_sp2_h2.to_string() << '\n'
                << "L2Ls3(H2) = " << r.l2_superlie3_h2.to_string() << '\n'
                << "L1SP3(Gab) = " << r.l1_sp3.to_string() << '\n'
                << "L1SP4(Gab) = " << r.l1_sp4.to_string() << '\n';
            return ok;
        } catch (const ExprError& e) {
            report_expr_error(err, text, e);
            return usage_error;
        }
    }

    // check
    ReportFormat fmt;
    if (format == "text")
        fmt = ReportFormat::text;
    else if (format == "json")
        fmt = ReportFormat::json;
    else if (format == "tsv")
        fmt = ReportFormat::tsv;
    else {
        err << "unknown --format " << format << " (expected text, json or tsv)\n";
        return usage_error;
    }
    if (trials < 1 || max_rank < 1 || max_entry < 1) {
        err << "--trials, --max-rank and --max-entry must all be >= 1\n";
        return usage_error;
    }
    std::vector<std::string> suites;
    if (suite == "all") {
        suites = check_suite_names();
    } else if (std::find(check_suite_names().begin(), check_suite_names().end(), suite) != check_suite_names().end()) {
        suites = {suite};
    } else {
        err << "unknown suite " << suite << '\n';
        return usage_error;
    }
    TrialConfig cfg;
    try {
        cfg.seed = seed_opt->count() ? seed : default_seed();
    } catch (const std::exception& e) {
        err << e.what() << '\n';
        return usage_error;
    }
    cfg.trials = static_cast<std::size_t>(trials);
    cfg.max_rank = static_cast<std::size_t>(max_rank);
    cfg.max_entry = static_cast<long>(max_entry);

    std::vector<Verdict> verdicts;
    bool all_ok = true;
    for (const auto& s : suites) {
        verdicts.push_back(run_check(s, cfg));
        all_ok = all_ok && verdicts.back().ok();
    }
    switch (fmt) {
    case ReportFormat::text: write_text(out, verdicts); break;
    case ReportFormat::json: write_json(out, verdicts); break;
    case ReportFormat::tsv: write_tsv(out, verdicts); break;
    }
    return all_ok ? ok : check_failed;
}

} // namespace dfw::cli
