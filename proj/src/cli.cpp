#include "hyperfold/cli.hpp"

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"

namespace hyperfold::cli {

int exit_code_for(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::BudgetExceeded:
    case ErrorKind::MagnitudeExceeded:
    case ErrorKind::ConstructionLimit: return exit_code::budget_exceeded;
    case ErrorKind::DomainError: return exit_code::domain_error;
    }
    return exit_code::domain_error;
}

namespace {

void print_stats(std::ostream& os, const EvalStats& s) {
    os << "steps=" << s.steps_used << " peak_digits=" << s.peak_digits << '\n';
}

void print_caret(std::ostream& err, std::string_view text, const notation::SourcePos& pos) {
    // Only single-line input gets the pointer line.
    if (text.find('\n') != std::string_view::npos) return;
    err << "  " << text << '\n' << "  " << std::string(pos.offset, ' ') << "^\n";
}

} // namespace

int run_eval(std::string_view text, const Config& config, std::ostream& out, std::ostream& err) {
    try {
        const notation::Expr e = notation::parse(text);
        const Evaluation r = notation::evaluate(e, config.form, config.budget());
        out << r.value << '\n';
        if (!config.quiet) print_stats(out, r.stats);
        return exit_code::ok;
    } catch (const notation::ParseError& e) {
        err << "error: " << e.what() << '\n';
        print_caret(err, text, e.pos());
        return exit_code::parse_error;
    } catch (const HyperError& e) {
        err << "error: " << e.what() << '\n';
        if (!config.quiet) print_stats(err, e.stats());
        return exit_code_for(e.kind());
    } catch (const notation::MismatchError& e) {
        err << "error: internal mismatch: " << e.what() << '\n';
        return exit_code::mismatch;
    }
}

int run_repl(const Config& config, std::istream& in, std::ostream& out, std::ostream& err, bool interactive) {
    std::string line;
    for (;;) {
        if (interactive) out << "> " << std::flush;
        if (!std::getline(in, line)) break;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r");
        const std::string_view trimmed = std::string_view{line}.substr(first, last - first + 1);
        if (trimmed == ":quit" || trimmed == ":q") break;
        run_eval(trimmed, config, out, err);
        out << std::flush;
    }
    if (interactive) out << '\n';
    return exit_code::ok;
}

int run_main(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err,
             bool interactive) {
    CLI::App app{"Evaluate Ackermann, Knuth up-arrow and Conway chain expressions", "hyperfold"};
    app.require_subcommand(1);
    app.fallthrough();

    Config config;
    const std::map<std::string, notation::Form> forms{{"reference", notation::Form::Reference},
                                                      {"primitive", notation::Form::Primitive},
                                                      {"both", notation::Form::Both}};
    app.add_option("--form", config.form, "Evaluator: reference, primitive or both (compare)")
        ->transform(CLI::CheckedTransformer(forms, CLI::ignore_case));
    app.add_option("--max-steps", config.max_steps, "Step budget")->check(CLI::PositiveNumber);
    app.add_option("--max-digits", config.max_digits, "Largest decimal width of any intermediate value")
        ->check(CLI::PositiveNumber);
    app.add_flag("--quiet,-q", config.quiet, "Do not print the steps/peak_digits line");

    std::string expr_text;
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate one expression");
    eval_cmd->add_option("expr", expr_text, "Expression, e.g. 3->3->2 or 2^^4")->required();

    auto* repl_cmd = app.add_subcommand("repl", "Read expressions line by line; :quit to leave");

    std::string level_text = "quick";
    auto* selftest_cmd = app.add_subcommand("selftest", "Run the built-in identity tables");
    selftest_cmd->add_option("level", level_text, "quick or full")->check(CLI::IsMember({"quick", "full"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_code::ok : exit_code::usage;
    }

    if (eval_cmd->parsed()) return run_eval(expr_text, config, out, err);
    if (repl_cmd->parsed()) return run_repl(config, in, out, err, interactive);
    if (selftest_cmd->parsed())
        return run_selftest(level_text == "full" ? SelftestLevel::Full : SelftestLevel::Quick, config, out, err);
    return exit_code::usage;
}

} // namespace hyperfold::cli
