// susa -- exact sexagesimal arithmetic and tablet-style quadratic solving.
//
// Subcommands: solve, trace, geometry, verify-corpus. Exit codes:
// 0 success, 1 usage or I/O error, 2 mathematical infeasibility,
// 3 corpus verification failure.

#include <susa/corpus.hpp>
#include <susa/geometry.hpp>
#include <susa/numeral.hpp>
#include <susa/solver.hpp>
#include <susa/trace.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <optional>
#include <string>

namespace {

using susa::Rational;

std::string dual(const Rational& v) {
    return susa::format_value(v) + " (" + v.to_string() + ")";
}

Rational coeff(const std::map<std::string, std::string>& given, const char* key,
               const char* form) {
    const auto it = given.find(key);
    if (it == given.end())
        throw susa::Error(susa::ErrorCode::InvalidProblem,
                          std::string("--") + key + " is required for form " + form);
    return susa::parse_value(it->second);
}

int run_solve(const std::string& form_tag, const std::map<std::string, std::string>& given) {
    const susa::ProblemForm form = susa::form_from_tag(form_tag);
    susa::QuadraticProblem problem;
    const char* tag = susa::form_tag(form);
    switch (form) {
    case susa::ProblemForm::Square:
        problem = susa::QuadraticProblem::square(coeff(given, "c", tag), coeff(given, "b", tag));
        break;
    case susa::ProblemForm::ScaledSquare:
        problem = susa::QuadraticProblem::scaled_square(coeff(given, "c", tag),
                                                        coeff(given, "b", tag));
        break;
    case susa::ProblemForm::SumSquares:
        problem = susa::QuadraticProblem::sum_squares(coeff(given, "c", tag),
                                                      coeff(given, "b", tag));
        break;
    case susa::ProblemForm::DiffSquares:
        problem = susa::QuadraticProblem::diff_squares(coeff(given, "c", tag),
                                                       coeff(given, "b", tag));
        break;
    case susa::ProblemForm::Add:
        problem = susa::QuadraticProblem::add(coeff(given, "a", tag), coeff(given, "b", tag));
        break;
    case susa::ProblemForm::Sub:
        problem = susa::QuadraticProblem::sub(coeff(given, "a", tag), coeff(given, "b", tag));
        break;
    case susa::ProblemForm::Excess:
        problem = susa::QuadraticProblem::excess(coeff(given, "a", tag), coeff(given, "b", tag));
        break;
    case susa::ProblemForm::Proportion:
        problem = susa::QuadraticProblem::proportion(coeff(given, "a", tag));
        break;
    case susa::ProblemForm::General:
        problem = susa::QuadraticProblem::general(coeff(given, "A", tag), coeff(given, "B", tag),
                                                  coeff(given, "C", tag));
        break;
    }
    const susa::Solution solution = susa::solve(problem);
    for (const auto& root : solution.roots)
        std::cout << "x = " << dual(root) << "\n";
    return 0;
}

int run_trace(const std::string& problem_id) {
    susa::Trace trace;
    if (problem_id == "smt20-1")
        trace = susa::solve_smt20(susa::Smt20Variant::AreaPlusLength, Rational(11, 18)).trace;
    else if (problem_id == "smt20-2")
        trace = susa::solve_smt20(susa::Smt20Variant::AreaLengthDiagonal, Rational(23, 18)).trace;
    else if (problem_id == "smt21-1")
        trace = susa::solve_gap_square(Rational(5), Rational(2100)).trace;
    else if (problem_id == "smt21-2")
        trace = susa::solve_gap_rectangle(Rational(5), Rational(10), Rational(1850)).trace;
    else
        throw susa::Error(susa::ErrorCode::UnknownProblemId, "'" + problem_id + "'");
    std::cout << susa::render_trace(trace);
    return 0;
}

int run_verify_corpus(const std::string& path, const std::string& format) {
    const auto entries = susa::load_corpus_file(path);
    if (format == "tabular") {
        std::vector<const susa::CorpusEntry*> ordered;
        for (const auto& entry : entries)
            ordered.push_back(&entry);
        std::sort(ordered.begin(), ordered.end(),
                  [](auto* lhs, auto* rhs) { return lhs->id < rhs->id; });
        bool any_failed = false;
        for (const auto* entry : ordered) {
            const auto check = susa::verify_entry(*entry);
            Rational residual(0);
            for (const auto& r : check.residuals)
                if (!r.is_zero()) {
                    residual = r;
                    break;
                }
            const char* status = check.verdict == susa::Verdict::Fail ? "FAIL"
                                 : entry->flags.empty()               ? "PASS"
                                                                      : "FLAGGED";
            any_failed |= check.verdict == susa::Verdict::Fail;
            std::cout << entry->id << " " << status << " " << residual.to_string() << "\n";
        }
        return any_failed ? 3 : 0;
    }
    const auto report = susa::verify_all(entries);
    std::cout << "total=" << report.total << " passed=" << report.passed
              << " flagged=" << report.flagged << " failures=" << report.failures.size() << "\n";
    for (const auto& failure : report.failures) {
        std::cout << "FAIL " << failure.id << " residual=" << failure.residual.to_string()
                  << " recomputed=";
        for (std::size_t i = 0; i < failure.recomputed_roots.size(); ++i)
            std::cout << (i ? " " : "") << failure.recomputed_roots[i].to_string();
        std::cout << "\n";
    }
    return report.failures.empty() ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact sexagesimal arithmetic and Babylonian-style quadratic solving"};
    app.require_subcommand(1);

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "Solve a quadratic problem in a tablet form");
    std::string form_tag;
    solve_cmd->add_option("--form", form_tag, "Problem form tag, e.g. ADD or GENERAL")
        ->required();
    std::map<std::string, std::string> given;
    for (const char* key : {"a", "b", "c", "A", "B", "C"})
        solve_cmd->add_option_function<std::string>(
            std::string("--") + key,
            [&given, key](const std::string& value) { given[key] = value; },
            std::string("coefficient ") + key + " (numeral or fraction)");

    // trace
    auto* trace_cmd = app.add_subcommand("trace", "Print the step trace of a worked problem");
    std::string problem_id;
    trace_cmd->add_option("problem_id", problem_id, "smt20-1, smt20-2, smt21-1 or smt21-2")
        ->required();

    // geometry
    auto* geometry_cmd = app.add_subcommand("geometry", "Solve an apusamikkum gap problem");
    geometry_cmd->require_subcommand(1);
    auto* square_cmd = geometry_cmd->add_subcommand("square", "Outer square enlargement");
    std::string margin_text, gap_text;
    square_cmd->add_option("--margin", margin_text, "per-direction margin (nindan)")->required();
    square_cmd->add_option("--gap", gap_text, "area between outer square and figure")->required();
    auto* rect_cmd = geometry_cmd->add_subcommand("rect", "Outer rectangle enlargement");
    std::string u_text, v_text, rect_gap_text;
    rect_cmd->add_option("--u", u_text, "total extension of the width sides")->required();
    rect_cmd->add_option("--v", v_text, "total extension of the length sides")->required();
    rect_cmd->add_option("--gap", rect_gap_text, "area between outer rectangle and figure")
        ->required();

    // verify-corpus
    auto* verify_cmd = app.add_subcommand("verify-corpus", "Exactly verify a corpus file");
    std::string corpus_path;
    std::string format = "text";
    verify_cmd->add_option("path", corpus_path, "corpus file")->required();
    verify_cmd->add_option("--format", format, "text or tabular")
        ->check(CLI::IsMember({"text", "tabular"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (solve_cmd->parsed())
            return run_solve(form_tag, given);
        if (trace_cmd->parsed())
            return run_trace(problem_id);
        if (square_cmd->parsed()) {
            const auto solution = susa::solve_gap_square(susa::parse_value(margin_text),
                                                         susa::parse_value(gap_text));
            std::cout << "x = " << dual(solution.x) << "\n"
                      << "outer = " << dual(solution.outer_side) << "\n";
            return 0;
        }
        if (rect_cmd->parsed()) {
            const auto solution = susa::solve_gap_rectangle(susa::parse_value(u_text),
                                                            susa::parse_value(v_text),
                                                            susa::parse_value(rect_gap_text));
            std::cout << "x = " << dual(solution.x) << "\n"
                      << "y = " << dual(solution.side_y) << "\n"
                      << "z = " << dual(solution.side_z) << "\n";
            return 0;
        }
        if (verify_cmd->parsed())
            return run_verify_corpus(corpus_path, format);
    } catch (const susa::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.is_infeasible() ? 2 : 1;
    }
    return 1;
}
