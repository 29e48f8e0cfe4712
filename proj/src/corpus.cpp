#include <susa/corpus.hpp>

#include <susa/numeral.hpp>

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>

namespace susa {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(text.substr(start));
            return out;
        }
        out.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

[[noreturn]] void fail(ErrorCode code, std::size_t line_no, const std::string& what) {
    throw Error(code, "line " + std::to_string(line_no) + ": " + what);
}

Rational parse_coeff(const std::string& text, std::size_t line_no) {
    try {
        return parse_value(text);
    } catch (const Error& e) {
        fail(ErrorCode::BadNumeral, line_no, std::string("'") + text + "': " + e.what());
    }
}

QuadraticProblem build_problem(ProblemForm form, const std::map<std::string, Rational>& coeffs,
                               std::size_t line_no) {
    auto get = [&](const char* key) -> const Rational& {
        const auto it = coeffs.find(key);
        if (it == coeffs.end())
            fail(ErrorCode::SyntaxError, line_no,
                 std::string("missing coefficient '") + key + "' for " + form_tag(form));
        return it->second;
    };
    auto expect_keys = [&](std::initializer_list<const char*> keys) {
        if (coeffs.size() != keys.size())
            fail(ErrorCode::SyntaxError, line_no,
                 std::string("wrong coefficient set for ") + form_tag(form));
    };
    switch (form) {
    case ProblemForm::Square:
        expect_keys({"c", "b"});
        return QuadraticProblem::square(get("c"), get("b"));
    case ProblemForm::ScaledSquare:
        expect_keys({"c", "b"});
        return QuadraticProblem::scaled_square(get("c"), get("b"));
    case ProblemForm::SumSquares:
        expect_keys({"c", "b"});
        return QuadraticProblem::sum_squares(get("c"), get("b"));
    case ProblemForm::DiffSquares:
        expect_keys({"c", "b"});
        return QuadraticProblem::diff_squares(get("c"), get("b"));
    case ProblemForm::Add:
        expect_keys({"a", "b"});
        return QuadraticProblem::add(get("a"), get("b"));
    case ProblemForm::Sub:
        expect_keys({"a", "b"});
        return QuadraticProblem::sub(get("a"), get("b"));
    case ProblemForm::Excess:
        expect_keys({"a", "b"});
        return QuadraticProblem::excess(get("a"), get("b"));
    case ProblemForm::Proportion:
        expect_keys({"a"});
        return QuadraticProblem::proportion(get("a"));
    case ProblemForm::General:
        expect_keys({"A", "B", "C"});
        return QuadraticProblem::general(get("A"), get("B"), get("C"));
    }
    fail(ErrorCode::SyntaxError, line_no, "bad form");
}

} // namespace

const char* to_string(EntryFlag flag) {
    switch (flag) {
    case EntryFlag::Sic: return "SIC";
    case EntryFlag::Reconstructed: return "RECONSTRUCTED";
    case EntryFlag::PaperCalcDiscrepancy: return "PAPER_CALC_DISCREPANCY";
    }
    return "?";
}

EntryFlag entry_flag_from_string(const std::string& text) {
    for (EntryFlag flag :
         {EntryFlag::Sic, EntryFlag::Reconstructed, EntryFlag::PaperCalcDiscrepancy})
        if (text == to_string(flag))
            return flag;
    throw Error(ErrorCode::SyntaxError, "unknown flag '" + text + "'");
}

std::vector<CorpusEntry> load_corpus(std::istream& source) {
    std::vector<CorpusEntry> entries;
    std::set<std::string> seen;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(source, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line[0] == '#')
            continue;
        const auto fields = split(line, '|');
        if (fields.size() < 4)
            fail(ErrorCode::SyntaxError, line_no, "expected id|FORM|coefficients...|x=...|flags");

        CorpusEntry entry;
        entry.id = fields[0];
        if (entry.id.empty())
            fail(ErrorCode::SyntaxError, line_no, "empty id");
        if (!seen.insert(entry.id).second)
            fail(ErrorCode::DuplicateId, line_no, "'" + entry.id + "'");

        ProblemForm form;
        try {
            form = form_from_tag(fields[1]);
        } catch (const Error& e) {
            fail(ErrorCode::UnknownFormTag, line_no, e.what());
        }

        // Coefficient fields run until the mandatory "x=" field.
        std::map<std::string, Rational> coeffs;
        std::size_t i = 2;
        for (; i < fields.size(); ++i) {
            const auto eq = fields[i].find('=');
            if (eq == std::string::npos || eq == 0)
                fail(ErrorCode::SyntaxError, line_no, "expected key=value, got '" + fields[i] + "'");
            const std::string key = fields[i].substr(0, eq);
            const std::string value = fields[i].substr(eq + 1);
            if (key == "x") {
                // Roots are space-separated; a comma would be ambiguous
                // against the numeral grammar.
                std::istringstream roots(value);
                std::string token;
                while (roots >> token)
                    entry.expected_roots.push_back(parse_coeff(token, line_no));
                if (entry.expected_roots.empty())
                    fail(ErrorCode::SyntaxError, line_no, "empty root list");
                ++i;
                break;
            }
            if (!coeffs.emplace(key, parse_coeff(value, line_no)).second)
                fail(ErrorCode::SyntaxError, line_no, "duplicate coefficient '" + key + "'");
        }
        if (entry.expected_roots.empty())
            fail(ErrorCode::SyntaxError, line_no, "missing x= field");
        if (i >= fields.size())
            fail(ErrorCode::SyntaxError, line_no, "missing flags field");
        for (const auto& flag : split(fields[i], ','))
            if (!flag.empty()) {
                try {
                    entry.flags.insert(entry_flag_from_string(flag));
                } catch (const Error& e) {
                    fail(ErrorCode::SyntaxError, line_no, e.what());
                }
            }
        ++i;
        if (i < fields.size()) {
            entry.source_note = fields[i];
            ++i;
        }
        if (i != fields.size())
            fail(ErrorCode::SyntaxError, line_no, "trailing fields");

        try {
            entry.problem = build_problem(form, coeffs, line_no);
        } catch (const Error& e) {
            if (e.code() == ErrorCode::SyntaxError)
                throw;
            fail(ErrorCode::SyntaxError, line_no, e.what());
        }
        entries.push_back(std::move(entry));
    }
    return entries;
}

std::vector<CorpusEntry> load_corpus_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
    return load_corpus(in);
}

EntryCheck verify_entry(const CorpusEntry& entry) {
    EntryCheck check;
    check.verdict = Verdict::Pass;
    for (const auto& root : entry.expected_roots) {
        check.residuals.push_back(entry.problem.residual(root));
        if (!check.residuals.back().is_zero())
            check.verdict = Verdict::Fail;
    }
    try {
        check.recomputed_roots = solve(entry.problem).roots;
    } catch (const Error&) {
        // Unsolvable by the scribal procedures: recomputed stays empty.
        check.verdict = Verdict::Fail;
        return check;
    }
    for (const auto& root : entry.expected_roots) {
        const bool found = std::find(check.recomputed_roots.begin(),
                                     check.recomputed_roots.end(),
                                     root) != check.recomputed_roots.end();
        if (!found)
            check.verdict = Verdict::Fail;
    }
    return check;
}

VerificationReport verify_all(const std::vector<CorpusEntry>& entries) {
    std::vector<const CorpusEntry*> ordered;
    ordered.reserve(entries.size());
    for (const auto& entry : entries)
        ordered.push_back(&entry);
    std::sort(ordered.begin(), ordered.end(),
              [](const CorpusEntry* lhs, const CorpusEntry* rhs) { return lhs->id < rhs->id; });

    VerificationReport report;
    report.total = entries.size();
    for (const CorpusEntry* entry : ordered) {
        const EntryCheck check = verify_entry(*entry);
        if (check.verdict == Verdict::Pass) {
            if (entry->flags.empty())
                ++report.passed;
            else
                ++report.flagged;
            continue;
        }
        Rational residual(0);
        for (const auto& r : check.residuals)
            if (!r.is_zero()) {
                residual = r;
                break;
            }
        report.failures.push_back({entry->id, residual, check.recomputed_roots});
    }
    return report;
}

} // namespace susa
