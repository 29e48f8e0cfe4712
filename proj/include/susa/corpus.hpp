#pragma once

#include <susa/solver.hpp>

#include <iosfwd>
#include <set>
#include <string>
#include <vector>

namespace susa {

enum class EntryFlag {
    Sic,                   // the tablet itself carries an erroneous digit
    Reconstructed,         // value restored editorially, not read
    PaperCalcDiscrepancy,  // published calculation disagrees with what verifies
};

const char* to_string(EntryFlag flag);
EntryFlag entry_flag_from_string(const std::string& text);

/// One problem of the embedded tablet corpus. The stored equation is
/// always the one its expected roots satisfy exactly; `source_note`
/// records variant readings for flagged entries.
struct CorpusEntry {
    std::string id; // "SMT5.P10.L21" style: tablet, part, line
    QuadraticProblem problem;
    std::vector<Rational> expected_roots;
    std::set<EntryFlag> flags;
    std::string source_note;
};

/// Parses the corpus stream: one entry per line, '#' comments,
/// fields '|'-separated as  id|FORM|key=value...|x=root[ root]|flags[|note].
/// Values are sexagesimal numerals or fractions n/m.
std::vector<CorpusEntry> load_corpus(std::istream& source);
std::vector<CorpusEntry> load_corpus_file(const std::string& path);

enum class Verdict { Pass, Fail };

struct EntryCheck {
    Verdict verdict;
    std::vector<Rational> residuals; // one per expected root
    std::vector<Rational> recomputed_roots;
};

/// Substitutes every expected root exactly and recomputes the roots with
/// the scribal solver. PASS iff all residuals are zero and every expected
/// root is among the recomputed ones. Failures are data, not errors.
EntryCheck verify_entry(const CorpusEntry& entry);

struct VerificationFailure {
    std::string id;
    Rational residual;
    std::vector<Rational> recomputed_roots;
};

struct VerificationReport {
    std::size_t total = 0;
    std::size_t passed = 0;  // unflagged entries that verify
    std::size_t flagged = 0; // flagged entries that verify
    std::vector<VerificationFailure> failures;
};

/// Aggregates verify_entry over all entries, ordered by id.
VerificationReport verify_all(const std::vector<CorpusEntry>& entries);

} // namespace susa
