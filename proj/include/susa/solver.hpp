#pragma once

#include <susa/rational.hpp>
#include <susa/trace.hpp>

#include <string>
#include <utility>
#include <vector>

namespace susa {

/// The equation shapes attested on the tablets, plus the normalized
/// GENERAL shape the worked problems reduce to.
enum class ProblemForm {
    Square,       // c*x^2 = b
    ScaledSquare, // (c*x)^2 = b
    SumSquares,   // x^2 + (c*x)^2 = b
    DiffSquares,  // x^2 - (c*x)^2 = b
    Add,          // x^2 + a*x = b
    Sub,          // x^2 - a*x = b
    Excess,       // a*x - x^2 = b
    Proportion,   // a*x = x^2
    General,      // A*x^2 + B*x = C
};

const char* form_tag(ProblemForm form);
ProblemForm form_from_tag(const std::string& tag);

/// A quadratic problem in one of the tablet forms. Coefficients are kept
/// under role names: `quad` is the square's scaling (c or A), `lin` the
/// linear coefficient (a or B), `rhs` the stated result (b or C).
/// Use the named factories; they enforce each form's positivity rules.
struct QuadraticProblem {
    ProblemForm form;
    Rational quad;
    Rational lin;
    Rational rhs;

    static QuadraticProblem square(const Rational& c, const Rational& b);
    static QuadraticProblem scaled_square(const Rational& c, const Rational& b);
    static QuadraticProblem sum_squares(const Rational& c, const Rational& b);
    static QuadraticProblem diff_squares(const Rational& c, const Rational& b);
    static QuadraticProblem add(const Rational& a, const Rational& b);
    static QuadraticProblem sub(const Rational& a, const Rational& b);
    static QuadraticProblem excess(const Rational& a, const Rational& b);
    static QuadraticProblem proportion(const Rational& a);
    static QuadraticProblem general(const Rational& A, const Rational& B, const Rational& C);

    /// LHS(x) - RHS, exact.
    Rational residual(const Rational& x) const;
};

/// Roots in ascending order (one or two, all positive and verified by
/// substitution) together with the scribal step sequence that found them.
struct Solution {
    std::vector<Rational> roots;
    Trace trace;
};

/// Dispatches a problem to the procedure the scribes used for its form.
Solution solve(const QuadraticProblem& problem);

/// x with x^2 + a*x = b, via x = sqrt(b + (a/2)^2) - a/2.
Rational complete_square_add(const Rational& a, const Rational& b);

/// x with x^2 - a*x = b, via x = sqrt(b + (a/2)^2) + a/2; always x > a.
Rational complete_square_sub(const Rational& a, const Rational& b);

/// A*x^2 + B*x = C by the tablets' normalization: scale by A, substitute
/// y = A*x, complete the square in y, recover x through the reciprocal.
/// Trace steps in order: scale, halve, square, add, extract-root,
/// subtract, reciprocal, multiply. B = 0 degenerates to root extraction.
Solution solve_general(const Rational& A, const Rational& B, const Rational& C);

/// x + y = p, x*y = q via the half-sum/half-difference construction.
/// Returns (x, y) with x >= y.
std::pair<Rational, Rational> solve_sum_product(const Rational& p, const Rational& q);

/// All real roots of a*x^2 + b*x + c = 0, ascending. Exact mode: the
/// discriminant must be a perfect rational square. This is the modern
/// cross-check for every scribal procedure above.
std::vector<Rational> quadratic_formula_oracle(const Rational& a, const Rational& b,
                                               const Rational& c);

struct RootCheck {
    bool exact;        // residual is exactly zero
    Rational residual; // LHS(candidate) - RHS
};

RootCheck verify_root(const QuadraticProblem& problem, const Rational& candidate);

} // namespace susa
