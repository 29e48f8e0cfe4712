#include <susa/solver.hpp>

#include <algorithm>

namespace susa {

namespace {

const Rational kZero(0);
const Rational kOne(1);
const Rational kTwo(2);

void require(bool ok, const std::string& what) {
    if (!ok)
        throw Error(ErrorCode::InvalidProblem, what);
}

Rational checked_sqrt(const Rational& radicand) {
    const auto root = sqrt_exact(radicand);
    if (!root)
        throw Error(ErrorCode::NonPerfectRadicand,
                    radicand.to_string() + " is not an exact rational square");
    return *root;
}

TraceStep step(std::string label, std::vector<Rational> operands, Rational result,
               std::string tablet_line = {}) {
    return TraceStep{std::move(label), std::move(operands), std::move(result),
                     std::move(tablet_line)};
}

// Shared core of the three scaled-square-root forms: k*x^2 = b.
Solution root_of_scaled(const Rational& k, const Rational& b, Trace trace) {
    if (k <= kZero)
        throw Error(ErrorCode::NoPositiveRoot,
                    "square coefficient " + k.to_string() + " is not positive");
    Rational reduced = b;
    if (k != kOne) {
        const Rational inv = reciprocal(k);
        reduced = inv * b;
        trace.push_back(step("reciprocal", {k}, inv));
        trace.push_back(step("multiply", {inv, b}, reduced));
    }
    const Rational x = checked_sqrt(reduced);
    trace.push_back(step("extract-root", {reduced}, x));
    return Solution{{x}, std::move(trace)};
}

} // namespace

const char* form_tag(ProblemForm form) {
    switch (form) {
    case ProblemForm::Square: return "SQUARE";
    case ProblemForm::ScaledSquare: return "SCALED_SQUARE";
    case ProblemForm::SumSquares: return "SUM_SQUARES";
    case ProblemForm::DiffSquares: return "DIFF_SQUARES";
    case ProblemForm::Add: return "ADD";
    case ProblemForm::Sub: return "SUB";
    case ProblemForm::Excess: return "EXCESS";
    case ProblemForm::Proportion: return "PROPORTION";
    case ProblemForm::General: return "GENERAL";
    }
    return "?";
}

ProblemForm form_from_tag(const std::string& tag) {
    for (ProblemForm form :
         {ProblemForm::Square, ProblemForm::ScaledSquare, ProblemForm::SumSquares,
          ProblemForm::DiffSquares, ProblemForm::Add, ProblemForm::Sub, ProblemForm::Excess,
          ProblemForm::Proportion, ProblemForm::General})
        if (tag == form_tag(form))
            return form;
    throw Error(ErrorCode::UnknownFormTag, "'" + tag + "'");
}

QuadraticProblem QuadraticProblem::square(const Rational& c, const Rational& b) {
    require(c > kZero, "SQUARE needs c > 0");
    require(b > kZero, "SQUARE needs b > 0");
    return {ProblemForm::Square, c, kZero, b};
}

QuadraticProblem QuadraticProblem::scaled_square(const Rational& c, const Rational& b) {
    require(c > kZero, "SCALED_SQUARE needs c > 0");
    require(b > kZero, "SCALED_SQUARE needs b > 0");
    return {ProblemForm::ScaledSquare, c, kZero, b};
}

QuadraticProblem QuadraticProblem::sum_squares(const Rational& c, const Rational& b) {
    require(c > kZero, "SUM_SQUARES needs c > 0");
    require(b > kZero, "SUM_SQUARES needs b > 0");
    return {ProblemForm::SumSquares, c, kZero, b};
}

QuadraticProblem QuadraticProblem::diff_squares(const Rational& c, const Rational& b) {
    require(c > kZero, "DIFF_SQUARES needs c > 0");
    require(b > kZero, "DIFF_SQUARES needs b > 0");
    return {ProblemForm::DiffSquares, c, kZero, b};
}

QuadraticProblem QuadraticProblem::add(const Rational& a, const Rational& b) {
    require(a > kZero, "ADD needs a > 0");
    require(b > kZero, "ADD needs b > 0");
    return {ProblemForm::Add, kZero, a, b};
}

QuadraticProblem QuadraticProblem::sub(const Rational& a, const Rational& b) {
    require(a > kZero, "SUB needs a > 0");
    require(b > kZero, "SUB needs b > 0");
    return {ProblemForm::Sub, kZero, a, b};
}

QuadraticProblem QuadraticProblem::excess(const Rational& a, const Rational& b) {
    require(a > kZero, "EXCESS needs a > 0");
    require(b > kZero, "EXCESS needs b > 0");
    return {ProblemForm::Excess, kZero, a, b};
}

QuadraticProblem QuadraticProblem::proportion(const Rational& a) {
    require(a > kZero, "PROPORTION needs a > 0");
    return {ProblemForm::Proportion, kZero, a, kZero};
}

QuadraticProblem QuadraticProblem::general(const Rational& A, const Rational& B,
                                           const Rational& C) {
    require(A > kZero, "GENERAL needs A > 0");
    require(B >= kZero, "GENERAL needs B >= 0");
    require(C > kZero, "GENERAL needs C > 0");
    return {ProblemForm::General, A, B, C};
}

Rational QuadraticProblem::residual(const Rational& x) const {
    switch (form) {
    case ProblemForm::Square: return quad * x * x - rhs;
    case ProblemForm::ScaledSquare: return susa::square(quad * x) - rhs;
    case ProblemForm::SumSquares: return x * x + susa::square(quad * x) - rhs;
    case ProblemForm::DiffSquares: return x * x - susa::square(quad * x) - rhs;
    case ProblemForm::Add: return x * x + lin * x - rhs;
    case ProblemForm::Sub: return x * x - lin * x - rhs;
    case ProblemForm::Excess: return lin * x - x * x - rhs;
    case ProblemForm::Proportion: return lin * x - x * x;
    case ProblemForm::General: return quad * x * x + lin * x - rhs;
    }
    throw Error(ErrorCode::InvalidProblem, "bad form");
}

Solution solve(const QuadraticProblem& problem) {
    switch (problem.form) {
    case ProblemForm::Square:
        return root_of_scaled(problem.quad, problem.rhs, {});

    case ProblemForm::ScaledSquare: {
        // (c*x)^2 = b: take the root of b first, then undo the scaling.
        Trace trace;
        const Rational s = checked_sqrt(problem.rhs);
        trace.push_back(step("extract-root", {problem.rhs}, s));
        const Rational inv = reciprocal(problem.quad);
        trace.push_back(step("reciprocal", {problem.quad}, inv));
        const Rational x = inv * s;
        trace.push_back(step("multiply", {inv, s}, x));
        return Solution{{x}, std::move(trace)};
    }

    case ProblemForm::SumSquares: {
        Trace trace;
        const Rational cc = square(problem.quad);
        trace.push_back(step("square", {problem.quad}, cc));
        const Rational k = kOne + cc;
        trace.push_back(step("add", {kOne, cc}, k));
        return root_of_scaled(k, problem.rhs, std::move(trace));
    }

    case ProblemForm::DiffSquares: {
        Trace trace;
        const Rational cc = square(problem.quad);
        trace.push_back(step("square", {problem.quad}, cc));
        const Rational k = kOne - cc;
        if (k <= kZero)
            throw Error(ErrorCode::NoPositiveRoot,
                        "x^2 - (" + problem.quad.to_string() + " x)^2 cannot be positive");
        trace.push_back(step("subtract", {kOne, cc}, k));
        return root_of_scaled(k, problem.rhs, std::move(trace));
    }

    case ProblemForm::Add:
    case ProblemForm::Sub: {
        const Rational& a = problem.lin;
        const Rational& b = problem.rhs;
        Trace trace;
        const Rational half = a / kTwo;
        trace.push_back(step("halve", {a}, half));
        const Rational hh = square(half);
        trace.push_back(step("square", {half}, hh));
        const Rational rad = hh + b;
        trace.push_back(step("add", {hh, b}, rad));
        const Rational s = checked_sqrt(rad);
        trace.push_back(step("extract-root", {rad}, s));
        Rational x;
        if (problem.form == ProblemForm::Add) {
            x = s - half;
            trace.push_back(step("subtract", {s, half}, x));
        } else {
            x = s + half;
            trace.push_back(step("add", {s, half}, x));
        }
        return Solution{{x}, std::move(trace)};
    }

    case ProblemForm::Excess: {
        // a*x - x^2 = b has the pair a/2 -+ sqrt((a/2)^2 - b); the tablets
        // name no rule for choosing, so both come back, ascending.
        const Rational& a = problem.lin;
        const Rational& b = problem.rhs;
        Trace trace;
        const Rational half = a / kTwo;
        trace.push_back(step("halve", {a}, half));
        const Rational hh = square(half);
        trace.push_back(step("square", {half}, hh));
        if (hh < b)
            throw Error(ErrorCode::NoPositiveRoot,
                        "excess " + b.to_string() + " exceeds (a/2)^2 = " + hh.to_string());
        const Rational rad = hh - b;
        trace.push_back(step("subtract", {hh, b}, rad));
        const Rational s = checked_sqrt(rad);
        trace.push_back(step("extract-root", {rad}, s));
        if (s.is_zero())
            return Solution{{half}, std::move(trace)};
        const Rational low = half - s;
        trace.push_back(step("subtract", {half, s}, low));
        const Rational high = half + s;
        trace.push_back(step("add", {half, s}, high));
        return Solution{{low, high}, std::move(trace)};
    }

    case ProblemForm::Proportion: {
        // a*x = x^2: the positive root is a itself.
        Trace trace{step("equate", {problem.lin}, problem.lin)};
        return Solution{{problem.lin}, std::move(trace)};
    }

    case ProblemForm::General:
        return solve_general(problem.quad, problem.lin, problem.rhs);
    }
    throw Error(ErrorCode::InvalidProblem, "bad form");
}

Rational complete_square_add(const Rational& a, const Rational& b) {
    require(a > kZero, "complete_square_add needs a > 0");
    require(b > kZero, "complete_square_add needs b > 0");
    const Rational half = a / kTwo;
    return checked_sqrt(b + square(half)) - half;
}

Rational complete_square_sub(const Rational& a, const Rational& b) {
    require(a > kZero, "complete_square_sub needs a > 0");
    require(b > kZero, "complete_square_sub needs b > 0");
    const Rational half = a / kTwo;
    return checked_sqrt(b + square(half)) + half;
}

Solution solve_general(const Rational& A, const Rational& B, const Rational& C) {
    require(A > kZero, "GENERAL needs A > 0");
    require(B >= kZero, "GENERAL needs B >= 0");
    require(C > kZero, "GENERAL needs C > 0");
    if (B.is_zero())
        return root_of_scaled(A, C, {});

    Trace trace;
    const Rational scaled = A * C;
    trace.push_back(step("scale", {A, C}, scaled));
    const Rational half = B / kTwo;
    trace.push_back(step("halve", {B}, half));
    const Rational hh = square(half);
    trace.push_back(step("square", {half}, hh));
    const Rational rad = hh + scaled;
    trace.push_back(step("add", {hh, scaled}, rad));
    const Rational s = checked_sqrt(rad);
    trace.push_back(step("extract-root", {rad}, s));
    const Rational y = s - half; // y = A*x
    if (y <= kZero)
        throw Error(ErrorCode::NoPositiveRoot, "completed square yields no positive root");
    trace.push_back(step("subtract", {s, half}, y));
    const Rational inv = reciprocal(A);
    trace.push_back(step("reciprocal", {A}, inv));
    const Rational x = inv * y;
    trace.push_back(step("multiply", {inv, y}, x));
    return Solution{{x}, std::move(trace)};
}

std::pair<Rational, Rational> solve_sum_product(const Rational& p, const Rational& q) {
    const Rational half_sum = p / kTwo;
    const Rational rad = square(half_sum) - q;
    if (rad < kZero)
        throw Error(ErrorCode::NegativeDiscriminant,
                    "(p/2)^2 - q = " + rad.to_string() + " is negative");
    const Rational half_diff = checked_sqrt(rad);
    return {half_sum + half_diff, half_sum - half_diff};
}

std::vector<Rational> quadratic_formula_oracle(const Rational& a, const Rational& b,
                                               const Rational& c) {
    require(!a.is_zero(), "quadratic needs a != 0");
    const Rational discriminant = square(b) - Rational(4) * a * c;
    if (discriminant < kZero)
        throw Error(ErrorCode::NegativeDiscriminant, discriminant.to_string());
    const Rational s = checked_sqrt(discriminant);
    const Rational twice_a = kTwo * a;
    std::vector<Rational> roots{(-b - s) / twice_a, (-b + s) / twice_a};
    std::sort(roots.begin(), roots.end());
    if (roots[0] == roots[1])
        roots.pop_back();
    return roots;
}

RootCheck verify_root(const QuadraticProblem& problem, const Rational& candidate) {
    Rational r = problem.residual(candidate);
    return RootCheck{r.is_zero(), std::move(r)};
}

} // namespace susa
