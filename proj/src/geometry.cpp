#include <susa/geometry.hpp>

namespace susa {

namespace {

const Rational kAreaConstant(4, 9);     // "0;26,40"
const Rational kDiagonalConstant(4, 3); // "1;20"
const Rational kPi(3);

TraceStep step(std::string label, std::vector<Rational> operands, Rational result,
               std::string tablet_line = {}) {
    return TraceStep{std::move(label), std::move(operands), std::move(result),
                     std::move(tablet_line)};
}

void annotate(Trace& trace, std::initializer_list<const char*> lines) {
    std::size_t i = 0;
    for (const char* line : lines) {
        if (i >= trace.size())
            break;
        trace[i++].tablet_line = line;
    }
}

} // namespace

DerivedConstant area_constant() {
    const Rational one(1), two(2);
    Trace trace;
    const Rational r = Rational(2, 3) * one;
    trace.push_back(step("multiply", {Rational(2, 3), one}, r, "r = (2/3) x at x = 1"));
    const Rational side = two * r;
    trace.push_back(step("multiply", {two, r}, side, "bounding square side 2r"));
    const Rational side_sq = square(side);
    trace.push_back(step("square", {side}, side_sq, "bounding square area"));
    const Rational r_sq = square(r);
    trace.push_back(step("square", {r}, r_sq));
    const Rational quadrants = kPi * r_sq;
    trace.push_back(step("multiply", {kPi, r_sq}, quadrants, "four quadrants, pi = 3"));
    const Rational area = side_sq - quadrants;
    trace.push_back(step("subtract", {side_sq, quadrants}, area, "apusamikkum area at x = 1"));
    return DerivedConstant{area, std::move(trace)};
}

Rational diagonal_constant() {
    return kDiagonalConstant;
}

Solution solve_smt20(Smt20Variant variant, const Rational& total) {
    if (total <= Rational(0))
        throw Error(ErrorCode::InvalidProblem, "total must be positive");
    const Rational one(1);
    Rational linear = one;
    if (variant == Smt20Variant::AreaLengthDiagonal)
        linear = one + kDiagonalConstant; // "2;20"

    Solution solution = solve_general(kAreaConstant, linear, total);
    if (variant == Smt20Variant::AreaLengthDiagonal) {
        // The scribe forms the combined coefficient 1 + 1;20 = 2;20 right
        // after scaling the total (Rev. L16-17).
        solution.trace.insert(solution.trace.begin() + 1,
                              step("add", {one, kDiagonalConstant}, linear));
        annotate(solution.trace,
                 {"SMT 20 Rev. L14-15", "Rev. L16-17", "Rev. L18", "Rev. L18", "Rev. L19-20",
                  "Rev. L21", "Rev. L22-23", "Rev. L23-24", "Rev. L25-26"});
    } else {
        annotate(solution.trace,
                 {"SMT 20 Obv. L3-4", "Obv. L5", "Obv. L6", "Obv. L6-7", "Obv. L7-8",
                  "Obv. L8-9", "Obv. L10-11", "Obv. L11-12"});
    }
    return solution;
}

GapSquareSolution solve_gap_square(const Rational& margin, const Rational& gap) {
    if (margin < Rational(0))
        throw Error(ErrorCode::InvalidProblem, "margin must be nonnegative");
    Trace trace;
    const Rational two(2);
    const Rational doubled = margin * two;
    trace.push_back(step("multiply", {margin, two}, doubled));
    const Rational corner_area = square(doubled);
    trace.push_back(step("square", {doubled}, corner_area));
    if (gap <= corner_area)
        throw Error(ErrorCode::GapTooSmall,
                    "gap " + gap.to_string() + " must exceed (2m)^2 = " + corner_area.to_string());
    const Rational reduced_gap = gap - corner_area;
    trace.push_back(step("subtract", {gap, corner_area}, reduced_gap));

    const Rational diag_sq = square(kDiagonalConstant);
    trace.push_back(step("square", {kDiagonalConstant}, diag_sq));
    const Rational lead = diag_sq - kAreaConstant; // (4/3)^2 - 4/9 = 4/3
    trace.push_back(step("subtract", {diag_sq, kAreaConstant}, lead));

    const Rational scaled = lead * reduced_gap;
    trace.push_back(step("multiply", {lead, reduced_gap}, scaled));
    const Rational half_lin = lead * doubled; // half of B = 2*(2m)*(4/3), in y = (4/3)x
    trace.push_back(step("multiply", {lead, doubled}, half_lin));
    const Rational half_sq = square(half_lin);
    trace.push_back(step("square", {half_lin}, half_sq));
    const Rational radicand = half_sq + scaled;
    trace.push_back(step("add", {half_sq, scaled}, radicand));
    const auto root = sqrt_exact(radicand);
    if (!root)
        throw Error(ErrorCode::NonPerfectRadicand,
                    radicand.to_string() + " is not an exact rational square");
    trace.push_back(step("extract-root", {radicand}, *root));
    const Rational y = *root - half_lin;
    trace.push_back(step("subtract", {*root, half_lin}, y));
    const Rational inv = reciprocal(lead);
    trace.push_back(step("reciprocal", {lead}, inv));
    const Rational x = inv * y;
    trace.push_back(step("multiply", {inv, y}, x));
    const Rational diagonal = x * kDiagonalConstant;
    trace.push_back(step("multiply", {x, kDiagonalConstant}, diagonal));
    const Rational outer = doubled + diagonal;
    trace.push_back(step("add", {doubled, diagonal}, outer));
    annotate(trace, {"SMT 21 Obv. L4", "Obv. L5", "Obv. L5", "Obv. L8", "Obv. L8-11",
                     "Obv. L11-12", "Obv. L12-13", "Obv. L13", "Obv. L14-15", "Obv. L15-16",
                     "Obv. L16-17", "Obv. L17-18", "Obv. L18-19", "Obv. L19-20", "Obv. L21"});
    return GapSquareSolution{x, outer, std::move(trace)};
}

GapRectangleSolution solve_gap_rectangle(const Rational& u_total, const Rational& v_total,
                                         const Rational& gap) {
    if (u_total < Rational(0) || v_total < Rational(0))
        throw Error(ErrorCode::InvalidProblem, "margins must be nonnegative");
    Trace trace;
    const Rational corner_area = u_total * v_total;
    trace.push_back(step("multiply", {u_total, v_total}, corner_area));
    if (gap <= corner_area)
        throw Error(ErrorCode::GapTooSmall,
                    "gap " + gap.to_string() + " must exceed u*v = " + corner_area.to_string());
    const Rational reduced_gap = gap - corner_area;
    trace.push_back(step("subtract", {gap, corner_area}, reduced_gap));

    const Rational diag_sq = square(kDiagonalConstant);
    trace.push_back(step("square", {kDiagonalConstant}, diag_sq));
    const Rational lead = diag_sq - kAreaConstant;
    trace.push_back(step("subtract", {diag_sq, kAreaConstant}, lead));

    const Rational margin_sum = u_total + v_total;
    trace.push_back(step("add", {u_total, v_total}, margin_sum));
    const Rational half_sum = margin_sum / Rational(2);
    trace.push_back(step("halve", {margin_sum}, half_sum));
    const Rational scaled = lead * reduced_gap;
    trace.push_back(step("multiply", {lead, reduced_gap}, scaled));
    const Rational half_lin = lead * half_sum;
    trace.push_back(step("multiply", {lead, half_sum}, half_lin));
    const Rational half_sq = square(half_lin);
    trace.push_back(step("square", {half_lin}, half_sq));
    const Rational radicand = scaled + half_sq;
    trace.push_back(step("add", {scaled, half_sq}, radicand));
    const auto root = sqrt_exact(radicand);
    if (!root)
        throw Error(ErrorCode::NonPerfectRadicand,
                    radicand.to_string() + " is not an exact rational square");
    trace.push_back(step("extract-root", {radicand}, *root));
    const Rational y = *root - half_lin;
    trace.push_back(step("subtract", {*root, half_lin}, y));
    const Rational inv = reciprocal(lead);
    trace.push_back(step("reciprocal", {lead}, inv));
    const Rational x = inv * y;
    trace.push_back(step("multiply", {inv, y}, x));
    const Rational diagonal = x * kDiagonalConstant;
    trace.push_back(step("multiply", {x, kDiagonalConstant}, diagonal));
    const Rational side_z = v_total + diagonal;
    trace.push_back(step("add", {v_total, diagonal}, side_z));
    const Rational side_y = u_total + diagonal;
    trace.push_back(step("add", {u_total, diagonal}, side_y));
    annotate(trace, {"", "", "", "", "", "", "", "", "", "SMT 21 Rev. L2", "Rev. L2-3",
                     "Rev. L3-4", "Rev. L4", "Rev. L5", "Rev. L6-7", "Rev. L7-8", "Rev. L8-9"});
    return GapRectangleSolution{x, side_y, side_z, std::move(trace)};
}

} // namespace susa
