#pragma once

#include <susa/solver.hpp>

namespace susa {

/// Constants of the apusamikkum, the concave quadrilateral left when four
/// quadrants of radius r are removed from a square of side 2r. For
/// quadrant arc length x and the Babylonian convention pi = 3:
///   r = (2/3) x,  area = (4/9) x^2 = "0;26,40" x^2,
///   diagonal = (4/3) x = "1;20" x.
struct DerivedConstant {
    Rational value;
    Trace trace;
};

/// area / x^2 = 4/9, with the derivation evaluated at x = 1:
/// the bounding square (2r)^2 minus four quadrants (pi r^2 with pi = 3)
/// leaves r^2, and r = (2/3) x.
DerivedConstant area_constant();

/// diagonal / x = 4/3.
Rational diagonal_constant();

enum class Smt20Variant {
    AreaPlusLength,     // (4/9) x^2 + x = total
    AreaLengthDiagonal, // (4/9) x^2 + (1 + 4/3) x = total
};

/// The two SMT 20 problems: area plus length (plus diagonal) of an
/// apusamikkum equals a stated total; solved through the GENERAL
/// normalization. Root is the quadrant length x.
Solution solve_smt20(Smt20Variant variant, const Rational& total);

struct GapSquareSolution {
    Rational x;          // quadrant length
    Rational outer_side; // (4/3) x + 2 m
    Trace trace;
};

/// SMT 21 first problem: the boundary square is pushed out by margin m on
/// every side in both directions; the area between the outer square and
/// the apusamikkum is `gap`. Solves
///   ((4/3) x + 2m)^2 - (4/9) x^2 = gap.
GapSquareSolution solve_gap_square(const Rational& margin, const Rational& gap);

struct GapRectangleSolution {
    Rational x;
    Rational side_y; // (4/3) x + u_total
    Rational side_z; // (4/3) x + v_total
    Trace trace;
};

/// SMT 21 second problem: unequal total extensions u and v per side pair
/// turn the outer boundary into a rectangle. Solves
///   ((4/3) x + u) ((4/3) x + v) - (4/9) x^2 = gap.
GapRectangleSolution solve_gap_rectangle(const Rational& u_total, const Rational& v_total,
                                         const Rational& gap);

} // namespace susa
