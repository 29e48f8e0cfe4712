#pragma once

#include <susa/rational.hpp>

#include <string>
#include <vector>

namespace susa {

/// One imperative computation step, mirroring the tablets' "halve ...",
/// "square ...", "you see ..." style. `result` always equals the exact
/// recomputation of label(operands); replay_step checks that.
struct TraceStep {
    std::string label;
    std::vector<Rational> operands;
    Rational result;
    std::string tablet_line; // optional citation, e.g. "SMT 20 Obv. L5"
};

using Trace = std::vector<TraceStep>;

/// Recomputes a step from its label and operands.
/// Labels: halve, square, add, subtract, multiply, scale, extract-root,
/// reciprocal, equate.
Rational replay_step(const TraceStep& step);

/// "label | operands | result", numerals where renderable.
/// e.g. "multiply | 2;15 × 0;13,20 | 0;30"
std::string render_step(const TraceStep& step);

std::string render_trace(const Trace& trace);

} // namespace susa
