#include <susa/trace.hpp>

#include <susa/numeral.hpp>

namespace susa {

namespace {

void expect_arity(const TraceStep& step, std::size_t n) {
    if (step.operands.size() != n)
        throw Error(ErrorCode::InvalidProblem,
                    "step '" + step.label + "' expects " + std::to_string(n) + " operands");
}

} // namespace

Rational replay_step(const TraceStep& step) {
    const auto& ops = step.operands;
    if (step.label == "halve") {
        expect_arity(step, 1);
        return ops[0] / Rational(2);
    }
    if (step.label == "square") {
        expect_arity(step, 1);
        return square(ops[0]);
    }
    if (step.label == "add") {
        expect_arity(step, 2);
        return ops[0] + ops[1];
    }
    if (step.label == "subtract") {
        expect_arity(step, 2);
        return ops[0] - ops[1];
    }
    if (step.label == "multiply" || step.label == "scale") {
        expect_arity(step, 2);
        return ops[0] * ops[1];
    }
    if (step.label == "extract-root") {
        expect_arity(step, 1);
        const auto root = sqrt_exact(ops[0]);
        if (!root)
            throw Error(ErrorCode::NonPerfectRadicand, ops[0].to_string());
        return *root;
    }
    if (step.label == "reciprocal") {
        expect_arity(step, 1);
        return reciprocal(ops[0]);
    }
    if (step.label == "equate") {
        expect_arity(step, 1);
        return ops[0];
    }
    throw Error(ErrorCode::InvalidProblem, "unknown step label '" + step.label + "'");
}

std::string render_step(const TraceStep& step) {
    const char* sep = ", ";
    if (step.label == "add")
        sep = " + ";
    else if (step.label == "subtract")
        sep = " - ";
    else if (step.label == "multiply" || step.label == "scale")
        sep = " × ";
    std::string s = step.label + " | ";
    for (std::size_t i = 0; i < step.operands.size(); ++i) {
        if (i) s += sep;
        s += format_value(step.operands[i]);
    }
    return s + " | " + format_value(step.result);
}

std::string render_trace(const Trace& trace) {
    std::string out;
    for (const auto& step : trace)
        out += render_step(step) + "\n";
    return out;
}

} // namespace susa
