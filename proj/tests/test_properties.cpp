#include "property_checks.hpp"

#include <doctest.h>

using namespace susa_checks;

namespace {
constexpr int kCases = 1000;
}

TEST_CASE("property: parse/format roundtrip on 60-smooth rationals") {
    std::mt19937_64 gen(0xB1A5u);
    CHECK(prop_roundtrip(gen, kCases) == "");
}

TEST_CASE("property: value(\"A;B\") = value(\"A\") + value(\"0;B\")") {
    std::mt19937_64 gen(0xC0DEu);
    CHECK(prop_parse_homomorphism(gen, kCases) == "");
}

TEST_CASE("property: reciprocal(v) * v = 1") {
    std::mt19937_64 gen(0xFACEu);
    CHECK(prop_reciprocal(gen, kCases) == "");
}

TEST_CASE("property: sqrt_exact(v)^2 = v where defined") {
    std::mt19937_64 gen(0xBEEFu);
    CHECK(prop_sqrt(gen, kCases) == "");
}

TEST_CASE("property: binomial and difference-of-squares identities") {
    std::mt19937_64 gen(0xAB1Eu);
    CHECK(prop_identities(gen, kCases) == "");
}

TEST_CASE("property: scribal solvers agree with the quadratic formula") {
    std::mt19937_64 gen(0x5EEDu);
    CHECK(prop_solvers_vs_oracle(gen, kCases) == "");
}

TEST_CASE("property: forward/backward gap-problem consistency") {
    std::mt19937_64 gen(0x6A90u);
    CHECK(prop_gap_roundtrip(gen, kCases) == "");
}
