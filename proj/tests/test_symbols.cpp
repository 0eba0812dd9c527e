#include <doctest.h>

#include <stdexcept>

#include "wli/symbols.hpp"

using namespace wli;

TEST_CASE("symbol alphabet round-trips through text") {
    for (VshSymbol s : all_symbols()) {
        CHECK(parse_symbol(to_string(s)) == s);
    }
    CHECK(to_string(VshSymbol::a) == "a");
    CHECK(to_string(VshSymbol::ab) == "ab");
    CHECK(to_string(VshSymbol::ba) == "ba");
    CHECK(to_string(VshSymbol::d) == "d");
    CHECK_THROWS_AS(parse_symbol("ad"), std::invalid_argument);
    CHECK_THROWS_AS(parse_symbol(""), std::invalid_argument);
}

TEST_CASE("label set round-trips through text, including null") {
    for (DepositionLabel l : all_labels()) {
        CHECK(parse_label(to_string(l)) == l);
    }
    CHECK(parse_label("null") == DepositionLabel::Null);
    CHECK(to_string(DepositionLabel::Null) == "null");
    CHECK_THROWS_AS(parse_label("X"), std::invalid_argument);
}

TEST_CASE("symbol distance counts alphabet jumps") {
    CHECK(symbol_distance(VshSymbol::a, VshSymbol::a) == 0);
    CHECK(symbol_distance(VshSymbol::a, VshSymbol::ab) == 1);
    CHECK(symbol_distance(VshSymbol::ba, VshSymbol::dc) == 6);
    CHECK(symbol_distance(VshSymbol::a, VshSymbol::d) == 9);
    CHECK(symbol_distance(VshSymbol::d, VshSymbol::a) == 9);
}

TEST_CASE("label distance counts jumps in the fixed order") {
    CHECK(label_distance(DepositionLabel::A, DepositionLabel::OA) == 1);
    CHECK(label_distance(DepositionLabel::A, DepositionLabel::MTC) == 4);
    CHECK(label_distance(DepositionLabel::M, DepositionLabel::M) == 0);
    CHECK(label_distance(DepositionLabel::OB, DepositionLabel::OA) == 2);
    CHECK_THROWS_AS(label_distance(DepositionLabel::Null, DepositionLabel::A),
                    std::invalid_argument);
    CHECK_THROWS_AS(label_distance(DepositionLabel::A, DepositionLabel::Null),
                    std::invalid_argument);
}

TEST_CASE("distances are metrics over the enumerations") {
    auto syms = all_symbols();
    for (VshSymbol x : syms) {
        for (VshSymbol y : syms) {
            CHECK(symbol_distance(x, y) == symbol_distance(y, x));
            CHECK((symbol_distance(x, y) == 0) == (x == y));
            for (VshSymbol z : syms) {
                CHECK(symbol_distance(x, z) <=
                      symbol_distance(x, y) + symbol_distance(y, z));
            }
        }
    }
    for (DepositionLabel x : all_labels()) {
        for (DepositionLabel y : all_labels()) {
            CHECK(label_distance(x, y) == label_distance(y, x));
            CHECK(label_distance(x, y) <= kMaxLabelDistance);
        }
    }
}
