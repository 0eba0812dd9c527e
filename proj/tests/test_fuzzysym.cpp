#include <doctest.h>

#include <stdexcept>

#include "wli/fuzzysym.hpp"

using namespace wli;

TEST_CASE("build_mfs reproduces the published trapezoids for 0.3/0.5/0.7") {
    MFBank bank = build_mfs(CutPoints{0.3, 0.5, 0.7});
    const auto& a = bank.mfs[0];
    const auto& b = bank.mfs[1];
    const auto& c = bank.mfs[2];
    const auto& d = bank.mfs[3];
    CHECK(a.f1 == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(a.s1 == doctest::Approx(0.075).epsilon(1e-12));
    CHECK(a.s2 == doctest::Approx(0.225).epsilon(1e-12));
    CHECK(a.f2 == doctest::Approx(0.375).epsilon(1e-12));
    CHECK(b.f1 == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(b.s1 == doctest::Approx(0.35).epsilon(1e-12));
    CHECK(b.s2 == doctest::Approx(0.45).epsilon(1e-12));
    CHECK(b.f2 == doctest::Approx(0.55).epsilon(1e-12));
    CHECK(c.f1 == doctest::Approx(0.45).epsilon(1e-12));
    CHECK(c.s1 == doctest::Approx(0.55).epsilon(1e-12));
    CHECK(c.s2 == doctest::Approx(0.65).epsilon(1e-12));
    CHECK(c.f2 == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(d.f1 == doctest::Approx(0.625).epsilon(1e-12));
    CHECK(d.s1 == doctest::Approx(0.775).epsilon(1e-12));
    CHECK(d.s2 == doctest::Approx(0.925).epsilon(1e-12));
    CHECK(d.f2 == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("build_mfs rejects unordered cut points") {
    CHECK_THROWS_AS(build_mfs(CutPoints{0.5, 0.3, 0.7}),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_mfs(CutPoints{0.0, 0.5, 0.7}),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_mfs(CutPoints{0.3, 0.5, 1.0}),
                    std::invalid_argument);
}

TEST_CASE("membership is the standard trapezoid evaluation") {
    TrapezoidMF mf{0.2, 0.4, 0.6, 0.8};
    CHECK(membership(mf, 0.1) == doctest::Approx(0.0));
    CHECK(membership(mf, 0.2) == doctest::Approx(0.0));
    CHECK(membership(mf, 0.3) == doctest::Approx(0.5));
    CHECK(membership(mf, 0.5) == doctest::Approx(1.0));
    CHECK(membership(mf, 0.7) == doctest::Approx(0.5));
    CHECK(membership(mf, 0.9) == doctest::Approx(0.0));
    // Degenerate edge: flat top extends to the closed end.
    TrapezoidMF left{0.0, 0.0, 0.5, 0.7};
    CHECK(membership(left, 0.0) == doctest::Approx(1.0));
}

TEST_CASE("symbolize_segment picks the dominant membership") {
    MFBank bank = build_mfs(CutPoints{0.3, 0.5, 0.7});
    CHECK(symbolize_segment(bank, 0.1) == VshSymbol::a);
    CHECK(symbolize_segment(bank, 0.4) == VshSymbol::b);
    CHECK(symbolize_segment(bank, 0.6) == VshSymbol::c);
    CHECK(symbolize_segment(bank, 0.85) == VshSymbol::d);
    // a stronger than b below the cut, b stronger above it.
    CHECK(symbolize_segment(bank, 0.27) == VshSymbol::ab);
    CHECK(symbolize_segment(bank, 0.32) == VshSymbol::ba);
    // An exact tie leads with the lower base symbol.
    CHECK(symbolize_segment(bank, 0.3) == VshSymbol::ab);
    CHECK(symbolize_segment(bank, 0.5) == VshSymbol::bc);
    CHECK(symbolize_segment(bank, 0.7) == VshSymbol::cd);
    // Domain endpoints stay inside the alphabet.
    CHECK(symbolize_segment(bank, 0.0) == VshSymbol::a);
    CHECK(symbolize_segment(bank, 1.0) == VshSymbol::d);
}

TEST_CASE("symbol index is monotone in the segment mean") {
    MFBank bank = build_mfs(CutPoints{0.3, 0.5, 0.7});
    int last = 0;
    for (int i = 0; i <= 1000; ++i) {
        double mean = static_cast<double>(i) / 1000.0;
        int idx = symbol_index(symbolize_segment(bank, mean));
        CHECK(idx >= last);
        last = idx;
    }
    CHECK(last == symbol_index(VshSymbol::d));
}

TEST_CASE("at most two adjacent memberships are positive at any mean") {
    MFBank bank = build_mfs(CutPoints{0.25, 0.55, 0.8});
    for (int i = 0; i <= 1000; ++i) {
        double mean = static_cast<double>(i) / 1000.0;
        int positive = 0;
        int first = -1, last_pos = -1;
        for (int m = 0; m < 4; ++m) {
            if (membership(bank.mfs[m], mean) > 0.0) {
                ++positive;
                if (first < 0) first = m;
                last_pos = m;
            }
        }
        CHECK(positive >= 0);
        CHECK(positive <= 2);
        if (positive == 2) CHECK(last_pos - first == 1);
    }
}

TEST_CASE("symbolize_series carries segment thickness through") {
    MFBank bank = build_mfs(CutPoints{0.3, 0.5, 0.7});
    SegmentationResult segs;
    segs.segments = {{0, 3, 0.1, 2.0}, {4, 5, 0.85, 1.0}};
    SymbolSeries out = symbolize_series(bank, segs);
    REQUIRE(out.size() == 2);
    CHECK(out.items[0].symbol == VshSymbol::a);
    CHECK(out.items[0].thickness == doctest::Approx(2.0));
    CHECK(out.items[1].symbol == VshSymbol::d);
    CHECK(out.items[1].thickness == doctest::Approx(1.0));
}

TEST_CASE("materialize_units attaches symbol runs to unit spans") {
    SymbolSeries symbols;
    symbols.items = {{VshSymbol::a, 2.0},
                     {VshSymbol::b, 1.0},
                     {VshSymbol::d, 3.0},
                     {VshSymbol::c, 0.5}};
    std::vector<UnitSpan> spans = {{DepositionLabel::A, 0, 1},
                                   {DepositionLabel::M, 2, 3}};
    auto units = materialize_units(spans, symbols);
    REQUIRE(units.size() == 2);
    CHECK(units[0].label == DepositionLabel::A);
    REQUIRE(units[0].symbols.size() == 2);
    CHECK(units[0].symbols[1].symbol == VshSymbol::b);
    CHECK(units[1].symbols[0].thickness == doctest::Approx(3.0));
}
