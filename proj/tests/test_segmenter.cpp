#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "wli/rng.hpp"
#include "wli/segmenter.hpp"

using namespace wli;

namespace {

WellLog make_log(std::vector<double> readings, double interval = 0.5) {
    WellLog log;
    log.interval = interval;
    log.readings = std::move(readings);
    for (std::size_t i = 0; i < log.readings.size(); ++i) {
        log.depths.push_back(1000.0 + static_cast<double>(i) * interval);
    }
    return log;
}

VshSeries make_series(std::vector<double> values) {
    VshSeries s;
    s.values = std::move(values);
    return s;
}

// Straightforward quadratic-time reference of the same greedy policy.
SegmentationResult naive_segment(const VshSeries& series) {
    SegmentationResult r;
    for (std::size_t i = 0; i < series.size(); ++i) {
        Segment seg;
        seg.start_index = seg.end_index = i;
        seg.mean = series.values[i];
        seg.thickness = series.interval;
        r.segments.push_back(seg);
    }
    auto rebuild = [&](Segment& seg) {
        double sum = 0.0;
        for (std::size_t i = seg.start_index; i <= seg.end_index; ++i) {
            sum += series.values[i];
        }
        seg.mean = sum / static_cast<double>(seg.count());
        seg.thickness = static_cast<double>(seg.count()) * series.interval;
    };
    while (r.segments.size() > 1) {
        std::size_t best = 0;
        double best_cost = merge_cost(r.segments[0], r.segments[1], series);
        for (std::size_t i = 1; i + 1 < r.segments.size(); ++i) {
            double c = merge_cost(r.segments[i], r.segments[i + 1], series);
            if (c < best_cost) {
                best_cost = c;
                best = i;
            }
        }
        if (best_cost >= 1.0) break;  // f would not strictly decrease
        r.segments[best].end_index = r.segments[best + 1].end_index;
        rebuild(r.segments[best]);
        r.segments.erase(r.segments.begin() +
                         static_cast<std::ptrdiff_t>(best) + 1);
    }
    r.total_error = 0.0;
    for (const Segment& s : r.segments) {
        r.total_error += segment_error(s, series);
    }
    r.f_value = static_cast<double>(r.segments.size()) + r.total_error;
    return r;
}

}  // namespace

TEST_CASE("vsh_convert maps linearly between explicit bounds") {
    WellLog log = make_log({20.0, 60.0, 100.0, 10.0, 140.0});
    VshSeries v = vsh_convert(log, 20.0, 100.0);
    CHECK(v.values[0] == doctest::Approx(0.0));
    CHECK(v.values[1] == doctest::Approx(0.5));
    CHECK(v.values[2] == doctest::Approx(1.0));
    CHECK(v.values[3] == doctest::Approx(0.0));  // clamped below
    CHECK(v.values[4] == doctest::Approx(1.0));  // clamped above
    CHECK(v.interval == log.interval);
}

TEST_CASE("vsh_convert defaults the bounds to the dataset extremes") {
    WellLog log = make_log({30.0, 50.0, 70.0});
    VshSeries v = vsh_convert(log);
    CHECK(v.values[0] == doctest::Approx(0.0));
    CHECK(v.values[1] == doctest::Approx(0.5));
    CHECK(v.values[2] == doctest::Approx(1.0));
}

TEST_CASE("vsh_convert rejects degenerate bounds and bad logs") {
    WellLog log = make_log({30.0, 50.0});
    CHECK_THROWS_AS(vsh_convert(log, 80.0, 80.0), std::invalid_argument);
    CHECK_THROWS_AS(vsh_convert(log, 90.0, 10.0), std::invalid_argument);
    WellLog uneven = make_log({30.0, 50.0, 70.0});
    uneven.depths[2] += 0.3;
    CHECK_THROWS_AS(vsh_convert(uneven), std::invalid_argument);
}

TEST_CASE("merge_cost equals the pooled-variance increase") {
    VshSeries s = make_series({0.0, 1.0});
    auto r0 = naive_segment(make_series({0.0}));  // cheap Segment builders
    (void)r0;
    Segment left{0, 0, 0.0, 0.5};
    Segment right{1, 1, 1.0, 0.5};
    // Single samples 0 and 1: (1*1)/(1+1) * (0-1)^2 = 0.5.
    CHECK(merge_cost(left, right, s) == doctest::Approx(0.5));

    VshSeries t = make_series({0.0, 0.0, 0.6});
    Segment l2{0, 1, 0.0, 1.0};
    Segment r2{2, 2, 0.6, 0.5};
    // (2*1)/(2+1) * 0.6^2 = 0.24.
    CHECK(merge_cost(l2, r2, t) == doctest::Approx(0.24));

    CHECK_THROWS_AS(merge_cost(right, left, s), std::invalid_argument);
}

TEST_CASE("segment keeps a clean two-block step as two segments") {
    SegmentationResult r = segment(make_series({0.0, 0.0, 1.0, 1.0}));
    REQUIRE(r.segments.size() == 2);
    CHECK(r.segments[0].start_index == 0);
    CHECK(r.segments[0].end_index == 1);
    CHECK(r.segments[0].mean == doctest::Approx(0.0));
    CHECK(r.segments[1].mean == doctest::Approx(1.0));
    CHECK(r.total_error == doctest::Approx(0.0));
    CHECK(r.f_value == doctest::Approx(2.0));
}

TEST_CASE("segment collapses a constant series into one segment") {
    SegmentationResult r =
        segment(make_series(std::vector<double>(40, 0.37)));
    REQUIRE(r.segments.size() == 1);
    CHECK(r.segments[0].count() == 40);
    CHECK(r.segments[0].mean == doctest::Approx(0.37));
    CHECK(r.total_error == doctest::Approx(0.0));
}

TEST_CASE("segment matches the quadratic reference on random series") {
    Rng rng(42);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> values;
        std::size_t n = 20 + rng.index(60);
        double level = rng.real();
        for (std::size_t i = 0; i < n; ++i) {
            if (rng.chance(0.15)) level = rng.real();
            values.push_back(level + 0.05 * (rng.real() - 0.5));
        }
        VshSeries series = make_series(values);
        SegmentationResult fast = segment(series);
        SegmentationResult slow = naive_segment(series);
        REQUIRE(fast.segments.size() == slow.segments.size());
        for (std::size_t i = 0; i < fast.segments.size(); ++i) {
            CHECK(fast.segments[i].start_index ==
                  slow.segments[i].start_index);
            CHECK(fast.segments[i].end_index == slow.segments[i].end_index);
            CHECK(fast.segments[i].mean ==
                  doctest::Approx(slow.segments[i].mean));
        }
        CHECK(fast.f_value == doctest::Approx(slow.f_value));
    }
}

TEST_CASE("segments tile the series and report sample means") {
    Rng rng(7);
    std::vector<double> values;
    for (int i = 0; i < 120; ++i) values.push_back(rng.real());
    VshSeries series = make_series(values);
    SegmentationResult r = segment(series);
    std::size_t expect = 0;
    for (const Segment& s : r.segments) {
        CHECK(s.start_index == expect);
        REQUIRE(s.end_index >= s.start_index);
        double sum = 0.0;
        for (std::size_t i = s.start_index; i <= s.end_index; ++i) {
            sum += values[i];
        }
        CHECK(s.mean ==
              doctest::Approx(sum / static_cast<double>(s.count())));
        CHECK(s.thickness ==
              doctest::Approx(static_cast<double>(s.count()) *
                              series.interval));
        expect = s.end_index + 1;
    }
    CHECK(expect == series.size());
}

TEST_CASE("align_labels snaps anchors to the nearest boundary") {
    // Two clean blocks; boundaries end at samples 3 and 7.
    VshSeries series =
        make_series({0.0, 0.0, 0.0, 0.0, 1.0, 1.0, 1.0, 1.0});
    SegmentationResult r = segment(series);
    REQUIRE(r.segments.size() == 2);
    std::vector<LabelAnchor> anchors = {{2, DepositionLabel::A},
                                        {7, DepositionLabel::M}};
    AlignmentResult a = align_labels(r, anchors, series);
    REQUIRE(a.units.size() == 2);
    CHECK(a.units[0].label == DepositionLabel::A);
    CHECK(a.units[0].first_segment == 0);
    CHECK(a.units[0].last_segment == 0);
    CHECK(a.units[1].label == DepositionLabel::M);
    CHECK(a.units[1].first_segment == 1);
    CHECK(a.units[1].last_segment == 1);
}

TEST_CASE("align_labels splits a segment carrying two interior anchors") {
    VshSeries series = make_series(std::vector<double>(12, 0.4));
    SegmentationResult r = segment(series);
    REQUIRE(r.segments.size() == 1);
    std::vector<LabelAnchor> anchors = {{3, DepositionLabel::A},
                                        {8, DepositionLabel::OA},
                                        {11, DepositionLabel::M}};
    AlignmentResult a = align_labels(r, anchors, series);
    REQUIRE(a.segmentation.segments.size() == 3);
    CHECK(a.segmentation.segments[0].end_index == 3);
    CHECK(a.segmentation.segments[1].end_index == 8);
    CHECK(a.segmentation.segments[2].end_index == 11);
    REQUIRE(a.units.size() == 3);
    CHECK(a.units[0].first_segment == 0);
    CHECK(a.units[0].last_segment == 0);
    CHECK(a.units[2].last_segment == 2);
    // Segment count changed, so f was recomputed.
    CHECK(a.segmentation.f_value == doctest::Approx(3.0));
}

TEST_CASE("align_labels cuts a new boundary when anchors would collide") {
    VshSeries series =
        make_series({0.0, 0.0, 0.0, 0.0, 1.0, 1.0, 1.0, 1.0});
    SegmentationResult r = segment(series);
    REQUIRE(r.segments.size() == 2);
    // Both anchors snap to the boundary at sample 3; the second is resolved
    // by splitting the lower segment at its exact position instead.
    std::vector<LabelAnchor> anchors = {{2, DepositionLabel::A},
                                        {4, DepositionLabel::M}};
    AlignmentResult a = align_labels(r, anchors, series);
    REQUIRE(a.segmentation.segments.size() == 3);
    CHECK(a.segmentation.segments[1].start_index == 4);
    CHECK(a.segmentation.segments[1].end_index == 4);
    REQUIRE(a.units.size() == 2);
    CHECK(a.units[0].label == DepositionLabel::A);
    CHECK(a.units[0].last_segment == 0);
    CHECK(a.units[1].label == DepositionLabel::M);
    CHECK(a.units[1].first_segment == 1);
    CHECK(a.units[1].last_segment == 1);
}

TEST_CASE("align_labels validates anchor ordering and bounds") {
    VshSeries series = make_series({0.0, 0.0, 1.0, 1.0});
    SegmentationResult r = segment(series);
    CHECK_THROWS_AS(
        align_labels(r, {{9, DepositionLabel::A}}, series),
        std::invalid_argument);
    CHECK_THROWS_AS(
        align_labels(
            r, {{3, DepositionLabel::A}, {1, DepositionLabel::M}}, series),
        std::invalid_argument);
    CHECK_THROWS_AS(
        align_labels(r, {{3, DepositionLabel::Null}}, series),
        std::invalid_argument);
}
