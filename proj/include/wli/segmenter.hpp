#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "wli/log_types.hpp"

namespace wli {

struct SegmentationResult {
    std::vector<Segment> segments;
    double total_error = 0.0;  // sum of per-segment squared deviations
    double f_value = 0.0;      // segment count + total_error
};

// A depositional unit expressed as a contiguous run of segment indices.
// Symbols are attached later, once the segments have been symbolized.
struct UnitSpan {
    DepositionLabel label = DepositionLabel::Null;
    std::size_t first_segment = 0;  // inclusive
    std::size_t last_segment = 0;   // inclusive
};

struct AlignmentResult {
    SegmentationResult segmentation;
    std::vector<UnitSpan> units;
};

// Normalizes GR readings to volume of shale: clamp below gr_min to 0, above
// gr_max to 1, linear in between. Bounds default to the dataset min/max.
VshSeries vsh_convert(const WellLog& log,
                      std::optional<double> gr_min = std::nullopt,
                      std::optional<double> gr_max = std::nullopt);

// Squared-deviation error of one segment over the underlying series.
double segment_error(const Segment& seg, const VshSeries& series);

// Error increase from merging two adjacent segments. Throws on non-adjacent
// input.
double merge_cost(const Segment& left, const Segment& right,
                  const VshSeries& series);

// Bottom-up greedy merge: start with one segment per sample, repeatedly merge
// the cheapest adjacent pair (ties broken toward the shallowest pair), and
// stop the first time the compromise criterion f = N + total_error would not
// strictly decrease.
SegmentationResult segment(const VshSeries& series);

// Snaps anchors to segment boundaries, splitting any segment that holds two
// or more interior anchors, and groups segments into depositional units
// delimited by consecutive anchors. Segments past the last anchor belong to
// no unit. Throws if two anchors end up on the same boundary.
AlignmentResult align_labels(const SegmentationResult& result,
                             const std::vector<LabelAnchor>& anchors,
                             const VshSeries& series);

}  // namespace wli
