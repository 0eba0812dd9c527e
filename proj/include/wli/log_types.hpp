#pragma once

#include <cstddef>
#include <vector>

#include "wli/symbols.hpp"

namespace wli {

// Depth-ordered gamma-ray log with uniform sample spacing. Depths increase
// downward (standard log convention).
struct WellLog {
    std::vector<double> depths;    // feet
    std::vector<double> readings;  // API units
    double interval = 0.5;         // feet per sample

    // Throws std::invalid_argument on non-uniform spacing, non-finite
    // readings, or fewer than 2 samples.
    void validate(double spacing_tol = 1e-6) const;

    std::size_t size() const { return readings.size(); }
};

// Volume-of-shale series, unitless in [0,1], same length as the source log.
struct VshSeries {
    std::vector<double> values;
    double interval = 0.5;

    std::size_t size() const { return values.size(); }
};

// Maximal run of consecutive Vsh samples represented by its mean.
struct Segment {
    std::size_t start_index = 0;  // inclusive
    std::size_t end_index = 0;    // inclusive
    double mean = 0.0;
    double thickness = 0.0;  // (end - start + 1) * interval

    std::size_t count() const { return end_index - start_index + 1; }
};

struct SymbolSpan {
    VshSymbol symbol;
    double thickness;  // feet
};

// One symbol per segment, in depth order.
struct SymbolSeries {
    std::vector<SymbolSpan> items;

    std::size_t size() const { return items.size(); }
};

// A depositional unit: consecutive symbols sharing one (non-null) label.
struct LabeledUnit {
    DepositionLabel label = DepositionLabel::Null;
    std::vector<SymbolSpan> symbols;
};

// A stratigrapher-assigned label position, in sample indices.
struct LabelAnchor {
    std::size_t position = 0;
    DepositionLabel label = DepositionLabel::Null;
};

}  // namespace wli
