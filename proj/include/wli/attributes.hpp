#pragma once

#include <array>
#include <span>
#include <string_view>
#include <vector>

#include "wli/log_types.hpp"

namespace wli {

// The 33 per-unit attributes: per-symbol thickness percentage, accumulated
// thickness and largest single-entry thickness, plus the three sequence
// attributes.
struct AttributeVector {
    std::array<double, kSymbolCount> pct{};
    std::array<double, kSymbolCount> thickness{};
    std::array<double, kSymbolCount> max{};
    double variation = 0.0;
    double total_thickness = 0.0;
    int no_segments = 0;
};

inline constexpr int kAttributeCount = 33;

// Attribute ids: 0..9 symbol%, 10..19 symbol_thickness, 20..29 symbol_max,
// 30 variation, 31 total_thickness, 32 no_segments.
double attribute_value(const AttributeVector& attrs, int id);
std::string_view attribute_name(int id);
int parse_attribute(std::string_view name);

// Mean index-distance between consecutive symbols; 0 for a single symbol.
double variation(std::span<const VshSymbol> symbols);

AttributeVector compute_attributes(std::span<const SymbolSpan> unit);

inline AttributeVector compute_attributes(const LabeledUnit& unit) {
    return compute_attributes(std::span<const SymbolSpan>(unit.symbols));
}

// Incremental attribute database for the transducer's accumulating buffer.
class AttributeAccumulator {
public:
    void add(VshSymbol symbol, double thickness);
    void clear();
    bool empty() const { return attrs_.no_segments == 0; }
    const AttributeVector& attributes() const { return attrs_; }
    double total_thickness() const { return attrs_.total_thickness; }

private:
    AttributeVector attrs_;
    double distance_sum_ = 0.0;
    VshSymbol last_symbol_ = VshSymbol::a;
};

}  // namespace wli
