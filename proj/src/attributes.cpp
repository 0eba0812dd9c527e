#include "wli/attributes.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace wli {

namespace {

std::array<std::string, kAttributeCount> make_names() {
    std::array<std::string, kAttributeCount> names;
    for (int s = 0; s < kSymbolCount; ++s) {
        std::string sym(to_string(static_cast<VshSymbol>(s)));
        names[s] = sym + "%";
        names[10 + s] = sym + "_thickness";
        names[20 + s] = sym + "_max";
    }
    names[30] = "variation";
    names[31] = "total_thickness";
    names[32] = "no_segments";
    return names;
}

const std::array<std::string, kAttributeCount>& names() {
    static const auto n = make_names();
    return n;
}

}  // namespace

double attribute_value(const AttributeVector& attrs, int id) {
    if (id < 0 || id >= kAttributeCount) {
        throw std::out_of_range("attribute id out of range");
    }
    if (id < 10) return attrs.pct[id];
    if (id < 20) return attrs.thickness[id - 10];
    if (id < 30) return attrs.max[id - 20];
    if (id == 30) return attrs.variation;
    if (id == 31) return attrs.total_thickness;
    return static_cast<double>(attrs.no_segments);
}

std::string_view attribute_name(int id) {
    if (id < 0 || id >= kAttributeCount) {
        throw std::out_of_range("attribute id out of range");
    }
    return names()[id];
}

int parse_attribute(std::string_view name) {
    for (int i = 0; i < kAttributeCount; ++i) {
        if (names()[i] == name) return i;
    }
    throw std::invalid_argument("unknown attribute: " + std::string(name));
}

double variation(std::span<const VshSymbol> symbols) {
    if (symbols.empty()) {
        throw std::invalid_argument("variation of an empty sequence");
    }
    if (symbols.size() < 2) return 0.0;
    double sum = 0.0;
    for (std::size_t i = 1; i < symbols.size(); ++i) {
        sum += symbol_distance(symbols[i - 1], symbols[i]);
    }
    return sum / static_cast<double>(symbols.size() - 1);
}

AttributeVector compute_attributes(std::span<const SymbolSpan> unit) {
    if (unit.empty()) {
        throw std::invalid_argument("cannot compute attributes of empty unit");
    }
    AttributeAccumulator acc;
    for (const SymbolSpan& span : unit) {
        if (!(span.thickness > 0.0)) {
            throw std::invalid_argument("symbol thickness must be positive");
        }
        acc.add(span.symbol, span.thickness);
    }
    return acc.attributes();
}

void AttributeAccumulator::add(VshSymbol symbol, double thickness) {
    int s = symbol_index(symbol);
    attrs_.thickness[s] += thickness;
    attrs_.max[s] = std::max(attrs_.max[s], thickness);
    attrs_.total_thickness += thickness;
    if (attrs_.no_segments > 0) {
        distance_sum_ += symbol_distance(last_symbol_, symbol);
    }
    last_symbol_ = symbol;
    attrs_.no_segments++;
    attrs_.variation = attrs_.no_segments > 1
                           ? distance_sum_ /
                                 static_cast<double>(attrs_.no_segments - 1)
                           : 0.0;
    for (int i = 0; i < kSymbolCount; ++i) {
        attrs_.pct[i] = attrs_.thickness[i] / attrs_.total_thickness;
    }
}

void AttributeAccumulator::clear() {
    attrs_ = AttributeVector{};
    distance_sum_ = 0.0;
    last_symbol_ = VshSymbol::a;
}

}  // namespace wli
