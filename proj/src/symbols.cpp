#include "wli/symbols.hpp"

#include <cstdlib>
#include <stdexcept>

namespace wli {

namespace {
constexpr std::array<std::string_view, kSymbolCount> kSymbolNames = {
    "a", "ab", "ba", "b", "bc", "cb", "c", "cd", "dc", "d"};
constexpr std::array<std::string_view, kLabelCount + 1> kLabelNames = {
    "A", "OA", "M", "OB", "MTC", "null"};
}  // namespace

std::string_view to_string(VshSymbol s) {
    return kSymbolNames[static_cast<int>(s)];
}

std::string_view to_string(DepositionLabel l) {
    return kLabelNames[static_cast<int>(l)];
}

VshSymbol parse_symbol(std::string_view text) {
    for (int i = 0; i < kSymbolCount; ++i) {
        if (text == kSymbolNames[i]) return static_cast<VshSymbol>(i);
    }
    throw std::invalid_argument("unknown Vsh symbol: " + std::string(text));
}

DepositionLabel parse_label(std::string_view text) {
    for (int i = 0; i <= kLabelCount; ++i) {
        if (text == kLabelNames[i]) return static_cast<DepositionLabel>(i);
    }
    throw std::invalid_argument("unknown depositional label: " +
                                std::string(text));
}

int symbol_distance(VshSymbol x, VshSymbol y) {
    return std::abs(symbol_index(x) - symbol_index(y));
}

int label_distance(DepositionLabel x, DepositionLabel y) {
    if (x == DepositionLabel::Null || y == DepositionLabel::Null) {
        throw std::invalid_argument("label_distance is undefined for null");
    }
    return std::abs(label_index(x) - label_index(y));
}

}  // namespace wli
