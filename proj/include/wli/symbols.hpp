#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace wli {

// Ordered alphabet of Vsh symbols. The index gap between two symbols is
// their distance, so the order must never change.
enum class VshSymbol : std::uint8_t {
    a = 0, ab, ba, b, bc, cb, c, cd, dc, d
};

inline constexpr int kSymbolCount = 10;

// Depositional environment labels, ordered from sand-dominated (A) to
// chaotic (MTC). Null is a positional placeholder used only in transducer
// output and target sequences.
enum class DepositionLabel : std::uint8_t {
    A = 0, OA, M, OB, MTC, Null
};

inline constexpr int kLabelCount = 5;
inline constexpr int kMaxLabelDistance = kLabelCount - 1;

std::string_view to_string(VshSymbol s);
std::string_view to_string(DepositionLabel l);

VshSymbol parse_symbol(std::string_view text);
DepositionLabel parse_label(std::string_view text);

inline int symbol_index(VshSymbol s) { return static_cast<int>(s); }
inline int label_index(DepositionLabel l) { return static_cast<int>(l); }

// Number of jumps between two symbols in the fixed alphabet order.
int symbol_distance(VshSymbol x, VshSymbol y);

// Number of jumps between two labels in the fixed A,OA,M,OB,MTC order.
// Throws std::invalid_argument if either label is Null.
int label_distance(DepositionLabel x, DepositionLabel y);

inline constexpr std::array<VshSymbol, kSymbolCount> all_symbols() {
    return {VshSymbol::a, VshSymbol::ab, VshSymbol::ba, VshSymbol::b,
            VshSymbol::bc, VshSymbol::cb, VshSymbol::c, VshSymbol::cd,
            VshSymbol::dc, VshSymbol::d};
}

inline constexpr std::array<DepositionLabel, kLabelCount> all_labels() {
    return {DepositionLabel::A, DepositionLabel::OA, DepositionLabel::M,
            DepositionLabel::OB, DepositionLabel::MTC};
}

}  // namespace wli
