#pragma once

#include <array>

#include "wli/segmenter.hpp"

namespace wli {

struct TrapezoidMF {
    double f1 = 0.0;  // left foot
    double s1 = 0.0;  // left shoulder
    double s2 = 0.0;  // right shoulder
    double f2 = 0.0;  // right foot
};

// Piecewise-linear trapezoid membership; degenerate edges (foot equal to
// shoulder) take the flat-top value on the closed top.
double membership(const TrapezoidMF& mf, double x);

struct CutPoints {
    double t1 = 0.3;
    double t2 = 0.5;
    double t3 = 0.7;
};

// One membership function per base symbol a, b, c, d.
struct MFBank {
    std::array<TrapezoidMF, 4> mfs;
    CutPoints cuts;
};

// Builds the four trapezoids from the three cut points: each base region
// [t_lo, t_hi] gets y = (t_hi - t_lo)/4, feet at t_lo - y and t_hi + y,
// shoulders at t_lo + y and t_hi - y, except a's left foot is clamped to 0
// and d's right foot to 1. Throws on unordered cut points.
MFBank build_mfs(const CutPoints& cuts);

// Maps a segment mean to one of the 10 crisp symbols by dominant membership:
// a single positive MF gives its base symbol, two positive MFs give the
// two-letter symbol led by the stronger one (ties lead with the lower base).
VshSymbol symbolize_segment(const MFBank& bank, double mean);

SymbolSeries symbolize_series(const MFBank& bank,
                              const SegmentationResult& segments);

// Attaches the symbolized segments to their unit spans.
std::vector<LabeledUnit> materialize_units(const std::vector<UnitSpan>& spans,
                                           const SymbolSeries& symbols);

}  // namespace wli
