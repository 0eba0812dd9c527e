#include "wli/fuzzysym.hpp"

#include <stdexcept>

namespace wli {

double membership(const TrapezoidMF& mf, double x) {
    if (x < mf.f1 || x > mf.f2) return 0.0;
    if (x >= mf.s1 && x <= mf.s2) return 1.0;
    if (x < mf.s1) {
        if (mf.s1 == mf.f1) return 1.0;  // degenerate rising edge
        return (x - mf.f1) / (mf.s1 - mf.f1);
    }
    if (mf.f2 == mf.s2) return 1.0;  // degenerate falling edge
    return (mf.f2 - x) / (mf.f2 - mf.s2);
}

MFBank build_mfs(const CutPoints& cuts) {
    if (!(0.0 < cuts.t1 && cuts.t1 < cuts.t2 && cuts.t2 < cuts.t3 &&
          cuts.t3 < 1.0)) {
        throw std::invalid_argument("cut points must satisfy 0<t1<t2<t3<1");
    }
    const double lo[4] = {0.0, cuts.t1, cuts.t2, cuts.t3};
    const double hi[4] = {cuts.t1, cuts.t2, cuts.t3, 1.0};
    MFBank bank;
    bank.cuts = cuts;
    for (int i = 0; i < 4; ++i) {
        double y = (hi[i] - lo[i]) / 4.0;
        bank.mfs[i] = {lo[i] - y, lo[i] + y, hi[i] - y, hi[i] + y};
    }
    bank.mfs[0].f1 = 0.0;  // symbol a: left foot pinned to the range edge
    bank.mfs[3].f2 = 1.0;  // symbol d: right foot pinned to the range edge
    return bank;
}

VshSymbol symbolize_segment(const MFBank& bank, double mean) {
    if (mean < 0.0 || mean > 1.0) {
        throw std::invalid_argument("segment mean outside [0,1]");
    }
    int pos[2];
    double deg[2];
    int count = 0;
    for (int i = 0; i < 4; ++i) {
        double m = membership(bank.mfs[i], mean);
        if (m > 0.0) {
            if (count == 2) {
                throw std::logic_error("more than two positive memberships");
            }
            pos[count] = i;
            deg[count] = m;
            ++count;
        }
    }
    if (count == 0) {
        // Only reachable at the exact range edges, where the closed feet of
        // a and d evaluate to 0.
        if (mean <= bank.cuts.t1) return VshSymbol::a;
        if (mean >= bank.cuts.t3) return VshSymbol::d;
        throw std::logic_error("no positive membership for interior mean");
    }
    if (count == 1) {
        return static_cast<VshSymbol>(3 * pos[0]);
    }
    if (pos[1] != pos[0] + 1) {
        throw std::logic_error("positive memberships are not adjacent");
    }
    // Dominant symbol leads; an exact tie leads with the lower base symbol.
    int lead = (deg[1] > deg[0]) ? pos[1] : pos[0];
    if (lead == pos[0]) {
        return static_cast<VshSymbol>(3 * pos[0] + 1);  // jk, j < k
    }
    return static_cast<VshSymbol>(3 * pos[0] + 2);  // kj, k > j
}

SymbolSeries symbolize_series(const MFBank& bank,
                              const SegmentationResult& segments) {
    SymbolSeries out;
    out.items.reserve(segments.segments.size());
    for (const Segment& s : segments.segments) {
        out.items.push_back({symbolize_segment(bank, s.mean), s.thickness});
    }
    return out;
}

std::vector<LabeledUnit> materialize_units(const std::vector<UnitSpan>& spans,
                                           const SymbolSeries& symbols) {
    std::vector<LabeledUnit> units;
    units.reserve(spans.size());
    for (const UnitSpan& span : spans) {
        if (span.last_segment >= symbols.size() ||
            span.first_segment > span.last_segment) {
            throw std::invalid_argument("unit span outside symbol series");
        }
        LabeledUnit unit;
        unit.label = span.label;
        for (std::size_t i = span.first_segment; i <= span.last_segment; ++i) {
            unit.symbols.push_back(symbols.items[i]);
        }
        units.push_back(std::move(unit));
    }
    return units;
}

}  // namespace wli
