#include "wli/segmenter.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <stdexcept>
#include <string>

namespace wli {

namespace {

// Running sums for O(1) merge-cost evaluation.
struct SegStats {
    double sum = 0.0;
    double sumsq = 0.0;
    std::size_t count = 0;

    double error() const {
        double e = sumsq - sum * sum / static_cast<double>(count);
        return e > 0.0 ? e : 0.0;  // clamp negative rounding residue
    }
};

SegStats stats_over(const VshSeries& series, std::size_t first,
                    std::size_t last) {
    SegStats s;
    for (std::size_t i = first; i <= last; ++i) {
        s.sum += series.values[i];
        s.sumsq += series.values[i] * series.values[i];
    }
    s.count = last - first + 1;
    return s;
}

Segment make_segment(const VshSeries& series, std::size_t first,
                     std::size_t last) {
    SegStats s = stats_over(series, first, last);
    Segment seg;
    seg.start_index = first;
    seg.end_index = last;
    seg.mean = s.sum / static_cast<double>(s.count);
    seg.thickness = static_cast<double>(s.count) * series.interval;
    return seg;
}

}  // namespace

VshSeries vsh_convert(const WellLog& log, std::optional<double> gr_min,
                      std::optional<double> gr_max) {
    log.validate();
    double lo = gr_min.value_or(
        *std::min_element(log.readings.begin(), log.readings.end()));
    double hi = gr_max.value_or(
        *std::max_element(log.readings.begin(), log.readings.end()));
    if (!(hi > lo)) {
        throw std::invalid_argument("gr_max must exceed gr_min");
    }
    VshSeries out;
    out.interval = log.interval;
    out.values.reserve(log.size());
    for (double gr : log.readings) {
        double v;
        if (gr < lo) {
            v = 0.0;
        } else if (gr > hi) {
            v = 1.0;
        } else {
            v = (gr - lo) / (hi - lo);
        }
        out.values.push_back(v);
    }
    return out;
}

double segment_error(const Segment& seg, const VshSeries& series) {
    double e = 0.0;
    for (std::size_t i = seg.start_index; i <= seg.end_index; ++i) {
        double d = series.values[i] - seg.mean;
        e += d * d;
    }
    return e;
}

double merge_cost(const Segment& left, const Segment& right,
                  const VshSeries& series) {
    if (left.end_index + 1 != right.start_index) {
        throw std::invalid_argument("merge_cost requires adjacent segments");
    }
    Segment merged = make_segment(series, left.start_index, right.end_index);
    return segment_error(merged, series) - segment_error(left, series) -
           segment_error(right, series);
}

SegmentationResult segment(const VshSeries& series) {
    const std::size_t n = series.size();
    if (n == 0) {
        throw std::invalid_argument("cannot segment an empty series");
    }

    // Doubly linked list of live segments over a node arena.
    struct Node {
        SegStats stats;
        std::size_t first, last;
        long prev, next;
        bool alive = true;
        std::uint64_t version = 0;
    };
    std::vector<Node> nodes(n);
    for (std::size_t i = 0; i < n; ++i) {
        nodes[i].stats = {series.values[i],
                          series.values[i] * series.values[i], 1};
        nodes[i].first = nodes[i].last = i;
        nodes[i].prev = static_cast<long>(i) - 1;
        nodes[i].next = (i + 1 < n) ? static_cast<long>(i) + 1 : -1;
    }

    auto pair_cost = [&](const Node& a, const Node& b) {
        SegStats m{a.stats.sum + b.stats.sum, a.stats.sumsq + b.stats.sumsq,
                   a.stats.count + b.stats.count};
        return m.error() - a.stats.error() - b.stats.error();
    };

    struct Entry {
        double cost;
        std::size_t left;            // node index of the left segment
        std::size_t start;           // sample start, for the shallowest tie-break
        std::uint64_t lver, rver;
    };
    auto worse = [](const Entry& a, const Entry& b) {
        if (a.cost != b.cost) return a.cost > b.cost;
        return a.start > b.start;
    };
    std::priority_queue<Entry, std::vector<Entry>, decltype(worse)> heap(worse);

    auto push_pair = [&](std::size_t left) {
        long r = nodes[left].next;
        if (r < 0) return;
        heap.push({pair_cost(nodes[left], nodes[r]), left, nodes[left].first,
                   nodes[left].version, nodes[r].version});
    };
    for (std::size_t i = 0; i + 1 < n; ++i) push_pair(i);

    double total_error = 0.0;
    double f = static_cast<double>(n);
    std::size_t live = n;

    while (live > 1 && !heap.empty()) {
        Entry e = heap.top();
        heap.pop();
        Node& l = nodes[e.left];
        if (!l.alive || l.next < 0 || l.version != e.lver) continue;
        Node& r = nodes[l.next];
        if (r.version != e.rver) continue;

        double f_new = f - 1.0 + e.cost;
        if (f_new >= f) break;  // no strict decrease left

        // Commit: absorb the right segment into the left one.
        l.stats.sum += r.stats.sum;
        l.stats.sumsq += r.stats.sumsq;
        l.stats.count += r.stats.count;
        l.last = r.last;
        l.version++;
        r.alive = false;
        l.next = r.next;
        if (r.next >= 0) nodes[r.next].prev = static_cast<long>(e.left);

        total_error += e.cost;
        f = f_new;
        --live;

        if (l.prev >= 0) push_pair(static_cast<std::size_t>(l.prev));
        push_pair(e.left);
    }

    SegmentationResult result;
    for (long i = 0; i >= 0; i = nodes[i].next) {
        result.segments.push_back(
            make_segment(series, nodes[i].first, nodes[i].last));
    }
    // Recompute the error from the final segments; the incremental total
    // carries the same value up to rounding.
    result.total_error = 0.0;
    for (const Segment& s : result.segments) {
        result.total_error += segment_error(s, series);
    }
    result.f_value =
        static_cast<double>(result.segments.size()) + result.total_error;
    return result;
}

AlignmentResult align_labels(const SegmentationResult& result,
                             const std::vector<LabelAnchor>& anchors,
                             const VshSeries& series) {
    const auto& segs = result.segments;
    for (std::size_t k = 0; k < anchors.size(); ++k) {
        if (anchors[k].position >= series.size()) {
            throw std::invalid_argument("anchor position out of bounds");
        }
        if (k > 0 && anchors[k].position <= anchors[k - 1].position) {
            throw std::invalid_argument("anchor positions must increase");
        }
        if (anchors[k].label == DepositionLabel::Null) {
            throw std::invalid_argument("anchor label may not be null");
        }
    }

    auto containing_segment = [&](std::size_t pos) {
        auto it = std::lower_bound(
            segs.begin(), segs.end(), pos,
            [](const Segment& s, std::size_t p) { return s.end_index < p; });
        return static_cast<std::size_t>(it - segs.begin());
    };

    // Anchors strictly inside a segment, grouped by segment index.
    std::map<std::size_t, std::vector<std::size_t>> interior;
    for (std::size_t k = 0; k < anchors.size(); ++k) {
        std::size_t si = containing_segment(anchors[k].position);
        if (anchors[k].position != segs[si].end_index) {
            interior[si].push_back(k);
        }
    }

    // Split every segment holding two or more interior anchors.
    std::vector<Segment> out;
    std::vector<bool> pinned(anchors.size(), false);  // position is a boundary
    for (std::size_t si = 0; si < segs.size(); ++si) {
        auto it = interior.find(si);
        if (it == interior.end() || it->second.size() < 2) {
            out.push_back(segs[si]);
            continue;
        }
        std::size_t first = segs[si].start_index;
        for (std::size_t k : it->second) {
            out.push_back(make_segment(series, first, anchors[k].position));
            first = anchors[k].position + 1;
            pinned[k] = true;
        }
        out.push_back(make_segment(series, first, segs[si].end_index));
    }

    // Splits the segment covering `pos` so that pos becomes a boundary.
    auto split_at = [&](std::size_t pos) {
        for (std::size_t i = 0; i < out.size(); ++i) {
            if (pos >= out[i].start_index && pos < out[i].end_index) {
                Segment right = make_segment(series, pos + 1, out[i].end_index);
                out[i] = make_segment(series, out[i].start_index, pos);
                out.insert(out.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                           right);
                return;
            }
        }
        throw std::logic_error("split position is not interior");
    };

    // Snap each remaining anchor to the nearest boundary (ties go to the
    // shallower one). Two anchors landing on one boundary would erase a unit,
    // so such conflicts are resolved by cutting a new boundary at the exact
    // anchor position instead.
    std::vector<std::size_t> snapped(anchors.size());
    std::vector<std::size_t> ends;
    for (bool conflict = true; conflict;) {
        conflict = false;
        ends.clear();
        ends.reserve(out.size());
        for (const Segment& s : out) ends.push_back(s.end_index);
        for (std::size_t k = 0; k < anchors.size(); ++k) {
            std::size_t p = anchors[k].position;
            if (pinned[k]) {
                snapped[k] = p;
                continue;
            }
            auto it = std::lower_bound(ends.begin(), ends.end(), p);
            std::size_t best;
            if (it == ends.end()) {
                best = ends.back();
            } else {
                best = *it;
                if (it != ends.begin()) {
                    std::size_t below = *std::prev(it);
                    if (p - below <= best - p) best = below;
                }
            }
            snapped[k] = best;
        }
        for (std::size_t k = 1; k < snapped.size(); ++k) {
            if (snapped[k] > snapped[k - 1]) continue;
            // Pin whichever of the pair sits strictly inside its segment;
            // the one already on a boundary keeps it.
            std::size_t cut = anchors[k].position != snapped[k]
                                  ? k
                                  : k - 1;
            split_at(anchors[cut].position);
            pinned[cut] = true;
            conflict = true;
            break;
        }
    }

    AlignmentResult aligned;
    aligned.segmentation.segments = std::move(out);
    aligned.segmentation.total_error = 0.0;
    for (const Segment& s : aligned.segmentation.segments) {
        aligned.segmentation.total_error += segment_error(s, series);
    }
    aligned.segmentation.f_value =
        static_cast<double>(aligned.segmentation.segments.size()) +
        aligned.segmentation.total_error;

    std::size_t next_first = 0;
    for (std::size_t k = 0; k < anchors.size(); ++k) {
        auto it = std::lower_bound(ends.begin(), ends.end(), snapped[k]);
        std::size_t si = static_cast<std::size_t>(it - ends.begin());
        aligned.units.push_back({anchors[k].label, next_first, si});
        next_first = si + 1;
    }
    return aligned;
}

}  // namespace wli
