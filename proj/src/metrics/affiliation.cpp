// Affiliation precision/recall probabilities.
#include <algorithm>
#include <cstdlib>
#include <limits>

#include "detail.hpp"
#include "tsadlab/metrics.hpp"

namespace tsad {

namespace {

int distance_to(int i, const Interval& w) {
    if (i < w.lo) return w.lo - i;
    if (i > w.hi) return i - w.hi;
    return 0;
}

}  // namespace

std::vector<Interval> affiliation_zones(const std::vector<Interval>& windows, int n) {
    std::vector<Interval> zones;
    zones.reserve(windows.size());
    for (std::size_t k = 0; k < windows.size(); ++k) {
        // Equidistant points between two windows go to the earlier one.
        int lo = k > 0 ? (windows[k - 1].hi + windows[k].lo) / 2 + 1 : 1;
        int hi = k + 1 < windows.size() ? (windows[k].hi + windows[k + 1].lo) / 2 : n;
        zones.push_back({lo, hi});
    }
    return zones;
}

Score score_affiliation(Kind kind, RecallDistance mode, const BinarySeq& g, const BinarySeq& p) {
    require_same_length(g, p);
    const auto windows = runs(g, 1);
    const auto zones = affiliation_zones(windows, g.n());

    auto precision = [&]() -> Score {
        mpq_class sum;
        long used = 0;
        for (std::size_t k = 0; k < windows.size(); ++k) {
            const Interval& w = windows[k];
            const Interval& z = zones[k];
            int margin = std::min(w.lo - z.lo, z.hi - w.hi);
            mpq_class local;
            int count = 0;
            for (int i = z.lo; i <= z.hi; ++i) {
                if (!p(i)) continue;
                int d = distance_to(i, w);
                local += 1 - detail::frac(w.length() + std::min(d, margin) + d, z.length());
                ++count;
            }
            if (count == 0) continue;
            sum += local / count;
            ++used;
        }
        if (used == 0) return Score::undefined("no zone contains a prediction");
        return Score::exact(sum / used);
    };

    auto recall = [&]() -> Score {
        if (windows.empty()) return Score::undefined("ground truth has no anomalies");
        mpq_class sum;
        for (std::size_t k = 0; k < windows.size(); ++k) {
            const Interval& w = windows[k];
            const Interval& z = zones[k];
            std::vector<int> preds;
            for (int i = z.lo; i <= z.hi; ++i) {
                if (p(i)) preds.push_back(i);
            }
            if (preds.empty()) return Score::real(-std::numeric_limits<double>::infinity());
            mpq_class local;
            for (int i = w.lo; i <= w.hi; ++i) {
                int d;
                if (mode == RecallDistance::first) {
                    d = std::abs(i - preds.front());
                } else {
                    d = std::numeric_limits<int>::max();
                    for (int j : preds) d = std::min(d, std::abs(i - j));
                }
                int edge = std::min(i - z.lo, z.hi - i);
                local += 1 - detail::frac(std::min(d, edge) + d, z.length());
            }
            sum += local / w.length();
        }
        return Score::exact(sum / static_cast<long>(windows.size()));
    };

    switch (kind) {
        case Kind::precision: return precision();
        case Kind::recall: return recall();
        case Kind::f1: {
            Score r = recall();
            if (r.defined() && !r.rational()) return Score::undefined("recall is -inf");
            return detail::harmonic(precision(), r);
        }
    }
    return Score::undefined();
}

}  // namespace tsad
