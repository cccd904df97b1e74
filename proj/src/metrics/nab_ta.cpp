// NAB score and time-series aware precision/recall.
#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "detail.hpp"
#include "tsadlab/metrics.hpp"

namespace tsad {

namespace {

double scaled_sigmoid(double x) { return 2.0 / (1.0 + std::exp(5.0 * x)) - 1.0; }

}  // namespace

double nab_raw(const NabWeights& w, const BinarySeq& g, const BinarySeq& p) {
    auto h = detail::window_hits(g, p);
    double s = 0.0;
    for (std::size_t j = 0; j < h.windows.size(); ++j) {
        if (h.first[j]) {
            s += w.aTP * scaled_sigmoid(h.first[j] - h.windows[j].hi);
        } else {
            s += w.aFN;
        }
    }
    const int firstAnomaly = h.windows.empty() ? std::numeric_limits<int>::max() : h.windows.front().lo;
    std::size_t prev = 0;  // windows ending before i
    for (int i = 1; i <= g.n(); ++i) {
        while (prev < h.windows.size() && h.windows[prev].hi < i) ++prev;
        if (!p(i) || g(i)) continue;
        if (i < firstAnomaly) {
            s -= w.aFP;
        } else {
            s += w.aFP * scaled_sigmoid(i - h.windows[prev - 1].hi);
        }
    }
    return s;
}

Score score_nab(const NabWeights& w, const BinarySeq& g, const BinarySeq& p) {
    if (w.aTP < 0 || w.aFP < 0 || w.aFN > 0) throw std::invalid_argument("NAB weights violate sign constraints");
    require_same_length(g, p);
    double none = nab_raw(w, g, BinarySeq::zeros(g.n()));
    double perfect = nab_raw(w, g, g);
    if (perfect == none) return Score::undefined("perfect and empty predictions score alike");
    return Score::real(100.0 * (nab_raw(w, g, p) - none) / (perfect - none));
}

double ta_overlap(const Interval& w, const Interval& wp, double delta) {
    double o = detail::overlap(w, wp);
    const int reach = static_cast<int>(std::floor(delta));
    for (int j = std::max(w.hi + 1, wp.lo); j <= std::min(w.hi + reach, wp.hi); ++j) {
        if (delta == 1.0) {
            o += 1.0;
        } else {
            o += 1.0 / (1.0 + std::exp(12.0 * (j - 2 - w.hi) / (delta - 1.0) - 6.0));
        }
    }
    return o;
}

Score score_ta(Kind kind, const TaParams& prm, const BinarySeq& g, const BinarySeq& p) {
    if (prm.alphaWeight < 0 || prm.alphaWeight > 1) throw std::invalid_argument("alphaWeight must lie in [0,1]");
    if (prm.delta < 0) throw std::invalid_argument("delta must be non-negative");
    if (prm.theta <= 0) throw std::invalid_argument("theta must be positive");
    require_same_length(g, p);
    auto gw = runs(g, 1);
    auto pw = runs(p, 1);

    auto precision = [&]() -> Score {
        if (pw.empty()) return Score::undefined("prediction has no alarms");
        double above = 0.0, ratios = 0.0;
        for (const auto& w : pw) {
            double o = 0.0;
            for (const auto& a : gw) o += ta_overlap(a, w, prm.delta);
            double r = o / w.length();
            if (r >= prm.theta) above += 1.0;
            ratios += r;
        }
        double m = static_cast<double>(pw.size());
        return Score::real(prm.alphaWeight * above / m + (1.0 - prm.alphaWeight) * ratios / m);
    };
    auto recall = [&]() -> Score {
        if (gw.empty()) return Score::undefined("ground truth has no anomalies");
        double above = 0.0, ratios = 0.0;
        for (const auto& w : gw) {
            double o = 0.0;
            for (const auto& a : pw) o += ta_overlap(w, a, prm.delta);
            double r = o / w.length();
            if (r >= prm.theta) above += 1.0;
            ratios += std::min(1.0, r);
        }
        double m = static_cast<double>(gw.size());
        return Score::real(prm.alphaWeight * above / m + (1.0 - prm.alphaWeight) * ratios / m);
    };

    switch (kind) {
        case Kind::precision: return precision();
        case Kind::recall: return recall();
        case Kind::f1: return detail::harmonic(precision(), recall());
    }
    return Score::undefined();
}

}  // namespace tsad
