// Time-tolerant precision/recall, enhanced TaP/TaR, temporal distance and average alert delay.
#include <cmath>
#include <limits>
#include <stdexcept>

#include "detail.hpp"
#include "tsadlab/metrics.hpp"

namespace tsad {

namespace {

// Positions i with a = 1 whose [i - delta, i + delta] touches b's ones.
int tolerant_hits(const BinarySeq& a, const BinarySeq& b, int delta) {
    const int n = a.n();
    std::vector<int> prefix(n + 1, 0);
    for (int i = 1; i <= n; ++i) prefix[i] = prefix[i - 1] + b(i);
    int hits = 0;
    for (int i = 1; i <= n; ++i) {
        if (!a(i)) continue;
        int lo = std::max(1, i - delta);
        int hi = std::min(n, i + delta);
        if (prefix[hi] - prefix[lo - 1] > 0) ++hits;
    }
    return hits;
}

mpq_class overlap_sum(const Interval& w, const std::vector<Interval>& others, const std::vector<bool>& keep) {
    mpq_class s;
    for (std::size_t k = 0; k < others.size(); ++k) {
        if (keep[k]) s += detail::frac(detail::overlap(w, others[k]), w.length());
    }
    return s;
}

struct EnhancedSets {
    std::vector<Interval> gw, pw;
    std::vector<bool> inA, inP;
};

EnhancedSets enhanced_sets(const mpq_class& thetaP, const mpq_class& thetaR, const BinarySeq& g, const BinarySeq& p) {
    EnhancedSets s{runs(g, 1), runs(p, 1), {}, {}};
    s.inA.assign(s.gw.size(), true);
    s.inP.assign(s.pw.size(), true);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t k = 0; k < s.gw.size(); ++k) {
            if (s.inA[k] && overlap_sum(s.gw[k], s.pw, s.inP) < thetaR) {
                s.inA[k] = false;
                changed = true;
            }
        }
        for (std::size_t k = 0; k < s.pw.size(); ++k) {
            if (s.inP[k] && overlap_sum(s.pw[k], s.gw, s.inA) < thetaP) {
                s.inP[k] = false;
                changed = true;
            }
        }
    }
    return s;
}

}  // namespace

Score score_time_tolerant(Kind kind, int delta, const BinarySeq& g, const BinarySeq& p) {
    if (delta < 0) throw std::invalid_argument("delta must be non-negative");
    require_same_length(g, p);
    auto precision = [&] { return detail::ratio(tolerant_hits(p, g, delta), p.count_ones(), "prediction has no ones"); };
    auto recall = [&] { return detail::ratio(tolerant_hits(g, p, delta), g.count_ones(), "ground truth has no ones"); };
    switch (kind) {
        case Kind::precision: return precision();
        case Kind::recall: return recall();
        case Kind::f1: return detail::harmonic(precision(), recall());
    }
    return Score::undefined();
}

Score score_enhanced_ta(Kind kind, double thetaP, double thetaR, const BinarySeq& g, const BinarySeq& p) {
    if (thetaP <= 0 || thetaR <= 0) throw std::invalid_argument("thresholds must be positive");
    require_same_length(g, p);
    auto s = enhanced_sets(decimal_rational(thetaP), decimal_rational(thetaR), g, p);

    auto precision = [&]() -> Score {
        if (s.pw.empty()) return Score::undefined("prediction has no alarms");
        double norm = 0.0;
        for (const auto& w : s.pw) norm += std::sqrt(static_cast<double>(w.length()));
        double sum = 0.0;
        for (std::size_t k = 0; k < s.pw.size(); ++k) {
            if (!s.inP[k]) continue;
            double credit = 1.0 + overlap_sum(s.pw[k], s.gw, s.inA).get_d();
            sum += credit * std::sqrt(static_cast<double>(s.pw[k].length()));
        }
        return Score::real(0.5 * sum / norm);
    };
    auto recall = [&]() -> Score {
        if (s.gw.empty()) return Score::undefined("ground truth has no anomalies");
        mpq_class sum;
        for (std::size_t k = 0; k < s.gw.size(); ++k) {
            if (s.inA[k]) sum += 1 + overlap_sum(s.gw[k], s.pw, s.inP);
        }
        return Score::exact(sum / (2 * static_cast<long>(s.gw.size())));
    };

    switch (kind) {
        case Kind::precision: return precision();
        case Kind::recall: return recall();
        case Kind::f1: return detail::harmonic(precision(), recall());
    }
    return Score::undefined();
}

Score score_temporal_distance(const BinarySeq& g, const BinarySeq& p) {
    require_same_length(g, p);
    const int n = g.n();
    // Distance from every position to the nearest one of s, or -1 when s has none.
    auto nearest = [n](const BinarySeq& s) {
        std::vector<long> d(n + 1, -1);
        long last = -1;
        for (int i = 1; i <= n; ++i) {
            if (s(i)) last = i;
            if (last >= 0) d[i] = i - last;
        }
        last = -1;
        for (int i = n; i >= 1; --i) {
            if (s(i)) last = i;
            if (last >= 0 && (d[i] < 0 || last - i < d[i])) d[i] = last - i;
        }
        return d;
    };
    auto closest = [&](const BinarySeq& a, const BinarySeq& b, bool& infinite) {
        auto d = nearest(b);
        long sum = 0;
        for (int i = 1; i <= n; ++i) {
            if (!a(i)) continue;
            if (d[i] < 0) infinite = true;
            else sum += d[i];
        }
        return sum;
    };
    bool infinite = false;
    long td = closest(g, p, infinite) + closest(p, g, infinite);
    if (infinite) return Score::real(-std::numeric_limits<double>::infinity());
    return Score::exact(mpq_class(-td));
}

Score score_average_alert_delay(const BinarySeq& g, const BinarySeq& p) {
    auto h = detail::window_hits(g, p);
    long delay = 0, hit = 0;
    for (std::size_t k = 0; k < h.windows.size(); ++k) {
        if (!h.first[k]) continue;
        delay += h.first[k] - h.windows[k].lo;
        ++hit;
    }
    if (hit == 0) return Score::undefined("no anomaly is detected");
    return Score::exact(detail::frac(-delay, hit));
}

}  // namespace tsad
