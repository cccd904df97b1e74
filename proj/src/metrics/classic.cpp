// Point-wise, point-adjusted, event-wise and k-delay families.
#include <algorithm>

#include "detail.hpp"
#include "tsadlab/metrics.hpp"

namespace tsad {

namespace detail {

WindowHits window_hits(const BinarySeq& g, const BinarySeq& p) {
    require_same_length(g, p);
    WindowHits h;
    h.windows = runs(g, 1);
    h.first.reserve(h.windows.size());
    for (const auto& w : h.windows) h.first.push_back(p.first_one(w));
    for (int i = 1; i <= g.n(); ++i) {
        h.gOnes += g(i);
        h.pOnes += p(i);
        if (p(i) && !g(i)) ++h.fp;
    }
    return h;
}

Score ratio(const mpq_class& a, const mpq_class& b, const char* why) {
    if (b == 0) return Score::undefined(why);
    return Score::exact(a / b);
}

Score harmonic(const Score& a, const Score& b) {
    if (!a.defined() || !b.defined()) return Score::undefined("harmonic mean of an undefined operand");
    if (a.rational() && b.rational()) {
        const mpq_class& x = *a.rational();
        const mpq_class& y = *b.rational();
        if (x + y == 0) {
            if (x == 0) return Score::exact(0);
            return Score::undefined("harmonic mean with zero sum");
        }
        return Score::exact(2 * x * y / (x + y));
    }
    double x = a.value();
    double y = b.value();
    if (x + y == 0.0) {
        if (x == 0.0) return Score::real(0.0);
        return Score::undefined("harmonic mean with zero sum");
    }
    return Score::real(2.0 * x * y / (x + y));
}

int overlap(const Interval& a, const Interval& b) {
    int lo = std::max(a.lo, b.lo);
    int hi = std::min(a.hi, b.hi);
    return hi >= lo ? hi - lo + 1 : 0;
}

mpq_class frac(long a, long b) {
    mpq_class q{mpz_class(a), mpz_class(b)};
    q.canonicalize();
    return q;
}

}  // namespace detail

using detail::ratio;

Score score_pointwise(Kind kind, const BinarySeq& g, const BinarySeq& p) {
    require_same_length(g, p);
    int tp = 0, pn = 0, gn = 0;
    for (int i = 1; i <= g.n(); ++i) {
        tp += g(i) & p(i);
        pn += p(i);
        gn += g(i);
    }
    switch (kind) {
        case Kind::precision: return ratio(tp, pn, "prediction has no ones");
        case Kind::recall: return ratio(tp, gn, "ground truth has no ones");
        case Kind::f1: return ratio(2 * tp, pn + gn, "prediction and ground truth have no ones");
    }
    return Score::undefined();
}

Score score_point_adjusted(Kind kind, const BinarySeq& g, const BinarySeq& p) {
    auto h = detail::window_hits(g, p);
    int credit = 0;
    for (std::size_t k = 0; k < h.windows.size(); ++k) {
        if (h.first[k]) credit += h.windows[k].length();
    }
    switch (kind) {
        case Kind::precision: return ratio(credit, credit + h.fp, "prediction has no ones");
        case Kind::recall: return ratio(credit, h.gOnes, "ground truth has no anomalies");
        case Kind::f1: return ratio(2 * credit, credit + h.fp + h.gOnes, "empty denominator");
    }
    return Score::undefined();
}

Score score_event_wise(EventKind kind, const BinarySeq& g, const BinarySeq& p) {
    auto h = detail::window_hits(g, p);
    int hit = 0;
    for (int f : h.first) hit += f != 0;
    int missed = static_cast<int>(h.windows.size()) - hit;
    int falseAlarms = 0;
    for (const auto& a : runs(p, 1)) falseAlarms += g.any_one(a) ? 0 : 1;
    int events = static_cast<int>(h.windows.size());
    switch (kind) {
        case EventKind::precision: return ratio(hit, hit + falseAlarms, "prediction has no alarms");
        case EventKind::recall: return ratio(hit, events, "ground truth has no anomalies");
        case EventKind::f1: return ratio(2 * hit, 2 * hit + falseAlarms + missed, "empty denominator");
        case EventKind::composite_f1:
            return detail::harmonic(score_pointwise(Kind::precision, g, p), ratio(hit, events, "ground truth has no anomalies"));
    }
    return Score::undefined();
}

Score score_k_delay(Kind kind, int k, const BinarySeq& g, const BinarySeq& p) {
    auto h = detail::window_hits(g, p);
    int credited = 0, late = 0, unhit = 0;
    for (std::size_t j = 0; j < h.windows.size(); ++j) {
        const auto& w = h.windows[j];
        if (h.first[j] == 0) {
            unhit += w.length();
        } else if (h.first[j] <= w.lo + k) {
            credited += w.length();
        } else {
            late += w.length();
        }
    }
    switch (kind) {
        case Kind::precision:
            if (h.pOnes == 0) return Score::undefined("prediction has no ones");
            if (credited + h.fp == 0) return Score::exact(0);
            return Score::exact(detail::frac(credited, credited + h.fp));
        case Kind::recall: return ratio(credited, h.gOnes, "ground truth has no anomalies");
        case Kind::f1: return ratio(2 * credited, h.fp + 2 * credited + late + unhit, "empty denominator");
    }
    return Score::undefined();
}

}  // namespace tsad
