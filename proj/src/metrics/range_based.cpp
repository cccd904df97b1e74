// Range-based precision/recall with front bias and the TimeSeAD variants.
#include <stdexcept>
#include <vector>

#include "detail.hpp"
#include "tsadlab/metrics.hpp"

namespace tsad {

namespace {

// Front-bias weight of position i in w: |W| - (i - min W), so the first position weighs |W|.
mpq_class total_weight(const Interval& w) {
    mpq_class l = w.length();
    return l * (l + 1) / 2;
}

mpq_class covered_weight(const Interval& w, const Interval& s) {
    int lo = std::max(w.lo, s.lo);
    int hi = std::min(w.hi, s.hi);
    if (hi < lo) return 0;
    mpq_class sum;
    for (int i = lo; i <= hi; ++i) sum += w.length() - (i - w.lo);
    return sum;
}

// Sum over `others` of the biased overlap fraction of w, and how many of them touch w.
std::pair<mpq_class, int> biased_overlap(const Interval& w, const std::vector<Interval>& others) {
    mpq_class sum;
    int touching = 0;
    mpq_class total = total_weight(w);
    for (const auto& o : others) {
        if (!w.intersects(o)) continue;
        ++touching;
        sum += covered_weight(w, o) / total;
    }
    return {sum, touching};
}

mpq_class cardinality(int k) { return k > 1 ? mpq_class(1, k) : mpq_class(1); }

Score range_precision(const std::vector<Interval>& gw, const std::vector<Interval>& pw) {
    if (pw.empty()) return Score::undefined("prediction has no alarms");
    mpq_class sum;
    for (const auto& w : pw) {
        auto [s, k] = biased_overlap(w, gw);
        sum += cardinality(k) * s;
    }
    return Score::exact(sum / static_cast<long>(pw.size()));
}

Score range_recall(const mpq_class& alpha, const std::vector<Interval>& gw, const std::vector<Interval>& pw) {
    if (gw.empty()) return Score::undefined("ground truth has no anomalies");
    mpq_class sum;
    for (const auto& w : gw) {
        auto [s, k] = biased_overlap(w, pw);
        sum += alpha * (k > 0 ? 1 : 0) + (1 - alpha) * cardinality(k) * s;
    }
    return Score::exact(sum / static_cast<long>(gw.size()));
}

Score timesead_precision(const std::vector<Interval>& gw, const std::vector<Interval>& pw) {
    if (pw.empty()) return Score::undefined("prediction has no alarms");
    mpq_class sum;
    long len = 0;
    for (const auto& w : pw) {
        auto [s, k] = biased_overlap(w, gw);
        len += w.length();
        if (k > 0) sum += w.length() * timesead_gamma(k, total_weight(w)) * s;
    }
    return Score::exact(sum / len);
}

Score timesead_recall(const std::vector<Interval>& gw, const std::vector<Interval>& pw) {
    if (gw.empty()) return Score::undefined("ground truth has no anomalies");
    mpq_class sum;
    for (const auto& w : gw) {
        auto [s, k] = biased_overlap(w, pw);
        if (k > 0) sum += s / k;
    }
    return Score::exact(sum / static_cast<long>(gw.size()));
}

}  // namespace

mpq_class timesead_gamma(int n, const mpq_class& S) {
    if (n < 1) throw std::invalid_argument("gamma needs n >= 1");
    std::vector<mpq_class> gamma(n + 1);
    gamma[1] = 1;
    for (int m = 2; m <= n; ++m) {
        mpq_class best;
        bool first = true;
        for (int j = 1; j < m; ++j) {
            mpq_class v = (S - m + j) / S * gamma[j];
            if (first || v > best) best = v;
            first = false;
        }
        gamma[m] = best;
    }
    return gamma[n];
}

Score score_range_based(Kind kind, const mpq_class& alphaWeight, const BinarySeq& g, const BinarySeq& p) {
    if (alphaWeight < 0 || alphaWeight > 1) throw std::invalid_argument("alphaWeight must lie in [0,1]");
    require_same_length(g, p);
    auto gw = runs(g, 1);
    auto pw = runs(p, 1);
    switch (kind) {
        case Kind::precision: return range_precision(gw, pw);
        case Kind::recall: return range_recall(alphaWeight, gw, pw);
        case Kind::f1: return detail::harmonic(range_precision(gw, pw), range_recall(alphaWeight, gw, pw));
    }
    return Score::undefined();
}

Score score_timesead(Kind kind, const BinarySeq& g, const BinarySeq& p) {
    require_same_length(g, p);
    auto gw = runs(g, 1);
    auto pw = runs(p, 1);
    switch (kind) {
        case Kind::precision: return timesead_precision(gw, pw);
        case Kind::recall: return timesead_recall(gw, pw);
        case Kind::f1: return detail::harmonic(timesead_precision(gw, pw), timesead_recall(gw, pw));
    }
    return Score::undefined();
}

}  // namespace tsad
