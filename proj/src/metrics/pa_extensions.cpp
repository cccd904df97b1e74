// Extensions of point adjustment: PA%K, its integral over K, decay, reduced length,
// balanced PA and the latency/sparsity-aware block score.
#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "detail.hpp"
#include "tsadlab/metrics.hpp"

namespace tsad {

namespace {

struct PercentKTerms {
    mpq_class correct;
    mpq_class falseNeg;
};

PercentKTerms percent_k_terms(const mpq_class& k, const std::vector<Interval>& windows, const BinarySeq& p) {
    PercentKTerms t;
    for (const auto& w : windows) {
        int hits = p.count_ones(w);
        mpq_class r = detail::frac(hits, w.length());
        if (r > k) {
            t.correct += w.length();
        } else {
            t.correct += hits;
            t.falseNeg += w.length() - hits;
        }
    }
    return t;
}

}  // namespace

Score score_pa_percent_k(const mpq_class& k, const BinarySeq& g, const BinarySeq& p) {
    auto h = detail::window_hits(g, p);
    auto t = percent_k_terms(k, h.windows, p);
    return detail::ratio(2 * t.correct, 2 * t.correct + h.fp + t.falseNeg, "empty denominator");
}

Score score_pa_percent_k_integrated(const BinarySeq& g, const BinarySeq& p) {
    auto h = detail::window_hits(g, p);
    std::set<mpq_class> cuts{mpq_class(0), mpq_class(1)};
    for (const auto& w : h.windows) cuts.insert(detail::frac(p.count_ones(w), w.length()));
    mpq_class total;
    auto it = cuts.begin();
    mpq_class lo = *it;
    for (++it; it != cuts.end(); ++it) {
        mpq_class hi = *it;
        mpq_class mid = (lo + hi) / 2;
        auto t = percent_k_terms(mid, h.windows, p);
        mpq_class den = 2 * t.correct + h.fp + t.falseNeg;
        if (den == 0) return Score::undefined("empty denominator");
        total += (hi - lo) * 2 * t.correct / den;
        lo = hi;
    }
    return Score::exact(total);
}

Score score_pa_decay(const mpq_class& d, const BinarySeq& g, const BinarySeq& p) {
    if (d <= 0 || d > 1) throw std::invalid_argument("decay rate must lie in (0,1]");
    auto h = detail::window_hits(g, p);
    mpq_class num, den = h.fp;
    for (std::size_t j = 0; j < h.windows.size(); ++j) {
        const auto& w = h.windows[j];
        if (h.first[j]) {
            num += 2 * pow_rational(d, h.first[j] - w.lo) * w.length();
            den += 2 * w.length();
        } else {
            den += w.length();
        }
    }
    return detail::ratio(num, den, "empty denominator");
}

Score score_reduced_length(const BinarySeq& g, const BinarySeq& p) {
    auto h = detail::window_hits(g, p);
    double hit = 0.0, unhit = 0.0;
    for (std::size_t j = 0; j < h.windows.size(); ++j) {
        double l = std::log(static_cast<double>(h.windows[j].length()));
        (h.first[j] ? hit : unhit) += l;
    }
    double den = 2.0 * hit + h.fp + unhit;
    if (den == 0.0) return Score::undefined("empty denominator");
    return Score::real(2.0 * hit / den);
}

Score score_balanced_pa(int B, const BinarySeq& g, const BinarySeq& p) {
    if (B < 0) throw std::invalid_argument("balance radius must be non-negative");
    auto h = detail::window_hits(g, p);
    const int n = g.n();
    // near[i]: some j with |i - j| <= B satisfies the predicate.
    auto spread = [&](auto pred) {
        std::vector<int> prefix(n + 1, 0);
        for (int i = 1; i <= n; ++i) prefix[i] = prefix[i - 1] + (pred(i) ? 1 : 0);
        std::vector<bool> near(n + 1, false);
        for (int i = 1; i <= n; ++i) {
            int lo = std::max(1, i - B);
            int hi = std::min(n, i + B);
            near[i] = prefix[hi] - prefix[lo - 1] > 0;
        }
        return near;
    };
    auto nearFalsePos = spread([&](int j) { return p(j) && !g(j); });
    auto nearPred = spread([&](int j) { return p(j) == 1; });

    int tp = 0, fn = 0, fp = h.fp;
    for (std::size_t j = 0; j < h.windows.size(); ++j) {
        const auto& w = h.windows[j];
        if (h.first[j]) {
            tp += w.length();
            continue;
        }
        for (int i = w.lo; i <= w.hi; ++i) (nearFalsePos[i] ? tp : fn) += 1;
    }
    for (int i = 1; i <= n; ++i) {
        if (!p(i) && !g(i) && nearPred[i]) ++fp;
    }
    return detail::ratio(2 * tp, 2 * tp + fp + fn, "empty denominator");
}

Score score_lsa_f1(int b, const BinarySeq& g, const BinarySeq& p) {
    if (b < 1) throw std::invalid_argument("block size must be at least 1");
    require_same_length(g, p);
    const int n = g.n();
    const int blocks = (n + b - 1) / b;
    // Positions are 0-based inside this function: value(s, j) = s(j + 1).
    auto at = [](const BinarySeq& s, int j) { return s(j + 1); };
    auto block_max = [&](const BinarySeq& s, int lo, int hi) {
        hi = std::min(hi, n - 1);
        for (int j = lo; j <= hi; ++j) {
            if (at(s, j)) return 1;
        }
        return 0;
    };

    // g' marks whole blocks whose first element is anomalous.
    std::vector<uint8_t> gp(n, 0);
    for (int i = 0; i < blocks; ++i) {
        if (at(g, i * b)) {
            for (int j = i * b; j < std::min(n, (i + 1) * b); ++j) gp[j] = 1;
        }
    }
    // Start of the g' window containing each position.
    std::vector<int> windowStart(n, -1);
    for (int j = 0; j < n; ++j) {
        if (gp[j]) windowStart[j] = (j > 0 && gp[j - 1]) ? windowStart[j - 1] : j;
    }

    int tp = 0, fp = 0, fn = 0;
    for (int i = 0; i < blocks; ++i) {
        int gd = block_max(g, i * b, (i + 1) * b - 1);
        int istar = windowStart[i * b] >= 0 ? windowStart[i * b] / b : i;
        int pd = block_max(p, istar * b, (i + 1) * b - 1);
        if (pd && gd) ++tp;
        if (pd && !gd) ++fp;
        if (!pd && gd) ++fn;
    }
    return detail::ratio(2 * tp, 2 * tp + fp + fn, "empty denominator");
}

}  // namespace tsad
