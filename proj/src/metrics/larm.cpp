// LARM and ALARM scores.
#include <stdexcept>

#include "detail.hpp"
#include "tsadlab/metrics.hpp"

namespace tsad {

mpq_class default_alpha(const BinarySeq& p, const Interval& a) {
    mpq_class sum;
    mpq_class weight(1, 2);
    for (int i = a.lo; i <= a.hi; ++i) {
        if (p(i)) sum += weight;
        weight /= 2;
    }
    return sum;
}

mpq_class default_beta(int x) {
    if (x < 0) throw std::invalid_argument("beta needs a non-negative count");
    if (x == 0) return 0;
    return 1 - detail::frac(1, x);
}

LarmConfig default_larm_config() {
    return LarmConfig{default_alpha, default_beta, 2};
}

namespace {

// (alpha(p_A) + 1) / 2^{|I_1(p_A)|} for a window that contains at least one predicted 1.
mpq_class alignment(const LarmConfig& cfg, const BinarySeq& p, const Interval& a) {
    mpq_class v = cfg.alphaFn(p, a) + 1;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(count_runs_within(p, 1, a)));
    v /= scale;
    return v;
}

}  // namespace

Score score_larm(const LarmConfig& cfg, const BinarySeq& g, const BinarySeq& p) {
    require_same_length(g, p);
    auto anomalies = runs(g, 1);
    if (anomalies.empty()) return Score::undefined("ground truth has no anomalies");
    mpq_class detection;
    for (const auto& a : anomalies) {
        if (p.any_one(a)) detection += alignment(cfg, p, a);
    }
    mpq_class s = detection / static_cast<long>(anomalies.size());
    for (const auto& nrm : runs(g, 0)) {
        s -= 2 * count_runs_within(p, 1, nrm);
        s -= cfg.betaFn(p.count_ones(nrm));
    }
    return Score::exact(s);
}

Score score_alarm(const LarmConfig& cfg, const BinarySeq& g, const BinarySeq& p) {
    if (cfg.t < 1) throw std::invalid_argument("alarm tolerance must be a positive integer");
    require_same_length(g, p);
    auto cls = classify_alarms(g, p);
    mpq_class s = static_cast<long>(cls.detected.size());
    if (!cls.detected.empty()) {
        mpq_class align;
        for (const auto& a : cls.detected) align += alignment(cfg, p, a);
        s += align / static_cast<long>(cls.detected.size());
    }
    int falsePositives = 0;
    for (int i = 1; i <= g.n(); ++i) falsePositives += p(i) && !g(i);
    s -= cfg.betaFn(falsePositives);
    mpq_class penalty = static_cast<long>(cls.trueFalse.size()) + mpq_class(3, 2) * static_cast<long>(cls.early.size()) +
                        mpq_class(1, 2) * static_cast<long>(cls.late.size());
    s -= penalty / cfg.t;
    return Score::exact(s);
}

}  // namespace tsad
