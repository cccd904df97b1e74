#include <stdexcept>

#include "internal.hpp"

namespace tsad {

std::string to_string(Verdict v) { return v == Verdict::violated ? "violated" : "no_counterexample"; }

namespace detail {

ScoreTable::ScoreTable(const Scorer& scorer, int maxLen, int workers) : maxLen_(maxLen) {
    if (maxLen < 1 || maxLen > kMaxLength) throw std::invalid_argument("score table length out of range");
    offsets_.assign(static_cast<std::size_t>(maxLen) + 2, 0);
    for (int n = 1; n <= maxLen; ++n) offsets_[n + 1] = offsets_[n] + (std::size_t{1} << (2 * n));
    scores_.resize(offsets_[maxLen + 1]);
    std::vector<std::pair<int, std::uint32_t>> tasks;
    for (int n = 1; n <= maxLen; ++n) {
        for (std::uint32_t g = 0; g < (1u << n); ++g) tasks.emplace_back(n, g);
    }
    parallel_for(tasks.size(), workers, [&](std::size_t k) {
        auto [n, g] = tasks[k];
        auto gs = unpack(g, n);
        for (std::uint32_t p = 0; p < (1u << n); ++p) scores_[index(n, g, p)] = scorer(gs, unpack(p, n));
    });
}

PropertyReport check_with_table(const Scorer& scorer, const ScoreTable* table, const MetricDescriptor& label,
                                PropertyId prop, int maxLen, const CheckOptions& opts) {
    const auto& cases = packed_cases(prop, maxLen);
    const int workers = opts.workers > 0 ? opts.workers : default_workers();

    std::optional<ScoreTable> own;
    if (!table && maxLen <= ScoreTable::kMaxLength) table = &own.emplace(scorer, maxLen, workers);
    if (table && table->max_length() < maxLen) throw std::invalid_argument("score table shorter than maxLen");

    std::vector<std::pair<Score, Score>> direct;
    if (!table) {
        direct.resize(cases.size());
        parallel_for(cases.size(), workers, [&](std::size_t k) {
            const auto& c = cases[k];
            auto g = unpack(c.g, c.n);
            direct[k] = {scorer(g, unpack(c.p, c.n)), scorer(g, unpack(c.q, c.n))};
        });
    }

    PropertyReport r;
    r.metric = label;
    r.property = prop;
    r.maxLen = maxLen;
    for (std::size_t k = 0; k < cases.size(); ++k) {
        const auto& c = cases[k];
        const Score& sp = table ? table->at(c.n, c.g, c.p) : direct[k].first;
        const Score& sq = table ? table->at(c.n, c.g, c.q) : direct[k].second;
        if (!sp.defined() || !sq.defined()) {
            ++r.skipped;
            continue;
        }
        ++r.casesChecked;
        Relation rel = c.relation ? Relation::equal : Relation::greater;
        if (relation_holds(sp, sq, rel)) continue;
        ++r.violations;
        if (r.witnesses.size() < opts.maxWitnesses) {
            r.witnesses.push_back({unpack(c.g, c.n), unpack(c.p, c.n), unpack(c.q, c.n), rel, "enumerated"});
        }
    }
    r.verdict = r.violations ? Verdict::violated : Verdict::no_counterexample;
    return r;
}

}  // namespace detail

PropertyReport check_property(const Scorer& scorer, const MetricDescriptor& label, PropertyId prop, int maxLen,
                              const CheckOptions& opts) {
    return detail::check_with_table(scorer, nullptr, label, prop, maxLen, opts);
}

PropertyReport check_property(const MetricDescriptor& metric, PropertyId prop, int maxLen, const CheckOptions& opts) {
    return check_property(make_scorer(metric), metric, prop, maxLen, opts);
}

}  // namespace tsad
