#include "tsadlab/rankings.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

#include <fmt/format.h>
#include <json.hpp>

namespace tsad {

namespace {

// Three-way comparison of two defined scores, exact when both are rational.
int compare(const Score& a, const Score& b) {
    if (a.rational() && b.rational()) {
        int c = cmp(*a.rational(), *b.rational());
        return (c > 0) - (c < 0);
    }
    if (a.value() < b.value()) return -1;
    if (a.value() > b.value()) return 1;
    return 0;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

}  // namespace

int RankingTable::rank_of(const std::string& id) const {
    for (const auto& e : entries) {
        if (e.id == id) return e.rank;
    }
    if (std::find(undefinedBucket.begin(), undefinedBucket.end(), id) != undefinedBucket.end()) return undefined_rank();
    return 0;
}

RankingTable rank(const Scorer& scorer, const MetricDescriptor& label, const BinarySeq& g,
                  const std::vector<Prediction>& preds) {
    std::set<std::string> seen;
    for (const auto& [id, p] : preds) {
        require_same_length(g, p);
        if (!seen.insert(id).second) throw std::invalid_argument("duplicate prediction id '" + id + "'");
    }
    RankingTable t;
    t.metric = label;
    for (const auto& [id, p] : preds) {
        Score s = scorer(g, p);
        if (s.defined()) {
            t.entries.push_back({id, std::move(s), 0});
        } else {
            t.undefinedBucket.push_back(id);
        }
    }
    std::sort(t.entries.begin(), t.entries.end(), [](const RankEntry& a, const RankEntry& b) {
        int c = compare(a.score, b.score);
        return c != 0 ? c > 0 : a.id < b.id;
    });
    for (std::size_t i = 0; i < t.entries.size(); ++i) {
        bool tied = i > 0 && compare(t.entries[i].score, t.entries[i - 1].score) == 0;
        t.entries[i].rank = tied ? t.entries[i - 1].rank : static_cast<int>(i) + 1;
    }
    std::sort(t.undefinedBucket.begin(), t.undefinedBucket.end());
    return t;
}

RankingTable rank(const MetricDescriptor& metric, const BinarySeq& g, const std::vector<Prediction>& preds) {
    return rank(make_scorer(metric), metric, g, preds);
}

double kendall_tau(const RankingTable& a, const RankingTable& b) {
    std::map<std::string, int> ra, rb;
    for (const auto& e : a.entries) ra[e.id] = e.rank;
    for (const auto& id : a.undefinedBucket) ra[id] = a.undefined_rank();
    for (const auto& e : b.entries) rb[e.id] = e.rank;
    for (const auto& id : b.undefinedBucket) rb[id] = b.undefined_rank();
    if (ra.size() < 2) throw std::invalid_argument("kendall tau needs at least two predictions");
    if (ra.size() != rb.size() || !std::equal(ra.begin(), ra.end(), rb.begin(), [](const auto& x, const auto& y) { return x.first == y.first; })) {
        throw std::invalid_argument("rankings cover different predictions");
    }
    std::vector<std::pair<int, int>> r;
    for (const auto& [id, rank] : ra) r.emplace_back(rank, rb[id]);
    long concordant = 0, discordant = 0, tiesA = 0, tiesB = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        for (std::size_t j = i + 1; j < r.size(); ++j) {
            int da = r[i].first - r[j].first;
            int db = r[i].second - r[j].second;
            if (da == 0) ++tiesA;
            if (db == 0) ++tiesB;
            if (da == 0 || db == 0) continue;
            ((da > 0) == (db > 0) ? concordant : discordant)++;
        }
    }
    const long pairs = static_cast<long>(r.size() * (r.size() - 1) / 2);
    double denom = std::sqrt(static_cast<double>(pairs - tiesA) * static_cast<double>(pairs - tiesB));
    if (denom == 0) return std::numeric_limits<double>::quiet_NaN();
    return static_cast<double>(concordant - discordant) / denom;
}

std::vector<std::vector<double>> tau_matrix(const std::vector<RankingTable>& tables) {
    std::vector<std::vector<double>> m(tables.size(), std::vector<double>(tables.size()));
    for (std::size_t i = 0; i < tables.size(); ++i) {
        for (std::size_t j = 0; j < tables.size(); ++j) m[i][j] = kendall_tau(tables[i], tables[j]);
    }
    return m;
}

std::string format_score(const Score& s) {
    if (!s.defined()) return "undefined";
    double v = s.value();
    if (std::isinf(v)) return v < 0 ? "-inf" : "inf";
    return fmt::format("{:.12g}", v);
}

std::string ranking_csv(const RankingTable& t) {
    std::string out = "id,score,rank\n";
    for (const auto& e : t.entries) out += fmt::format("{},{},{}\n", csv_field(e.id), format_score(e.score), e.rank);
    for (const auto& id : t.undefinedBucket) out += fmt::format("{},undefined,{}\n", csv_field(id), t.undefined_rank());
    return out;
}

std::string ranking_json(const RankingTable& t) {
    nlohmann::ordered_json j;
    j["metric"] = t.metric.id;
    j["params"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : t.metric.params) j["params"][k] = v;
    j["entries"] = nlohmann::ordered_json::array();
    for (const auto& e : t.entries) {
        nlohmann::ordered_json row{{"id", e.id}};
        double v = e.score.value();
        if (std::isfinite(v)) {
            row["score"] = std::stod(fmt::format("{:.12g}", v));
        } else {
            row["score"] = format_score(e.score);
        }
        if (e.score.rational()) row["exact"] = rational_string(*e.score.rational());
        row["rank"] = e.rank;
        j["entries"].push_back(row);
    }
    j["undefined"] = t.undefinedBucket;
    j["undefinedRank"] = t.undefined_rank();
    return j.dump(2);
}

std::string tau_matrix_csv(const std::vector<RankingTable>& tables) {
    auto m = tau_matrix(tables);
    std::string out = "metric";
    for (const auto& t : tables) out += "," + csv_field(describe(t.metric));
    out += "\n";
    for (std::size_t i = 0; i < tables.size(); ++i) {
        out += csv_field(describe(tables[i].metric));
        for (double v : m[i]) out += "," + (std::isnan(v) ? std::string("nan") : fmt::format("{:.12g}", v));
        out += "\n";
    }
    return out;
}

}  // namespace tsad
