#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tsadlab/core.hpp"
#include "tsadlab/metrics.hpp"

namespace tsad {

struct RankEntry {
    std::string id;
    Score score;
    int rank = 0;  // competition rank, 1-based
};

struct RankingTable {
    MetricDescriptor metric;
    std::vector<RankEntry> entries;            // defined scores, best first; ties ordered by id
    std::vector<std::string> undefinedBucket;  // sorted ids, ranked below every defined score

    // Rank shared by the undefined bucket.
    int undefined_rank() const { return static_cast<int>(entries.size()) + 1; }
    // Rank of an id, or 0 when absent.
    int rank_of(const std::string& id) const;
};

using Prediction = std::pair<std::string, BinarySeq>;

// Throws std::invalid_argument on length mismatch or duplicate ids.
RankingTable rank(const MetricDescriptor& metric, const BinarySeq& g, const std::vector<Prediction>& preds);
RankingTable rank(const Scorer& scorer, const MetricDescriptor& label, const BinarySeq& g,
                  const std::vector<Prediction>& preds);

// Kendall tau-b over the two rank assignments. Throws std::invalid_argument when the id sets differ
// or fewer than two predictions are ranked; NaN when either ranking is a single tie group.
double kendall_tau(const RankingTable& a, const RankingTable& b);

std::vector<std::vector<double>> tau_matrix(const std::vector<RankingTable>& tables);

enum class SyntheticKind { perfect, empty, delayed, truncated, oscillating, random, shifted, merged, extra_false_alarms, inverted };

struct SyntheticSpec {
    SyntheticKind kind = SyntheticKind::perfect;
    int delay = 0;           // delayed: onset shift, >= 0
    double fraction = 1.0;   // truncated: kept share of each window, in (0, 1]
    int period = 2;          // oscillating: >= 2
    double rate = 0.0;       // random: in [0, 1]
    int offset = 0;          // shifted: may be negative
    int count = 0;           // extra_false_alarms: >= 0
    std::uint64_t seed = 0;  // random, extra_false_alarms

    std::string label() const;
};

// Throws std::invalid_argument on out-of-range parameters or when g cannot hold the request.
BinarySeq generate_synthetic(const SyntheticSpec& spec, const BinarySeq& g);

constexpr std::uint64_t kDefaultSeed = 20240601;

// perfect, empty, inverted, delayed x2, truncated x2, oscillating x2, shifted x2, merged,
// extra false alarms x3, random.
std::vector<SyntheticSpec> default_battery(std::uint64_t seed = kDefaultSeed);
std::vector<Prediction> battery_predictions(const std::vector<SyntheticSpec>& battery, const BinarySeq& g);

// Ground truth of length n with `anomalies` disjoint windows of length 5..15.
BinarySeq synthetic_ground_truth(int n, int anomalies, std::uint64_t seed = kDefaultSeed);

// Uniform double in [0, 1) from a 64-bit draw; identical on every platform.
double unit_interval(std::uint64_t bits);

std::string ranking_csv(const RankingTable& t);
std::string ranking_json(const RankingTable& t);
std::string tau_matrix_csv(const std::vector<RankingTable>& tables);

// Score rendering shared by the CLI: 12 significant digits, "undefined", "-inf".
std::string format_score(const Score& s);

}  // namespace tsad
