#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "tsadlab/core.hpp"
#include "tsadlab/metrics.hpp"
#include "tsadlab/properties.hpp"

namespace tsad::detail {

// A triple together with its alarm classifications (only read by advanced properties).
struct TripleView {
    const BinarySeq& g;
    const BinarySeq& p;
    const BinarySeq& q;
    const std::vector<Interval>& gOnes;
    const std::vector<Interval>& gZeros;
    const AlarmClassification* clsP;
    const AlarmClassification* clsQ;
};

std::optional<Relation> precondition_view(PropertyId prop, const TripleView& t);

// Compact triple: bit j of a mask is position j + 1.
struct PackedCase {
    std::uint8_t n;
    std::uint8_t relation;  // 0 greater, 1 equal
    std::uint16_t g;
    std::uint16_t p;
    std::uint16_t q;
};

const std::vector<PackedCase>& packed_cases(PropertyId prop, int maxLen);

// Mask whose numeric order equals the lexicographic order of the 0/1 string.
std::uint32_t lex_key(std::uint32_t mask, int n);

// Runs fn(0..count-1) on up to `workers` threads; each index runs exactly once.
void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& fn);

// Scores of every (g, p) with 1 <= n <= maxLen.
class ScoreTable {
public:
    // Lengths above this bound are scored per case instead.
    static constexpr int kMaxLength = 8;

    ScoreTable(const Scorer& scorer, int maxLen, int workers);
    const Score& at(int n, std::uint32_t g, std::uint32_t p) const { return scores_[index(n, g, p)]; }
    int max_length() const { return maxLen_; }

private:
    std::size_t index(int n, std::uint32_t g, std::uint32_t p) const {
        return offsets_[n] + (static_cast<std::size_t>(g) << n | p);
    }

    int maxLen_;
    std::vector<std::size_t> offsets_;
    std::vector<Score> scores_;
};

// check_property with an optional precomputed table covering maxLen.
PropertyReport check_with_table(const Scorer& scorer, const ScoreTable* table, const MetricDescriptor& label,
                                PropertyId prop, int maxLen, const CheckOptions& opts);

inline BinarySeq unpack(std::uint32_t mask, int n) { return BinarySeq::from_mask(mask, static_cast<std::size_t>(n)); }

}  // namespace tsad::detail
