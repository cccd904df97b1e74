#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace tsad {

// Closed interval of 1-based positions.
struct Interval {
    int lo = 1;
    int hi = 1;

    int length() const { return hi - lo + 1; }
    bool contains(int i) const { return lo <= i && i <= hi; }
    bool intersects(const Interval& o) const { return lo <= o.hi && o.lo <= hi; }
    bool subset_of(const Interval& o) const { return o.lo <= lo && hi <= o.hi; }

    auto operator<=>(const Interval&) const = default;
};

std::string to_string(const Interval& w);

// Binary sequence over {0,1}, indexed 1..n.
class BinarySeq {
public:
    explicit BinarySeq(std::vector<std::uint8_t> bits);

    // Accepts '0'/'1' characters; whitespace is ignored.
    static BinarySeq parse(std::string_view text);
    static BinarySeq zeros(std::size_t n);
    // Bit j (0-based) of mask becomes position j + 1.
    static BinarySeq from_mask(std::uint64_t mask, std::size_t n);

    std::size_t size() const { return bits_.size(); }
    int n() const { return static_cast<int>(bits_.size()); }

    // 1-based access.
    int operator()(int i) const { return bits_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<std::uint8_t>& bits() const { return bits_; }

    int count_ones() const;
    int count_ones(const Interval& w) const;
    bool any_one(const Interval& w) const;
    // Smallest position in w holding a 1, or 0 when there is none.
    int first_one(const Interval& w) const;

    std::string str() const;

    bool operator==(const BinarySeq&) const = default;
    auto operator<=>(const BinarySeq&) const = default;

private:
    std::vector<std::uint8_t> bits_;
};

// I_v(s): maximal runs of value v, sorted by lo.
std::vector<Interval> runs(const BinarySeq& s, int v);

// Maximal runs of value v of s restricted to w, clipped to w.
std::vector<Interval> runs_within(const BinarySeq& s, int v, const Interval& w);
int count_runs_within(const BinarySeq& s, int v, const Interval& w);

// I_uv(s): a maximal u-run joined with the v-run that immediately follows it.
std::vector<Interval> junction_runs(const BinarySeq& s, int u, int v);

struct AlarmSets {
    std::vector<Interval> ones;
    std::vector<Interval> zeros;
    std::vector<Interval> junctions01;
    std::vector<Interval> junctions10;
};

AlarmSets alarm_sets(const BinarySeq& s);

struct AlarmClassification {
    std::vector<Interval> detected;   // DA, subset of I_1(g)
    std::vector<Interval> trueFalse;  // TA, subset of I_1(p)
    std::vector<Interval> early;      // EA
    std::vector<Interval> late;       // LA
};

AlarmClassification classify_alarms(const BinarySeq& g, const BinarySeq& p);

void require_same_length(const BinarySeq& a, const BinarySeq& b);

}  // namespace tsad
