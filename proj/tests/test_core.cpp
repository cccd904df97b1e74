#include <algorithm>
#include <random>
#include <string>

#include <gtest/gtest.h>

#include "tsadlab/core.hpp"

using namespace tsad;

namespace {

BinarySeq S(const char* s) { return BinarySeq::parse(s); }

using Intervals = std::vector<Interval>;

// ---- independent oracle over 0/1 strings (0-based scanning, 1-based output) ----

Intervals oracle_runs(const std::string& s, char v) {
    Intervals out;
    for (std::size_t i = 0; i < s.size();) {
        if (s[i] != v) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j + 1 < s.size() && s[j + 1] == v) ++j;
        out.push_back({static_cast<int>(i + 1), static_cast<int>(j + 1)});
        i = j + 1;
    }
    return out;
}

Intervals oracle_junctions(const std::string& s, char u, char v) {
    Intervals out;
    for (const auto& a : oracle_runs(s, u)) {
        for (const auto& b : oracle_runs(s, v)) {
            if (a.hi + 1 == b.lo) out.push_back({a.lo, b.hi});
        }
    }
    return out;
}

bool has_both(const std::string& g, const Interval& w) {
    bool zero = false, one = false;
    for (int i = w.lo; i <= w.hi; ++i) (g[i - 1] == '1' ? one : zero) = true;
    return zero && one;
}

bool all_zero(const std::string& g, int lo, int hi) {
    for (int i = lo; i <= hi; ++i) {
        if (g[i - 1] == '1') return false;
    }
    return true;
}

AlarmClassification oracle_classify(const std::string& g, const std::string& p) {
    AlarmClassification c;
    auto restricted = [&](char u, char v, Intervals& out) {
        for (const auto& j : oracle_junctions(g, u, v)) {
            std::string masked(p.size(), '0');
            for (int i = j.lo; i <= j.hi; ++i) masked[i - 1] = p[i - 1];
            for (const auto& a : oracle_runs(masked, '1')) {
                if (has_both(g, a)) out.push_back(a);
            }
        }
    };
    restricted('0', '1', c.early);
    restricted('1', '0', c.late);
    for (const auto& a : oracle_runs(p, '1')) {
        if (!all_zero(g, a.lo, a.hi)) continue;
        bool covered = false;
        for (const auto& e : c.early) covered |= e.lo <= a.lo && a.hi <= e.hi;
        for (const auto& l : c.late) covered |= l.lo <= a.lo && a.hi <= l.hi;
        if (!covered) c.trueFalse.push_back(a);
    }
    for (const auto& w : oracle_runs(g, '1')) {
        for (const auto& a : oracle_runs(p, '1')) {
            bool meets = a.lo <= w.hi && w.lo <= a.hi;
            bool startsInside = w.lo <= a.lo && a.lo <= w.hi;
            bool quietBefore = a.lo < w.lo && all_zero(g, a.lo, w.lo - 1);
            if (meets && (startsInside || quietBefore)) {
                c.detected.push_back(w);
                break;
            }
        }
    }
    return c;
}

std::string bits(std::uint32_t mask, int n) {
    std::string s(n, '0');
    for (int i = 0; i < n; ++i) {
        if (mask >> i & 1u) s[i] = '1';
    }
    return s;
}

void expect_same(const AlarmClassification& a, const AlarmClassification& b, const std::string& ctx) {
    EXPECT_EQ(a.detected, b.detected) << ctx;
    EXPECT_EQ(a.trueFalse, b.trueFalse) << ctx;
    EXPECT_EQ(a.early, b.early) << ctx;
    EXPECT_EQ(a.late, b.late) << ctx;
}

}  // namespace

TEST(BinarySeq, ParseAndRender) {
    auto s = S("0110");
    EXPECT_EQ(s.n(), 4);
    EXPECT_EQ(s(2), 1);
    EXPECT_EQ(s(4), 0);
    EXPECT_EQ(s.str(), "0110");
    EXPECT_EQ(s.count_ones(), 2);
    EXPECT_EQ(BinarySeq::zeros(3).str(), "000");
    EXPECT_EQ(BinarySeq::from_mask(0b101, 4).str(), "1010");
}

TEST(BinarySeq, RejectsBadInput) {
    EXPECT_THROW(S(""), std::invalid_argument);
    EXPECT_THROW(S("012"), std::invalid_argument);
    EXPECT_THROW(require_same_length(S("01"), S("011")), std::invalid_argument);
}

TEST(Runs, Examples) {
    EXPECT_EQ(runs(S("000111111000"), 1), (Intervals{{4, 9}}));
    EXPECT_EQ(runs(S("010010010000"), 1), (Intervals{{2, 2}, {5, 5}, {8, 8}}));
    EXPECT_TRUE(runs(S("0000"), 1).empty());
}

TEST(Junctions, Examples) {
    EXPECT_EQ(junction_runs(S("001100"), 0, 1), (Intervals{{1, 4}}));
    EXPECT_EQ(junction_runs(S("001100"), 1, 0), (Intervals{{3, 6}}));
    EXPECT_EQ(junction_runs(S("111000111"), 0, 1), (Intervals{{4, 9}}));
    EXPECT_THROW(junction_runs(S("01"), 1, 1), std::invalid_argument);
}

TEST(Classification, Examples) {
    auto c = classify_alarms(S("0110011"), S("0011110"));
    EXPECT_EQ(c.detected, (Intervals{{2, 3}}));
    EXPECT_EQ(c.early, (Intervals{{4, 6}}));
    EXPECT_EQ(c.late, (Intervals{{3, 5}}));
    EXPECT_TRUE(c.trueFalse.empty());

    c = classify_alarms(S("011000"), S("000010"));
    EXPECT_TRUE(c.detected.empty());
    EXPECT_EQ(c.trueFalse, (Intervals{{5, 5}}));
    EXPECT_TRUE(c.early.empty());
    EXPECT_TRUE(c.late.empty());

    c = classify_alarms(S("0000"), S("0000"));
    EXPECT_TRUE(c.detected.empty() && c.trueFalse.empty() && c.early.empty() && c.late.empty());
}

TEST(Classification, SpanningAlarmIsEarlyAndLate) {
    auto c = classify_alarms(S("00100"), S("01110"));
    EXPECT_EQ(c.early, (Intervals{{2, 3}}));
    EXPECT_EQ(c.late, (Intervals{{3, 4}}));
    EXPECT_EQ(c.detected, (Intervals{{3, 3}}));
}

TEST(RunsInvariant, PartitionAndJunctionsExhaustive) {
    for (int n = 1; n <= 12; ++n) {
        for (std::uint32_t m = 0; m < (1u << n); ++m) {
            auto str = bits(m, n);
            auto s = S(str.c_str());
            auto ones = runs(s, 1);
            auto zeros = runs(s, 0);
            ASSERT_EQ(ones, oracle_runs(str, '1')) << str;
            ASSERT_EQ(zeros, oracle_runs(str, '0')) << str;
            std::vector<int> cover(n + 1, 0);
            for (const auto& w : ones) {
                for (int i = w.lo; i <= w.hi; ++i) ++cover[i];
            }
            for (const auto& w : zeros) {
                for (int i = w.lo; i <= w.hi; ++i) ++cover[i];
            }
            for (int i = 1; i <= n; ++i) ASSERT_EQ(cover[i], 1) << str;
            ASSERT_EQ(junction_runs(s, 0, 1), oracle_junctions(str, '0', '1')) << str;
            ASSERT_EQ(junction_runs(s, 1, 0), oracle_junctions(str, '1', '0')) << str;
        }
    }
}

TEST(ClassificationInvariant, MatchesOracleExhaustive) {
    for (int n = 1; n <= 8; ++n) {
        for (std::uint32_t gm = 0; gm < (1u << n); ++gm) {
            auto gs = bits(gm, n);
            auto g = S(gs.c_str());
            for (std::uint32_t pm = 0; pm < (1u << n); ++pm) {
                auto ps = bits(pm, n);
                auto c = classify_alarms(g, S(ps.c_str()));
                auto o = oracle_classify(gs, ps);
                if (c.detected != o.detected || c.trueFalse != o.trueFalse || c.early != o.early || c.late != o.late) {
                    expect_same(c, o, gs + " " + ps);
                    return;
                }
            }
        }
    }
}

TEST(ClassificationInvariant, ZeroPredictionAndPerfectPredictionExhaustive) {
    for (int n = 1; n <= 10; ++n) {
        for (std::uint32_t gm = 0; gm < (1u << n); ++gm) {
            auto g = BinarySeq::from_mask(gm, n);
            auto z = classify_alarms(g, BinarySeq::zeros(n));
            ASSERT_TRUE(z.detected.empty() && z.trueFalse.empty() && z.early.empty() && z.late.empty()) << g.str();
            auto self = classify_alarms(g, g);
            ASSERT_EQ(self.detected, runs(g, 1)) << g.str();
            ASSERT_TRUE(self.trueFalse.empty() && self.early.empty() && self.late.empty()) << g.str();
        }
    }
}

TEST(ClassificationInvariant, MembershipRulesExhaustive) {
    for (int n = 1; n <= 10; ++n) {
        for (std::uint32_t gm = 0; gm < (1u << n); ++gm) {
            auto g = BinarySeq::from_mask(gm, n);
            auto gOnes = runs(g, 1);
            auto j01 = junction_runs(g, 0, 1);
            auto j10 = junction_runs(g, 1, 0);
            for (std::uint32_t pm = 0; pm < (1u << n); ++pm) {
                auto p = BinarySeq::from_mask(pm, n);
                auto c = classify_alarms(g, p);
                auto pOnes = runs(p, 1);
                for (const auto& d : c.detected) {
                    ASSERT_NE(std::find(gOnes.begin(), gOnes.end(), d), gOnes.end());
                    ASSERT_TRUE(std::any_of(pOnes.begin(), pOnes.end(), [&](const Interval& a) { return a.intersects(d); }));
                }
                for (const auto& t : c.trueFalse) {
                    ASSERT_NE(std::find(pOnes.begin(), pOnes.end(), t), pOnes.end());
                    ASSERT_FALSE(g.any_one(t));
                }
                auto inside_one = [&](const Interval& a, const Intervals& js) {
                    return std::count_if(js.begin(), js.end(), [&](const Interval& j) { return a.subset_of(j); }) >= 1;
                };
                for (const auto& e : c.early) {
                    ASSERT_TRUE(inside_one(e, j01));
                    ASSERT_TRUE(g.count_ones(e) > 0 && g.count_ones(e) < e.length());
                    ASSERT_EQ(p.count_ones(e), e.length());
                }
                for (const auto& l : c.late) {
                    ASSERT_TRUE(inside_one(l, j10));
                    ASSERT_TRUE(g.count_ones(l) > 0 && g.count_ones(l) < l.length());
                    ASSERT_EQ(p.count_ones(l), l.length());
                }
            }
        }
    }
}

TEST(ClassificationInvariant, TrueFalseAlarmsRandomized) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100000; ++trial) {
        int n = 1 + static_cast<int>(rng() % 20);
        auto g = BinarySeq::from_mask(rng() & ((1ull << n) - 1), n);
        auto p = BinarySeq::from_mask(rng() & ((1ull << n) - 1), n);
        auto pOnes = runs(p, 1);
        for (const auto& t : classify_alarms(g, p).trueFalse) {
            ASSERT_NE(std::find(pOnes.begin(), pOnes.end(), t), pOnes.end()) << g.str() << " " << p.str();
            ASSERT_FALSE(g.any_one(t)) << g.str() << " " << p.str();
        }
    }
}
