#include "tsadlab/core.hpp"

#include <algorithm>
#include <stdexcept>

namespace tsad {

std::vector<Interval> runs(const BinarySeq& s, int v) {
    return runs_within(s, v, Interval{1, s.n()});
}

std::vector<Interval> runs_within(const BinarySeq& s, int v, const Interval& w) {
    if (v != 0 && v != 1) throw std::invalid_argument("run value must be 0 or 1");
    std::vector<Interval> out;
    int start = 0;
    for (int i = w.lo; i <= w.hi; ++i) {
        if (s(i) == v) {
            if (start == 0) start = i;
        } else if (start != 0) {
            out.push_back({start, i - 1});
            start = 0;
        }
    }
    if (start != 0) out.push_back({start, w.hi});
    return out;
}

int count_runs_within(const BinarySeq& s, int v, const Interval& w) {
    int c = 0;
    int prev = -1;
    for (int i = w.lo; i <= w.hi; ++i) {
        int b = s(i);
        if (b == v && prev != v) ++c;
        prev = b;
    }
    return c;
}

std::vector<Interval> junction_runs(const BinarySeq& s, int u, int v) {
    if (u == v) throw std::invalid_argument("junction values must differ");
    std::vector<Interval> first = runs(s, u);
    std::vector<Interval> out;
    for (const auto& r : first) {
        if (r.hi < s.n() && s(r.hi + 1) == v) {
            int hi = r.hi + 1;
            while (hi < s.n() && s(hi + 1) == v) ++hi;
            out.push_back({r.lo, hi});
        }
    }
    return out;
}

AlarmSets alarm_sets(const BinarySeq& s) {
    return AlarmSets{runs(s, 1), runs(s, 0), junction_runs(s, 0, 1), junction_runs(s, 1, 0)};
}

namespace {

bool g_mixed(const BinarySeq& g, const Interval& a) {
    int ones = g.count_ones(a);
    return ones > 0 && ones < a.length();
}

void collect_junction_alarms(const BinarySeq& g, const BinarySeq& p, int u, int v,
                             std::vector<Interval>& out) {
    for (const auto& j : junction_runs(g, u, v)) {
        for (const auto& a : runs_within(p, 1, j)) {
            if (g_mixed(g, a)) out.push_back(a);
        }
    }
}

}  // namespace

AlarmClassification classify_alarms(const BinarySeq& g, const BinarySeq& p) {
    require_same_length(g, p);
    AlarmClassification c;
    collect_junction_alarms(g, p, 0, 1, c.early);
    collect_junction_alarms(g, p, 1, 0, c.late);

    const auto palarms = runs(p, 1);
    for (const auto& a : palarms) {
        if (g.any_one(a)) continue;
        bool inside = false;
        for (const auto& e : c.early) inside = inside || a.subset_of(e);
        for (const auto& l : c.late) inside = inside || a.subset_of(l);
        if (!inside) c.trueFalse.push_back(a);
    }

    for (const auto& w : runs(g, 1)) {
        for (const auto& a : palarms) {
            if (!a.intersects(w)) continue;
            bool ok = w.contains(a.lo);
            if (!ok && a.lo < w.lo) ok = !g.any_one(Interval{a.lo, w.lo - 1});
            if (ok) {
                c.detected.push_back(w);
                break;
            }
        }
    }
    return c;
}

}  // namespace tsad
