// Hypotheses of the simple (P1-P9) and advanced (A1-A9) properties as literal predicates.
#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include <fmt/format.h>

#include "internal.hpp"

namespace tsad {

std::string PropertyId::label() const { return fmt::format("{}{}", family == PropertyFamily::simple ? 'P' : 'A', index); }

std::optional<PropertyId> parse_property(std::string_view label) {
    if (label.size() != 2) return std::nullopt;
    char f = label[0];
    int idx = label[1] - '0';
    if (idx < 1 || idx > 9) return std::nullopt;
    if (f == 'P' || f == 'p') return PropertyId{PropertyFamily::simple, idx};
    if (f == 'A' || f == 'a') return PropertyId{PropertyFamily::advanced, idx};
    return std::nullopt;
}

std::vector<PropertyId> simple_properties() {
    std::vector<PropertyId> v;
    for (int i = 1; i <= 9; ++i) v.push_back({PropertyFamily::simple, i});
    return v;
}

std::vector<PropertyId> advanced_properties() {
    std::vector<PropertyId> v;
    for (int i = 1; i <= 9; ++i) v.push_back({PropertyFamily::advanced, i});
    return v;
}

std::vector<PropertyId> all_properties() {
    auto v = simple_properties();
    auto a = advanced_properties();
    v.insert(v.end(), a.begin(), a.end());
    return v;
}

namespace detail {

namespace {

constexpr Relation kGreater = Relation::greater;

int runs_in(const BinarySeq& s, const Interval& w) { return count_runs_within(s, 1, w); }

// p and q agree at every position outside w.
bool agree_outside(const BinarySeq& p, const BinarySeq& q, const Interval& w) {
    for (int i = 1; i <= p.n(); ++i) {
        if (!w.contains(i) && p(i) != q(i)) return false;
    }
    return true;
}

bool agree_outside(const BinarySeq& p, const BinarySeq& q, const Interval& a, const Interval& b) {
    for (int i = 1; i <= p.n(); ++i) {
        if (!a.contains(i) && !b.contains(i) && p(i) != q(i)) return false;
    }
    return true;
}

// The single position where p and q differ, or 0 when they differ in zero or several places.
int single_difference(const BinarySeq& p, const BinarySeq& q) {
    int at = 0;
    for (int i = 1; i <= p.n(); ++i) {
        if (p(i) == q(i)) continue;
        if (at) return 0;
        at = i;
    }
    return at;
}

std::vector<int> differences(const BinarySeq& p, const BinarySeq& q) {
    std::vector<int> d;
    for (int i = 1; i <= p.n(); ++i) {
        if (p(i) != q(i)) d.push_back(i);
    }
    return d;
}

bool all_zero(const BinarySeq& s, const Interval& w) { return !s.any_one(w); }

bool contains(const std::vector<Interval>& v, const Interval& w) { return std::find(v.begin(), v.end(), w) != v.end(); }

int last_one(const BinarySeq& s, const Interval& w) {
    for (int i = w.hi; i >= w.lo; --i) {
        if (s(i)) return i;
    }
    return 0;
}

// q = 1_I + p 1_{not I} for I inside a above p's last one in a, adding exactly one run in a.
bool adds_trailing_run(const BinarySeq& p, const BinarySeq& q, const Interval& a) {
    int last = last_one(p, a);
    if (last == 0) return false;
    bool any = false;
    for (int i = 1; i <= p.n(); ++i) {
        if (p(i) == q(i)) continue;
        if (!a.contains(i) || i <= last || p(i) != 0) return false;
        any = true;
    }
    return any && runs_in(q, a) == runs_in(p, a) + 1;
}

// Positions of w where g is 0, as an interval; junction alarms meet g^-1(0) in one block.
std::optional<Interval> normal_part(const BinarySeq& g, const Interval& w) {
    int lo = 0, hi = 0;
    for (int i = w.lo; i <= w.hi; ++i) {
        if (g(i)) continue;
        if (lo && hi != i - 1) return std::nullopt;
        if (!lo) lo = i;
        hi = i;
    }
    if (!lo) return std::nullopt;
    return Interval{lo, hi};
}

std::size_t false_alarm_count(const AlarmClassification& c) { return c.trueFalse.size() + c.early.size() + c.late.size(); }

// ---- simple properties ----

std::optional<Relation> p1(const TripleView& t) {
    for (const auto& a : t.gOnes) {
        if (agree_outside(t.p, t.q, a) && runs_in(t.p, a) > 0 && runs_in(t.q, a) == 0) return kGreater;
    }
    return std::nullopt;
}

std::optional<Relation> p2(const TripleView& t) {
    for (const auto& a : t.gOnes) {
        if (adds_trailing_run(t.p, t.q, a)) return kGreater;
    }
    return std::nullopt;
}

std::optional<Relation> p3(const TripleView& t) {
    int i = single_difference(t.p, t.q);
    if (!i || t.g(i) || t.q(i) != 1) return std::nullopt;
    for (const auto& nrm : t.gZeros) {
        if (nrm.contains(i) && runs_in(t.p, nrm) == runs_in(t.q, nrm)) return kGreater;
    }
    return std::nullopt;
}

std::optional<Relation> p4(const TripleView& t) {
    for (const auto& nrm : t.gZeros) {
        if (agree_outside(t.p, t.q, nrm) && runs_in(t.p, nrm) < runs_in(t.q, nrm)) return kGreater;
    }
    return std::nullopt;
}

std::optional<Relation> p5(const TripleView& t) {
    if (t.p.count_ones() != t.q.count_ones()) return std::nullopt;
    for (const auto& nrm : t.gZeros) {
        if (agree_outside(t.p, t.q, nrm) && runs_in(t.p, nrm) == runs_in(t.q, nrm)) return Relation::equal;
    }
    return std::nullopt;
}

std::optional<Relation> p6(const TripleView& t) {
    for (const auto& nrm : t.gZeros) {
        if (!all_zero(t.p, nrm) || t.q.count_ones(nrm) != 1) continue;
        for (const auto& a : t.gOnes) {
            if (agree_outside(t.p, t.q, a, nrm) && runs_in(t.p, a) == runs_in(t.q, a)) return kGreater;
        }
    }
    return std::nullopt;
}

std::optional<Relation> p7(const TripleView& t) {
    int i = single_difference(t.p, t.q);
    if (!i || !t.g(i) || t.p(i) != 1) return std::nullopt;
    for (const auto& a : t.gOnes) {
        if (a.contains(i) && runs_in(t.p, a) <= runs_in(t.q, a)) return kGreater;
    }
    return std::nullopt;
}

std::optional<Relation> p8(const TripleView& t) {
    if (t.p.count_ones() != t.q.count_ones()) return std::nullopt;
    for (const auto& a : t.gOnes) {
        if (!agree_outside(t.p, t.q, a) || runs_in(t.p, a) != runs_in(t.q, a)) continue;
        int fp = t.p.first_one(a), fq = t.q.first_one(a);
        if (fp && fq && fp < fq) return kGreater;
    }
    return std::nullopt;
}

// Positions i* < i** in one window with p(i*) = q(i**) = 1, p(i**) = q(i*) = 0, equal elsewhere.
std::optional<Interval> swap_window(const TripleView& t) {
    auto d = differences(t.p, t.q);
    if (d.size() != 2) return std::nullopt;
    int i = d[0], j = d[1];
    if (t.p(i) != 1 || t.p(j) != 0) return std::nullopt;
    for (const auto& a : t.gOnes) {
        if (a.contains(i) && a.contains(j)) return a;
    }
    return std::nullopt;
}

std::optional<Relation> p9(const TripleView& t) {
    auto a = swap_window(t);
    if (a && runs_in(t.p, *a) <= runs_in(t.q, *a)) return kGreater;
    return std::nullopt;
}

// ---- advanced properties ----

std::optional<Relation> a1(const TripleView& t) {
    const auto& cp = *t.clsP;
    const auto& cq = *t.clsQ;
    for (const auto& a : t.gOnes) {
        if (!agree_outside(t.p, t.q, a)) continue;
        if (!contains(cp.detected, a) || contains(cq.detected, a)) continue;
        std::vector<Interval> rest;
        for (const auto& d : cp.detected) {
            if (d != a) rest.push_back(d);
        }
        if (rest != cq.detected) continue;
        bool ok = true;
        for (const auto* set : {&cp.early, &cp.late}) {
            for (const auto& o : *set) {
                if (!o.intersects(a)) continue;
                auto part = normal_part(t.g, o);
                if (!part || !contains(cq.trueFalse, *part)) ok = false;
            }
        }
        if (ok) return kGreater;
    }
    return std::nullopt;
}

std::optional<Relation> a2(const TripleView& t) {
    const auto& cp = *t.clsP;
    if (cp.detected != t.clsQ->detected) return std::nullopt;
    auto pRuns = runs(t.p, 1);
    for (const auto& a : cp.detected) {
        if (!adds_trailing_run(t.p, t.q, a)) continue;
        bool inside = std::any_of(pRuns.begin(), pRuns.end(), [&](const Interval& b) { return b.subset_of(a); });
        if (inside) return kGreater;
    }
    return std::nullopt;
}

std::optional<Relation> a3(const TripleView& t) {
    int i = single_difference(t.p, t.q);
    if (!i || t.g(i) || t.q(i) != 1) return std::nullopt;
    if (runs(t.p, 1).size() <= runs(t.q, 1).size()) return kGreater;
    return std::nullopt;
}

std::optional<Relation> a4(const TripleView& t) {
    const auto& cp = *t.clsP;
    const auto& cq = *t.clsQ;
    if (cp.detected != cq.detected || t.p.count_ones() != t.q.count_ones()) return std::nullopt;
    if (cp.trueFalse.size() > cq.trueFalse.size() || cp.early.size() > cq.early.size() || cp.late.size() > cq.late.size()) {
        return std::nullopt;
    }
    if (false_alarm_count(cp) >= false_alarm_count(cq)) return std::nullopt;
    for (const auto& nrm : t.gZeros) {
        if (agree_outside(t.p, t.q, nrm)) return kGreater;
    }
    return std::nullopt;
}

std::optional<Relation> a5(const TripleView& t) {
    for (int i = 1; i <= t.g.n(); ++i) {
        if (t.g(i) && t.p(i) != t.q(i)) return std::nullopt;
    }
    const auto& cp = *t.clsP;
    const auto& cq = *t.clsQ;
    if (t.p.count_ones() != t.q.count_ones()) return std::nullopt;
    if (cp.early != cq.early || cp.late != cq.late || cp.trueFalse.size() != cq.trueFalse.size()) return std::nullopt;
    return Relation::equal;
}

std::optional<Relation> a6(const TripleView& t) {
    const auto& cp = *t.clsP;
    const auto& cq = *t.clsQ;
    if (t.p.count_ones() != t.q.count_ones() || cp.detected != cq.detected) return std::nullopt;
    // (i): q has an early alarm whose normal part p leaves empty; p has a true false alarm q leaves empty.
    for (const auto& e : cq.early) {
        auto ae = normal_part(t.g, e);
        if (!ae || !all_zero(t.p, *ae)) continue;
        for (const auto& at : cp.trueFalse) {
            if (ae->intersects(at) || !all_zero(t.q, at)) continue;
            if (agree_outside(t.p, t.q, *ae, at)) return kGreater;
        }
    }
    // (ii): q has a true false alarm p leaves empty; p has a late alarm whose normal part q leaves empty.
    for (const auto& at : cq.trueFalse) {
        if (!all_zero(t.p, at)) continue;
        for (const auto& l : cp.late) {
            auto al = normal_part(t.g, l);
            if (!al || al->intersects(at) || !all_zero(t.q, *al)) continue;
            if (agree_outside(t.p, t.q, at, *al)) return kGreater;
        }
    }
    return std::nullopt;
}

std::optional<Relation> a7(const TripleView& t) {
    int i = single_difference(t.p, t.q);
    if (!i || !t.g(i) || t.p(i) != 1) return std::nullopt;
    const auto& cp = *t.clsP;
    const auto& cq = *t.clsQ;
    if (cp.early != cq.early) return std::nullopt;
    for (const auto& a : t.gOnes) {
        if (a.contains(i) && contains(cp.detected, a) && contains(cq.detected, a)) return kGreater;
    }
    return std::nullopt;
}

std::optional<Relation> a8(const TripleView& t) {
    const auto& cp = *t.clsP;
    const auto& cq = *t.clsQ;
    if (t.p.count_ones() != t.q.count_ones() || cp.early != cq.early || cp.late.size() != cq.late.size()) {
        return std::nullopt;
    }
    for (const auto& a : t.gOnes) {
        if (!contains(cp.detected, a) || !contains(cq.detected, a)) continue;
        if (!agree_outside(t.p, t.q, a) || runs_in(t.p, a) != runs_in(t.q, a)) continue;
        int fp = t.p.first_one(a), fq = t.q.first_one(a);
        if (fp && fq && fp < fq) return kGreater;
    }
    return std::nullopt;
}

std::optional<Relation> a9(const TripleView& t) {
    const auto& cp = *t.clsP;
    const auto& cq = *t.clsQ;
    if (cp.early != cq.early || cp.late.size() != cq.late.size()) return std::nullopt;
    auto a = swap_window(t);
    if (!a || !contains(cp.detected, *a) || !contains(cq.detected, *a)) return std::nullopt;
    if (runs_in(t.p, *a) <= runs_in(t.q, *a)) return kGreater;
    return std::nullopt;
}

}  // namespace

std::optional<Relation> precondition_view(PropertyId prop, const TripleView& t) {
    using Fn = std::optional<Relation> (*)(const TripleView&);
    static constexpr Fn simple[] = {p1, p2, p3, p4, p5, p6, p7, p8, p9};
    static constexpr Fn advanced[] = {a1, a2, a3, a4, a5, a6, a7, a8, a9};
    if (prop.index < 1 || prop.index > 9) throw std::invalid_argument("property index out of range");
    return (prop.family == PropertyFamily::simple ? simple : advanced)[prop.index - 1](t);
}

}  // namespace detail

std::optional<Relation> precondition(PropertyId prop, const BinarySeq& g, const BinarySeq& p, const BinarySeq& q) {
    require_same_length(g, p);
    require_same_length(g, q);
    auto gOnes = runs(g, 1);
    auto gZeros = runs(g, 0);
    std::optional<AlarmClassification> cp, cq;
    if (prop.family == PropertyFamily::advanced) {
        cp = classify_alarms(g, p);
        cq = classify_alarms(g, q);
    }
    detail::TripleView t{g, p, q, gOnes, gZeros, cp ? &*cp : nullptr, cq ? &*cq : nullptr};
    return detail::precondition_view(prop, t);
}

}  // namespace tsad
