// Acceptance run: one PASS/FAIL line per criterion, failing items listed below it.
//
// Items named in kKnownFailures fail for documented reasons (see README). The exit status is 0
// when every failing item is known, 1 when an unknown item fails, so regressions break ctest
// while the known gaps stay visible in the output.
#include <chrono>
#include <cmath>
#include <iostream>
#include <random>
#include <set>
#include <tuple>

#include <fmt/format.h>

#include "tsadlab/metrics.hpp"
#include "tsadlab/properties.hpp"
#include "tsadlab/rankings.hpp"

using namespace tsad;

namespace {

const std::set<std::string> kKnownFailures = {
    // printed four-decimal values that the implemented range model does not reproduce
    "range-recall 111111111111 110011111111",
    "ts-precision 011111111110 000000001011",
    "ts-recall 111111111111 010100000000",
    // printed exponent -30 where the scoring function gives -25
    "nab raw 000111111000 000111011000",
    // advanced-property gaps of ALARM
    "alarm A2",
    "alarm A6",
    "alarm A7",
    // claimed-satisfied cells with counterexamples
    "pa-precision P6",
    "pa-f1 P6",
    "pa-percent-k-f1(kPercent=0) P6",
    "pa-decay-f1(d=1) P6",
    "reduced-length-f1 P1",
    "reduced-length-f1 P6",
    "range-f1 P1",
    "range-f1 P7",
    "ts-f1 P7",
    "etap P5",
    "etar P5",
    // claimed-violated cell whose counterexample needs an undefined score
    "affiliation-f1 P1",
    // published score pairs not reproduced
    "fixture range-precision P6",
    "fixture range-recall(alphaWeight=0) P2",
    "fixture range-recall(alphaWeight=0) P8",
    "fixture ts-precision P6",
    "fixture ts-recall P2",
    "fixture ts-recall P8",
    "fixture ts-f1 P9",
    "fixture affiliation-precision P4",
};

struct Criterion {
    std::string name;
    std::vector<std::string> failures;
    std::vector<std::string> notes;
    std::vector<std::string> keys;  // failure ids, matched against kKnownFailures

    void check(bool ok, const std::string& item, const std::string& detail = {}) {
        if (ok) return;
        keys.push_back(item);
        failures.push_back(detail.empty() ? item : item + ": " + detail);
    }
};

BinarySeq S(const char* s) { return BinarySeq::parse(s); }

std::string show(const Score& s) {
    if (!s.defined()) return "undefined";
    if (s.rational()) return rational_string(*s.rational());
    return fmt::format("{:.10g}", s.value());
}

// ---- 1: published example values ----

struct Example {
    std::string key;
    std::string metric;
    Params params;
    const char* g;
    const char* p;
    const char* exact;  // rational expected value, or nullptr
    double approx = 0;
    double tolerance = 0;
};

Criterion published_values() {
    Criterion c{"1 published example values", {}, {}, {}};
    auto start = std::chrono::steady_clock::now();
    const double ln3 = std::log(3.0);
    const std::vector<Example> examples = {
        {"pointwise-precision", "pointwise-precision", {}, "000110011000", "000110001000", "1"},
        {"pointwise-recall", "pointwise-recall", {}, "000111111000", "000111011000", "5/6"},
        {"pointwise-f1", "pointwise-f1", {}, "000111111000", "000111000000", "2/3"},
        {"pa-precision", "pa-precision", {}, "000000111000", "010010010000", "3/5"},
        {"pa-recall", "pa-recall", {}, "000111111000", "000111000000", "1"},
        {"pa-f1", "pa-f1", {}, "000000111000", "001100010000", "3/4"},
        {"event-precision", "event-precision", {}, "000111111000", "110111000000", "1/2"},
        {"event-f1", "event-f1", {}, "000111111000", "010111000000", "2/3"},
        {"composite-f1", "composite-f1", {}, "000111111000", "000111011000", "1"},
        {"kdelay-precision", "kdelay-precision", {{"k", 1}}, "000111011000", "000001011000", "1"},
        {"kdelay-recall", "kdelay-recall", {{"k", 1}}, "000111011000", "000000011000", "2/5"},
        {"kdelay-f1", "kdelay-f1", {{"k", 1}}, "000111011000", "000000011000", "4/7"},
        {"pa-percent-k-f1", "pa-percent-k-f1", {{"kPercent", 0.4}}, "000000111000", "000000100000", "1/2"},
        {"pa-percent-k-integrated-f1", "pa-percent-k-integrated-f1", {}, "000000111000", "000000100000", "2/3"},
        {"pa-decay-f1", "pa-decay-f1", {{"d", 0.9}}, "001111111111", "000000000001", "387420489/1000000000"},
        {"reduced-length-f1", "reduced-length-f1", {}, "000000111000", "010010010000", nullptr, ln3 / (1 + ln3), 1e-12},
        {"balanced-pa-f1", "balanced-pa-f1", {{"B", 1}}, "000001000111", "000000000010", "6/7"},
        {"lsa-f1", "lsa-f1", {{"b", 3}}, "111111000000", "000100000000", "2/3"},
        {"range-precision 000011110000 110011000000", "range-precision", {}, "000011110000", "110011000000", "1/2"},
        {"range-recall 111111111111 110011111111", "range-recall", {}, "111111111111", "110011111111", nullptr, 0.8846, 5e-5},
        {"range-f1 111111111111 100000000000", "range-f1", {}, "111111111111", "100000000000", nullptr, 0.2667, 5e-5},
        {"ts-precision 011111111110 000000001011", "ts-precision", {}, "011111111110", "000000001011", nullptr, 0.6667, 5e-5},
        {"ts-recall 111111111111 010100000000", "ts-recall", {}, "111111111111", "010100000000", nullptr, 0.2821, 5e-5},
        {"ts-f1 111111111111 100000000001", "ts-f1", {}, "111111111111", "100000000001", nullptr, 0.1538, 5e-5},
        {"tap 000000111000 000100000000", "tap", {}, "000000111000", "000100000000", nullptr, 0, 1e-12},
        {"tar 000000111000 000100000000", "tar", {}, "000000111000", "000100000000", nullptr, 0, 1e-12},
        {"tap 000111111000 000110000000", "tap", {}, "000111111000", "000110000000", nullptr, 1, 1e-12},
        {"tt-precision 000000110000 000001010000", "tt-precision", {{"delta", 1}}, "000000110000", "000001010000", "1"},
        {"tt-precision 000000110000 000010010000", "tt-precision", {{"delta", 1}}, "000000110000", "000010010000", "1/2"},
        {"tt-recall 000000111000 000001001000", "tt-recall", {{"delta", 1}}, "000000111000", "000001001000", "1"},
        {"affiliation-precision", "affiliation-precision", {}, "000000111000", "010000100000", "5/12"},
        {"affiliation-recall", "affiliation-recall", {}, "000000111000", "010000100000", "1/6"},
        {"affiliation-f1", "affiliation-f1", {}, "000000111000", "010000100000", "5/21"},
        {"etap 11111 10000", "etap", {}, "11111", "10000", nullptr, 0, 1e-12},
        {"etar 100000000000", "etar", {}, "100000000000", "100000000000", nullptr, 1, 1e-12},
        {"etap 11100 11100", "etap", {}, "11100", "11100", nullptr, 1, 1e-12},
        {"temporal-distance 000111111000 000111000000", "temporal-distance", {}, "000111111000", "000111000000", "-6"},
        {"temporal-distance 000111111000 000111011000", "temporal-distance", {}, "000111111000", "000111011000", "-1"},
        {"average-alert-delay 000111111000 000010000000", "average-alert-delay", {}, "000111111000", "000010000000", "-1"},
        {"average-alert-delay 000110011000 000110010000", "average-alert-delay", {}, "000110011000", "000110010000", "0"},
        {"larm 000111111000 zero", "larm", {}, "000111111000", "000000000000", "0"},
        {"larm 0110 0110", "larm", {}, "0110", "0110", "7/8"},
        {"larm 011000 010010", "larm", {}, "011000", "010010", "-5/4"},
        {"alarm 000111111000 zero", "alarm", {}, "000111111000", "000000000000", "0"},
        {"alarm 0110 0110", "alarm", {{"t", 2}}, "0110", "0110", "15/8"},
        {"alarm 011000 000010", "alarm", {{"t", 2}}, "011000", "000010", "-1/2"},
    };
    for (const auto& e : examples) {
        Score s = score(make_descriptor(e.metric, e.params), S(e.g), S(e.p));
        bool ok = s.defined();
        std::string expected;
        if (e.exact) {
            mpq_class want = parse_rational(e.exact);
            ok = ok && s.rational() && *s.rational() == want;
            expected = e.exact;
        } else {
            ok = ok && std::abs(s.value() - e.approx) <= e.tolerance;
            expected = fmt::format("{:.10g}", e.approx);
        }
        c.check(ok, e.key, fmt::format("expected {}, computed {}", expected, show(s)));
    }

    NabWeights w;
    double hit = nab_raw(w, S("000111111000"), S("000111011000"));
    double printed = 2.0 / (1.0 + std::exp(-30.0)) - 1.0;
    c.check(std::abs(hit - printed) <= 1e-12, "nab raw 000111111000 000111011000",
            fmt::format("expected {:.17g}, computed {:.17g}", printed, hit));
    double fp = nab_raw(w, S("000110000000"), S("000001000000"));
    double fpExpected = -1.0 + 0.11 * (2.0 / (1.0 + std::exp(5.0)) - 1.0);
    c.check(std::abs(fp - fpExpected) <= 1e-12, "nab raw 000110000000 000001000000",
            fmt::format("expected {:.17g}, computed {:.17g}", fpExpected, fp));

    PropertyId p1{PropertyFamily::simple, 1}, p5{PropertyFamily::simple, 5}, p8{PropertyFamily::simple, 8};
    c.check(precondition(p1, S("000110011000"), S("000110001000"), S("000110000000")) == Relation::greater,
            "precondition P1 example");
    c.check(precondition(p5, S("000111111000"), S("110111000000"), S("011111000000")) == Relation::equal,
            "precondition P5 example");
    c.check(precondition(p8, S("000111111000"), S("000110000000"), S("000011000000")) == Relation::greater,
            "precondition P8 example");

    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    c.notes.push_back(fmt::format("{} examples in {:.1f} ms", examples.size() + 5, ms));
    return c;
}

// ---- 2 and 3: LARM and ALARM property sweeps ----

Criterion property_sweep(const std::string& name, const std::string& metric, const std::vector<PropertyId>& props,
                         bool requireNoSkips) {
    Criterion c{name, {}, {}, {}};
    auto d = make_descriptor(metric);
    auto start = std::chrono::steady_clock::now();
    std::size_t cases = 0;
    for (auto prop : props) {
        auto r = check_property(d, prop, 7);
        cases += r.casesChecked + r.skipped;
        std::string detail;
        if (!r.witnesses.empty()) {
            const auto& w = r.witnesses.front();
            detail = fmt::format("{} violations, first g={} p={} q={}", r.violations, w.g.str(), w.p.str(), w.q.str());
        }
        c.check(r.verdict == Verdict::no_counterexample, metric + " " + prop.label(), detail);
        if (requireNoSkips && r.skipped > 0) {
            // Skips are only allowed where g has no anomaly.
            std::size_t withAnomaly = 0;
            for (const auto& k : enumerate_cases(prop, 7)) {
                if (k.g.count_ones() == 0) continue;
                auto sp = score(d, k.g, k.p), sq = score(d, k.g, k.q);
                withAnomaly += !sp.defined() || !sq.defined();
            }
            c.check(withAnomaly == 0, metric + " " + prop.label() + " skipped",
                    fmt::format("{} undefined cases with an anomaly", withAnomaly));
        }
    }
    auto s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.notes.push_back(fmt::format("{} cases at maxLen 7 in {:.1f} s", cases, s));
    return c;
}

// ---- 4: matrix agreement ----

Criterion matrix_agreement() {
    Criterion c{"4 matrix agreement at maxLen 6", {}, {}, {}};
    auto start = std::chrono::steady_clock::now();
    auto rows = run_matrix(6);
    std::size_t cells = 0;
    for (const auto& row : rows) {
        for (const auto& cell : row.cells) {
            ++cells;
            c.check(cell.agrees, row.row->label + " " + cell.property.label(), cell.note);
        }
    }
    std::size_t fixtures = 0;
    for (const auto& f : reference_fixtures()) {
        if (f.inconsistent) continue;
        ++fixtures;
        auto r = evaluate_fixture(f);
        c.check(r.printedReproduced, "fixture " + describe(f.metric) + " " + f.property.label(), r.detail);
    }
    auto s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.notes.push_back(fmt::format("{} rows, {} analyzed cells, {} fixtures in {:.1f} s", rows.size(), cells, fixtures, s));
    return c;
}

// ---- 5: zero prediction ----

BinarySeq random_ground_truth(std::mt19937_64& rng) {
    while (true) {
        int anomalies = 1 + static_cast<int>(rng() % 5);
        int n = 2 * anomalies - 1 + static_cast<int>(rng() % (65 - 2 * anomalies));
        std::vector<std::uint8_t> bits(n, 0);
        for (int k = 0; k < anomalies; ++k) {
            int len = 1 + static_cast<int>(rng() % 8);
            int lo = static_cast<int>(rng() % n);
            for (int i = lo; i < std::min(n, lo + len); ++i) bits[i] = 1;
        }
        BinarySeq g(bits);
        if (static_cast<int>(runs(g, 1).size()) == anomalies) return g;
    }
}

Criterion zero_prediction() {
    Criterion c{"5 zero prediction scores 0", {}, {}, {}};
    std::mt19937_64 rng(kDefaultSeed);
    auto larm = make_scorer(make_descriptor("larm"));
    auto alarm = make_scorer(make_descriptor("alarm"));
    for (int trial = 0; trial < 10000; ++trial) {
        auto g = random_ground_truth(rng);
        auto z = BinarySeq::zeros(g.size());
        auto l = larm(g, z), a = alarm(g, z);
        c.check(l.rational() && *l.rational() == 0, "larm " + g.str(), show(l));
        c.check(a.rational() && *a.rational() == 0, "alarm " + g.str(), show(a));
    }
    c.notes.push_back("10000 ground truths, n <= 64, 1-5 anomalies");
    return c;
}

// ---- 6: classification invariants ----

Criterion classification() {
    Criterion c{"6 classification invariants for n <= 10", {}, {}, {}};
    auto start = std::chrono::steady_clock::now();
    std::size_t pairs = 0;
    for (int n = 1; n <= 10; ++n) {
        for (std::uint32_t gm = 0; gm < (1u << n); ++gm) {
            auto g = BinarySeq::from_mask(gm, n);
            auto ones = runs(g, 1), zeros = runs(g, 0);
            std::vector<int> cover(n + 1, 0);
            for (const auto* set : {&ones, &zeros}) {
                for (const auto& w : *set) {
                    for (int i = w.lo; i <= w.hi; ++i) ++cover[i];
                }
            }
            bool partition = std::all_of(cover.begin() + 1, cover.end(), [](int k) { return k == 1; });
            c.check(partition, "partition " + g.str());
            for (auto [u, v] : {std::pair{0, 1}, std::pair{1, 0}}) {
                const auto& first = u ? ones : zeros;
                const auto& second = v ? ones : zeros;
                std::vector<Interval> expected;
                for (const auto& a : first) {
                    for (const auto& b : second) {
                        if (a.hi + 1 == b.lo) expected.push_back({a.lo, b.hi});
                    }
                }
                c.check(junction_runs(g, u, v) == expected, fmt::format("junctions{}{} {}", u, v, g.str()));
            }
            auto j01 = junction_runs(g, 0, 1), j10 = junction_runs(g, 1, 0);
            for (std::uint32_t pm = 0; pm < (1u << n); ++pm) {
                ++pairs;
                auto p = BinarySeq::from_mask(pm, n);
                auto cls = classify_alarms(g, p);
                auto pOnes = runs(p, 1);
                std::string ctx = g.str() + " " + p.str();
                for (const auto& d : cls.detected) {
                    bool inG = std::find(ones.begin(), ones.end(), d) != ones.end();
                    bool hit = std::any_of(pOnes.begin(), pOnes.end(), [&](const Interval& a) { return a.intersects(d); });
                    c.check(inG && hit, "detected " + ctx);
                }
                for (const auto& t : cls.trueFalse) {
                    bool isRun = std::find(pOnes.begin(), pOnes.end(), t) != pOnes.end();
                    c.check(isRun && !g.any_one(t), "true false alarm " + ctx);
                }
                auto junctionAlarm = [&](const Interval& a, const std::vector<Interval>& js) {
                    bool inside = std::any_of(js.begin(), js.end(), [&](const Interval& j) { return a.subset_of(j); });
                    int gOnes = g.count_ones(a);
                    return inside && gOnes > 0 && gOnes < a.length() && p.count_ones(a) == a.length();
                };
                for (const auto& e : cls.early) c.check(junctionAlarm(e, j01), "early " + ctx);
                for (const auto& l : cls.late) c.check(junctionAlarm(l, j10), "late " + ctx);
                if (pm == 0) {
                    c.check(cls.detected.empty() && cls.trueFalse.empty() && cls.early.empty() && cls.late.empty(),
                            "zero prediction " + ctx);
                }
                if (pm == gm) {
                    c.check(cls.detected == ones && cls.trueFalse.empty() && cls.early.empty() && cls.late.empty(),
                            "perfect prediction " + ctx);
                }
            }
        }
    }
    auto s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.notes.push_back(fmt::format("{} pairs in {:.1f} s", pairs, s));
    return c;
}

// ---- 7: ranking disagreement ----

Criterion ranking_disagreement() {
    Criterion c{"7 ranking disagreement on the default battery", {}, {}, {}};
    const std::vector<std::string> ids = {"larm",     "alarm",          "pointwise-f1", "pa-f1", "event-f1",
                                          "composite-f1", "range-f1", "ts-f1",        "affiliation-f1", "nab"};
    auto build = [&] {
        auto g = synthetic_ground_truth(200, 4);
        auto preds = battery_predictions(default_battery(), g);
        std::vector<RankingTable> tables;
        for (const auto& id : ids) tables.push_back(rank(make_descriptor(id), g, preds));
        return tables;
    };
    auto tables = build();
    auto tau = tau_matrix(tables);
    double lowest = 1.0;
    std::string pair;
    for (std::size_t i = 0; i < tau.size(); ++i) {
        for (std::size_t j = i + 1; j < tau.size(); ++j) {
            if (!std::isnan(tau[i][j]) && tau[i][j] < lowest) {
                lowest = tau[i][j];
                pair = ids[i] + " / " + ids[j];
            }
        }
    }
    c.check(lowest < 1.0, "some pair disagrees");
    c.notes.push_back(fmt::format("lowest tau {:.4f} ({})", lowest, pair));
    for (std::size_t k = 0; k < 2; ++k) {
        const auto& t = tables[k];
        bool strictlyFirst = t.rank_of("perfect") == 1 && t.entries.size() > 1 && t.entries[1].rank == 2;
        c.check(strictlyFirst, ids[k] + " ranks perfect strictly first");
        int inverted = t.rank_of("inverted");
        c.check(inverted >= 13, ids[k] + " ranks inverted in the bottom quartile", fmt::format("rank {}", inverted));
        c.notes.push_back(fmt::format("{}: perfect {}, inverted {} of 16", ids[k], t.rank_of("perfect"), inverted));
    }
    auto again = build();
    bool same = true;
    for (std::size_t k = 0; k < tables.size(); ++k) same = same && ranking_csv(tables[k]) == ranking_csv(again[k]);
    c.check(same && tau_matrix_csv(tables) == tau_matrix_csv(again), "deterministic under the default seed");
    return c;
}

// ---- 8: enumerator oracle ----

Criterion oracle_equivalence() {
    Criterion c{"8 enumerator equals brute force for n <= 4", {}, {}, {}};
    using Key = std::tuple<std::string, std::string, std::string, Relation>;
    std::size_t total = 0;
    for (auto prop : all_properties()) {
        std::set<Key> a, b;
        for (const auto& k : enumerate_cases(prop, 4)) a.insert({k.g.str(), k.p.str(), k.q.str(), k.expected});
        for (const auto& k : brute_force_cases(prop, 4)) b.insert({k.g.str(), k.p.str(), k.q.str(), k.expected});
        total += b.size();
        c.check(a == b && a.size() == count_cases(prop, 4), prop.label(),
                fmt::format("enumerated {}, brute force {}", a.size(), b.size()));
    }
    c.notes.push_back(fmt::format("{} cases over 18 properties", total));
    return c;
}

}  // namespace

int main() {
    std::vector<PropertyId> simple = simple_properties();
    std::vector<PropertyId> advanced = advanced_properties();
    std::vector<Criterion> results;
    results.push_back(published_values());
    results.push_back(property_sweep("2 LARM satisfies P1-P9 at maxLen 7", "larm", simple, true));
    results.push_back(property_sweep("3 ALARM satisfies A1-A9 at maxLen 7", "alarm", advanced, false));
    results.push_back(matrix_agreement());
    results.push_back(zero_prediction());
    results.push_back(classification());
    results.push_back(ranking_disagreement());
    results.push_back(oracle_equivalence());

    std::size_t unknown = 0;
    for (const auto& c : results) {
        std::size_t known = 0;
        for (const auto& k : c.keys) known += kKnownFailures.count(k);
        std::string status = c.failures.empty() ? "PASS" : "FAIL";
        std::string suffix = c.failures.empty() ? "" : fmt::format(" ({} items, {} known)", c.failures.size(), known);
        std::cout << status << "  criterion " << c.name << suffix << "\n";
        for (const auto& n : c.notes) std::cout << "      " << n << "\n";
        for (std::size_t i = 0; i < c.failures.size(); ++i) {
            bool isKnown = kKnownFailures.count(c.keys[i]) > 0;
            std::cout << "      " << (isKnown ? "known  " : "NEW    ") << c.failures[i] << "\n";
        }
        unknown += c.failures.size() - known;
    }
    std::cout << (unknown ? fmt::format("{} unexpected failures\n", unknown)
                          : std::string("all failures are documented known gaps\n"));
    return unknown ? 1 : 0;
}
