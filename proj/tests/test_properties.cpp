#include <algorithm>
#include <set>
#include <tuple>

#include <gtest/gtest.h>

#include "tsadlab/properties.hpp"

using namespace tsad;

namespace {

BinarySeq S(const char* s) { return BinarySeq::parse(s); }

PropertyId P(int i) { return {PropertyFamily::simple, i}; }
PropertyId A(int i) { return {PropertyFamily::advanced, i}; }

using Key = std::tuple<std::string, std::string, std::string, Relation>;

std::set<Key> keys(const std::vector<PropertyCase>& cases) {
    std::set<Key> out;
    for (const auto& c : cases) out.insert({c.g.str(), c.p.str(), c.q.str(), c.expected});
    return out;
}

// P1 hypothesis read directly off the strings: one anomaly window holds all differences,
// p raises an alarm inside it and q stays silent there.
bool oracle_p1(const std::string& g, const std::string& p, const std::string& q) {
    const int n = static_cast<int>(g.size());
    for (int lo = 0; lo < n; ++lo) {
        if (g[lo] != '1' || (lo > 0 && g[lo - 1] == '1')) continue;
        int hi = lo;
        while (hi + 1 < n && g[hi + 1] == '1') ++hi;
        bool outsideEqual = true, pHit = false, qHit = false;
        for (int i = 0; i < n; ++i) {
            bool in = lo <= i && i <= hi;
            if (!in && p[i] != q[i]) outsideEqual = false;
            if (in && p[i] == '1') pHit = true;
            if (in && q[i] == '1') qHit = true;
        }
        if (outsideEqual && pHit && !qHit) return true;
    }
    return false;
}

std::string bits(std::uint32_t m, int n) {
    std::string s(n, '0');
    for (int i = 0; i < n; ++i) {
        if (m >> i & 1u) s[i] = '1';
    }
    return s;
}

}  // namespace

TEST(PropertyId, LabelsRoundTrip) {
    for (auto p : all_properties()) EXPECT_EQ(parse_property(p.label()), p);
    EXPECT_FALSE(parse_property("P0"));
    EXPECT_FALSE(parse_property("B1"));
    EXPECT_EQ(all_properties().size(), 18u);
}

TEST(Precondition, Examples) {
    EXPECT_EQ(precondition(P(1), S("000110011000"), S("000110001000"), S("000110000000")), Relation::greater);
    EXPECT_EQ(precondition(P(5), S("000111111000"), S("110111000000"), S("011111000000")), Relation::equal);
    EXPECT_EQ(precondition(P(8), S("000111111000"), S("000110000000"), S("000011000000")), Relation::greater);
    EXPECT_FALSE(precondition(P(1), S("000110011000"), S("000110000000"), S("000110001000")));
}

TEST(Enumeration, P1CountAtLengthThreeMatchesStringOracle) {
    std::size_t oracle = 0;
    for (int n = 1; n <= 3; ++n) {
        for (std::uint32_t g = 0; g < (1u << n); ++g) {
            for (std::uint32_t p = 0; p < (1u << n); ++p) {
                for (std::uint32_t q = 0; q < (1u << n); ++q) oracle += oracle_p1(bits(g, n), bits(p, n), bits(q, n));
            }
        }
    }
    EXPECT_EQ(oracle, 47u);
    EXPECT_EQ(count_cases(P(1), 3), 47u);
}

TEST(Enumeration, P5ContainsSwappedFalseAlarm) {
    auto cases = enumerate_cases(P(5), 2);
    auto found = std::find_if(cases.begin(), cases.end(), [](const PropertyCase& c) {
        return c.g.str() == "00" && c.p.str() == "10" && c.q.str() == "01";
    });
    ASSERT_NE(found, cases.end());
    EXPECT_EQ(found->expected, Relation::equal);
}

TEST(Enumeration, LexicographicOrder) {
    auto cases = enumerate_cases(P(4), 4);
    for (std::size_t i = 1; i < cases.size(); ++i) {
        const auto& a = cases[i - 1];
        const auto& b = cases[i];
        auto ka = std::tuple{a.g.n(), a.g.str(), a.p.str(), a.q.str()};
        auto kb = std::tuple{b.g.n(), b.g.str(), b.p.str(), b.q.str()};
        ASSERT_LT(ka, kb);
    }
}

TEST(Enumeration, GuardsLength) {
    EXPECT_THROW(enumerate_cases(P(1), 0), std::invalid_argument);
    EXPECT_THROW(count_cases(P(1), kMaxEnumerationLength + 1), std::invalid_argument);
    EXPECT_THROW(brute_force_cases(P(1), 6), std::invalid_argument);
}

TEST(Enumeration, SoundAtLengthSix) {
    for (auto prop : all_properties()) {
        for (const auto& c : enumerate_cases(prop, 6)) {
            auto rel = precondition(prop, c.g, c.p, c.q);
            ASSERT_TRUE(rel.has_value()) << prop.label() << " " << c.g.str() << " " << c.p.str() << " " << c.q.str();
            ASSERT_EQ(*rel, c.expected);
        }
    }
}

TEST(Enumeration, EqualsBruteForceUpToFour) {
    for (auto prop : all_properties()) {
        EXPECT_EQ(keys(enumerate_cases(prop, 4)), keys(brute_force_cases(prop, 4))) << prop.label();
    }
}

TEST(Check, PointwisePrecision) {
    auto d = make_descriptor("pointwise-precision");
    auto p1 = check_property(d, P(1), 6);
    EXPECT_EQ(p1.verdict, Verdict::violated);
    EXPECT_FALSE(p1.witnesses.empty());
    EXPECT_LE(p1.witnesses.size(), 10u);
    for (const auto& w : p1.witnesses) EXPECT_TRUE(precondition(P(1), w.g, w.p, w.q));
    auto p5 = check_property(d, P(5), 6);
    EXPECT_EQ(p5.verdict, Verdict::no_counterexample);
    EXPECT_TRUE(p5.witnesses.empty());
    EXPECT_GT(p5.casesChecked, 0u);
}

TEST(Check, LarmDetectionAtLengthSix) {
    auto r = check_property(make_descriptor("larm"), P(1), 6);
    EXPECT_EQ(r.verdict, Verdict::no_counterexample);
    EXPECT_EQ(r.casesChecked, count_cases(P(1), 6));
}

TEST(Check, UndefinedCasesAreSkipped) {
    auto r = check_property(make_descriptor("pointwise-precision"), P(5), 4);
    EXPECT_GT(r.skipped, 0u);
    EXPECT_EQ(r.casesChecked + r.skipped, count_cases(P(5), 4));
}

TEST(Check, WorkerCountDoesNotChangeReports) {
    for (const char* id : {"pa-f1", "affiliation-f1", "alarm"}) {
        auto d = make_descriptor(id);
        for (auto prop : {P(3), A(6)}) {
            CheckOptions one{10, 1}, many{10, 7};
            auto a = check_property(d, prop, 6, one);
            auto b = check_property(d, prop, 6, many);
            EXPECT_EQ(report_json(a), report_json(b)) << id << " " << prop.label();
        }
    }
}

TEST(Check, CustomScorer) {
    Scorer constant = [](const BinarySeq&, const BinarySeq&) { return Score::exact(1); };
    auto d = make_descriptor("larm");
    EXPECT_EQ(check_property(constant, d, P(1), 4).verdict, Verdict::violated);
    EXPECT_EQ(check_property(constant, d, P(5), 4).verdict, Verdict::no_counterexample);
}

TEST(Matrix, ExpectedClaims) {
    const auto& m = expected_matrix();
    auto row = [&](const std::string& label) {
        auto it = std::find_if(m.begin(), m.end(), [&](const MatrixRow& r) { return r.label == label; });
        EXPECT_NE(it, m.end()) << label;
        return *it;
    };
    auto satisfied = [](const MatrixRow& r) {
        std::set<std::string> out;
        for (const auto& [p, c] : r.cells) {
            if (c == Claim::satisfied) out.insert(p.label());
        }
        return out;
    };
    EXPECT_EQ(satisfied(row("pointwise-precision")), (std::set<std::string>{"P5"}));
    EXPECT_EQ(satisfied(row("larm")), (std::set<std::string>{"P1", "P2", "P3", "P4", "P5", "P6", "P7", "P8", "P9"}));
    EXPECT_TRUE(satisfied(row("balanced-pa-f1")).empty());
    EXPECT_EQ(satisfied(row("alarm")).size(), 9u);
    for (const auto& info : catalog()) {
        EXPECT_TRUE(std::any_of(m.begin(), m.end(), [&](const MatrixRow& r) { return r.label == info.id; })) << info.id;
    }
}

TEST(Matrix, RowAgreementForPointwisePrecision) {
    auto rows = run_matrix(5, {}, [](const MatrixRow& r) { return r.label == "pointwise-precision"; });
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_TRUE(rows[0].agrees());
    auto csv = matrix_csv(rows, simple_properties());
    EXPECT_NE(csv.find("\"pointwise-precision\",✗,✗,✗,✗,✓,✗,✗,✗,✗"), std::string::npos) << csv;
}

TEST(Fixtures, Examples) {
    const auto& fx = reference_fixtures();
    auto find = [&](const std::string& id, PropertyId prop, const char* g) {
        auto it = std::find_if(fx.begin(), fx.end(), [&](const Fixture& f) {
            return f.metric.id == id && f.property == prop && f.g.str() == g;
        });
        EXPECT_NE(it, fx.end()) << id << " " << prop.label();
        return it;
    };

    auto f1 = find("pointwise-f1", P(4), "000000111000");
    auto r = evaluate_fixture(*f1);
    EXPECT_TRUE(r.printedReproduced) << r.detail;
    EXPECT_TRUE(r.violates);
    ASSERT_TRUE(r.scoreP.rational());
    EXPECT_EQ(*r.scoreP.rational(), mpq_class(1, 3));

    auto rec = find("affiliation-recall", P(5), "000000010000");
    r = evaluate_fixture(*rec);
    EXPECT_TRUE(r.printedReproduced) << r.detail;
    EXPECT_TRUE(r.violates);
    EXPECT_NEAR(r.scoreP.value(), 1.0 / 3.0, 1e-12);
    EXPECT_NEAR(r.scoreQ.value(), 0.5, 1e-12);

    auto nab = find("nab", P(5), "000110000000");
    r = evaluate_fixture(*nab);
    EXPECT_TRUE(r.violates);
    EXPECT_GT(r.scoreQ.value(), r.scoreP.value());
}

TEST(Fixtures, EveryFixtureScoresWithoutThrowing) {
    for (const auto& f : reference_fixtures()) {
        EXPECT_NO_THROW(evaluate_fixture(f)) << f.source;
        EXPECT_EQ(f.g.n(), f.p.n());
        EXPECT_EQ(f.g.n(), f.q.n());
    }
    EXPECT_GT(reference_fixtures().size(), 200u);
}

TEST(Reports, JsonSchema) {
    auto r = check_property(make_descriptor("pointwise-precision"), P(1), 3, {2, 1});
    auto j = report_json(r);
    for (const char* key : {"\"metric\"", "\"property\"", "\"maxLen\"", "\"casesChecked\"", "\"skipped\"", "\"verdict\"",
                            "\"witnesses\""}) {
        EXPECT_NE(j.find(key), std::string::npos) << key;
    }
    EXPECT_LE(r.witnesses.size(), 2u);
    EXPECT_EQ(r.verdict == Verdict::violated, !r.witnesses.empty());
}
