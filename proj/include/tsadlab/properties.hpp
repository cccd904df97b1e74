#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tsadlab/core.hpp"
#include "tsadlab/metrics.hpp"
#include "tsadlab/score.hpp"

namespace tsad {

enum class PropertyFamily { simple, advanced };

struct PropertyId {
    PropertyFamily family = PropertyFamily::simple;
    int index = 1;  // 1..9

    std::string label() const;  // "P3", "A7"
    auto operator<=>(const PropertyId&) const = default;
};

std::optional<PropertyId> parse_property(std::string_view label);
std::vector<PropertyId> simple_properties();
std::vector<PropertyId> advanced_properties();
std::vector<PropertyId> all_properties();

// Expected relation m(g,p) REL m(g,q) when the triple satisfies the property's hypotheses.
std::optional<Relation> precondition(PropertyId prop, const BinarySeq& g, const BinarySeq& p, const BinarySeq& q);

struct PropertyCase {
    BinarySeq g;
    BinarySeq p;
    BinarySeq q;
    Relation expected;
    std::string provenance;
};

constexpr int kMaxEnumerationLength = 16;

// Every triple with 1 <= n <= maxLen satisfying the precondition, ordered by (n, g, p, q)
// with sequences compared as 0/1 strings. Throws std::invalid_argument outside [1, 16].
std::vector<PropertyCase> enumerate_cases(PropertyId prop, int maxLen);
std::size_t count_cases(PropertyId prop, int maxLen);

// Reference filter over all 8^n triples; only meant for small n.
std::vector<PropertyCase> brute_force_cases(PropertyId prop, int maxLen);

struct CheckOptions {
    std::size_t maxWitnesses = 10;
    int workers = 0;  // 0: TSADLAB_WORKERS or hardware concurrency
};

int default_workers();

enum class Verdict { no_counterexample, violated };
std::string to_string(Verdict v);

struct PropertyReport {
    MetricDescriptor metric;
    PropertyId property;
    int maxLen = 0;
    std::size_t casesChecked = 0;
    std::size_t skipped = 0;
    std::size_t violations = 0;
    Verdict verdict = Verdict::no_counterexample;
    std::vector<PropertyCase> witnesses;
};

PropertyReport check_property(const MetricDescriptor& metric, PropertyId prop, int maxLen, const CheckOptions& opts = {});

// Check an arbitrary scorer (for configurations outside the catalog, e.g. a custom LarmConfig).
PropertyReport check_property(const Scorer& scorer, const MetricDescriptor& label, PropertyId prop, int maxLen,
                              const CheckOptions& opts = {});

// ---- published counterexamples ----

struct PrintedScore {
    std::string text;  // as printed; empty when the proof gives no number
    std::optional<mpq_class> exact;
    std::optional<double> approx;
    double tolerance = 0.0;
};

struct Fixture {
    MetricDescriptor metric;
    PropertyId property;
    BinarySeq g;
    BinarySeq p;  // first prediction as printed
    BinarySeq q;  // second prediction as printed
    PrintedScore scoreP;
    PrintedScore scoreQ;
    bool inconsistent = false;  // printed numbers known not to follow from the definitions
    std::string source;
};

const std::vector<Fixture>& reference_fixtures();

enum class FixtureOrientation { forward, reversed, none };

struct FixtureResult {
    const Fixture* fixture = nullptr;
    FixtureOrientation orientation = FixtureOrientation::none;
    Relation expected = Relation::greater;
    Score scoreP;
    Score scoreQ;
    bool violates = false;          // precondition holds and the relation fails
    bool printedReproduced = true;  // recomputed scores match the printed ones
    std::string detail;
};

FixtureResult evaluate_fixture(const Fixture& f);

// ---- expected property matrix ----

enum class Claim { satisfied, violated, conditional, not_analyzed };
std::string cell_symbol(Claim c);

struct MatrixRow {
    std::string label;  // metric id, plus the parameter override for conditional rows
    MetricDescriptor metric;
    std::map<PropertyId, Claim> cells;
    // Cells where a mismatch is tolerated and the enumerator finding is recorded instead.
    std::map<PropertyId, Verdict> frozenFindings;
};

const std::vector<MatrixRow>& expected_matrix();

struct CellResult {
    PropertyId property;
    Claim claim = Claim::not_analyzed;
    PropertyReport report;
    const Fixture* evidence = nullptr;  // fixture confirming a violated cell
    bool agrees = true;
    std::string note;
};

struct RowResult {
    const MatrixRow* row = nullptr;
    std::vector<CellResult> cells;
    bool agrees() const;
};

std::vector<RowResult> run_matrix(int maxLen, const CheckOptions& opts = {},
                                  const std::function<bool(const MatrixRow&)>& filter = {});

// Serialization of reports.
std::string report_json(const PropertyReport& r);
std::string reports_json(const std::vector<PropertyReport>& rs);
std::string matrix_csv(const std::vector<RowResult>& rows, const std::vector<PropertyId>& columns);

}  // namespace tsad
