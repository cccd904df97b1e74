#include <algorithm>
#include <stdexcept>

#include <fmt/format.h>
#include <json.hpp>

#include "internal.hpp"

namespace tsad {

std::string cell_symbol(Claim c) {
    switch (c) {
        case Claim::satisfied: return "✓";
        case Claim::violated: return "✗";
        case Claim::conditional: return "?cond";
        case Claim::not_analyzed: return "-";
    }
    return "-";
}

bool RowResult::agrees() const {
    return std::all_of(cells.begin(), cells.end(), [](const CellResult& c) { return c.agrees; });
}

namespace {

PropertyId P(int i) { return {PropertyFamily::simple, i}; }

// Default row: every simple property is claimed satisfied or violated, advanced ones are not analyzed.
MatrixRow simple_row(const std::string& id, std::initializer_list<int> satisfied) {
    MatrixRow row{id, make_descriptor(id), {}, {}};
    for (auto p : simple_properties()) row.cells[p] = Claim::violated;
    for (auto p : advanced_properties()) row.cells[p] = Claim::not_analyzed;
    for (int i : satisfied) row.cells[P(i)] = Claim::satisfied;
    return row;
}

// Parameter-conditional row: only the listed cells are analyzed.
MatrixRow conditional_row(const std::string& id, const Params& params, std::initializer_list<int> satisfied) {
    auto d = make_descriptor(id, params);
    MatrixRow row{describe(d), d, {}, {}};
    for (auto p : all_properties()) row.cells[p] = Claim::not_analyzed;
    for (int i : satisfied) row.cells[P(i)] = Claim::satisfied;
    return row;
}

std::vector<MatrixRow> build_matrix() {
    std::vector<MatrixRow> rows;
    rows.push_back(simple_row("pointwise-precision", {5}));
    rows.push_back(simple_row("pointwise-recall", {1, 5, 7}));
    rows.push_back(simple_row("pointwise-f1", {1, 5, 7}));
    rows.push_back(simple_row("pa-precision", {5, 6}));
    rows.push_back(simple_row("pa-recall", {1, 5}));
    rows.push_back(simple_row("pa-f1", {1, 5, 6}));
    rows.push_back(simple_row("event-precision", {}));
    rows.push_back(simple_row("event-recall", {1, 5}));
    rows.push_back(simple_row("event-f1", {1}));
    rows.push_back(simple_row("composite-f1", {1, 5, 6}));
    // The published table marks P6 as satisfied, but its own counterexample data disagree; the
    // enumerator's finding is recorded instead.
    rows.back().frozenFindings[P(6)] = Verdict::violated;
    rows.push_back(simple_row("kdelay-precision", {5}));
    rows.push_back(simple_row("kdelay-recall", {5}));
    rows.push_back(simple_row("kdelay-f1", {5}));
    rows.push_back(simple_row("lsa-f1", {}));
    rows.push_back(conditional_row("lsa-f1", {{"b", 1}}, {8}));
    rows.push_back(simple_row("pa-percent-k-f1", {1, 5}));
    rows.push_back(conditional_row("pa-percent-k-f1", {{"kPercent", 0}}, {6}));
    rows.push_back(simple_row("pa-percent-k-integrated-f1", {1, 5, 7}));
    rows.push_back(simple_row("pa-decay-f1", {1, 5, 8}));
    rows.push_back(conditional_row("pa-decay-f1", {{"d", 1}}, {6}));
    rows.push_back(simple_row("reduced-length-f1", {1, 5, 6}));
    rows.push_back(simple_row("balanced-pa-f1", {}));
    rows.push_back(simple_row("range-precision", {}));
    rows.push_back(simple_row("range-recall", {1, 5, 7, 9}));
    rows.push_back(simple_row("range-f1", {1, 7}));
    rows.push_back(simple_row("ts-precision", {}));
    rows.push_back(simple_row("ts-recall", {1, 5, 7, 9}));
    rows.push_back(simple_row("ts-f1", {1, 7}));
    rows.push_back(simple_row("nab", {1, 3, 8}));
    rows.push_back(simple_row("tap", {}));
    rows.push_back(simple_row("tar", {}));
    for (int i : {1, 7}) {
        rows.back().cells[P(i)] = Claim::conditional;
        rows.back().frozenFindings[P(i)] = Verdict::violated;
    }
    rows.push_back(simple_row("tt-precision", {}));
    rows.push_back(conditional_row("tt-precision", {{"delta", 0}}, {5}));
    rows.push_back(simple_row("tt-recall", {}));
    rows.push_back(conditional_row("tt-recall", {{"delta", 0}}, {1, 5, 7}));
    rows.push_back(simple_row("affiliation-precision", {}));
    rows.push_back(simple_row("affiliation-recall", {}));
    rows.push_back(simple_row("affiliation-f1", {}));
    rows.push_back(simple_row("etap", {5}));
    rows.push_back(simple_row("etar", {5}));
    rows.push_back(simple_row("temporal-distance", {1, 7}));
    rows.push_back(simple_row("average-alert-delay", {5, 8}));
    rows.push_back(simple_row("larm", {1, 2, 3, 4, 5, 6, 7, 8, 9}));
    MatrixRow alarm{"alarm", make_descriptor("alarm"), {}, {}};
    for (auto p : simple_properties()) alarm.cells[p] = Claim::not_analyzed;
    for (auto p : advanced_properties()) alarm.cells[p] = Claim::satisfied;
    rows.push_back(std::move(alarm));
    return rows;
}

bool same_descriptor(const MetricDescriptor& a, const MetricDescriptor& b) {
    return a.id == b.id && a.params == b.params;
}

const Fixture* violating_fixture(const MetricDescriptor& metric, PropertyId prop) {
    for (const auto& f : reference_fixtures()) {
        if (f.property == prop && same_descriptor(f.metric, metric) && evaluate_fixture(f).violates) return &f;
    }
    return nullptr;
}

std::string witness_text(const PropertyCase& c) {
    return fmt::format("g={} p={} q={}", c.g.str(), c.p.str(), c.q.str());
}

CellResult judge(const MatrixRow& row, PropertyId prop, Claim claim, PropertyReport report) {
    CellResult cell{prop, claim, std::move(report), nullptr, true, {}};
    const auto& r = cell.report;
    const bool found = r.verdict == Verdict::violated;
    if (auto frozen = row.frozenFindings.find(prop); frozen != row.frozenFindings.end()) {
        cell.agrees = r.verdict == frozen->second;
        cell.note = fmt::format("asserted from enumerator finding ({})", to_string(frozen->second));
        if (found) cell.note += "; " + witness_text(r.witnesses.front());
        return cell;
    }
    switch (claim) {
        case Claim::satisfied:
            cell.agrees = !found;
            if (found) cell.note = "counterexample " + witness_text(r.witnesses.front());
            break;
        case Claim::violated:
            if (found) {
                cell.note = "counterexample " + witness_text(r.witnesses.front());
            } else if ((cell.evidence = violating_fixture(row.metric, prop))) {
                cell.note = "violated by published counterexample (none up to maxLen " + std::to_string(r.maxLen) + ")";
            } else {
                cell.agrees = false;
                cell.note = "no counterexample found";
            }
            break;
        case Claim::conditional:
            cell.note = "conditional; enumerator reports " + to_string(r.verdict);
            break;
        case Claim::not_analyzed:
            break;
    }
    return cell;
}

}  // namespace

const std::vector<MatrixRow>& expected_matrix() {
    static const std::vector<MatrixRow> rows = build_matrix();
    return rows;
}

std::vector<RowResult> run_matrix(int maxLen, const CheckOptions& opts,
                                  const std::function<bool(const MatrixRow&)>& filter) {
    std::vector<RowResult> out;
    const int workers = opts.workers > 0 ? opts.workers : default_workers();
    for (const auto& row : expected_matrix()) {
        if (filter && !filter(row)) continue;
        RowResult rr{&row, {}};
        auto scorer = make_scorer(row.metric);
        std::optional<detail::ScoreTable> table;
        if (maxLen <= detail::ScoreTable::kMaxLength) table.emplace(scorer, maxLen, workers);
        for (const auto& [prop, claim] : row.cells) {
            if (claim == Claim::not_analyzed) continue;
            auto report = detail::check_with_table(scorer, table ? &*table : nullptr, row.metric, prop, maxLen, opts);
            rr.cells.push_back(judge(row, prop, claim, std::move(report)));
        }
        out.push_back(std::move(rr));
    }
    return out;
}

namespace {

nlohmann::ordered_json report_object(const PropertyReport& r) {
    nlohmann::ordered_json j;
    j["metric"] = r.metric.id;
    j["params"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.metric.params) j["params"][k] = v;
    j["property"] = r.property.label();
    j["maxLen"] = r.maxLen;
    j["casesChecked"] = r.casesChecked;
    j["skipped"] = r.skipped;
    j["violations"] = r.violations;
    j["verdict"] = to_string(r.verdict);
    j["witnesses"] = nlohmann::ordered_json::array();
    for (const auto& w : r.witnesses) {
        j["witnesses"].push_back({{"g", w.g.str()}, {"p", w.p.str()}, {"q", w.q.str()}, {"expected", to_string(w.expected)}});
    }
    return j;
}

}  // namespace

std::string report_json(const PropertyReport& r) { return report_object(r).dump(2); }

std::string reports_json(const std::vector<PropertyReport>& rs) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : rs) arr.push_back(report_object(r));
    return arr.dump(2);
}

std::string matrix_csv(const std::vector<RowResult>& rows, const std::vector<PropertyId>& columns) {
    std::string out = "metric";
    for (auto c : columns) out += "," + c.label();
    out += "\n";
    for (const auto& row : rows) {
        out += "\"" + row.row->label + "\"";
        for (auto c : columns) {
            auto it = std::find_if(row.cells.begin(), row.cells.end(), [&](const CellResult& cell) { return cell.property == c; });
            std::string sym = cell_symbol(Claim::not_analyzed);
            if (it != row.cells.end()) {
                if (it->claim == Claim::conditional) {
                    sym = cell_symbol(Claim::conditional);
                } else {
                    bool violated = it->report.verdict == Verdict::violated || it->evidence;
                    sym = cell_symbol(violated ? Claim::violated : Claim::satisfied);
                }
            }
            out += "," + sym;
        }
        out += "\n";
    }
    return out;
}

}  // namespace tsad
