// Command-line front end: score, propcheck, rank, catalog.
#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "tsadlab/io.hpp"
#include "tsadlab/metrics.hpp"
#include "tsadlab/properties.hpp"
#include "tsadlab/rankings.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace tsad;

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 2;
constexpr int kUndefined = 3;
constexpr int kMismatch = 4;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

Params parse_params(const std::vector<std::string>& items) {
    Params out;
    for (const auto& item : items) {
        for (const auto& kv : split(item, ',')) {
            auto eq = kv.find('=');
            if (eq == std::string::npos || eq == 0) throw InputError("parameter '" + kv + "' is not key=value");
            try {
                std::size_t used = 0;
                double v = std::stod(kv.substr(eq + 1), &used);
                if (used != kv.size() - eq - 1) throw std::invalid_argument("trailing text");
                out[kv.substr(0, eq)] = v;
            } catch (const std::exception&) {
                throw InputError("parameter '" + kv + "' has a non-numeric value");
            }
        }
    }
    return out;
}

MetricDescriptor descriptor(const std::string& id, const Params& params) {
    try {
        return make_descriptor(id, params);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

std::optional<SequenceFormat> input_format(const std::string& name) {
    if (name.empty() || name == "auto") return std::nullopt;
    auto f = parse_format(name);
    if (!f) throw InputError("unknown input format '" + name + "'");
    return f;
}

BinarySeq load(const std::string& path, const std::optional<SequenceFormat>& format) {
    try {
        return read_sequence_file(path, format);
    } catch (const std::exception& e) {
        throw InputError(e.what());
    }
}

json params_json(const Params& p) {
    json j = json::object();
    for (const auto& [k, v] : p) j[k] = v;
    return j;
}

// 12 significant digits; exact rationals also as "num/den".
void put_score(json& j, const Score& s) {
    if (!s.defined()) {
        j["score"] = "undefined";
        return;
    }
    if (std::isfinite(s.value())) {
        j["score"] = std::stod(fmt::format("{:.12g}", s.value()));
    } else {
        j["score"] = format_score(s);
    }
    if (s.rational()) j["exact"] = rational_string(*s.rational());
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path.string() + "'");
    out << content;
}

std::vector<std::string> catalog_ids() {
    std::vector<std::string> ids;
    for (const auto& m : catalog()) ids.push_back(m.id);
    return ids;
}

std::vector<std::string> metric_ids(const std::vector<std::string>& args) {
    std::vector<std::string> ids;
    for (const auto& a : args) {
        for (const auto& id : split(a, ',')) {
            if (id == "all") {
                auto all = catalog_ids();
                ids.insert(ids.end(), all.begin(), all.end());
            } else if (!find_metric(id)) {
                throw InputError("unknown metric '" + id + "'");
            } else {
                ids.push_back(id);
            }
        }
    }
    std::vector<std::string> unique;
    for (const auto& id : ids) {
        if (std::find(unique.begin(), unique.end(), id) == unique.end()) unique.push_back(id);
    }
    if (unique.empty()) throw InputError("no metric given");
    return unique;
}

std::vector<PropertyId> property_ids(const std::vector<std::string>& args) {
    std::set<PropertyId> out;
    for (const auto& a : args) {
        for (const auto& label : split(a, ',')) {
            if (label == "all") {
                for (auto p : all_properties()) out.insert(p);
            } else if (label == "simple") {
                for (auto p : simple_properties()) out.insert(p);
            } else if (label == "advanced") {
                for (auto p : advanced_properties()) out.insert(p);
            } else if (auto p = parse_property(label)) {
                out.insert(*p);
            } else {
                throw InputError("unknown property '" + label + "'");
            }
        }
    }
    if (out.empty()) throw InputError("no property given");
    return {out.begin(), out.end()};
}

// ---- score ----

struct ScoreArgs {
    std::string metric;
    std::vector<std::string> params;
    std::string gt, pred, inputFormat, format = "json";
};

int cmd_score(const ScoreArgs& a) {
    auto d = descriptor(a.metric, parse_params(a.params));
    auto fmtIn = input_format(a.inputFormat);
    auto g = load(a.gt, fmtIn);
    auto p = load(a.pred, fmtIn);
    if (g.n() != p.n()) throw InputError(fmt::format("length mismatch: ground truth {} vs prediction {}", g.n(), p.n()));
    Score s = score(d, g, p);
    if (a.format == "csv") {
        std::string exact = s.rational() ? rational_string(*s.rational()) : "";
        std::cout << "metric,params,score,exact\n"
                  << d.id << ",\"" << describe(d) << "\"," << format_score(s) << "," << exact << "\n";
    } else {
        json j;
        j["metric"] = d.id;
        j["params"] = params_json(d.params);
        put_score(j, s);
        std::cout << j.dump(2) << "\n";
    }
    return s.defined() ? kOk : kUndefined;
}

// ---- propcheck ----

struct PropcheckArgs {
    std::vector<std::string> metrics{"all"};
    std::vector<std::string> properties{"all"};
    int maxLen = 6;
    int workers = 0;
    bool fixtures = false;
    std::string out, format = "json";
};

int cmd_propcheck(const PropcheckArgs& a) {
    auto ids = metric_ids(a.metrics);
    auto props = property_ids(a.properties);
    if (a.maxLen < 1 || a.maxLen > kMaxEnumerationLength) {
        throw InputError(fmt::format("--max-len must lie in [1, {}]", kMaxEnumerationLength));
    }
    CheckOptions opts;
    opts.workers = a.workers;
    std::set<std::string> wanted(ids.begin(), ids.end());
    auto rows = run_matrix(a.maxLen, opts, [&](const MatrixRow& r) { return wanted.count(r.metric.id) > 0; });
    for (auto& row : rows) {
        std::erase_if(row.cells, [&](const CellResult& c) {
            return std::find(props.begin(), props.end(), c.property) == props.end();
        });
    }

    json out;
    out["maxLen"] = a.maxLen;
    out["cells"] = json::array();
    json mismatches = json::array();
    std::vector<PropertyReport> reports;
    for (const auto& row : rows) {
        for (const auto& c : row.cells) {
            reports.push_back(c.report);
            json cell{{"row", row.row->label},
                      {"property", c.property.label()},
                      {"claim", cell_symbol(c.claim)},
                      {"verdict", to_string(c.report.verdict)},
                      {"casesChecked", c.report.casesChecked},
                      {"skipped", c.report.skipped},
                      {"violations", c.report.violations},
                      {"agrees", c.agrees}};
            if (!c.note.empty()) cell["note"] = c.note;
            if (!c.agrees) mismatches.push_back(fmt::format("{} {}: {}", row.row->label, c.property.label(), c.note));
            out["cells"].push_back(cell);
        }
    }
    if (a.fixtures) {
        out["fixtures"] = json::array();
        for (const auto& f : reference_fixtures()) {
            if (!wanted.count(f.metric.id) || std::find(props.begin(), props.end(), f.property) == props.end()) continue;
            auto r = evaluate_fixture(f);
            json j{{"metric", describe(f.metric)},
                   {"property", f.property.label()},
                   {"g", f.g.str()},
                   {"p", f.p.str()},
                   {"q", f.q.str()},
                   {"violates", r.violates},
                   {"printedReproduced", r.printedReproduced},
                   {"inconsistent", f.inconsistent}};
            if (!r.detail.empty()) j["detail"] = r.detail;
            if (!r.printedReproduced && !f.inconsistent) {
                mismatches.push_back(fmt::format("fixture {} {}: {}", describe(f.metric), f.property.label(), r.detail));
            }
            out["fixtures"].push_back(j);
        }
    }
    out["mismatches"] = mismatches;

    std::vector<PropertyId> columns = props;
    if (!a.out.empty()) {
        fs::create_directories(a.out);
        write_file(fs::path(a.out) / "reports.json", reports_json(reports) + "\n");
        write_file(fs::path(a.out) / "matrix.csv", matrix_csv(rows, columns));
        write_file(fs::path(a.out) / "summary.json", out.dump(2) + "\n");
    }
    if (a.format == "csv") {
        std::cout << matrix_csv(rows, columns);
    } else {
        std::cout << out.dump(2) << "\n";
    }
    for (const auto& m : mismatches) std::cerr << "mismatch: " << m.get<std::string>() << "\n";
    return mismatches.empty() ? kOk : kMismatch;
}

// ---- rank ----

struct RankArgs {
    std::vector<std::string> metrics;
    std::vector<std::string> params;
    std::string gt, preds, battery, inputFormat, out, format = "json";
    std::uint64_t seed = kDefaultSeed;
};

std::vector<Prediction> load_predictions(const std::string& dir, const std::optional<SequenceFormat>& fmtIn) {
    std::vector<fs::path> files;
    std::error_code ec;
    for (const auto& e : fs::directory_iterator(dir, ec)) {
        if (e.is_regular_file()) files.push_back(e.path());
    }
    if (ec) throw InputError("cannot list '" + dir + "'");
    std::sort(files.begin(), files.end());
    std::vector<Prediction> out;
    for (const auto& f : files) out.emplace_back(f.stem().string(), load(f.string(), fmtIn));
    return out;
}

std::string file_label(const MetricDescriptor& d) {
    std::string s = describe(d);
    for (char& c : s) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-' && c != '.') c = '_';
    }
    while (!s.empty() && s.back() == '_') s.pop_back();
    return s;
}

int cmd_rank(const RankArgs& a) {
    auto ids = metric_ids(a.metrics);
    Params params = parse_params(a.params);
    if (!params.empty() && ids.size() != 1) throw InputError("--params needs exactly one metric");
    auto fmtIn = input_format(a.inputFormat);
    auto g = load(a.gt, fmtIn);
    std::vector<Prediction> preds;
    if (!a.battery.empty()) {
        if (a.battery != "default16") throw InputError("unknown battery '" + a.battery + "'");
        try {
            preds = battery_predictions(default_battery(a.seed), g);
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
    } else if (!a.preds.empty()) {
        preds = load_predictions(a.preds, fmtIn);
    } else {
        throw InputError("give --preds or --battery");
    }
    if (preds.size() < 2) throw InputError("ranking needs at least two predictions");
    for (const auto& [id, p] : preds) {
        if (p.n() != g.n()) throw InputError(fmt::format("length mismatch for '{}': {} vs {}", id, p.n(), g.n()));
    }

    std::vector<RankingTable> tables;
    for (const auto& id : ids) tables.push_back(rank(descriptor(id, params), g, preds));

    if (!a.out.empty()) {
        fs::create_directories(a.out);
        for (const auto& t : tables) write_file(fs::path(a.out) / ("rank_" + file_label(t.metric) + ".csv"), ranking_csv(t));
        write_file(fs::path(a.out) / "tau_matrix.csv", tau_matrix_csv(tables));
    }
    if (a.format == "csv") {
        std::cout << tau_matrix_csv(tables);
    } else {
        json j;
        j["predictions"] = json::array();
        for (const auto& [id, p] : preds) j["predictions"].push_back(id);
        j["rankings"] = json::array();
        for (const auto& t : tables) j["rankings"].push_back(json::parse(ranking_json(t)));
        j["tau"] = json::array();
        for (const auto& row : tau_matrix(tables)) {
            json r = json::array();
            for (double v : row) r.push_back(std::isnan(v) ? json(nullptr) : json(std::stod(fmt::format("{:.12g}", v))));
            j["tau"].push_back(r);
        }
        std::cout << j.dump(2) << "\n";
    }
    return kOk;
}

// ---- catalog ----

std::vector<std::string> claimed_properties(const std::string& id) {
    std::vector<std::string> out;
    for (const auto& row : expected_matrix()) {
        if (row.metric.id != id) continue;
        bool isDefault = row.metric.params == make_descriptor(id).params;
        for (const auto& [p, claim] : row.cells) {
            if (claim == Claim::satisfied) {
                out.push_back(isDefault ? p.label() : p.label() + " if " + row.label);
            } else if (claim == Claim::conditional) {
                out.push_back(p.label() + " ?cond");
            }
        }
    }
    return out;
}

int cmd_catalog(const std::string& format) {
    if (format == "csv") {
        std::cout << "id,name,family,citation,params,expected\n";
        for (const auto& m : catalog()) {
            std::string params, expected;
            for (const auto& p : m.params) params += fmt::format("{}{}={} [{}, {}]", params.empty() ? "" : "; ", p.name, p.def, p.lo, p.hi);
            for (const auto& e : claimed_properties(m.id)) expected += (expected.empty() ? "" : "; ") + e;
            std::cout << fmt::format("{},\"{}\",\"{}\",\"{}\",\"{}\",\"{}\"\n", m.id, m.name, m.family, m.citation, params,
                                     expected);
        }
        return kOk;
    }
    json arr = json::array();
    for (const auto& m : catalog()) {
        json j{{"id", m.id},           {"name", m.name},           {"family", m.family},
                {"citation", m.citation}, {"exact", m.exact}, {"direction", m.direction}};
        j["params"] = json::array();
        for (const auto& p : m.params) {
            json pj{{"name", p.name}, {"default", p.def}, {"min", p.lo}};
            if (std::isfinite(p.hi)) {
                pj["max"] = p.hi;
            } else {
                pj["max"] = nullptr;
            }
            pj["integer"] = p.integer;
            pj["doc"] = p.doc;
            j["params"].push_back(pj);
        }
        j["expectedProperties"] = claimed_properties(m.id);
        arr.push_back(j);
    }
    std::cout << arr.dump(2) << "\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Evaluation metrics and property checks for time-series anomaly detection"};
    app.require_subcommand(1);
    const std::vector<std::string> outFormats{"json", "csv"};

    ScoreArgs sa;
    auto* score = app.add_subcommand("score", "Score one prediction");
    score->add_option("--metric", sa.metric, "Metric id")->required();
    score->add_option("--params", sa.params, "Parameters as key=value");
    score->add_option("--gt", sa.gt, "Ground-truth file")->required();
    score->add_option("--pred", sa.pred, "Prediction file")->required();
    score->add_option("--input-format", sa.inputFormat, "chars, csv, rle-json or auto (by extension)");
    score->add_option("--format", sa.format, "Output format")->check(CLI::IsMember(outFormats));

    PropcheckArgs pa;
    if (const char* env = std::getenv("TSADLAB_WORKERS")) pa.workers = std::max(0, std::atoi(env));
    auto* propcheck = app.add_subcommand("propcheck", "Check properties against the expected matrix");
    propcheck->add_option("--metric,--metrics", pa.metrics, "Metric ids or 'all'");
    propcheck->add_option("--properties", pa.properties, "P1..P9, A1..A9, simple, advanced or all");
    propcheck->add_option("--max-len", pa.maxLen, "Longest enumerated sequence");
    propcheck->add_option("--workers", pa.workers, "Worker threads (default TSADLAB_WORKERS or all cores)");
    propcheck->add_flag("--fixtures", pa.fixtures, "Also evaluate the published counterexamples");
    propcheck->add_option("--out", pa.out, "Directory for reports.json, matrix.csv and summary.json");
    propcheck->add_option("--format", pa.format, "Output format")->check(CLI::IsMember(outFormats));

    RankArgs ra;
    auto* rankCmd = app.add_subcommand("rank", "Rank predictions under several metrics");
    rankCmd->add_option("--metric,--metrics", ra.metrics, "Metric ids or 'all'")->required();
    rankCmd->add_option("--params", ra.params, "Parameters (single metric only)");
    rankCmd->add_option("--gt", ra.gt, "Ground-truth file")->required();
    rankCmd->add_option("--preds", ra.preds, "Directory of prediction files");
    rankCmd->add_option("--battery", ra.battery, "Synthetic battery instead of --preds (default16)");
    rankCmd->add_option("--seed", ra.seed, "Seed of the synthetic battery");
    rankCmd->add_option("--input-format", ra.inputFormat, "chars, csv, rle-json or auto (by extension)");
    rankCmd->add_option("--out", ra.out, "Directory for ranking CSVs and tau_matrix.csv");
    rankCmd->add_option("--format", ra.format, "Output format")->check(CLI::IsMember(outFormats));

    std::string catalogFormat = "json";
    auto* catalogCmd = app.add_subcommand("catalog", "List metrics, parameters and expected properties");
    catalogCmd->add_option("--format", catalogFormat, "Output format")->check(CLI::IsMember(outFormats));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (*score) return cmd_score(sa);
        if (*propcheck) return cmd_propcheck(pa);
        if (*rankCmd) return cmd_rank(ra);
        if (*catalogCmd) return cmd_catalog(catalogFormat);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
