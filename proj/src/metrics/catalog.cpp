#include <cmath>
#include <limits>
#include <stdexcept>

#include <fmt/format.h>

#include "tsadlab/metrics.hpp"

namespace tsad {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

ParamSpec int_param(std::string name, double def, double lo, double hi, std::string doc) {
    return {std::move(name), def, lo, hi, true, std::move(doc)};
}

ParamSpec real_param(std::string name, double def, double lo, double hi, std::string doc) {
    return {std::move(name), def, lo, hi, false, std::move(doc)};
}

int as_int(const Params& p, const char* key) { return static_cast<int>(std::lround(p.at(key))); }

using Binder = std::function<Scorer(const Params&)>;

MetricInfo simple(std::string id, std::string name, std::string family, bool exact, Scorer s) {
    return {std::move(id), std::move(name), std::move(family), {}, exact, "higher",
            [s = std::move(s)](const Params&) { return s; }, {}};
}

MetricInfo with_params(std::string id, std::string name, std::string family, std::vector<ParamSpec> params, bool exact,
                       Binder bind) {
    return {std::move(id), std::move(name), std::move(family), std::move(params), exact, "higher", std::move(bind), {}};
}

std::vector<MetricInfo> build_catalog() {
    std::vector<MetricInfo> c;
    const Kind kinds[] = {Kind::precision, Kind::recall, Kind::f1};
    const char* kindId[] = {"precision", "recall", "f1"};
    const char* kindName[] = {"Precision", "Recall", "F1"};

    for (int k = 0; k < 3; ++k) {
        Kind kind = kinds[k];
        c.push_back(simple(fmt::format("pointwise-{}", kindId[k]), fmt::format("Point-wise {}", kindName[k]), "point-wise",
                           true, [kind](const BinarySeq& g, const BinarySeq& p) { return score_pointwise(kind, g, p); }));
    }
    for (int k = 0; k < 3; ++k) {
        Kind kind = kinds[k];
        c.push_back(simple(fmt::format("pa-{}", kindId[k]), fmt::format("Point-adjusted {}", kindName[k]),
                           "point-adjusted", true,
                           [kind](const BinarySeq& g, const BinarySeq& p) { return score_point_adjusted(kind, g, p); }));
    }
    const EventKind events[] = {EventKind::precision, EventKind::recall, EventKind::f1, EventKind::composite_f1};
    const char* eventId[] = {"event-precision", "event-recall", "event-f1", "composite-f1"};
    const char* eventName[] = {"Event-wise Precision", "Event-wise Recall", "Event-wise F1", "Composite F1"};
    for (int k = 0; k < 4; ++k) {
        EventKind kind = events[k];
        c.push_back(simple(eventId[k], eventName[k], "event-wise", true,
                           [kind](const BinarySeq& g, const BinarySeq& p) { return score_event_wise(kind, g, p); }));
    }
    for (int k = 0; k < 3; ++k) {
        Kind kind = kinds[k];
        c.push_back(with_params(fmt::format("kdelay-{}", kindId[k]), fmt::format("K-Delay {}", kindName[k]), "k-delay",
                                {int_param("k", 1, 0, kInf, "delay budget")}, true, [kind](const Params& prm) {
                                    int kk = as_int(prm, "k");
                                    return Scorer([kind, kk](const BinarySeq& g, const BinarySeq& p) {
                                        return score_k_delay(kind, kk, g, p);
                                    });
                                }));
    }

    c.push_back(with_params("lsa-f1", "Latency- and Sparsity-Aware F1", "point-adjusted extension",
                            {int_param("b", 3, 1, kInf, "block size")}, true, [](const Params& prm) {
                                int b = as_int(prm, "b");
                                return Scorer([b](const BinarySeq& g, const BinarySeq& p) { return score_lsa_f1(b, g, p); });
                            }));
    c.push_back(with_params("pa-percent-k-f1", "Point-adjusted F1 at K%", "point-adjusted extension",
                            {real_param("kPercent", 0.4, 0, 1, "overlap ratio that must be exceeded")}, true,
                            [](const Params& prm) {
                                mpq_class k = decimal_rational(prm.at("kPercent"));
                                return Scorer([k](const BinarySeq& g, const BinarySeq& p) { return score_pa_percent_k(k, g, p); });
                            }));
    c.push_back(simple("pa-percent-k-integrated-f1", "Integrated point-adjusted F1 at K%", "point-adjusted extension", true,
                       [](const BinarySeq& g, const BinarySeq& p) { return score_pa_percent_k_integrated(g, p); }));
    c.push_back(with_params("pa-decay-f1", "Point-adjusted F1 with decay", "point-adjusted extension",
                            {real_param("d", 0.9, 0, 1, "decay rate in (0,1]")}, true, [](const Params& prm) {
                                mpq_class d = decimal_rational(prm.at("d"));
                                return Scorer([d](const BinarySeq& g, const BinarySeq& p) { return score_pa_decay(d, g, p); });
                            }));
    c.push_back(simple("reduced-length-f1", "Reduced-length F1", "point-adjusted extension", false,
                       [](const BinarySeq& g, const BinarySeq& p) { return score_reduced_length(g, p); }));
    c.push_back(with_params("balanced-pa-f1", "Balanced point-adjusted F1", "point-adjusted extension",
                            {int_param("B", 1, 0, kInf, "radius of the symmetric neighbourhood")}, true,
                            [](const Params& prm) {
                                int b = as_int(prm, "B");
                                return Scorer([b](const BinarySeq& g, const BinarySeq& p) { return score_balanced_pa(b, g, p); });
                            }));

    for (int k = 0; k < 3; ++k) {
        Kind kind = kinds[k];
        std::vector<ParamSpec> ps;
        if (kind != Kind::precision) ps.push_back(real_param("alphaWeight", 0, 0, 1, "weight of the existence reward"));
        c.push_back(with_params(fmt::format("range-{}", kindId[k]), fmt::format("Range-based {}", kindName[k]), "range-based",
                                ps, true, [kind](const Params& prm) {
                                    mpq_class a = prm.count("alphaWeight") ? decimal_rational(prm.at("alphaWeight")) : mpq_class(0);
                                    return Scorer([kind, a](const BinarySeq& g, const BinarySeq& p) {
                                        return score_range_based(kind, a, g, p);
                                    });
                                }));
    }
    for (int k = 0; k < 3; ++k) {
        Kind kind = kinds[k];
        c.push_back(simple(fmt::format("ts-{}", kindId[k]), fmt::format("Time-series {}", kindName[k]), "range-based", true,
                           [kind](const BinarySeq& g, const BinarySeq& p) { return score_timesead(kind, g, p); }));
    }

    c.push_back(with_params("nab", "NAB score", "nab",
                            {real_param("aTP", 1, 0, kInf, "true positive weight"),
                             real_param("aFP", 0.11, 0, kInf, "false positive weight"),
                             real_param("aFN", -1, -kInf, 0, "false negative weight")},
                            false, [](const Params& prm) {
                                NabWeights w{prm.at("aTP"), prm.at("aFP"), prm.at("aFN")};
                                return Scorer([w](const BinarySeq& g, const BinarySeq& p) { return score_nab(w, g, p); });
                            }));

    const Kind taKinds[] = {Kind::precision, Kind::recall};
    const char* taId[] = {"tap", "tar"};
    const char* taName[] = {"Time-series aware Precision", "Time-series aware Recall"};
    for (int k = 0; k < 2; ++k) {
        Kind kind = taKinds[k];
        c.push_back(with_params(taId[k], taName[k], "time-series aware",
                                {real_param("alphaWeight", 0.5, 0, 1, "weight of the threshold term"),
                                 real_param("delta", 1, 0, kInf, "length of the tolerance tail"),
                                 real_param("theta", 0.5, 0, kInf, "overlap ratio threshold (> 0)")},
                                false, [kind](const Params& prm) {
                                    TaParams t{prm.at("alphaWeight"), prm.at("delta"), prm.at("theta")};
                                    return Scorer([kind, t](const BinarySeq& g, const BinarySeq& p) { return score_ta(kind, t, g, p); });
                                }));
    }

    const char* ttId[] = {"tt-precision", "tt-recall"};
    const char* ttName[] = {"Time-tolerant Precision", "Time-tolerant Recall"};
    for (int k = 0; k < 2; ++k) {
        Kind kind = taKinds[k];
        c.push_back(with_params(ttId[k], ttName[k], "time-tolerant", {int_param("delta", 1, 0, kInf, "tolerance radius")}, true,
                                [kind](const Params& prm) {
                                    int d = as_int(prm, "delta");
                                    return Scorer([kind, d](const BinarySeq& g, const BinarySeq& p) {
                                        return score_time_tolerant(kind, d, g, p);
                                    });
                                }));
    }

    for (int k = 0; k < 3; ++k) {
        Kind kind = kinds[k];
        std::vector<ParamSpec> ps;
        if (kind != Kind::precision) {
            ps.push_back(int_param("recallDistance", 0, 0, 1,
                                   "0: distance to the first affiliated prediction, 1: distance to the nearest one"));
        }
        c.push_back(with_params(fmt::format("affiliation-{}", kindId[k]), fmt::format("Affiliation {}", kindName[k]),
                                "affiliation", ps, true, [kind](const Params& prm) {
                                    RecallDistance rd = prm.count("recallDistance") && as_int(prm, "recallDistance") == 1
                                                            ? RecallDistance::nearest
                                                            : RecallDistance::first;
                                    return Scorer([kind, rd](const BinarySeq& g, const BinarySeq& p) {
                                        return score_affiliation(kind, rd, g, p);
                                    });
                                }));
    }

    const char* etaId[] = {"etap", "etar"};
    const char* etaName[] = {"Enhanced time-series aware Precision", "Enhanced time-series aware Recall"};
    for (int k = 0; k < 2; ++k) {
        Kind kind = taKinds[k];
        c.push_back(with_params(etaId[k], etaName[k], "time-series aware",
                                {real_param("thetaP", 0.5, 0, kInf, "prediction overlap threshold (> 0)"),
                                 real_param("thetaR", 0.5, 0, kInf, "anomaly overlap threshold (> 0)")},
                                kind == Kind::recall, [kind](const Params& prm) {
                                    double tp = prm.at("thetaP"), tr = prm.at("thetaR");
                                    return Scorer([kind, tp, tr](const BinarySeq& g, const BinarySeq& p) {
                                        return score_enhanced_ta(kind, tp, tr, g, p);
                                    });
                                }));
    }

    c.push_back(simple("temporal-distance", "Negative temporal distance", "distance", true,
                       [](const BinarySeq& g, const BinarySeq& p) { return score_temporal_distance(g, p); }));
    c.push_back(simple("average-alert-delay", "Negative average alert delay", "distance", true,
                       [](const BinarySeq& g, const BinarySeq& p) { return score_average_alert_delay(g, p); }));

    c.push_back(simple("larm", "LARM", "alignment and accuracy", true, [](const BinarySeq& g, const BinarySeq& p) {
        static const LarmConfig cfg = default_larm_config();
        return score_larm(cfg, g, p);
    }));
    c.push_back(with_params("alarm", "ALARM", "alignment and accuracy",
                            {int_param("t", 2, 1, kInf, "alarm tolerance")}, true, [](const Params& prm) {
                                LarmConfig cfg = default_larm_config();
                                cfg.t = as_int(prm, "t");
                                return Scorer([cfg](const BinarySeq& g, const BinarySeq& p) { return score_alarm(cfg, g, p); });
                            }));
    return c;
}

std::string citation_for(const std::string& id) {
    static const std::pair<const char*, const char*> prefixes[] = {
        {"pointwise-", "classical point-wise precision and recall"},
        {"pa-percent-k", "Kim et al., AAAI 2022"},
        {"pa-decay", "not recorded"},
        {"pa-", "Xu et al., WWW 2018"},
        {"event-", "Garg et al., IEEE TNNLS 2021"},
        {"composite-", "Garg et al., IEEE TNNLS 2021"},
        {"kdelay-", "Ren et al., KDD 2019"},
        {"lsa-", "Abdulaal et al., KDD 2021"},
        {"reduced-length", "not recorded"},
        {"balanced-pa", "Bhattacharya et al., 2025"},
        {"range-", "Tatbul et al., NeurIPS 2018"},
        {"ts-", "Wagner et al., TMLR 2023"},
        {"nab", "Lavin and Ahmad, ICMLA 2015"},
        {"ta", "Hwang et al., CIKM 2019"},
        {"tt-", "Scharwaechter and Mueller, SDM 2020"},
        {"affiliation-", "Huet et al., KDD 2022"},
        {"eta", "Hwang et al., ACM SAC 2022"},
        {"temporal-distance", "Kovacs et al., 2019"},
        {"average-alert-delay", "Xu et al., WWW 2018"},
        {"larm", "introduced in this library"},
        {"alarm", "introduced in this library"},
    };
    for (const auto& [prefix, cite] : prefixes) {
        if (id.rfind(prefix, 0) == 0) return cite;
    }
    return "not recorded";
}

bool strictly_positive_param(const std::string& name) {
    return name == "theta" || name == "thetaP" || name == "thetaR" || name == "d";
}

}  // namespace

const std::vector<MetricInfo>& catalog() {
    static const std::vector<MetricInfo> c = [] {
        auto out = build_catalog();
        for (auto& m : out) m.citation = citation_for(m.id);
        return out;
    }();
    return c;
}

const MetricInfo* find_metric(std::string_view id) {
    for (const auto& m : catalog()) {
        if (m.id == id) return &m;
    }
    return nullptr;
}

MetricDescriptor make_descriptor(std::string_view id, const Params& overrides) {
    const MetricInfo* info = find_metric(id);
    if (!info) throw std::invalid_argument(fmt::format("unknown metric '{}'", id));
    MetricDescriptor d{info->id, {}};
    for (const auto& spec : info->params) d.params[spec.name] = spec.def;
    for (const auto& [name, value] : overrides) {
        auto it = d.params.find(name);
        if (it == d.params.end()) throw std::invalid_argument(fmt::format("metric '{}' has no parameter '{}'", id, name));
        it->second = value;
    }
    for (const auto& spec : info->params) {
        double v = d.params[spec.name];
        if (!std::isfinite(v)) throw std::invalid_argument(fmt::format("parameter '{}' must be finite", spec.name));
        if (v < spec.lo || v > spec.hi) {
            throw std::invalid_argument(fmt::format("parameter '{}' = {} outside [{}, {}]", spec.name, v, spec.lo, spec.hi));
        }
        if (strictly_positive_param(spec.name) && v <= 0) {
            throw std::invalid_argument(fmt::format("parameter '{}' must be positive", spec.name));
        }
        if (spec.integer && v != std::floor(v)) {
            throw std::invalid_argument(fmt::format("parameter '{}' must be an integer", spec.name));
        }
    }
    return d;
}

Scorer make_scorer(const MetricDescriptor& d) {
    const MetricInfo* info = find_metric(d.id);
    if (!info) throw std::invalid_argument(fmt::format("unknown metric '{}'", d.id));
    return info->bind(make_descriptor(d.id, d.params).params);
}

Score score(const MetricDescriptor& d, const BinarySeq& g, const BinarySeq& p) { return make_scorer(d)(g, p); }

std::string describe(const MetricDescriptor& d) {
    if (d.params.empty()) return d.id;
    std::string out = d.id + "(";
    bool first = true;
    for (const auto& [k, v] : d.params) {
        if (!first) out += ",";
        out += fmt::format("{}={}", k, v);
        first = false;
    }
    return out + ")";
}

}  // namespace tsad
