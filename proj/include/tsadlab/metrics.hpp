#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tsadlab/core.hpp"
#include "tsadlab/score.hpp"

namespace tsad {

enum class Kind { precision, recall, f1 };

Score score_pointwise(Kind kind, const BinarySeq& g, const BinarySeq& p);
Score score_point_adjusted(Kind kind, const BinarySeq& g, const BinarySeq& p);

enum class EventKind { precision, recall, f1, composite_f1 };
Score score_event_wise(EventKind kind, const BinarySeq& g, const BinarySeq& p);

Score score_k_delay(Kind kind, int k, const BinarySeq& g, const BinarySeq& p);

// Point-adjustment extensions.
Score score_pa_percent_k(const mpq_class& k, const BinarySeq& g, const BinarySeq& p);
Score score_pa_percent_k_integrated(const BinarySeq& g, const BinarySeq& p);
Score score_pa_decay(const mpq_class& d, const BinarySeq& g, const BinarySeq& p);
Score score_reduced_length(const BinarySeq& g, const BinarySeq& p);
Score score_balanced_pa(int B, const BinarySeq& g, const BinarySeq& p);
Score score_lsa_f1(int b, const BinarySeq& g, const BinarySeq& p);

// Front-bias positional weights, cardinality factor 1/k.
Score score_range_based(Kind kind, const mpq_class& alphaWeight, const BinarySeq& g, const BinarySeq& p);
Score score_timesead(Kind kind, const BinarySeq& g, const BinarySeq& p);
// gamma(n) for a window with total positional weight S.
mpq_class timesead_gamma(int n, const mpq_class& S);

struct NabWeights {
    double aTP = 1.0;
    double aFP = 0.11;
    double aFN = -1.0;
};
double nab_raw(const NabWeights& w, const BinarySeq& g, const BinarySeq& p);
Score score_nab(const NabWeights& w, const BinarySeq& g, const BinarySeq& p);

struct TaParams {
    double alphaWeight = 0.5;
    double delta = 1.0;
    double theta = 0.5;
};
Score score_ta(Kind kind, const TaParams& params, const BinarySeq& g, const BinarySeq& p);
// Overlap O(W, Wp) including the sigmoid tail after max W.
double ta_overlap(const Interval& w, const Interval& wp, double delta);

Score score_time_tolerant(Kind kind, int delta, const BinarySeq& g, const BinarySeq& p);

enum class RecallDistance { first, nearest };
Score score_affiliation(Kind kind, RecallDistance dist, const BinarySeq& g, const BinarySeq& p);
// Affiliation zone of every ground-truth window; equidistant points go to the earlier window.
std::vector<Interval> affiliation_zones(const std::vector<Interval>& windows, int n);

Score score_enhanced_ta(Kind kind, double thetaP, double thetaR, const BinarySeq& g, const BinarySeq& p);

// Exposed as -TD and -AAD so that higher is better.
Score score_temporal_distance(const BinarySeq& g, const BinarySeq& p);
Score score_average_alert_delay(const BinarySeq& g, const BinarySeq& p);

struct LarmConfig {
    std::function<mpq_class(const BinarySeq& p, const Interval& a)> alphaFn;
    std::function<mpq_class(int ones)> betaFn;
    int t = 2;
};
// sum_j p(lo + j - 1) 2^-j over the window, j 1-based.
mpq_class default_alpha(const BinarySeq& p, const Interval& a);
// 1 - 1/x, and 0 at x = 0.
mpq_class default_beta(int x);
LarmConfig default_larm_config();

Score score_larm(const LarmConfig& cfg, const BinarySeq& g, const BinarySeq& p);
Score score_alarm(const LarmConfig& cfg, const BinarySeq& g, const BinarySeq& p);

// ---- catalog ----

using Params = std::map<std::string, double>;

struct ParamSpec {
    std::string name;
    double def;
    double lo;
    double hi;
    bool integer;
    std::string doc;
};

using Scorer = std::function<Score(const BinarySeq& g, const BinarySeq& p)>;

struct MetricInfo {
    std::string id;
    std::string name;
    std::string family;
    std::vector<ParamSpec> params;
    bool exact;
    std::string direction;
    std::function<Scorer(const Params&)> bind;
    std::string citation;  // original publication of the metric
};

struct MetricDescriptor {
    std::string id;
    Params params;
};

const std::vector<MetricInfo>& catalog();
const MetricInfo* find_metric(std::string_view id);

// Fills defaults and validates ranges; throws std::invalid_argument.
MetricDescriptor make_descriptor(std::string_view id, const Params& overrides = {});
Scorer make_scorer(const MetricDescriptor& d);
Score score(const MetricDescriptor& d, const BinarySeq& g, const BinarySeq& p);

std::string describe(const MetricDescriptor& d);

}  // namespace tsad
