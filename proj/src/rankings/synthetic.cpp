#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include <fmt/format.h>

#include "tsadlab/rankings.hpp"

namespace tsad {

double unit_interval(std::uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1.0p-53; }

namespace {

// Uniform integer in [0, bound) from the engine; bound > 0.
int draw_below(std::mt19937_64& rng, int bound) {
    return std::min(bound - 1, static_cast<int>(unit_interval(rng()) * bound));
}

void validate(const SyntheticSpec& s) {
    switch (s.kind) {
        case SyntheticKind::delayed:
            if (s.delay < 0) throw std::invalid_argument("delay must be >= 0");
            break;
        case SyntheticKind::truncated:
            if (!(s.fraction > 0 && s.fraction <= 1)) throw std::invalid_argument("fraction must lie in (0, 1]");
            break;
        case SyntheticKind::oscillating:
            if (s.period < 2) throw std::invalid_argument("period must be >= 2");
            break;
        case SyntheticKind::random:
            if (!(s.rate >= 0 && s.rate <= 1)) throw std::invalid_argument("rate must lie in [0, 1]");
            break;
        case SyntheticKind::extra_false_alarms:
            if (s.count < 0) throw std::invalid_argument("count must be >= 0");
            break;
        default:
            break;
    }
}

}  // namespace

std::string SyntheticSpec::label() const {
    switch (kind) {
        case SyntheticKind::perfect: return "perfect";
        case SyntheticKind::empty: return "empty";
        case SyntheticKind::inverted: return "inverted";
        case SyntheticKind::merged: return "merged";
        case SyntheticKind::delayed: return fmt::format("delayed-{}", delay);
        case SyntheticKind::truncated: return fmt::format("truncated-{}", fraction);
        case SyntheticKind::oscillating: return fmt::format("oscillating-{}", period);
        case SyntheticKind::random: return fmt::format("random-{}", rate);
        case SyntheticKind::shifted: return fmt::format("shifted{:+d}", offset);
        case SyntheticKind::extra_false_alarms: return fmt::format("extra-false-alarms-{}", count);
    }
    return "unknown";
}

BinarySeq generate_synthetic(const SyntheticSpec& spec, const BinarySeq& g) {
    validate(spec);
    const int n = g.n();
    std::vector<std::uint8_t> out(static_cast<std::size_t>(n), 0);
    auto set = [&](int i) { out[static_cast<std::size_t>(i - 1)] = 1; };
    const auto windows = runs(g, 1);
    switch (spec.kind) {
        case SyntheticKind::perfect:
            return g;
        case SyntheticKind::empty:
            break;
        case SyntheticKind::inverted:
            for (int i = 1; i <= n; ++i) {
                if (!g(i)) set(i);
            }
            break;
        case SyntheticKind::delayed:
            for (const auto& w : windows) {
                for (int i = w.lo + spec.delay; i <= w.hi; ++i) set(i);
            }
            break;
        case SyntheticKind::truncated:
            for (const auto& w : windows) {
                int keep = static_cast<int>(std::ceil(spec.fraction * w.length()));
                for (int i = w.lo; i < w.lo + keep; ++i) set(i);
            }
            break;
        case SyntheticKind::oscillating:
            for (const auto& w : windows) {
                for (int i = w.lo; i <= w.hi; i += spec.period) set(i);
            }
            break;
        case SyntheticKind::random: {
            std::mt19937_64 rng(spec.seed);
            for (int i = 1; i <= n; ++i) {
                if (unit_interval(rng()) < spec.rate) set(i);
            }
            break;
        }
        case SyntheticKind::shifted:
            for (int i = 1; i <= n; ++i) {
                int j = i + spec.offset;
                if (g(i) && j >= 1 && j <= n) set(j);
            }
            break;
        case SyntheticKind::merged:
            if (!windows.empty()) {
                for (int i = windows.front().lo; i <= windows.back().hi; ++i) set(i);
            }
            break;
        case SyntheticKind::extra_false_alarms: {
            // Isolated single-step alarms on normal steps whose neighbours are normal and unused.
            for (int i = 1; i <= n; ++i) {
                if (g(i)) set(i);
            }
            std::vector<int> free;
            for (int i = 1; i <= n; ++i) {
                bool clear = !g(i) && (i == 1 || !g(i - 1)) && (i == n || !g(i + 1));
                if (clear) free.push_back(i);
            }
            std::mt19937_64 rng(spec.seed);
            int placed = 0;
            while (placed < spec.count) {
                if (free.empty()) throw std::invalid_argument("ground truth has too few normal steps for the false alarms");
                std::size_t k = static_cast<std::size_t>(draw_below(rng, static_cast<int>(free.size())));
                int i = free[k];
                set(i);
                ++placed;
                free.erase(std::remove_if(free.begin(), free.end(), [i](int j) { return std::abs(j - i) <= 1; }), free.end());
            }
            break;
        }
    }
    return BinarySeq(std::move(out));
}

std::vector<SyntheticSpec> default_battery(std::uint64_t seed) {
    using K = SyntheticKind;
    std::vector<SyntheticSpec> b;
    b.push_back({.kind = K::perfect});
    b.push_back({.kind = K::empty});
    b.push_back({.kind = K::inverted});
    b.push_back({.kind = K::delayed, .delay = 2});
    b.push_back({.kind = K::delayed, .delay = 5});
    b.push_back({.kind = K::truncated, .fraction = 0.5});
    b.push_back({.kind = K::truncated, .fraction = 0.25});
    b.push_back({.kind = K::oscillating, .period = 2});
    b.push_back({.kind = K::oscillating, .period = 3});
    b.push_back({.kind = K::shifted, .offset = 3});
    b.push_back({.kind = K::shifted, .offset = -3});
    b.push_back({.kind = K::merged});
    b.push_back({.kind = K::extra_false_alarms, .count = 2, .seed = seed});
    b.push_back({.kind = K::extra_false_alarms, .count = 5, .seed = seed + 1});
    b.push_back({.kind = K::extra_false_alarms, .count = 10, .seed = seed + 2});
    b.push_back({.kind = K::random, .rate = 0.1, .seed = seed + 3});
    return b;
}

std::vector<Prediction> battery_predictions(const std::vector<SyntheticSpec>& battery, const BinarySeq& g) {
    std::vector<Prediction> out;
    for (const auto& s : battery) out.emplace_back(s.label(), generate_synthetic(s, g));
    return out;
}

BinarySeq synthetic_ground_truth(int n, int anomalies, std::uint64_t seed) {
    constexpr int kMinLength = 5, kMaxLength = 15;
    if (anomalies < 0) throw std::invalid_argument("anomaly count must be >= 0");
    if (anomalies > 0 && n / anomalies < kMaxLength + 2) throw std::invalid_argument("sequence too short for the anomalies");
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(std::max(n, 0)), 0);
    std::mt19937_64 rng(seed);
    const int segment = anomalies > 0 ? n / anomalies : n;
    for (int k = 0; k < anomalies; ++k) {
        int len = kMinLength + draw_below(rng, kMaxLength - kMinLength + 1);
        // Leave at least one normal step on both sides inside the segment.
        int start = k * segment + 1 + draw_below(rng, segment - len - 1);
        for (int i = start; i < start + len; ++i) bits[static_cast<std::size_t>(i)] = 1;
    }
    return BinarySeq(std::move(bits));
}

}  // namespace tsad
