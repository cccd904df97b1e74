// Exhaustive enumeration of property cases.
//
// For each ground truth, candidates (p, q) are generated from the structural part of the
// hypothesis (which positions may differ) and then filtered with the full precondition.
#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "internal.hpp"

namespace tsad {

int default_workers() {
    if (const char* env = std::getenv("TSADLAB_WORKERS")) {
        int w = std::atoi(env);
        if (w > 0) return w;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

namespace detail {

void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& fn) {
    if (workers <= 0) workers = default_workers();
    std::size_t threads = std::min<std::size_t>(static_cast<std::size_t>(workers), count);
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex errorMutex;
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(errorMutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

std::uint32_t lex_key(std::uint32_t mask, int n) {
    std::uint32_t key = 0;
    for (int j = 0; j < n; ++j) {
        if (mask >> j & 1u) key |= 1u << (n - 1 - j);
    }
    return key;
}

namespace {

enum class Shape { onesRegion, zerosRegion, flipOnes, flipZeros, swapOnes, normalPositions, onesAndZeros };

Shape shape_of(PropertyId prop) {
    static constexpr Shape simple[] = {Shape::onesRegion,  Shape::onesRegion, Shape::flipZeros,
                                       Shape::zerosRegion, Shape::zerosRegion, Shape::onesAndZeros,
                                       Shape::flipOnes,    Shape::onesRegion, Shape::swapOnes};
    static constexpr Shape advanced[] = {Shape::onesRegion,      Shape::onesRegion,      Shape::flipZeros,
                                         Shape::zerosRegion,     Shape::normalPositions, Shape::normalPositions,
                                         Shape::flipOnes,        Shape::onesRegion,      Shape::swapOnes};
    return (prop.family == PropertyFamily::simple ? simple : advanced)[prop.index - 1];
}

std::uint32_t interval_mask(const Interval& w) {
    std::uint32_t m = 0;
    for (int i = w.lo; i <= w.hi; ++i) m |= 1u << (i - 1);
    return m;
}

// Calls emit(q) for every q that agrees with p outside `free`.
template <class Emit>
void vary_on(std::uint32_t p, std::uint32_t free, Emit&& emit) {
    std::uint32_t base = p & ~free;
    std::uint32_t sub = free;
    while (true) {
        emit(base | sub);
        if (sub == 0) break;
        sub = (sub - 1) & free;
    }
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> candidates(Shape shape, const BinarySeq& g, int n) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    const std::uint32_t all = (1u << n) - 1;
    std::uint32_t gMask = 0;
    for (int i = 1; i <= n; ++i) {
        if (g(i)) gMask |= 1u << (i - 1);
    }
    auto ones = runs(g, 1);
    auto zeros = runs(g, 0);
    for (std::uint32_t p = 0; p <= all; ++p) {
        auto emit = [&](std::uint32_t q) { out.emplace_back(p, q); };
        switch (shape) {
            case Shape::onesRegion:
                for (const auto& a : ones) vary_on(p, interval_mask(a), emit);
                break;
            case Shape::zerosRegion:
                for (const auto& z : zeros) vary_on(p, interval_mask(z), emit);
                break;
            case Shape::flipOnes:
                for (int i = 0; i < n; ++i) {
                    if (gMask >> i & 1u) emit(p ^ (1u << i));
                }
                break;
            case Shape::flipZeros:
                for (int i = 0; i < n; ++i) {
                    if (!(gMask >> i & 1u)) emit(p ^ (1u << i));
                }
                break;
            case Shape::swapOnes:
                for (const auto& a : ones) {
                    for (int i = a.lo; i <= a.hi; ++i) {
                        for (int j = i + 1; j <= a.hi; ++j) emit(p ^ (1u << (i - 1)) ^ (1u << (j - 1)));
                    }
                }
                break;
            case Shape::normalPositions:
                vary_on(p, all & ~gMask, emit);
                break;
            case Shape::onesAndZeros:
                for (const auto& a : ones) {
                    for (const auto& z : zeros) vary_on(p, interval_mask(a) | interval_mask(z), emit);
                }
                break;
        }
    }
    return out;
}

std::vector<PackedCase> cases_for_ground_truth(PropertyId prop, int n, std::uint32_t gMask) {
    BinarySeq g = unpack(gMask, n);
    auto pairs = candidates(shape_of(prop), g, n);
    auto key = [n](const std::pair<std::uint32_t, std::uint32_t>& pq) {
        return std::pair{lex_key(pq.first, n), lex_key(pq.second, n)};
    };
    std::sort(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

    const bool advanced = prop.family == PropertyFamily::advanced;
    auto gOnes = runs(g, 1);
    auto gZeros = runs(g, 0);
    std::vector<BinarySeq> seqs;
    std::vector<AlarmClassification> cls;
    seqs.reserve(std::size_t{1} << n);
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
        seqs.push_back(unpack(m, n));
        if (advanced) cls.push_back(classify_alarms(g, seqs.back()));
    }

    std::vector<PackedCase> out;
    for (const auto& [p, q] : pairs) {
        TripleView t{g, seqs[p], seqs[q], gOnes, gZeros, advanced ? &cls[p] : nullptr, advanced ? &cls[q] : nullptr};
        auto rel = precondition_view(prop, t);
        if (!rel) continue;
        out.push_back({static_cast<std::uint8_t>(n), static_cast<std::uint8_t>(*rel == Relation::equal ? 1 : 0),
                       static_cast<std::uint16_t>(gMask), static_cast<std::uint16_t>(p), static_cast<std::uint16_t>(q)});
    }
    return out;
}

// Ground truths of length n in lexicographic string order.
std::vector<std::uint32_t> ground_truths(int n) {
    std::vector<std::uint32_t> gs(std::size_t{1} << n);
    for (std::uint32_t m = 0; m < gs.size(); ++m) gs[m] = m;
    std::sort(gs.begin(), gs.end(), [n](std::uint32_t a, std::uint32_t b) { return lex_key(a, n) < lex_key(b, n); });
    return gs;
}

const std::vector<PackedCase>& cases_of_length(PropertyId prop, int n) {
    static std::mutex mutex;
    static std::map<std::pair<PropertyId, int>, std::vector<PackedCase>> cache;
    {
        std::lock_guard lock(mutex);
        auto it = cache.find({prop, n});
        if (it != cache.end()) return it->second;
    }
    auto gs = ground_truths(n);
    std::vector<std::vector<PackedCase>> parts(gs.size());
    parallel_for(gs.size(), 0, [&](std::size_t k) { parts[k] = cases_for_ground_truth(prop, n, gs[k]); });
    std::vector<PackedCase> all;
    for (auto& part : parts) all.insert(all.end(), part.begin(), part.end());
    std::lock_guard lock(mutex);
    return cache.emplace(std::pair{prop, n}, std::move(all)).first->second;
}

void check_length(int maxLen) {
    if (maxLen < 1 || maxLen > kMaxEnumerationLength) {
        throw std::invalid_argument("maxLen must lie in [1, " + std::to_string(kMaxEnumerationLength) + "]");
    }
}

}  // namespace

const std::vector<PackedCase>& packed_cases(PropertyId prop, int maxLen) {
    check_length(maxLen);
    static std::mutex mutex;
    static std::map<std::pair<PropertyId, int>, std::vector<PackedCase>> cache;
    {
        std::lock_guard lock(mutex);
        auto it = cache.find({prop, maxLen});
        if (it != cache.end()) return it->second;
    }
    std::vector<PackedCase> all;
    for (int n = 1; n <= maxLen; ++n) {
        const auto& part = cases_of_length(prop, n);
        all.insert(all.end(), part.begin(), part.end());
    }
    std::lock_guard lock(mutex);
    return cache.emplace(std::pair{prop, maxLen}, std::move(all)).first->second;
}

}  // namespace detail

namespace {

PropertyCase expand(const detail::PackedCase& c) {
    return {detail::unpack(c.g, c.n), detail::unpack(c.p, c.n), detail::unpack(c.q, c.n),
            c.relation ? Relation::equal : Relation::greater, "enumerated"};
}

}  // namespace

std::vector<PropertyCase> enumerate_cases(PropertyId prop, int maxLen) {
    const auto& packed = detail::packed_cases(prop, maxLen);
    std::vector<PropertyCase> out;
    out.reserve(packed.size());
    for (const auto& c : packed) out.push_back(expand(c));
    return out;
}

std::size_t count_cases(PropertyId prop, int maxLen) { return detail::packed_cases(prop, maxLen).size(); }

std::vector<PropertyCase> brute_force_cases(PropertyId prop, int maxLen) {
    if (maxLen < 1 || maxLen > 5) throw std::invalid_argument("brute force is limited to maxLen <= 5");
    std::vector<PropertyCase> out;
    for (int n = 1; n <= maxLen; ++n) {
        const std::uint32_t count = 1u << n;
        std::vector<std::uint32_t> order(count);
        for (std::uint32_t m = 0; m < count; ++m) order[m] = m;
        std::sort(order.begin(), order.end(),
                  [n](std::uint32_t a, std::uint32_t b) { return detail::lex_key(a, n) < detail::lex_key(b, n); });
        for (auto g : order) {
            auto gs = detail::unpack(g, n);
            for (auto p : order) {
                auto ps = detail::unpack(p, n);
                for (auto q : order) {
                    auto qs = detail::unpack(q, n);
                    if (auto rel = precondition(prop, gs, ps, qs)) out.push_back({gs, ps, qs, *rel, "brute-force"});
                }
            }
        }
    }
    return out;
}

}  // namespace tsad
