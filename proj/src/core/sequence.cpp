#include "tsadlab/core.hpp"

#include <cctype>
#include <stdexcept>

#include <fmt/format.h>

namespace tsad {

std::string to_string(const Interval& w) { return fmt::format("[{},{}]", w.lo, w.hi); }

BinarySeq::BinarySeq(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    if (bits_.empty()) throw std::invalid_argument("binary sequence must have length >= 1");
    for (auto b : bits_) {
        if (b > 1) throw std::invalid_argument("binary sequence values must be 0 or 1");
    }
}

BinarySeq BinarySeq::parse(std::string_view text) {
    std::vector<std::uint8_t> bits;
    bits.reserve(text.size());
    for (char c : text) {
        if (c == '0' || c == '1') {
            bits.push_back(static_cast<std::uint8_t>(c - '0'));
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            throw std::invalid_argument(fmt::format("unexpected character '{}' in binary sequence", c));
        }
    }
    return BinarySeq(std::move(bits));
}

BinarySeq BinarySeq::zeros(std::size_t n) { return BinarySeq(std::vector<std::uint8_t>(n, 0)); }

BinarySeq BinarySeq::from_mask(std::uint64_t mask, std::size_t n) {
    std::vector<std::uint8_t> bits(n);
    for (std::size_t j = 0; j < n; ++j) bits[j] = static_cast<std::uint8_t>((mask >> j) & 1U);
    return BinarySeq(std::move(bits));
}

int BinarySeq::count_ones() const {
    int c = 0;
    for (auto b : bits_) c += b;
    return c;
}

int BinarySeq::count_ones(const Interval& w) const {
    int c = 0;
    for (int i = w.lo; i <= w.hi; ++i) c += (*this)(i);
    return c;
}

bool BinarySeq::any_one(const Interval& w) const { return first_one(w) != 0; }

int BinarySeq::first_one(const Interval& w) const {
    for (int i = w.lo; i <= w.hi; ++i) {
        if ((*this)(i)) return i;
    }
    return 0;
}

std::string BinarySeq::str() const {
    std::string s;
    s.reserve(bits_.size());
    for (auto b : bits_) s.push_back(static_cast<char>('0' + b));
    return s;
}

void require_same_length(const BinarySeq& a, const BinarySeq& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument(fmt::format("length mismatch: {} vs {}", a.size(), b.size()));
    }
}

}  // namespace tsad
