#pragma once

#include <vector>

#include "tsadlab/core.hpp"
#include "tsadlab/score.hpp"

namespace tsad::detail {

struct WindowHits {
    std::vector<Interval> windows;  // I_1(g)
    std::vector<int> first;         // first predicted position per window, 0 if unhit
    int fp = 0;                     // |p^-1(1) ∩ g^-1(0)|
    int gOnes = 0;
    int pOnes = 0;
};

WindowHits window_hits(const BinarySeq& g, const BinarySeq& p);

// a / b, or Undefined when b == 0.
Score ratio(const mpq_class& a, const mpq_class& b, const char* why);

// Harmonic mean of two scores: Undefined if either is, 0 if both are 0.
Score harmonic(const Score& a, const Score& b);

int overlap(const Interval& a, const Interval& b);

// Canonical a / b.
mpq_class frac(long a, long b);

}  // namespace tsad::detail
