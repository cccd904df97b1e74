#pragma once

#include <optional>
#include <string>

#include <gmpxx.h>

namespace tsad {

// A metric value. Rational-valued metrics carry the exact value next to its double rendering.
class Score {
public:
    static Score undefined(std::string note = {});
    static Score exact(const mpq_class& q);
    static Score real(double v);

    bool defined() const { return defined_; }
    double value() const { return value_; }
    const std::optional<mpq_class>& rational() const { return exact_; }
    const std::string& note() const { return note_; }

private:
    bool defined_ = false;
    double value_ = 0.0;
    std::optional<mpq_class> exact_;
    std::string note_;
};

enum class Relation { greater, equal };

constexpr double kEqualTolerance = 1e-12;

// a REL b for two defined scores: exact when both are rational, otherwise zero tolerance
// for `greater` and kEqualTolerance for `equal`.
bool relation_holds(const Score& a, const Score& b, Relation rel);

std::string to_string(Relation rel);

// "num/den" (or "num" for integers).
std::string rational_string(const mpq_class& q);

// Exact rational of the shortest decimal rendering of v, so 0.9 becomes 9/10.
mpq_class decimal_rational(double v);

// Parses "3/4", "-2", "0.25", "1e-3".
mpq_class parse_rational(const std::string& text);

mpq_class pow_rational(const mpq_class& base, int exponent);

}  // namespace tsad
