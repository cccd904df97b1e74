#include "tsadlab/score.hpp"

#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

namespace tsad {

Score Score::undefined(std::string note) {
    Score s;
    s.note_ = std::move(note);
    return s;
}

Score Score::exact(const mpq_class& q) {
    Score s;
    s.defined_ = true;
    s.exact_ = q;
    s.exact_->canonicalize();
    s.value_ = s.exact_->get_d();
    return s;
}

Score Score::real(double v) {
    Score s;
    s.defined_ = true;
    s.value_ = v;
    return s;
}

bool relation_holds(const Score& a, const Score& b, Relation rel) {
    if (!a.defined() || !b.defined()) throw std::logic_error("relation on undefined score");
    if (a.rational() && b.rational()) {
        int c = cmp(*a.rational(), *b.rational());
        return rel == Relation::greater ? c > 0 : c == 0;
    }
    double x = a.value();
    double y = b.value();
    if (rel == Relation::greater) return x > y;
    if (x == y) return true;
    if (std::isinf(x) || std::isinf(y)) return false;
    return std::fabs(x - y) <= kEqualTolerance;
}

std::string to_string(Relation rel) { return rel == Relation::greater ? "greater" : "equal"; }

std::string rational_string(const mpq_class& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

mpq_class pow_rational(const mpq_class& base, int exponent) {
    if (exponent < 0) throw std::invalid_argument("negative exponent");
    mpq_class r = 1;
    for (int i = 0; i < exponent; ++i) r *= base;
    return r;
}

mpq_class parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty number");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        mpq_class q(text, 10);
        if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
        q.canonicalize();
        return q;
    }
    std::string mant = text;
    long exp10 = 0;
    auto e = text.find_first_of("eE");
    if (e != std::string::npos) {
        mant = text.substr(0, e);
        exp10 = std::stol(text.substr(e + 1));
    }
    bool neg = false;
    if (!mant.empty() && (mant[0] == '-' || mant[0] == '+')) {
        neg = mant[0] == '-';
        mant = mant.substr(1);
    }
    std::string digits;
    long frac = 0;
    bool seen_dot = false;
    for (char c : mant) {
        if (c == '.') {
            if (seen_dot) throw std::invalid_argument("malformed number: " + text);
            seen_dot = true;
        } else if (c >= '0' && c <= '9') {
            digits.push_back(c);
            if (seen_dot) ++frac;
        } else {
            throw std::invalid_argument("malformed number: " + text);
        }
    }
    if (digits.empty()) throw std::invalid_argument("malformed number: " + text);
    mpz_class num(digits, 10);
    if (neg) num = -num;
    long shift = exp10 - frac;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    mpq_class q = shift < 0 ? mpq_class(num, scale) : mpq_class(num * scale);
    q.canonicalize();
    return q;
}

mpq_class decimal_rational(double v) {
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite parameter");
    return parse_rational(fmt::format("{}", v));
}

}  // namespace tsad
