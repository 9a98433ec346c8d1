#pragma once

#include <boost/rational.hpp>

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace tg {

// Exact profit arithmetic: profits come from instance files as integers,
// fractions, or decimal numbers and must survive summation and comparison
// without floating-point drift.
using Rational = boost::rational<long long>;

inline double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

/// Exact conversion: every finite double is (mantissa * 2^shift).
inline Rational rational_from_double(double value) {
    if (!std::isfinite(value)) {
        throw std::domain_error("rational_from_double: non-finite value");
    }
    if (value == 0.0) {
        return Rational(0);
    }
    int exp = 0;
    const double frac = std::frexp(value, &exp);
    auto mant = static_cast<long long>(std::ldexp(frac, 53));  // 53-bit signed integer
    int shift = exp - 53;
    while (mant != 0 && (mant & 1) == 0 && shift < 0) {
        mant >>= 1;
        ++shift;
    }
    if (shift >= 0) {
        if (shift > 9 || std::llabs(mant) > (std::numeric_limits<long long>::max() >> shift)) {
            throw std::domain_error("rational_from_double: magnitude too large for exact storage");
        }
        return Rational(mant << shift);
    }
    if (shift < -62) {
        throw std::domain_error("rational_from_double: value needs more precision than supported");
    }
    return Rational(mant, 1LL << -shift);
}

/// Parses "num", "-num", or "num/den" (no embedded whitespace).
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) {
        throw std::invalid_argument("empty rational literal");
    }
    std::size_t pos = 0;
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
        negative = text[pos] == '-';
        ++pos;
    }
    auto read_digits = [&](long long& out) {
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
            throw std::invalid_argument("malformed rational literal: " + text);
        }
        out = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            if (out > (std::numeric_limits<long long>::max() - 9) / 10) {
                throw std::invalid_argument("rational literal out of range: " + text);
            }
            out = out * 10 + (text[pos] - '0');
            ++pos;
        }
    };
    long long num = 0;
    read_digits(num);
    long long den = 1;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        read_digits(den);
        if (den == 0) {
            throw std::invalid_argument("zero denominator: " + text);
        }
    }
    if (pos != text.size()) {
        throw std::invalid_argument("malformed rational literal: " + text);
    }
    return Rational(negative ? -num : num, den);
}

inline std::string format_rational(const Rational& r) {
    if (r.denominator() == 1) {
        return std::to_string(r.numerator());
    }
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace tg
