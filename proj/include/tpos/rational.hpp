#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <string>

#include "tpos/error.hpp"

namespace tpos {

// All arithmetic in the library is exact. Rat is always kept canonical:
// gcd(num, den) = 1, den > 0. mpq_class arithmetic preserves canonical form;
// only values built from raw strings need an explicit canonicalize().
using Rat = mpq_class;

// Accepts an optionally signed integer "p" or fraction "p/q" with q > 0
// after sign normalization. Rejects anything else (whitespace, floats, empty
// numerator or denominator, zero denominator).
inline Rat parse_rat(const std::string& text) {
    auto is_int = [](const std::string& s) {
        std::size_t i = (!s.empty() && (s[0] == '+' || s[0] == '-')) ? 1 : 0;
        if (i >= s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    const auto slash = text.find('/');
    bool ok = false;
    if (slash == std::string::npos) {
        ok = is_int(text);
    } else {
        const std::string num = text.substr(0, slash);
        const std::string den = text.substr(slash + 1);
        ok = is_int(num) && is_int(den) && den.find('-') == std::string::npos &&
             den.find('+') == std::string::npos;
    }
    require(ok, "not a rational literal: \"" + text + "\"");
    std::string cleaned = text;
    cleaned.erase(std::remove(cleaned.begin(), cleaned.end(), '+'), cleaned.end());
    Rat q(cleaned);
    require(q.get_den() != 0, "zero denominator: \"" + text + "\"");
    q.canonicalize();
    return q;
}

// The two-argument mpq_class constructor does not canonicalize; this does.
inline Rat frac(long num, long den) {
    require(den != 0, "frac: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Canonical text form: "p" for integers, "p/q" otherwise, q > 0, gcd 1.
inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline Rat rat_pow(Rat base, unsigned exp) {
    Rat out(1);
    while (exp) {
        if (exp & 1u) out *= base;
        base *= base;
        exp >>= 1;
    }
    return out;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

}  // namespace tpos
