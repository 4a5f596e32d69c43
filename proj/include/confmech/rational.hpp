#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace confmech {

// Exact rational scalar. GMP keeps values canonical (gcd-reduced, positive
// denominator); helpers below cover parsing, formatting and the few queries
// the rest of the library needs.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "n" or "n/d" with optional sign.
inline Rat rat_from_string(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    Rat r;
    if (r.set_str(text, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + text);
    if (r.get_den() == 0)
        throw std::invalid_argument("zero denominator in literal: " + text);
    r.canonicalize();
    return r;
}

// Canonical "num/den" form, "num" when the value is integral.
inline std::string rat_to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

inline int rat_sign(const Rat& r) { return sgn(r); }

inline Rat rat_pow(const Rat& base, unsigned exp) {
    Rat acc = 1, b = base;
    unsigned e = exp;
    while (e != 0) {
        if (e & 1u) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

inline double rat_to_double(const Rat& r) { return r.get_d(); }

}  // namespace confmech
