#pragma once

/// @file rational.hpp
/// Exact rationals backed by GMP, plus string forms ("a" or "a/b").

#include <gmpxx.h>

#include <string>

#include "ccode/errors.hpp"

namespace ccode {

using Rat = mpq_class;

inline Rat rat_from_ll(long long v) {
    Rat r;
    r = mpz_class(std::to_string(v));
    return r;
}

inline Rat rat_pow(const Rat& base, long e) {
    Rat r = 1;
    Rat b = base;
    long n = e < 0 ? -e : e;
    for (long i = 0; i < n; ++i) r *= b;
    if (e < 0) {
        if (r == 0) throw DomainError("inverse of zero rational");
        r = Rat(1) / r;
    }
    return r;
}

inline bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

inline std::string rat_to_string(const Rat& r) {
    if (rat_is_integer(r)) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Parse "a" or "a/b" (optional sign, nonzero b); canonicalizes.
Rat rat_from_string(const std::string& s);

} // namespace ccode
