#pragma once

#include <gmpxx.h>

#include <string>

#include "qstab/errors.hpp"

namespace qstab {

// Exact arithmetic substrate. Rationals are always kept in lowest terms
// with a positive denominator (mpq_class canonical form), so structural
// equality is value equality.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw DimensionError("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p/q" or "p" (lowest terms not required on input).
inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw InputError("empty rational literal");
    mpq_class v;
    if (v.set_str(s, 10) != 0)
        throw InputError("bad rational literal: '" + s + "'");
    if (v.get_den() == 0)
        throw InputError("zero denominator in rational literal: '" + s + "'");
    v.canonicalize();
    return v;
}

// Serializes as "p/q" in lowest terms, or "p" when the denominator is 1.
inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

inline int sign(const Rat& r) { return sgn(r); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline long to_long(const Int& z) {
    if (!z.fits_slong_p()) throw InternalError("integer out of machine range");
    return z.get_si();
}

}  // namespace qstab
