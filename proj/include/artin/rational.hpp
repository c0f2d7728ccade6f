#pragma once

#include <gmpxx.h>

#include <string>

#include "artin/errors.hpp"

namespace artin {

// Exact arithmetic sits on GMP throughout. mpq_class results of arithmetic
// are always canonical (gcd 1, positive denominator); only num/den
// construction needs an explicit canonicalize.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw DivisionByZeroError("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat_from_strings(const std::string& num, const std::string& den) {
    return make_rat(Int(num), Int(den));
}

// The two-argument mpq_class constructor does not canonicalize; always build
// fractions through this.
inline Rat frac(long num, long den) { return make_rat(Int(num), Int(den)); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline long to_long(const Int& z) {
    if (!z.fits_slong_p()) throw DomainError("integer too large for machine word");
    return z.get_si();
}

inline Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

} // namespace artin
