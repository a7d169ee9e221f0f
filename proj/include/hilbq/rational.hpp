#pragma once

#include <gmpxx.h>

#include <string>

namespace hilbq {

using Int = mpz_class;
using Rat = mpq_class;

inline std::string to_string(const Int& z) { return z.get_str(); }
inline std::string to_string(const Rat& r) { return r.get_str(); }

inline Rat rat_from_strings(const std::string& num, const std::string& den) {
    const Int n(num), d(den);
    Rat r(n, d);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

/// Largest integer x with x <= r.
inline Int rat_floor(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

inline Int rat_ceil(const Rat& r) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

inline Int isqrt(const Int& z) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), z.get_mpz_t());
    return r;
}

}  // namespace hilbq
