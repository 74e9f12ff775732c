#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ehrlimit {

// All exported quantities are exact: arbitrary-precision integers for
// coefficients and volumes, rationals for barycentric coordinates.
using Int = mpz_class;
using Rat = mpq_class;

inline Int rat_floor(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

inline Int rat_ceil(const Rat& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

// Fractional part in [0, 1).
inline Rat rat_frac(const Rat& q) {
    Rat r = q - Rat(rat_floor(q));
    r.canonicalize();
    return r;
}

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// C(n, k) with C(n, k) = 0 for k < 0, k > n, or n < 0.
inline Int binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline long to_long(const Int& v, const char* what = "value") {
    if (!v.fits_slong_p())
        throw std::overflow_error(std::string(what) + " does not fit in a machine word: " + v.get_str());
    return v.get_si();
}

}  // namespace ehrlimit
