#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace arcs {

// Exact arithmetic everywhere.  mpq_class keeps values reduced with a
// positive denominator, which is the invariant the printers and the
// serialisation formats rely on.
using Int = mpz_class;
using Rational = mpq_class;

inline Int factorial_int(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Int binomial_int(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// pre: b divides a exactly
inline Int divexact_int(const Int& a, const Int& b) {
    if (sgn(b) == 0) throw std::domain_error("division by zero");
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (sgn(r) != 0) throw std::domain_error("inexact integer division");
    return q;
}

inline Rational make_rational(Int num, Int den) {
    if (sgn(den) == 0) throw std::domain_error("rational with zero denominator");
    Rational r(std::move(num), std::move(den));
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }
inline std::string to_string(const Int& v) { return v.get_str(); }

}  // namespace arcs
