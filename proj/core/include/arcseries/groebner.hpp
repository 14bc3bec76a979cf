#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arcseries/monomial_ideal.hpp"
#include "arcseries/polynomial.hpp"

namespace arcs {

struct DivisionResult {
    std::vector<Polynomial> quotients;  // one per divisor, in the given order
    Polynomial remainder;
};

// Multivariate division with the first matching divisor preferred:
//   f == sum_i quotients[i] * divisors[i] + remainder
// and no monomial of the remainder is divisible by any divisor's leading
// monomial.  All inputs must be weight homogeneous and share f's monomial
// order; divisors must be nonzero and free of weight-0 variables.
DivisionResult divide(const Polynomial& f,
                      const std::vector<Polynomial>& divisors);

// S(f, g) = (lcm / lt f) f - (lcm / lt g) g  with lcm = lcm(lm f, lm g).
// Weight-0 variables are allowed here.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

// A Groebner basis of the generated ideal, valid through the stated weight:
// every S-polynomial whose lcm weighs at most weight_bound reduces to zero.
// Elements are monic, minimal, tail-reduced, and sorted by (weight, leading
// monomial ascending), so the result is a canonical function of the input
// ideal, the bound, and the order.
struct TruncatedBasis {
    std::vector<Polynomial> elements;
    std::uint32_t weight_bound = 0;
    MonomialOrder order;
};

// Buchberger's algorithm with pairs processed in ascending (lcm weight, lcm)
// order and pairs heavier than the bound discarded, which is sound because
// weight homogeneity confines their S-polynomials to weights above the
// bound.  Generators must be weight homogeneous with variables of weight
// >= 1; zero generators are ignored.
TruncatedBasis buchberger_truncated(const std::vector<Polynomial>& generators,
                                    std::uint32_t weight_bound,
                                    const MonomialOrder& order = {});

MonomialIdeal leading_ideal(const TruncatedBasis& basis);

// Cache round trip.  The JSON object stores the hash of the ideal
// description it was computed from, the bound, the order tag, and the
// canonical text of each element; loading reproduces the basis exactly.
struct StoredBasis {
    std::string spec_hash;
    TruncatedBasis basis;
};

std::string basis_to_json(const TruncatedBasis& basis,
                          const std::string& spec_hash);
StoredBasis basis_from_json(const std::string& text);

}  // namespace arcs
