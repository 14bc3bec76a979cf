#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "arcseries/groebner.hpp"
#include "arcseries/monomial_ideal.hpp"
#include "arcseries/polynomial.hpp"
#include "arcseries/series.hpp"

namespace arcs {

// Description of a jet-space computation: base equations in the weight-0
// coordinates x1_0 .. x<coords>_0, iterated total derivatives up to
// weight_bound, and optionally the focussed quotient (weight-0 coordinates
// set to zero).
struct IdealSpec {
    std::uint32_t coords = 1;
    std::vector<Polynomial> base_generators;  // carried in the default order
    bool focussed = true;
    std::uint32_t weight_bound = 0;
};

std::string ideal_spec_to_json(const IdealSpec& spec);
IdealSpec ideal_spec_from_json(const std::string& text);

// Stable content hash of (canonical spec JSON, order tag): 16 hex digits.
std::string spec_hash(const IdealSpec& spec, const MonomialOrder& order);

// Partial Bell polynomial in y1, y2, ...: the sum over partitions of i with
// exactly j parts, the coefficient counting the set partitions of {1..i}
// with that block-size profile.  Zero when j > i.
Polynomial bell(std::uint32_t i, std::uint32_t j);

// i-th total derivative of y0^n, through the closed form
//   F_i = sum_{j=0}^{n-1} (n!/j!) B_{i,n-j}(y1,...) y0^j
// cross-checked internally against iterated derivation.
Polynomial F_generator(std::uint32_t n, std::uint32_t i);

// F_i with y0 = 0: zero for i < n, and n! B_{i,n}(y1,...) for i >= n.
Polynomial f_generator(std::uint32_t n, std::uint32_t i);

// Leading term of F_i (and of f_i when i >= n) under the default order:
// writing i = qn + r with 0 <= r < n,
//   binom(n,r) i! / (q!^{n-r} (q+1)!^r) * y_q^{n-r} y_{q+1}^r.
Term leading_term_closed_form(std::uint32_t n, std::uint32_t i);

// Derivatives of every base generator up to the weight bound, focussed if
// the spec says so, zeros dropped, sorted by (weight, leading monomial).
std::vector<Polynomial> jet_generators(const IdealSpec& spec,
                                       const MonomialOrder& order = {});

// Weighted Hilbert series of the focussed jet algebra through t^truncation,
// via a truncated Groebner basis and its staircase.  Requires a focussed
// spec and truncation <= weight_bound.
TruncatedSeries hp_focussed(const IdealSpec& spec, std::uint32_t truncation,
                            const MonomialOrder& order = {});

// As above but from a precomputed basis (e.g. loaded from cache).
TruncatedSeries hp_from_basis(const IdealSpec& spec,
                              const TruncatedBasis& basis,
                              std::uint32_t truncation);

// Closed forms the Groebner route is compared against.
struct Smooth {
    std::uint32_t dim = 1;  // H^dim with H = prod 1/(1-t^i)
};
struct NFold {
    std::uint32_t n = 2;  // parts not 0, n, n+1 mod 2n+1
};
struct RationalDoublePoint {};  // (1-t)^{-3} (prod_{i>=2} 1/(1-t^i))^2
struct NormalCrossings {
    std::uint32_t dim = 2;      // ambient dimension is dim + 1
    std::uint32_t factors = 2;  // 1 <= factors <= dim + 1
};
struct CanonicalMaxMult {
    std::uint32_t n = 2;  // (prod_{i<=n-2})^n (prod_{i>=n-1})^{n-1}
};
using ClosedFormKind = std::variant<Smooth, NFold, RationalDoublePoint,
                                    NormalCrossings, CanonicalMaxMult>;

TruncatedSeries closed_form_hp(const ClosedFormKind& kind,
                               std::uint32_t truncation);

// First index where the series falls away from the smooth d-dimensional one,
// with the size of the drop; empty when they agree through the truncation.
struct MultiplicityProbe {
    std::uint32_t index = 0;
    Int deficit;
};
std::optional<MultiplicityProbe> multiplicity_probe(const TruncatedSeries& s,
                                                    std::uint32_t dim);

// The n-fold point y0^n = 0 on a line.
IdealSpec nfold_spec(std::uint32_t n, std::uint32_t weight_bound);

// Its staircase: y_q^{n-r} y_{q+1}^r for q >= 1, 0 <= r < n, restricted to
// weight qn + r <= max_weight.
MonomialIdeal nfold_leading_ideal(std::uint32_t n, std::uint32_t max_weight);

}  // namespace arcs
