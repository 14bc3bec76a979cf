#pragma once

#include <string>

#include "arcseries/monomial.hpp"

namespace arcs {

// Weight-graded monomial orders.  The weight decides first; inside a graded
// piece a tie-break decides along the (level, coord) ascending linearisation:
//   revlex: the monomial with the smaller exponent on the highest differing
//           variable is the larger one,
//   lex:    the monomial with the larger exponent on the lowest differing
//           variable is the larger one.
// Both are total and multiplicative, and on subrings generated by variables
// of level >= 1 the weight makes them global.  Level-0 variables have weight
// 0, so there the comparisons are still total but 1 is not minimal; leading
// terms stay well defined, Groebner computations are restricted to
// level >= 1 inputs by their own validation.
struct MonomialOrder {
    enum class Tiebreak { revlex, lex };
    Tiebreak tiebreak = Tiebreak::revlex;

    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

// -1, 0, +1 for a < b, a == b, a > b.
int compare(const Monomial& a, const Monomial& b, MonomialOrder order = {});

inline bool order_less(const Monomial& a, const Monomial& b, MonomialOrder order = {}) {
    return compare(a, b, order) < 0;
}

// "weight-revlex" / "weight-lex", the tags used by cache files.
std::string order_tag(MonomialOrder order);
MonomialOrder order_from_tag(const std::string& tag);

}  // namespace arcs
