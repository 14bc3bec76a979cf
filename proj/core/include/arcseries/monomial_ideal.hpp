#pragma once

#include <vector>

#include "arcseries/monomial.hpp"
#include "arcseries/monomial_order.hpp"

namespace arcs {

// A monomial ideal kept as its unique minimal generating set: no generator
// divides another, generators sorted by (weight, revlex tie) ascending.
// No generators is the zero ideal; the single generator 1 is the unit ideal.
class MonomialIdeal {
public:
    MonomialIdeal() = default;
    explicit MonomialIdeal(std::vector<Monomial> generators);

    const std::vector<Monomial>& generators() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return !gens_.empty() && gens_.front().is_one(); }

    // divisibility membership of a monomial
    bool contains(const Monomial& m) const;

    // I + (m)
    MonomialIdeal plus(const Monomial& m) const;
    // I : m  =  ({ g / gcd(g, m) })
    MonomialIdeal colon(const Monomial& m) const;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

    // canonical generator comparison: weight first, then the revlex tie
    static bool canonical_less(const Monomial& a, const Monomial& b);

private:
    void minimalize();
    std::vector<Monomial> gens_;
};

}  // namespace arcs
