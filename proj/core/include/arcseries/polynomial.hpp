#pragma once

#include <cstdint>
#include <vector>

#include "arcseries/monomial.hpp"
#include "arcseries/monomial_order.hpp"
#include "arcseries/rational.hpp"

namespace arcs {

struct Term {
    Rational coef;
    Monomial mono;
    friend bool operator==(const Term& a, const Term& b) {
        return a.coef == b.coef && a.mono == b.mono;
    }
};

// Exact multivariate polynomial over the jet variables.  Terms are kept
// strictly descending under the carried order with nonzero coefficients;
// the zero polynomial has no terms.  Binary operations require both
// operands to carry the same order and throw otherwise.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(MonomialOrder order) : order_(order) {}
    explicit Polynomial(std::vector<Term> terms, MonomialOrder order = {});

    static Polynomial zero(MonomialOrder order = {}) { return Polynomial(order); }
    static Polynomial constant(Rational c, MonomialOrder order = {});
    static Polynomial single(Rational c, Monomial m, MonomialOrder order = {});

    const std::vector<Term>& terms() const { return terms_; }
    MonomialOrder order() const { return order_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    const Term& leading_term() const;  // throws std::domain_error on zero
    const Monomial& leading_monomial() const { return leading_term().mono; }
    const Rational& leading_coefficient() const { return leading_term().coef; }

    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial scaled(const Rational& c) const;
    // c * m * (*this); multiplying every monomial by a fixed one preserves
    // the term order.
    Polynomial times(const Rational& c, const Monomial& m) const;
    Polynomial monic() const;  // throws std::domain_error on zero
    Polynomial with_order(MonomialOrder order) const;

    std::uint64_t weight() const;  // largest term weight, 0 for the zero polynomial
    std::uint64_t degree() const;
    bool weight_homogeneous() const;  // vacuously true for the zero polynomial
    bool has_level0() const;

    bool operator==(const Polynomial& rhs) const;

private:
    void normalize();
    std::vector<Term> terms_;
    MonomialOrder order_{};
};

// Jet derivation: k-linear, Leibniz, sends x_s^(i) to x_s^(i+1).  Raises
// the weight of every monomial by exactly 1.
Polynomial derive(const Polynomial& p);

// Substitution of 0 for each listed variable: drops every term whose
// monomial involves one of them.
Polynomial substitute_zero(const Polynomial& p, const std::vector<VarId>& vars);

// Substitution of 0 for every level-0 variable.
Polynomial substitute_level0(const Polynomial& p);

}  // namespace arcs
