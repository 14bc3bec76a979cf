#include <doctest.h>

#include <stdexcept>

#include "arcseries/arc_ideals.hpp"
#include "arcseries/groebner.hpp"
#include "arcseries/poly_text.hpp"

using namespace arcs;

namespace {

Polynomial parse(const char* text, MonomialOrder order = {}) {
    return parse_polynomial(text, order);
}

}  // namespace

TEST_CASE("division identity and remainder irreducibility") {
    {
        DivisionResult r = divide(parse("y1^3 + y1*y2"), {parse("y1*y2")});
        CHECK(to_string(r.quotients[0]) == "1");
        CHECK(to_string(r.remainder) == "y1^3");
    }
    {
        // first matching divisor wins
        DivisionResult r =
            divide(parse("y1^2*y2^2"), {parse("y1*y2"), parse("y2^2")});
        CHECK(to_string(r.quotients[0]) == "y1*y2");
        CHECK(r.quotients[1].is_zero());
        CHECK(r.remainder.is_zero());
    }
    {
        DivisionResult r = divide(parse("3*y1^3 + 2*y1*y2"), {parse("3*y1^2")});
        CHECK(to_string(r.quotients[0]) == "y1");
        CHECK(to_string(r.remainder) == "2*y1*y2");
    }
    // the identity f = sum q_i d_i + r on a nontrivial jet-algebra input
    std::vector<Polynomial> divisors = jet_generators(nfold_spec(3, 9));
    Polynomial f = divisors[1] * divisors[2] +
                   divisors[0].times(Rational(7), Monomial::var(yvar(2), 3));
    DivisionResult r = divide(f, divisors);
    Polynomial rebuilt = r.remainder;
    for (std::size_t i = 0; i < divisors.size(); ++i)
        rebuilt = rebuilt + r.quotients[i] * divisors[i];
    CHECK(rebuilt == f);
    for (const Term& t : r.remainder.terms())
        for (const Polynomial& d : divisors)
            CHECK(!d.leading_term().mono.divides(t.mono));
}

TEST_CASE("division input validation") {
    CHECK_THROWS_AS(divide(parse("y1^2"), {parse("0")}), std::invalid_argument);
    CHECK_THROWS_AS(divide(parse("y1^2"), {parse("y1 + y2")}),
                    std::invalid_argument);
    CHECK_THROWS_AS(divide(parse("y1 + y2"), {parse("y1")}),
                    std::invalid_argument);
    CHECK_THROWS_AS(divide(parse("2*x1_1^2"), {parse("x1_0*x1_1")}),
                    std::invalid_argument);
    MonomialOrder lex{MonomialOrder::Tiebreak::lex};
    CHECK_THROWS_AS(divide(parse("y1^2"), {parse("y1", lex)}),
                    std::invalid_argument);
}

TEST_CASE("s-polynomials cancel leading terms") {
    Polynomial f3 = f_generator(2, 3);
    Polynomial f4 = f_generator(2, 4);
    CHECK(to_string(s_polynomial(f3, f4)) == "-4/3*y1^2*y3");
    CHECK(s_polynomial(f3, f3).is_zero());
    CHECK(s_polynomial(f4, f4.scaled(Rational(5))).is_zero());
    // antisymmetry up to sign
    CHECK(s_polynomial(f4, f3) == s_polynomial(f3, f4).scaled(Rational(-1)));
    CHECK_THROWS_AS(s_polynomial(parse("0"), f3), std::invalid_argument);
    // the lcm construction really cancels: S lives at the lcm weight
    Polynomial s = s_polynomial(f3, f4);
    CHECK(s.weight() == 5);
    CHECK(Monomial::lcm(f3.leading_term().mono, f4.leading_term().mono)
              .weight() == 5);
}

TEST_CASE("truncated basis of the double point matches the staircase") {
    std::vector<Polynomial> gens = jet_generators(nfold_spec(2, 8));
    TruncatedBasis basis = buchberger_truncated(gens, 8);
    CHECK(leading_ideal(basis) == nfold_leading_ideal(2, 8));
    CHECK(leading_ideal(basis).generators().size() == 7);
    // any S-pair inside the bound reduces to zero against the basis
    std::size_t exercised = 0;
    for (std::size_t i = 0; i < basis.elements.size(); ++i) {
        for (std::size_t j = i + 1; j < basis.elements.size(); ++j) {
            const Monomial& a = basis.elements[i].leading_term().mono;
            const Monomial& b = basis.elements[j].leading_term().mono;
            if (Monomial::lcm(a, b).weight() > basis.weight_bound) continue;
            Polynomial s =
                s_polynomial(basis.elements[i], basis.elements[j]);
            CHECK(divide(s, basis.elements).remainder.is_zero());
            ++exercised;
        }
    }
    CHECK(exercised >= 8);
    // minimality: no leading monomial divides another
    for (std::size_t i = 0; i < basis.elements.size(); ++i)
        for (std::size_t j = 0; j < basis.elements.size(); ++j)
            if (i != j)
                CHECK(!basis.elements[i].leading_term().mono.divides(
                    basis.elements[j].leading_term().mono));
    // monic, tail-reduced
    for (const Polynomial& p : basis.elements) {
        CHECK(p.leading_term().coef == Rational(1));
        for (std::size_t t = 1; t < p.terms().size(); ++t)
            for (const Polynomial& q : basis.elements)
                CHECK(!q.leading_term().mono.divides(p.terms()[t].mono));
    }
}

TEST_CASE("buchberger is deterministic and order-sorted") {
    std::vector<Polynomial> gens = jet_generators(nfold_spec(3, 9));
    TruncatedBasis a = buchberger_truncated(gens, 9);
    TruncatedBasis b = buchberger_truncated(gens, 9);
    CHECK(basis_to_json(a, "h") == basis_to_json(b, "h"));
    for (std::size_t i = 1; i < a.elements.size(); ++i) {
        const Polynomial& prev = a.elements[i - 1];
        const Polynomial& cur = a.elements[i];
        bool sorted =
            prev.weight() < cur.weight() ||
            (prev.weight() == cur.weight() &&
             compare(prev.leading_term().mono, cur.leading_term().mono,
                     a.order) < 0);
        CHECK(sorted);
    }
}

TEST_CASE("buchberger edge cases and validation") {
    TruncatedBasis empty = buchberger_truncated({}, 5);
    CHECK(empty.elements.empty());
    CHECK(leading_ideal(empty).generators().empty());
    TruncatedBasis zeros = buchberger_truncated({parse("0")}, 5);
    CHECK(zeros.elements.empty());
    // a principal ideal comes back as the monic generator alone
    TruncatedBasis principal = buchberger_truncated({parse("2*y1*y2")}, 9);
    CHECK(principal.elements.size() == 1);
    CHECK(to_string(principal.elements[0]) == "y1*y2");
    CHECK_THROWS_AS(buchberger_truncated({parse("y1 + y2")}, 5),
                    std::invalid_argument);
    CHECK_THROWS_AS(buchberger_truncated({parse("x1_0^2")}, 5),
                    std::invalid_argument);
}

TEST_CASE("basis cache round trip") {
    std::vector<Polynomial> gens = jet_generators(nfold_spec(2, 6));
    TruncatedBasis basis = buchberger_truncated(gens, 6);
    std::string text = basis_to_json(basis, "0123456789abcdef");
    StoredBasis loaded = basis_from_json(text);
    CHECK(loaded.spec_hash == "0123456789abcdef");
    CHECK(loaded.basis.weight_bound == 6);
    CHECK(order_tag(loaded.basis.order) == order_tag(basis.order));
    REQUIRE(loaded.basis.elements.size() == basis.elements.size());
    for (std::size_t i = 0; i < basis.elements.size(); ++i)
        CHECK(loaded.basis.elements[i] == basis.elements[i]);
    // and the round trip is textually stable
    CHECK(basis_to_json(loaded.basis, loaded.spec_hash) == text);
}

TEST_CASE("basis cache rejects malformed input") {
    CHECK_THROWS_AS(basis_from_json("not json"), std::invalid_argument);
    CHECK_THROWS_AS(basis_from_json("[1,2]"), std::invalid_argument);
    CHECK_THROWS_AS(basis_from_json("{\"specHash\":\"x\"}"),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        basis_from_json("{\"specHash\":\"x\",\"weightBound\":4,"
                        "\"order\":\"weight-revlex\",\"elements\":[3]}"),
        std::invalid_argument);
    CHECK_THROWS_AS(
        basis_from_json("{\"specHash\":\"x\",\"weightBound\":true,"
                        "\"order\":\"weight-revlex\",\"elements\":[]}"),
        std::invalid_argument);
}

TEST_CASE("lex tiebreak produces a different but equally valid basis") {
    MonomialOrder lex{MonomialOrder::Tiebreak::lex};
    IdealSpec spec = nfold_spec(2, 8);
    TruncatedBasis basis =
        buchberger_truncated(jet_generators(spec, lex), 8, lex);
    for (const Polynomial& p : basis.elements)
        CHECK(order_tag(p.order()) == "weight-lex");
    // the staircase itself moves with the order (under lex the second
    // derivative leads with y1*y3 instead of y2^2) ...
    CHECK(leading_ideal(basis) != nfold_leading_ideal(2, 8));
    // ... but the quotient series it counts does not
    CHECK(hp_from_basis(spec, basis, 8) == closed_form_hp(NFold{2}, 8));
}
