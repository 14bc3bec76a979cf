#include "arcseries/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>
#include <stdexcept>

#include "arcseries/arc_ideals.hpp"
#include "arcseries/groebner.hpp"
#include "arcseries/partitions.hpp"
#include "arcseries/poly_text.hpp"
#include "arcseries/rr_recursion.hpp"
#include "arcseries/series.hpp"

namespace arcs {

namespace {

struct Checker {
    bool ok = true;
    std::string failures;
    int checks = 0;

    void expect(bool cond, const std::string& what) {
        ++checks;
        if (cond) return;
        ok = false;
        if (!failures.empty()) failures += "; ";
        if (failures.size() < 400) failures += what;
    }
};

template <typename Body>
CheckResult timed(const std::string& name, const std::string& on_pass,
                  Body&& body) {
    CheckResult r;
    r.name = name;
    Checker c;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(c);
        r.ok = c.ok;
        r.detail = c.ok ? on_pass + " (" + std::to_string(c.checks) + " checks)"
                        : c.failures;
    } catch (const std::exception& e) {
        r.ok = false;
        r.detail = c.failures.empty() ? std::string("exception: ") + e.what()
                                      : c.failures + "; exception: " + e.what();
    }
    r.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    return r;
}

Monomial mono_of(std::initializer_list<std::pair<std::uint32_t, std::uint32_t>>
                     level_exp) {
    Monomial m;
    for (auto [level, e] : level_exp) m = m * Monomial::var(yvar(level), e);
    return m;
}

std::vector<VarId> level_vars(std::uint32_t lo, std::uint32_t hi) {
    std::vector<VarId> vars;
    for (std::uint32_t i = lo; i <= hi; ++i) vars.push_back(yvar(i));
    return vars;
}

// ---------------------------------------------------------------- criterion 1

CheckResult check_nfold() {
    return timed("nfold", "Groebner and staircase routes match the product",
                 [](Checker& c) {
        for (std::uint32_t n = 2; n <= 6; ++n) {
            TruncatedSeries lhs = hp_focussed(nfold_spec(n, 12), 12);
            TruncatedSeries rhs = closed_form_hp(NFold{n}, 12);
            c.expect(lhs == rhs,
                     "Groebner route off the product at n=" + std::to_string(n));
        }
        for (std::uint32_t n = 2; n <= 6; ++n) {
            TruncatedSeries lhs = standard_monomial_series(
                nfold_leading_ideal(n, 300), level_vars(1, 300), 300);
            TruncatedSeries rhs = closed_form_hp(NFold{n}, 300);
            c.expect(lhs == rhs, "staircase count off the product at n=" +
                                     std::to_string(n));
        }
    });
}

// ---------------------------------------------------------------- criterion 2

CheckResult check_gordon() {
    return timed("gordon", "window counts equal residue counts",
                 [](Checker& c) {
        for (std::uint32_t k = 2; k <= 8; ++k) {
            GordonReport r = gordon_check(k, 500);
            c.expect(r.ok, "count mismatch at k=" + std::to_string(k) +
                               ", n=" +
                               (r.first_failure
                                    ? std::to_string(*r.first_failure)
                                    : std::string("?")));
        }
        // the two equivalent finiteness conditions, against raw enumeration
        for (std::uint32_t k = 2; k <= 8; ++k) {
            std::vector<Int> dp = count_gordon_upto(60, k);
            for (std::uint32_t m = 0; m <= 60; ++m) {
                Int window = count_by_enumeration(m, MultiplicityWindow{k});
                c.expect(window == dp[m],
                         "window enumeration off at k=" + std::to_string(k) +
                             ", m=" + std::to_string(m));
                Int gap = count_by_enumeration(m, GordonGap{k});
                c.expect(gap == dp[m],
                         "gap enumeration off at k=" + std::to_string(k) +
                             ", m=" + std::to_string(m));
            }
        }
    });
}

// ---------------------------------------------------------------- criterion 3

CheckResult check_rr() {
    return timed("rogers-ramanujan", "sum side equals product side at t^500",
                 [](Checker& c) {
        c.expect(rr_sum_side(500) == restricted_product(500, 5, {0, 2, 3}),
                 "sum and product sides disagree");
    });
}

// ---------------------------------------------------------------- criterion 4

CheckResult check_andrews_baxter() {
    return timed("andrews-baxter", "recurrences converge to the product",
                 [](Checker& c) {
        AndrewsBaxter ab = andrews_baxter(60, 50);
        c.expect(ab.converged, "d_max=60 should stabilise truncation 50");
        c.expect(ab.limit() == restricted_product(50, 5, {0, 2, 3}),
                 "limit is not the product");
        for (std::uint32_t d = 3; d <= 60; ++d) {
            std::uint32_t low = std::min<std::uint32_t>(d - 2, 51);
            bool flat = true;
            for (std::uint32_t m = 0; m < low && m <= 50; ++m)
                if (ab.B[d][m] != 0) flat = false;
            c.expect(flat, "B_" + std::to_string(d) +
                               " fails to vanish to order d-2");
        }
        TruncatedSeries a3 = TruncatedSeries::one(50);
        a3.coeff(1) = 1;
        c.expect(ab.A[3] == a3, "A_3 != 1 + t");
        TruncatedSeries a4 = a3;
        a4.coeff(2) = 1;
        c.expect(ab.A[4] == a4, "A_4 != 1 + t + t^2");
        // the invariant the recurrences preserve, against the h series
        AndrewsBaxter ab2 = andrews_baxter(21, 60);
        TruncatedSeries h1 = h_series(1, 60);
        for (std::uint32_t d : {3u, 5u, 10u, 20u}) {
            TruncatedSeries rhs = ab2.A[d] * h_series(d, 60) +
                                  ab2.B[d + 1] * h_series(d + 1, 60);
            c.expect(h1 == rhs,
                     "h(1) != A_d h(d) + B_{d+1} h(d+1) at d=" +
                         std::to_string(d));
        }
    });
}

// ---------------------------------------------------------------- criterion 5

CheckResult check_recursion() {
    return timed("recursion", "h(d) = h(d+1) + t^d h(d+2) and ideal splits hold",
                 [](Checker& c) {
        for (std::uint32_t d = 1; d <= 20; ++d) {
            TruncatedSeries lhs = h_series(d, 100);
            TruncatedSeries rhs =
                h_series(d + 1, 100) + h_series(d + 2, 100).shifted(d);
            c.expect(lhs == rhs, "series recursion off at d=" + std::to_string(d));
        }
        for (std::uint32_t d = 1; d <= 10; ++d) {
            Monomial yd = Monomial::var(yvar(d));
            Monomial yd1 = Monomial::var(yvar(d + 1));
            MonomialIdeal sum_lhs = staircase_ideal(d, 30).plus(yd);
            MonomialIdeal sum_rhs = staircase_ideal(d + 1, 30).plus(yd);
            c.expect(sum_lhs == sum_rhs,
                     "(I_d, y_d) != (y_d, I_{d+1}) at d=" + std::to_string(d));
            MonomialIdeal colon_lhs = staircase_ideal(d, 30).colon(yd);
            MonomialIdeal colon_rhs =
                staircase_ideal(d + 2, 30).plus(yd).plus(yd1);
            c.expect(colon_lhs == colon_rhs,
                     "(I_d : y_d) != (y_d, y_{d+1}, I_{d+2}) at d=" +
                         std::to_string(d));
        }
    });
}

// ---------------------------------------------------------------- criterion 6

CheckResult check_generators() {
    return timed("generators", "derivative closed forms and identities hold",
                 [](Checker& c) {
        // F_generator cross-checks the closed form against derivation
        for (std::uint32_t n = 2; n <= 6; ++n)
            for (std::uint32_t i = 0; i <= 20; ++i) {
                Polynomial F = F_generator(n, i);
                c.expect(!F.is_zero(), "F should never vanish");
            }
        for (std::uint32_t n = 2; n <= 6; ++n)
            for (std::uint32_t i = 0; i < n; ++i)
                c.expect(f_generator(n, i).is_zero(),
                         "focussed jet should vanish below the multiplicity");
        static const char* kQuartic[8] = {
            "y0^4",
            "4*y0^3*y1",
            "12*y0^2*y1^2 + 4*y0^3*y2",
            "24*y0*y1^3 + 36*y0^2*y1*y2 + 4*y0^3*y3",
            "24*y1^4 + 144*y0*y1^2*y2 + 36*y0^2*y2^2 + 48*y0^2*y1*y3 + "
            "4*y0^3*y4",
            "240*y1^3*y2 + 360*y0*y1*y2^2 + 240*y0*y1^2*y3 + 120*y0^2*y2*y3 + "
            "60*y0^2*y1*y4 + 4*y0^3*y5",
            "1080*y1^2*y2^2 + 360*y0*y2^3 + 480*y1^3*y3 + 1440*y0*y1*y2*y3 + "
            "120*y0^2*y3^2 + 360*y0*y1^2*y4 + 180*y0^2*y2*y4 + 72*y0^2*y1*y5 + "
            "4*y0^3*y6",
            "2520*y1*y2^3 + 5040*y1^2*y2*y3 + 2520*y0*y2^2*y3 + "
            "1680*y0*y1*y3^2 + 840*y1^3*y4 + 2520*y0*y1*y2*y4 + "
            "420*y0^2*y3*y4 + 504*y0*y1^2*y5 + 252*y0^2*y2*y5 + "
            "84*y0^2*y1*y6 + 4*y0^3*y7"};
        for (std::uint32_t i = 0; i <= 7; ++i)
            c.expect(to_string(F_generator(4, i)) == kQuartic[i],
                     "quartic derivative " + std::to_string(i) +
                         " has the wrong canonical text");
        // low-weight syzygies of the quartic's derivatives
        std::vector<Polynomial> F;
        for (std::uint32_t i = 0; i <= 5; ++i) F.push_back(F_generator(4, i));
        auto y = [](std::uint32_t level) { return Monomial::var(yvar(level)); };
        Rational one(1);
        c.expect(F[0].times(Rational(4), y(1)) - F[1].times(one, y(0)) ==
                     Polynomial::zero({}),
                 "n y1 F0 - y0 F1 != 0");
        c.expect(s_polynomial(F[1], F[2]).scaled(Rational(12)) ==
                     -F[0].times(Rational(4), y(2)),
                 "12 S(F1,F2) != -4 y2 F0");
        c.expect(s_polynomial(F[2], F[3]).scaled(Rational(24)) ==
                     -F[0].times(Rational(4), y(3)) -
                         F[1].times(Rational(7), y(2)),
                 "24 S(F2,F3) != -4 y3 F0 - 7 y2 F1");
        c.expect(s_polynomial(F[3], F[5]).scaled(Rational(240)) ==
                     -F[0].times(Rational(4), y(5)) -
                         F[1].times(Rational(15), y(4)) -
                         F[2].times(Rational(20), y(3)),
                 "240 S(F3,F5) != -4 y5 F0 - 15 y4 F1 - 20 y3 F2");
    });
}

// ---------------------------------------------------------------- criterion 7

CheckResult check_leading_terms() {
    return timed("leading-terms", "leading term closed forms match",
                 [](Checker& c) {
        for (std::uint32_t n = 2; n <= 6; ++n) {
            for (std::uint32_t i = 0; i <= 20; ++i) {
                Term expected = leading_term_closed_form(n, i);
                Term got = F_generator(n, i).leading_term();
                c.expect(got == expected, "lt(F) off at n=" + std::to_string(n) +
                                              ", i=" + std::to_string(i));
            }
            for (std::uint32_t i = n; i <= 40; ++i) {
                Term expected = leading_term_closed_form(n, i);
                Term got = f_generator(n, i).leading_term();
                c.expect(got == expected, "lt(f) off at n=" + std::to_string(n) +
                                              ", i=" + std::to_string(i));
            }
        }
        // leading monomials of the two S-polynomial families
        for (std::uint32_t n = 2; n <= 5; ++n) {
            for (std::uint32_t q = 1; q <= 3; ++q) {
                for (std::uint32_t r = 0; r < n; ++r) {
                    std::uint32_t i = q * n + r;
                    std::string at = " at n=" + std::to_string(n) +
                                     ", q=" + std::to_string(q) +
                                     ", r=" + std::to_string(r);
                    Polynomial fi = f_generator(n, i);
                    Polynomial fnext = f_generator(n, i + 1);
                    if (q == 1 && r == 0) {
                        c.expect(s_polynomial(fi, fnext).is_zero(),
                                 "S(f_n, f_{n+1}) != 0" + at);
                    } else {
                        Monomial expected;
                        if (q >= 2 && r != n - 1)
                            expected = mono_of(
                                {{q - 1, 1}, {q, n - r - 2}, {q + 1, r + 2}});
                        else if (q >= 2)
                            expected =
                                mono_of({{q, 2}, {q + 1, n - 2}, {q + 2, 1}});
                        else
                            expected = mono_of(
                                {{1, n - r + 1}, {2, r - 1}, {3, 1}});
                        c.expect(s_polynomial(fi, fnext).leading_monomial() ==
                                     expected,
                                 "adjacent S-pair lm off" + at);
                    }
                    if (r >= 1) {
                        std::uint32_t j = (q + 1) * n + (n - r);
                        Polynomial fj = f_generator(n, j);
                        Monomial expected;
                        if (q >= 2 && r != n - 1)
                            expected = mono_of({{q - 1, 1},
                                                {q, n - r - 2},
                                                {q + 1, r + 1},
                                                {q + 2, n - r}});
                        else if (q >= 2)
                            expected = mono_of(
                                {{q - 1, 1}, {q + 1, n - 2}, {q + 2, 2}});
                        else if (r != n - 1)
                            expected = mono_of({{1, n - r},
                                                {2, r + 1},
                                                {3, n - r - 2},
                                                {4, 1}});
                        else
                            expected = mono_of({{1, 2}, {2, n - 2}, {4, 1}});
                        c.expect(s_polynomial(fi, fj).leading_monomial() ==
                                     expected,
                                 "crossing S-pair lm off" + at);
                    }
                }
            }
        }
    });
}

// ---------------------------------------------------------------- criterion 8

CheckResult check_geometry() {
    return timed("geometry", "surface and hypersurface series match closed forms",
                 [](Checker& c) {
        auto spec_of = [](std::uint32_t coords, const std::string& gen,
                          std::uint32_t bound) {
            IdealSpec spec;
            spec.coords = coords;
            if (!gen.empty()) spec.base_generators.push_back(parse_polynomial(gen));
            spec.focussed = true;
            spec.weight_bound = bound;
            return spec;
        };
        c.expect(hp_focussed(spec_of(3, "x1_0*x2_0 - x3_0^2", 8), 8) ==
                     closed_form_hp(RationalDoublePoint{}, 8),
                 "quadric cone series off its closed form");
        for (std::uint32_t d = 1; d <= 3; ++d) {
            c.expect(hp_focussed(spec_of(d + 1, "x1_0", 8), 8) ==
                         closed_form_hp(Smooth{d}, 8),
                     "hyperplane series off the smooth form at d=" +
                         std::to_string(d));
            for (std::uint32_t e = 1; e <= d + 1; ++e) {
                std::string gen = "x1_0";
                for (std::uint32_t s = 2; s <= e; ++s)
                    gen += "*x" + std::to_string(s) + "_0";
                c.expect(hp_focussed(spec_of(d + 1, gen, 8), 8) ==
                             closed_form_hp(NormalCrossings{d, e}, 8),
                         "crossing series off at d=" + std::to_string(d) +
                             ", e=" + std::to_string(e));
            }
        }
        TruncatedSeries cusp = hp_focussed(spec_of(2, "x1_0^3 + x2_0^4", 6), 6);
        auto probe = multiplicity_probe(cusp, 2);
        c.expect(probe.has_value() && probe->index == 3 && probe->deficit == 1,
                 "multiplicity probe misses the triple point");
        TruncatedSeries plane = closed_form_hp(Smooth{2}, 6);
        c.expect(!multiplicity_probe(plane, 2).has_value(),
                 "smooth series should show no deviation");
    });
}

// ---------------------------------------------------------------- criterion 9

CheckResult check_order_independence() {
    return timed("order-independence", "both weight orders give one series",
                 [](Checker& c) {
        MonomialOrder revlex{};
        MonomialOrder lex{MonomialOrder::Tiebreak::lex};
        for (std::uint32_t n = 2; n <= 3; ++n) {
            IdealSpec spec = nfold_spec(n, 10);
            c.expect(hp_focussed(spec, 10, revlex) ==
                         hp_focussed(spec, 10, lex),
                     "series depends on the tie-break at n=" +
                         std::to_string(n));
        }
    });
}

// --------------------------------------------------------------- criterion 10

Monomial random_monomial_of_weight(std::mt19937_64& rng, std::uint32_t weight,
                                   std::uint32_t max_level,
                                   std::uint32_t coords) {
    Monomial m;
    std::uint32_t left = weight;
    std::uniform_int_distribution<std::uint32_t> coord(1, coords);
    while (left > 0) {
        std::uniform_int_distribution<std::uint32_t> level(
            1, std::min(left, max_level));
        std::uint32_t l = level(rng);
        m = m * Monomial::var(VarId{coord(rng), l});
        left -= l;
    }
    return m;
}

Polynomial random_homogeneous(std::mt19937_64& rng, std::uint32_t weight,
                              const MonomialOrder& order) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<std::uint32_t> den(1, 4);
    std::uniform_int_distribution<std::uint32_t> nterms(1, 4);
    std::vector<Term> terms;
    std::uint32_t want = nterms(rng);
    for (std::uint32_t t = 0; t < want; ++t) {
        int n = num(rng);
        if (n == 0) n = 1;
        terms.push_back(Term{make_rational(n, den(rng)),
                             random_monomial_of_weight(rng, weight, 4, 2)});
    }
    return Polynomial(std::move(terms), order);
}

Polynomial random_any(std::mt19937_64& rng, const MonomialOrder& order) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<std::uint32_t> den(1, 4);
    std::uniform_int_distribution<std::uint32_t> nterms(0, 4);
    std::uniform_int_distribution<std::uint32_t> nvars(0, 3);
    std::uniform_int_distribution<std::uint32_t> level(0, 3);
    std::uniform_int_distribution<std::uint32_t> coord(1, 2);
    std::uniform_int_distribution<std::uint32_t> exp(1, 3);
    std::vector<Term> terms;
    std::uint32_t want = nterms(rng);
    for (std::uint32_t t = 0; t < want; ++t) {
        int n = num(rng);
        if (n == 0) n = 2;
        Monomial m;
        std::uint32_t vars = nvars(rng);
        for (std::uint32_t v = 0; v < vars; ++v)
            m = m * Monomial::var(VarId{coord(rng), level(rng)}, exp(rng));
        terms.push_back(Term{make_rational(n, den(rng)), m});
    }
    return Polynomial(std::move(terms), order);
}

CheckResult check_properties() {
    return timed("properties", "randomised algebraic laws hold",
                 [](Checker& c) {
        MonomialOrder order{};
        {
            // division reassembles the dividend and leaves a reduced remainder
            std::mt19937_64 rng(0x5eed0001ull);
            std::uniform_int_distribution<std::uint32_t> wdist(2, 7);
            for (int rep = 0; rep < 200; ++rep) {
                std::uint32_t w = wdist(rng);
                Polynomial f = random_homogeneous(rng, w, order);
                std::vector<Polynomial> divisors;
                std::uniform_int_distribution<std::uint32_t> nd(1, 3);
                std::uint32_t want = nd(rng);
                while (divisors.size() < want) {
                    std::uniform_int_distribution<std::uint32_t> dw(2, w);
                    Polynomial d = random_homogeneous(rng, dw(rng), order);
                    if (!d.is_zero()) divisors.push_back(d);
                }
                DivisionResult res = divide(f, divisors);
                Polynomial sum = res.remainder;
                for (std::size_t i = 0; i < divisors.size(); ++i)
                    sum = sum + res.quotients[i] * divisors[i];
                c.expect(sum == f, "division fails to reassemble");
                bool reduced = true;
                for (const Term& t : res.remainder.terms())
                    for (const Polynomial& d : divisors)
                        if (d.leading_monomial().divides(t.mono)) reduced = false;
                c.expect(reduced, "remainder is not fully reduced");
            }
        }
        {
            // every in-bound S-pair of an emitted basis reduces to zero
            std::mt19937_64 rng(0x5eed0002ull);
            int pairs = 0;
            std::vector<std::vector<Polynomial>> inputs;
            for (std::uint32_t n = 2; n <= 4; ++n)
                inputs.push_back(jet_generators(nfold_spec(n, 12)));
            for (int rep = 0; rep < 40; ++rep) {
                std::vector<Polynomial> gens;
                std::uniform_int_distribution<std::uint32_t> wdist(2, 5);
                for (int g = 0; g < 3; ++g)
                    gens.push_back(random_homogeneous(rng, wdist(rng), order));
                inputs.push_back(gens);
            }
            for (const auto& gens : inputs) {
                TruncatedBasis basis = buchberger_truncated(gens, 12, order);
                const auto& el = basis.elements;
                for (std::size_t a = 0; a < el.size(); ++a)
                    for (std::size_t b = a + 1; b < el.size(); ++b) {
                        Monomial lcm = Monomial::lcm(el[a].leading_monomial(),
                                                     el[b].leading_monomial());
                        if (lcm.weight() > basis.weight_bound) continue;
                        Polynomial s = s_polynomial(el[a], el[b]);
                        if (!s.is_zero())
                            c.expect(divide(s, el).remainder.is_zero(),
                                     "an in-bound S-pair fails to reduce");
                        ++pairs;
                    }
            }
            c.expect(pairs >= 200, "too few S-pairs exercised: " +
                                       std::to_string(pairs));
        }
        {
            // the derivation obeys the Leibniz rule
            std::mt19937_64 rng(0x5eed0003ull);
            for (int rep = 0; rep < 200; ++rep) {
                Polynomial f = random_any(rng, order);
                Polynomial g = random_any(rng, order);
                c.expect(derive(f * g) == derive(f) * g + f * derive(g),
                         "Leibniz rule fails");
            }
        }
        {
            // canonical text round-trips exactly
            std::mt19937_64 rng(0x5eed0004ull);
            for (int rep = 0; rep < 200; ++rep) {
                MonomialOrder o = (rep % 2) == 0
                                      ? MonomialOrder{}
                                      : MonomialOrder{MonomialOrder::Tiebreak::lex};
                Polynomial f = random_any(rng, o);
                c.expect(parse_polynomial(to_string(f), o) == f,
                         "printed polynomial fails to parse back");
            }
        }
    });
}

}  // namespace

std::vector<std::string> verify_suite_names() {
    return {"nfold",      "gordon",        "rogers-ramanujan",
            "andrews-baxter", "recursion", "generators",
            "leading-terms",  "geometry",  "order-independence",
            "properties"};
}

std::vector<CheckResult> run_verify_suite(const std::string& suite) {
    std::vector<CheckResult> out;
    auto want = [&](const char* name) {
        return suite == "all" || suite == name;
    };
    if (want("nfold")) out.push_back(check_nfold());
    if (want("gordon")) out.push_back(check_gordon());
    if (want("rogers-ramanujan")) out.push_back(check_rr());
    if (want("andrews-baxter")) out.push_back(check_andrews_baxter());
    if (want("recursion")) out.push_back(check_recursion());
    if (want("generators")) out.push_back(check_generators());
    if (want("leading-terms")) out.push_back(check_leading_terms());
    if (want("geometry")) out.push_back(check_geometry());
    if (want("order-independence")) out.push_back(check_order_independence());
    if (want("properties")) out.push_back(check_properties());
    if (out.empty())
        throw std::invalid_argument("unknown suite: " + suite);
    return out;
}

}  // namespace arcs
