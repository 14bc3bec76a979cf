#include <doctest.h>

#include <cstdint>
#include <random>
#include <vector>

#include "arcseries/partitions.hpp"

using namespace arcs;

namespace {

Monomial y(std::uint32_t level, std::uint32_t e = 1) {
    return Monomial::var(yvar(level), e);
}

// Exhaustive oracle: every partition of m, generated without any of the
// library's pruning machinery.
void all_partitions(std::uint32_t m, std::uint32_t max_part,
                    std::vector<std::uint32_t>& stack,
                    std::vector<Partition>& out) {
    if (m == 0) {
        out.push_back(Partition{stack});
        return;
    }
    for (std::uint32_t p = std::min(max_part, m); p >= 1; --p) {
        stack.push_back(p);
        all_partitions(m - p, p, stack, out);
        stack.pop_back();
    }
}

std::vector<Partition> all_partitions(std::uint32_t m) {
    std::vector<Partition> out;
    std::vector<std::uint32_t> stack;
    all_partitions(m, m == 0 ? 1 : m, stack, out);
    return out;
}

// Weight-graded count of monomials outside the ideal, by brute enumeration
// of every exponent vector of weight <= truncation.
void count_standard(const std::vector<VarId>& vars, std::size_t idx,
                    Monomial acc, const MonomialIdeal& ideal,
                    std::uint32_t truncation, std::vector<Int>& out) {
    if (idx == vars.size()) {
        if (!ideal.contains(acc)) ++out[static_cast<std::size_t>(acc.weight())];
        return;
    }
    std::uint64_t w = weight(vars[idx]);
    for (std::uint32_t e = 0;; ++e) {
        Monomial m = e == 0 ? acc : acc * Monomial::var(vars[idx], e);
        if (m.weight() > truncation) break;
        count_standard(vars, idx + 1, m, ideal, truncation, out);
        if (w == 0) break;  // never happens here; guards the loop anyway
    }
}

std::vector<Int> count_standard(const MonomialIdeal& ideal,
                                const std::vector<VarId>& vars,
                                std::uint32_t truncation) {
    std::vector<Int> out(truncation + 1u);
    count_standard(vars, 0, Monomial(), ideal, truncation, out);
    return out;
}

}  // namespace

TEST_CASE("partition accessors") {
    Partition p{{4, 2, 2, 1}};
    CHECK(p.sum() == 9);
    CHECK(p.multiplicity(2) == 2);
    CHECK(p.multiplicity(3) == 0);
}

TEST_CASE("satisfies agrees with first principles") {
    CHECK(satisfies(Partition{{4, 1}}, Residues{5, {0, 2, 3}}));
    CHECK(!satisfies(Partition{{5, 4}}, Residues{5, {0, 2, 3}}));
    CHECK(satisfies(Partition{{4, 2}}, GordonGap{2}));
    CHECK(!satisfies(Partition{{4, 3}}, GordonGap{2}));
    CHECK(satisfies(Partition{{4, 4, 2}}, GordonGap{3}));
    CHECK(satisfies(Partition{{3, 1}}, MultiplicityWindow{2}));
    CHECK(!satisfies(Partition{{2, 1}}, MultiplicityWindow{2}));
    CHECK(!satisfies(Partition{{1, 1}}, MultiplicityWindow{2}));
    MonomialIdeal staircase({y(1, 2), y(1) * y(2), y(2, 2)});
    CHECK(satisfies(Partition{{3, 1}}, AvoidMonomialIdeal{staircase}));
    CHECK(!satisfies(Partition{{2, 2}}, AvoidMonomialIdeal{staircase}));
    CHECK(satisfies(Partition{{}}, MultiplicityWindow{2}));
    CHECK_THROWS_AS(satisfies(Partition{{1, 2}}, GordonGap{2}),
                    std::invalid_argument);
    CHECK_THROWS_AS(satisfies(Partition{{0}}, GordonGap{2}),
                    std::invalid_argument);
    CHECK_THROWS_AS(satisfies(Partition{{1}}, Residues{0, {}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(satisfies(Partition{{1}}, GordonGap{1}),
                    std::invalid_argument);
}

TEST_CASE("residue counting agrees with filtered enumeration") {
    for (std::uint32_t m = 0; m <= 25; ++m) {
        Residues all{1, {}};
        CHECK(count_residues(m, all) == Int(all_partitions(m).size()));
        Residues rr{5, {0, 2, 3}};
        Int expected = 0;
        for (const Partition& p : all_partitions(m))
            if (satisfies(p, rr)) ++expected;
        CHECK(count_residues(m, rr) == expected);
        Residues odd{2, {0}};
        expected = 0;
        for (const Partition& p : all_partitions(m))
            if (satisfies(p, odd)) ++expected;
        CHECK(count_residues(m, odd) == expected);
    }
}

TEST_CASE("window counting agrees with filtered enumeration") {
    for (std::uint32_t k = 2; k <= 4; ++k) {
        std::vector<Int> dp = count_gordon_upto(30, k);
        for (std::uint32_t m = 0; m <= 30; ++m) {
            Int window = 0, gap = 0;
            for (const Partition& p : all_partitions(m)) {
                if (satisfies(p, MultiplicityWindow{k})) ++window;
                if (satisfies(p, GordonGap{k})) ++gap;
            }
            CHECK(dp[m] == window);
            CHECK(dp[m] == gap);
            CHECK(count_gordon(m, k) == dp[m]);
        }
    }
    CHECK_THROWS_AS(count_gordon(5, 1), std::invalid_argument);
}

TEST_CASE("constrained enumeration matches filtering and stays ordered") {
    std::vector<PartitionConstraint> constraints;
    constraints.push_back(Residues{5, {0, 2, 3}});
    constraints.push_back(GordonGap{3});
    constraints.push_back(MultiplicityWindow{3});
    constraints.push_back(
        AvoidMonomialIdeal{MonomialIdeal({y(1, 2), y(1) * y(2), y(2, 2)})});
    for (const PartitionConstraint& c : constraints) {
        for (std::uint32_t m = 0; m <= 18; ++m) {
            std::vector<Partition> expected;
            for (const Partition& p : all_partitions(m))
                if (satisfies(p, c)) expected.push_back(p);
            std::vector<Partition> got = enumerate_partitions(m, c);
            CHECK(got == expected);  // same descending-lex generation order
            CHECK(count_by_enumeration(m, c) == Int(expected.size()));
        }
    }
}

TEST_CASE("frozen enumeration examples") {
    CHECK(enumerate_partitions(4, GordonGap{2}) ==
          std::vector<Partition>{Partition{{4}}, Partition{{3, 1}}});
    CHECK(enumerate_partitions(5, Residues{5, {0, 2, 3}}) ==
          std::vector<Partition>{Partition{{4, 1}},
                                 Partition{{1, 1, 1, 1, 1}}});
    CHECK(enumerate_partitions(0, GordonGap{2}) ==
          std::vector<Partition>{Partition{{}}});
    CHECK_THROWS_AS(enumerate_partitions(61, GordonGap{2}),
                    std::invalid_argument);
    CHECK_THROWS_AS(count_by_enumeration(61, GordonGap{2}),
                    std::invalid_argument);
}

TEST_CASE("the identity check and its report") {
    GordonReport r = gordon_check(2, 50);
    CHECK(r.ok);
    CHECK(!r.first_failure.has_value());
    CHECK(gordon_report_json(r) ==
          "{\"k\":2,\"maxN\":50,\"ok\":true,\"firstFailure\":null}");
    CHECK_THROWS_AS(gordon_check(1, 10), std::invalid_argument);
    // frozen small values
    CHECK(count_residues(4, Residues{5, {0, 2, 3}}) == 2);
    CHECK(count_residues(9, Residues{5, {0, 2, 3}}) == 5);
    CHECK(count_gordon(4, 2) == 2);
    CHECK(count_gordon(2, 2) == 1);
}

TEST_CASE("standard monomial series against brute enumeration") {
    // frozen cases first
    {
        // no relations: partitions into parts 1..5
        TruncatedSeries s = standard_monomial_series(
            MonomialIdeal(), {yvar(1), yvar(2), yvar(3), yvar(4), yvar(5)}, 5);
        std::vector<Int> c(s.coefficients());
        CHECK(c == std::vector<Int>{1, 1, 2, 3, 5, 7});
    }
    {
        // one dead variable
        TruncatedSeries s = standard_monomial_series(
            MonomialIdeal({y(1)}), {yvar(1), yvar(2), yvar(3), yvar(4), yvar(5)},
            5);
        CHECK(s.coefficients() == std::vector<Int>{1, 0, 1, 1, 2, 2});
    }
    {
        // unit ideal: the zero ring
        TruncatedSeries s =
            standard_monomial_series(MonomialIdeal({Monomial()}),
                                     {yvar(1), yvar(2)}, 4);
        CHECK(s.is_zero());
    }
    {
        // no variables at all: the ground field
        TruncatedSeries s = standard_monomial_series(MonomialIdeal(), {}, 3);
        CHECK(s.coefficients() == std::vector<Int>{1, 0, 0, 0});
    }

    // randomised comparison with the brute count
    std::mt19937_64 rng(0x0a11ce5ull);
    std::vector<VarId> vars{yvar(1), yvar(2), yvar(3), yvar(4)};
    std::uniform_int_distribution<std::uint32_t> ngens(0, 4);
    std::uniform_int_distribution<std::uint32_t> nvars_in_gen(1, 2);
    std::uniform_int_distribution<std::size_t> pick(0, vars.size() - 1);
    std::uniform_int_distribution<std::uint32_t> exp(1, 3);
    for (int rep = 0; rep < 40; ++rep) {
        std::vector<Monomial> gens;
        std::uint32_t g = ngens(rng);
        for (std::uint32_t i = 0; i < g; ++i) {
            Monomial m;
            std::uint32_t nv = nvars_in_gen(rng);
            for (std::uint32_t v = 0; v < nv; ++v)
                m = m * Monomial::var(vars[pick(rng)], exp(rng));
            gens.push_back(m);
        }
        MonomialIdeal ideal(std::move(gens));
        TruncatedSeries s = standard_monomial_series(ideal, vars, 10);
        std::vector<Int> brute = count_standard(ideal, vars, 10);
        CHECK(s.coefficients() == brute);
    }
}

TEST_CASE("standard monomial series input validation") {
    CHECK_THROWS_AS(
        standard_monomial_series(MonomialIdeal(), {yvar(1), yvar(1)}, 5),
        std::invalid_argument);
    CHECK_THROWS_AS(
        standard_monomial_series(MonomialIdeal(), {VarId{1, 0}}, 5),
        std::invalid_argument);
    CHECK_THROWS_AS(
        standard_monomial_series(MonomialIdeal({y(1) * y(2)}), {yvar(1)}, 5),
        std::invalid_argument);
    // heavy generators outside the truncation are ignored, even with
    // variables outside the ring
    CHECK(standard_monomial_series(MonomialIdeal({y(9)}), {yvar(1)}, 5) ==
          standard_monomial_series(MonomialIdeal(), {yvar(1)}, 5));
}
