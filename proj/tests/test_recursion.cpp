#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "arcseries/poly_text.hpp"
#include "arcseries/rr_recursion.hpp"

using namespace arcs;

namespace {

Monomial y(std::uint32_t level, std::uint32_t e = 1) {
    return Monomial::var(yvar(level), e);
}

}  // namespace

TEST_CASE("staircase ideal generators") {
    MonomialIdeal i1 = staircase_ideal(1, 5);
    std::vector<std::string> got;
    for (const Monomial& m : i1.generators()) got.push_back(to_string(m));
    CHECK(got == std::vector<std::string>{"y1^2", "y1*y2", "y2^2", "y2*y3",
                                          "y3^2", "y3*y4", "y4^2", "y4*y5",
                                          "y5^2"});
    CHECK(staircase_ideal(6, 5).generators().empty());
    CHECK(staircase_ideal(5, 5).generators() ==
          std::vector<Monomial>{y(5, 2)});
}

TEST_CASE("staircase ideal identities behind the recursion") {
    // (I_d, y_d) = (y_d, I_{d+1}) and (I_d : y_d) = (y_d, y_{d+1}, I_{d+2})
    for (std::uint32_t d = 1; d <= 3; ++d) {
        MonomialIdeal id = staircase_ideal(d, 8);
        CHECK(id.plus(y(d)) == staircase_ideal(d + 1, 8).plus(y(d)));
        CHECK(id.colon(y(d)) ==
              staircase_ideal(d + 2, 8).plus(y(d)).plus(y(d + 1)));
    }
}

TEST_CASE("h series counts sparse partitions") {
    CHECK(h_series(3, 5).coefficients() ==
          std::vector<Int>{1, 0, 0, 1, 1, 1});
    // parts >= 1, distinct, no two consecutive: the sum side counts these
    CHECK(h_series(1, 30) == rr_sum_side(30));
    // the recursion h(d) = h(d+1) + t^d h(d+2)
    for (std::uint32_t d = 1; d <= 5; ++d) {
        TruncatedSeries lhs = h_series(d, 40);
        TruncatedSeries rhs =
            h_series(d + 1, 40) + h_series(d + 2, 40).shifted(d);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("sum side equals the restricted product") {
    CHECK(rr_sum_side(10) == restricted_product(10, 5, {0, 2, 3}));
    CHECK(rr_sum_side(60) == restricted_product(60, 5, {0, 2, 3}));
    CHECK(rr_sum_side(10).coefficients() ==
          std::vector<Int>{1, 1, 1, 1, 2, 2, 3, 3, 4, 5, 6});
}

TEST_CASE("coupled recurrences") {
    AndrewsBaxter ab = andrews_baxter(13, 10);
    CHECK(ab.converged);
    CHECK(ab.A[1] == TruncatedSeries::one(10));
    CHECK(ab.A[2] == TruncatedSeries::one(10));
    CHECK(ab.B[2].is_zero());
    CHECK(ab.B[3] == TruncatedSeries::power_of_t(10, 1));
    CHECK(ab.B[4] == TruncatedSeries::power_of_t(10, 2));
    {
        TruncatedSeries a3 = TruncatedSeries::one(10);
        a3.coeff(1) = 1;
        CHECK(ab.A[3] == a3);
        TruncatedSeries a4 = a3;
        a4.coeff(2) = 1;
        CHECK(ab.A[4] == a4);
    }
    // the defining relations hold all the way up
    for (std::uint32_t d = 3; d <= 13; ++d) {
        CHECK(ab.B[d] == ab.A[d - 2].shifted(d - 2));
        CHECK(ab.A[d] == ab.A[d - 1] + ab.B[d]);
    }
    // the invariant h(1) = A_d h(d) + B_{d+1} h(d+1)
    for (std::uint32_t d = 2; d <= 12; ++d) {
        TruncatedSeries rhs = ab.A[d] * h_series(d, 10) +
                              ab.B[d + 1] * h_series(d + 1, 10);
        CHECK(rhs == h_series(1, 10));
    }
    // the stabilised limit is the restricted product
    CHECK(ab.limit() == restricted_product(10, 5, {0, 2, 3}));
    CHECK(ab.limit() == ab.A[13]);
}

TEST_CASE("convergence bookkeeping") {
    CHECK(andrews_baxter(13, 10).converged);
    CHECK(!andrews_baxter(12, 10).converged);
    CHECK_THROWS_AS(andrews_baxter(12, 10).limit(), std::logic_error);
    CHECK_THROWS_AS(andrews_baxter(1, 10), std::invalid_argument);
    // an unconverged run still satisfies the recurrences it reached
    AndrewsBaxter ab = andrews_baxter(6, 10);
    for (std::uint32_t d = 3; d <= 6; ++d)
        CHECK(ab.A[d] == ab.A[d - 1] + ab.B[d]);
    // deep convergence matches the product to a larger order
    AndrewsBaxter deep = andrews_baxter(103, 100);
    CHECK(deep.converged);
    CHECK(deep.limit() == restricted_product(100, 5, {0, 2, 3}));
}
