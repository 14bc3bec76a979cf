#include <doctest.h>

#include <vector>

#include "arcseries/series.hpp"

using namespace arcs;

namespace {

TruncatedSeries from_ints(const std::vector<long>& v) {
    TruncatedSeries s(static_cast<std::uint32_t>(v.size()) - 1);
    for (std::size_t i = 0; i < v.size(); ++i)
        s.coeff(static_cast<std::uint32_t>(i)) = v[i];
    return s;
}

}  // namespace

TEST_CASE("construction and accessors") {
    TruncatedSeries s(4);
    CHECK(s.truncation() == 4);
    CHECK(s.is_zero());
    CHECK(!s.order_of_vanishing().has_value());
    CHECK(TruncatedSeries::one(4) == from_ints({1, 0, 0, 0, 0}));
    CHECK(TruncatedSeries::power_of_t(4, 2, 3) == from_ints({0, 0, 3, 0, 0}));
    TruncatedSeries t = TruncatedSeries::power_of_t(4, 3);
    CHECK(t.order_of_vanishing() == 3);
    CHECK_THROWS(s[9]);
}

TEST_CASE("ring operations respect the truncation") {
    TruncatedSeries a = from_ints({1, 2, 3});
    TruncatedSeries b = from_ints({1, 1, 1});
    CHECK(a + b == from_ints({2, 3, 4}));
    CHECK(a - b == from_ints({0, 1, 2}));
    CHECK(a * b == from_ints({1, 3, 6}));
    CHECK(a.shifted(1) == from_ints({0, 1, 2}));
    CHECK(a.shifted(5) == from_ints({0, 0, 0}));
    CHECK_THROWS_AS(a + TruncatedSeries(5), std::invalid_argument);
    CHECK_THROWS_AS(a * TruncatedSeries(5), std::invalid_argument);
}

TEST_CASE("geometric factors multiply by 1/(1 - t^i)") {
    TruncatedSeries s = TruncatedSeries::one(6);
    s.apply_geometric_factor(2);
    CHECK(s == from_ints({1, 0, 1, 0, 1, 0, 1}));
    // same thing as multiplying by the explicit geometric series
    TruncatedSeries a = from_ints({1, 1, 2, 3, 4, 5, 6});
    TruncatedSeries geo = from_ints({1, 0, 0, 1, 0, 0, 1});
    TruncatedSeries b = a;
    b.apply_geometric_factor(3);
    CHECK(b == a * geo);
    CHECK_THROWS_AS(s.apply_geometric_factor(0), std::invalid_argument);
}

TEST_CASE("restricted products") {
    // all parts allowed: the partition numbers
    CHECK(restricted_product(10, 1, {}) ==
          from_ints({1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42}));
    // parts 1, 4 mod 5
    CHECK(restricted_product(10, 5, {0, 2, 3}) ==
          from_ints({1, 1, 1, 1, 2, 2, 3, 3, 4, 5, 6}));
    // even parts only
    CHECK(restricted_product(8, 2, {1}) ==
          from_ints({1, 0, 1, 0, 2, 0, 3, 0, 5}));
    CHECK_THROWS_AS(restricted_product(5, 0, {}), std::invalid_argument);
    CHECK_THROWS_AS(restricted_product(5, 3, {7}), std::invalid_argument);
}

TEST_CASE("json round trip") {
    TruncatedSeries s = from_ints({1, -2, 0, 987654321});
    s.coeff(3) *= Int("1000000000000000000");
    std::string text = series_to_json(s);
    CHECK(text.find("\"truncation\":3") != std::string::npos);
    CHECK(series_from_json(text) == s);
    CHECK_THROWS_AS(series_from_json("not json"), std::invalid_argument);
    CHECK_THROWS_AS(series_from_json("{\"truncation\":1}"),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        series_from_json(
            "{\"truncation\":1,\"coefficients\":[\"1\",\"2\",\"3\"]}"),
        std::invalid_argument);
    CHECK_THROWS_AS(
        series_from_json("{\"truncation\":1,\"coefficients\":[\"1\",\"x\"]}"),
        std::invalid_argument);
}

TEST_CASE("csv format") {
    TruncatedSeries s = from_ints({1, 0, -5});
    CHECK(series_to_csv(s) == "index,coefficient\n0,1\n1,0\n2,-5\n");
}
