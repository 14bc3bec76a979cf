#include <doctest.h>

#include "arcseries/monomial_ideal.hpp"

using namespace arcs;

namespace {

Monomial y(std::uint32_t level, std::uint32_t e = 1) {
    return Monomial::var(yvar(level), e);
}

}  // namespace

TEST_CASE("construction minimalises the generating set") {
    MonomialIdeal i({y(1) * y(2), y(1, 2) * y(2), y(2, 3), y(2, 2)});
    CHECK(i.generators() == std::vector<Monomial>{y(1) * y(2), y(2, 2)});

    // a divisor can sort after its multiple when weight-0 variables appear
    Monomial y0y1 = Monomial::var(VarId{1, 0}) * y(1);
    MonomialIdeal j({y0y1, y(1)});
    CHECK(j.generators() == std::vector<Monomial>{y(1)});

    CHECK(MonomialIdeal().is_zero());
    CHECK(MonomialIdeal({Monomial()}).is_unit());
    CHECK(MonomialIdeal({Monomial(), y(1)}).generators() ==
          std::vector<Monomial>{Monomial()});
    // duplicates collapse
    CHECK(MonomialIdeal({y(1), y(1)}).generators() ==
          std::vector<Monomial>{y(1)});
}

TEST_CASE("membership is divisibility by some generator") {
    MonomialIdeal i({y(1, 2), y(2) * y(3)});
    CHECK(i.contains(y(1, 2)));
    CHECK(i.contains(y(1, 3) * y(4)));
    CHECK(i.contains(y(1) * y(2) * y(3)));
    CHECK(!i.contains(y(1)));
    CHECK(!i.contains(y(2, 2)));
    CHECK(!i.contains(Monomial()));
    CHECK(!MonomialIdeal().contains(y(1)));
    CHECK(MonomialIdeal({Monomial()}).contains(Monomial()));
}

TEST_CASE("adding a generator") {
    MonomialIdeal i({y(1, 2), y(2, 2)});
    // absorbed: already contained
    CHECK(i.plus(y(1, 3)) == i);
    // swallows the multiples it covers
    MonomialIdeal j = i.plus(y(1));
    CHECK(j.generators() == std::vector<Monomial>{y(1), y(2, 2)});
    // incomparable: simply joins
    MonomialIdeal k = i.plus(y(2) * y(3));
    CHECK(k.generators() ==
          std::vector<Monomial>{y(1, 2), y(2, 2), y(2) * y(3)});
}

TEST_CASE("colon by a monomial") {
    MonomialIdeal i({y(1, 2), y(1) * y(2), y(2, 3)});
    MonomialIdeal q = i.colon(y(1));
    CHECK(q.generators() == std::vector<Monomial>{y(1), y(2)});
    // colon by something outside every generator leaves the ideal alone
    CHECK(i.colon(y(5)) == i);
    // colon can make the ideal unit
    CHECK(MonomialIdeal({y(1, 2)}).colon(y(1, 2)).is_unit());
    // on the zero ideal nothing happens
    CHECK(MonomialIdeal().colon(y(1)).is_zero());
}

TEST_CASE("canonical generator order is weight first") {
    MonomialIdeal i({y(2, 3), y(1), y(3)});
    const auto& g = i.generators();
    REQUIRE(g.size() == 3);
    CHECK(g[0] == y(1));
    CHECK(g[1] == y(3));
    CHECK(g[2] == y(2, 3));
    for (std::size_t a = 1; a < g.size(); ++a)
        CHECK(MonomialIdeal::canonical_less(g[a - 1], g[a]));
}
