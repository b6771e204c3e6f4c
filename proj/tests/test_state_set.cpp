#include <doctest.h>

#include <algorithm>

#include "generators.hpp"
#include "vval/state_set.hpp"

using namespace vval;

TEST_CASE("state set basics")
{
    StateSet s(5);
    CHECK(s.empty());
    s.insert(0).insert(3);
    CHECK(s.contains(3));
    CHECK_FALSE(s.contains(1));
    CHECK(s.count() == 2);
    CHECK(s.members() == std::vector<std::size_t>{0, 3});
    CHECK(s.complement().members() == std::vector<std::size_t>{1, 2, 4});
    CHECK(StateSet::full(5).count() == 5);
    CHECK_THROWS_AS((void)s.contains(5), std::out_of_range);
}

TEST_CASE("state sets wider than one word")
{
    StateSet s(130);
    s.insert(0).insert(64).insert(129);
    CHECK(s.count() == 3);
    CHECK(s.complement().count() == 127);
    CHECK(StateSet::full(130).complement().empty());
    CHECK(s.subset_of(StateSet::full(130)));
    StateSet hi(130);
    hi.insert(129);
    StateSet lo(130);
    lo.insert(128);
    CHECK(lo < hi);
}

TEST_CASE("mixing universes is rejected")
{
    CHECK_THROWS_AS((void)(StateSet(3) & StateSet(4)), std::invalid_argument);
    CHECK_THROWS_AS((void)StateSet(3).subset_of(StateSet(4)), std::invalid_argument);
}

TEST_CASE("ordering follows the integer encoding")
{
    testing::Rng rng(7);
    for (int i = 0; i < 500; ++i) {
        const auto a = rng() & 0xff;
        const auto b = rng() & 0xff;
        CHECK(((StateSet::from_bits(8, a) <=> StateSet::from_bits(8, b)) == (a <=> b)));
    }
}

TEST_CASE("set algebra agrees with bitwise arithmetic")
{
    testing::Rng rng(11);
    for (int i = 0; i < 500; ++i) {
        const std::size_t n = testing::uniform(rng, 1, 64);
        const auto mask = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
        const auto a = rng() & mask;
        const auto b = rng() & mask;
        const auto sa = StateSet::from_bits(n, a);
        const auto sb = StateSet::from_bits(n, b);
        CHECK((sa & sb) == StateSet::from_bits(n, a & b));
        CHECK((sa | sb) == StateSet::from_bits(n, a | b));
        CHECK((sa - sb) == StateSet::from_bits(n, a & ~b));
        CHECK(sa.complement() == StateSet::from_bits(n, ~a & mask));
        CHECK(sa.subset_of(sb) == ((a & ~b) == 0));
        CHECK(sa.disjoint_from(sb) == ((a & b) == 0));
    }
}
