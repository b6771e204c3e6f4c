#include <doctest.h>

#include "coinflip.hpp"
#include "generators.hpp"
#include "vval/errors.hpp"
#include "vval/model.hpp"

using namespace vval;
using vval::testing::coinflip;
using vval::testing::states;

TEST_CASE("state space validation")
{
    CHECK_THROWS_AS(StateSpace({}), ValidationError);
    CHECK_THROWS_AS(StateSpace({"a", "a"}), ValidationError);
    CHECK_THROWS_AS(StateSpace({"a", ""}), ValidationError);
    StateSpace s({"b", "a"});
    CHECK(s.index_of("a") == 1);
    CHECK_THROWS_AS((void)s.index_of("c"), LookupError);
}

TEST_CASE("coinflip truth sets of atoms")
{
    const Model& m = coinflip().model;
    const StateSet P = states({"H-acc", "H-sh", "T-sh"});
    CHECK(truth_set_atom(m, "pbar") == P);
    CHECK(truth_set_atom(m, "p") == P);
    CHECK(truth_set_atom(m, "h") == states({"H-acc", "H-sh", "H-st"}));
    CHECK_THROWS_AS((void)truth_set_atom(m, "nope"), LookupError);
}

TEST_CASE("coinflip coherence")
{
    const Model& m = coinflip().model;
    CHECK_FALSE(is_coherent(m, "p"));
    CHECK(is_coherent(m, "pbar"));
    CHECK(is_coherent(m, "h"));
    CHECK(is_coherent(m, "a"));
    CHECK_THROWS_AS((void)is_coherent(m, "nope"), LookupError);
}

TEST_CASE("closure of the first-pass valuation is the displayed coherent one")
{
    const Model& m = coinflip().model;
    const VariableValuation closed = coherence_closure(m, "p");
    CHECK(closed == m.valuation("pbar"));
    const auto& space = m.space();
    CHECK(closed.at(space.index_of("H-acc")) == states({"H-acc", "H-sh"}));
    CHECK(closed.at(space.index_of("T-sh")) == states({"H-acc", "H-sh", "T-sh"}));
    CHECK(closed.at(space.index_of("T-st")).empty());
    CHECK(coherence_closure(m, "h") == m.valuation("h"));
    CHECK(coherence_closure(m, "pbar") == m.valuation("pbar"));
}

TEST_CASE("lift_event")
{
    const auto& space = coinflip().model.space();
    const StateSet acc = states({"H-acc", "T-acc"});
    const auto a = lift_event(space, acc);
    CHECK(a.is_constant());
    CHECK(a.truth_set() == acc);
    CHECK(a == coinflip().model.valuation("a"));
    CHECK(lift_event(space, space.none()).truth_set().empty());
    CHECK(lift_event(space, space.all()).truth_set() == space.all());
}

TEST_CASE("model rejects valuations over another space")
{
    StateSpace s({"x", "y"});
    std::map<std::string, VariableValuation> atoms;
    atoms.emplace("p", VariableValuation::constant(3, StateSet(3)));
    CHECK_THROWS_AS(Model(s, atoms), ValidationError);
    CHECK_THROWS_AS(VariableValuation({StateSet(2), StateSet(3)}), ValidationError);
}

TEST_CASE("valuation properties on random valuations")
{
    testing::Rng rng(2024);
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t n = testing::uniform(rng, 1, 8);
        const auto v = testing::random_valuation(rng, n);
        const StateSet truth = v.truth_set();

        // coherence via the pointwise definition: y in v(x) implies y in v(y)
        bool pointwise = true;
        for (std::size_t x = 0; x < n; ++x) {
            for (std::size_t y = 0; y < n; ++y) {
                if (v.at(x).contains(y) && !v.at(y).contains(y)) {
                    pointwise = false;
                }
            }
        }
        CHECK(v.is_coherent() == pointwise);

        const auto closed = v.closure();
        CHECK(closed.is_coherent());
        CHECK(closed.truth_set() == truth);
        CHECK(closed.closure() == closed);

        if (v.is_coherent()) {
            StateSet all_images(n);
            for (const auto& img : v.images()) {
                all_images |= img;
            }
            CHECK(all_images == truth);
            CHECK(closed == v);
        }

        const StateSet a = testing::random_set(rng, n);
        CHECK(VariableValuation::constant(n, a).truth_set() == a);
        CHECK(VariableValuation::constant(n, a).is_coherent());
    }
}
