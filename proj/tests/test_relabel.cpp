#include "gtnl/relabel.hpp"
#include "gtnl/reference_boxes.hpp"

#include <doctest.h>

#include <random>

using namespace gtnl;

TEST_CASE("group size for the binary-settings scenario is 3072")
{
    const auto& g = relabeling_group(Scenario(2, 2, 2));
    CHECK(g.size() == 3072);
}

TEST_CASE("composition and inverse behave like a group")
{
    const auto& g = relabeling_group(Scenario(2, 2, 2));
    const Relabeling id(Scenario(2, 2, 2));
    std::mt19937 rng(11);
    std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
    for (int iter = 0; iter < 50; ++iter) {
        const auto& a = g[pick(rng)];
        const auto& b = g[pick(rng)];
        CHECK(a.compose(a.inverse()) == id);
        CHECK(a.inverse().inverse() == a);
        // closure: compose of two group elements is a permutation in the group
        const auto c = a.compose(b);
        bool found = false;
        for (const auto& e : g)
            if (e == c) {
                found = true;
                break;
            }
        CHECK(found);
    }
}

TEST_CASE("identity relabeling fixes behaviours")
{
    const BehaviorQ p1 = extremal_box(ExtremalBoxId::P1);
    CHECK(relabel(p1, Relabeling(p1.scenario)).entries == p1.entries);
}

TEST_CASE("relabeling preserves normalization and no-signalling")
{
    const auto& g = relabeling_group(Scenario(2, 2, 2));
    const BehaviorQ p1 = extremal_box(ExtremalBoxId::P1);
    std::mt19937 rng(3);
    std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
    for (int iter = 0; iter < 40; ++iter) {
        const auto& r = g[pick(rng)];
        const BehaviorQ moved = relabel(p1, r);
        CHECK(moved.is_normalized());
        CHECK(no_signalling_residual(moved) == 0);
        CHECK(relabel(moved, r.inverse()).entries == p1.entries);
    }
}

TEST_CASE("all-outcome flips fix the uniform behaviour")
{
    Scenario s(2, 2, 2);
    const auto r = make_relabeling(s, {0, 1, 2},
                                   {std::vector<int>{0, 1}, {0, 1}, {0, 1}},
                                   {std::vector<int>{1, 1}, {1, 1}, {1, 1}});
    const BehaviorQ u = uniform_behavior_exact();
    CHECK(relabel(u, r).entries == u.entries);
}

TEST_CASE("witness transport identity")
{
    const auto& g = relabeling_group(Scenario(2, 2, 2));
    const BellVector w = standard_witness(WitnessId::CAO);
    const BehaviorQ p2 = extremal_box(ExtremalBoxId::P2);
    std::mt19937 rng(5);
    std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
    for (int iter = 0; iter < 40; ++iter) {
        const auto& r = g[pick(rng)];
        CHECK(witness_value(relabel(w, r), relabel(p2, r)) == witness_value(w, p2));
        CHECK(witness_value(w, relabel(p2, r)) == witness_value(relabel(w, r.inverse()), p2));
    }
}

TEST_CASE("some relabeling maps the first extremal box to the second")
{
    const auto& g = relabeling_group(Scenario(2, 2, 2));
    const BehaviorQ p1 = extremal_box(ExtremalBoxId::P1);
    const BehaviorQ p2 = extremal_box(ExtremalBoxId::P2);
    bool found = false;
    for (const auto& r : g)
        if (relabel(p1, r).entries == p2.entries) {
            found = true;
            break;
        }
    CHECK(found);
}

TEST_CASE("canonical forms identify equivalence classes")
{
    const BehaviorQ u = uniform_behavior_exact();
    CHECK(canonical_form(u).entries == u.entries);  // orbit of size one

    const BehaviorQ p1 = extremal_box(ExtremalBoxId::P1);
    const BehaviorQ p2 = extremal_box(ExtremalBoxId::P2);
    CHECK(canonical_form(p1).entries == canonical_form(p2).entries);

    // two distinct local deterministic boxes share a canonical form
    Scenario s(2, 2, 2);
    BehaviorQ d1(s), d2(s);
    for (int blk = 0; blk < 8; ++blk)
        d1.entries[blk * 8 + 0] = 1;  // always (0,0,0)
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int z = 0; z < 2; ++z)
                d2.at(x, 1, z, x, y, z) = 1;  // a = x, b = 1, c = z
    CHECK(d1.entries != d2.entries);
    CHECK(canonical_form(d1).entries == canonical_form(d2).entries);
    CHECK(canonical_form(d1).entries != canonical_form(p1).entries);
}
