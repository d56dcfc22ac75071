#include "gtnl/behavior.hpp"
#include "gtnl/correlators.hpp"
#include "gtnl/reference_boxes.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace gtnl;

namespace {

BehaviorQ random_behavior(std::mt19937& rng)
{
    // random normalized blocks with denominator 97; not necessarily no-signalling
    Scenario s(2, 2, 2);
    BehaviorQ b(s);
    std::uniform_int_distribution<int> pick(0, 96);
    for (int blk = 0; blk < 8; ++blk) {
        int total = 0;
        int cuts[7];
        for (int& c : cuts)
            c = pick(rng);
        std::sort(std::begin(cuts), std::end(cuts));
        int prev = 0;
        for (int cell = 0; cell < 8; ++cell) {
            const int next = cell < 7 ? cuts[cell] : 97;
            b.entries[blk * 8 + cell] = Rat(next - prev, 97);
            total += next - prev;
            prev = next;
        }
        REQUIRE(total == 97);
    }
    return b;
}

}  // namespace

TEST_CASE("index convention")
{
    Scenario s(2, 2, 2);
    CHECK(s.entries() == 64);
    CHECK(s.index(0, 0, 0, 0, 0, 0) == 0);
    CHECK(s.index(1, 1, 1, 1, 1, 1) == 63);
    CHECK(s.index(1, 0, 1, 0, 1, 1) == ((0 * 2 + 1) * 2 + 1) * 8 + 5);
    Scenario w(2, 3, 2);
    CHECK(w.entries() == 96);
    CHECK(w.index(0, 0, 0, 0, 2, 0) == ((0 * 3 + 2) * 2 + 0) * 8);
    CHECK_THROWS_AS(Scenario(0, 1, 1), std::invalid_argument);
}

TEST_CASE("uniform behaviour has unit constants and vanishing correlators")
{
    const Behavior u = uniform_behavior();
    const auto c = correlators_from_behavior(u);
    for (int blk = 0; blk < 8; ++blk) {
        CHECK(c.at(blk, 0) == doctest::Approx(1.0));
        for (int comp = 1; comp < 8; ++comp)
            CHECK(std::abs(c.at(blk, comp)) < 1e-15);
    }
}

TEST_CASE("deterministic all-zero-outcome box has all correlators one")
{
    Scenario s(2, 2, 2);
    Behavior b(s);
    for (int blk = 0; blk < 8; ++blk)
        b.entries[blk * 8] = 1.0;
    const auto c = correlators_from_behavior(b);
    for (int blk = 0; blk < 8; ++blk)
        for (int comp = 0; comp < 8; ++comp)
            CHECK(c.at(blk, comp) == doctest::Approx(1.0));
}

TEST_CASE("depolarized GHZ correlators at full visibility, block 001")
{
    const Behavior g = depolarized_ghz(1.0, WitnessId::CAO);
    const auto c = correlators_from_behavior(g);
    const int blk = Scenario(2, 2, 2).block(0, 0, 1);
    CHECK(c.at(blk, 4) == doctest::Approx(std::sqrt(2.0) / 2).epsilon(1e-12));  // M_AB^00
    CHECK(std::abs(c.at(blk, 7)) < 1e-12);                                      // C_ABC^001
}

TEST_CASE("correlator round trip is the identity")
{
    std::mt19937 rng(7);
    for (int iter = 0; iter < 20; ++iter) {
        const BehaviorQ b = random_behavior(rng);
        const auto c = correlators_from_behavior(b);
        const auto back = behavior_from_correlators(c);
        CHECK(back.valid);
        CHECK(back.behavior.entries == b.entries);

        // float mode within 1e-12
        const Behavior bd = to_double(b);
        const auto cd = correlators_from_behavior(bd);
        const auto backd = behavior_from_correlators(cd);
        for (int i = 0; i < 64; ++i)
            CHECK(std::abs(backd.behavior.entries[i] - bd.entries[i]) < 1e-12);
    }
}

TEST_CASE("all-zero correlators reconstruct the uniform behaviour")
{
    CorrelatorVector c;
    for (int blk = 0; blk < 8; ++blk)
        c.at(blk, 0) = 1.0;
    const auto r = behavior_from_correlators(c);
    CHECK(r.valid);
    for (double e : r.behavior.entries)
        CHECK(e == doctest::Approx(0.125));
}

TEST_CASE("full-visibility correlators reconstruct the GHZ table")
{
    const Behavior g = depolarized_ghz(1.0, WitnessId::CAO);
    const auto c = correlators_from_behavior(g);
    const auto r = behavior_from_correlators(c);
    CHECK(r.valid);
    CHECK(r.behavior.entries[0] == doctest::Approx((2 + std::sqrt(2.0)) / 8).epsilon(1e-13));
    for (int i = 0; i < 64; ++i)
        CHECK(std::abs(r.behavior.entries[i] - g.entries[i]) < 1e-12);
}

TEST_CASE("out-of-range full correlator is flagged invalid")
{
    CorrelatorVector c;
    for (int blk = 0; blk < 8; ++blk)
        c.at(blk, 0) = 1.0;
    c.at(0, 7) = 2.0;
    const auto r = behavior_from_correlators(c);
    CHECK_FALSE(r.valid);
    CHECK(r.min_entry < 0.0);
}

TEST_CASE("no-signalling residual of the GHZ family is zero")
{
    for (double theta : {0.0, 0.25, 0.5, 2.0 / (std::sqrt(2.0) + 1.0), 1.0}) {
        CHECK(no_signalling_residual(depolarized_ghz(theta, WitnessId::CAO)) < 1e-15);
        CHECK(no_signalling_residual(depolarized_ghz(theta, WitnessId::MAO)) < 1e-15);
    }
}

TEST_CASE("local deterministic response to own setting is no-signalling")
{
    // A outputs its own setting, B and C uniform
    Scenario s(2, 2, 2);
    Behavior b(s);
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int z = 0; z < 2; ++z)
                for (int ob = 0; ob < 2; ++ob)
                    for (int oc = 0; oc < 2; ++oc)
                        b.at(x, ob, oc, x, y, z) = 0.25;
    CHECK(b.is_normalized());
    CHECK(no_signalling_residual(b) == 0.0);
}

TEST_CASE("signalling behaviour has positive residual")
{
    Scenario s(2, 2, 2);
    Behavior b = uniform_behavior();
    // skew one block so C's marginal seen by (A,B) depends on z
    b.at(0, 0, 0, 0, 0, 0) += 0.05;
    b.at(0, 0, 1, 0, 0, 0) -= 0.05;
    CHECK(no_signalling_residual(b) > 0.04);
}

TEST_CASE("depolarized GHZ is affine in the visibility")
{
    const auto b0 = depolarized_ghz(0.0, WitnessId::CAO);
    const auto b1 = depolarized_ghz(1.0, WitnessId::CAO);
    for (double theta : {0.2, 0.55, 0.9}) {
        const auto bt = depolarized_ghz(theta, WitnessId::CAO);
        for (int i = 0; i < 64; ++i)
            CHECK(bt.entries[i] ==
                  doctest::Approx(theta * b1.entries[i] + (1 - theta) * b0.entries[i])
                      .epsilon(1e-13));
    }
    CHECK_THROWS_AS(depolarized_ghz(-0.01, WitnessId::CAO), std::invalid_argument);
    CHECK_THROWS_AS(depolarized_ghz(1.01, WitnessId::MAO), std::invalid_argument);
}
