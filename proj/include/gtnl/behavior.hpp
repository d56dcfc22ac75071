#pragma once

#include "gtnl/numeric.hpp"
#include "gtnl/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace gtnl {

namespace detail {
inline double abs_val(double v) { return std::abs(v); }
inline Rat abs_val(const Rat& v) { return v < 0 ? Rat(-v) : v; }
}  // namespace detail

/// Settings-conditional outcome probabilities P(abc|xyz), stored dense in the
/// fixed flat-index order of Scenario. T is Rat (exact mode) or double.
template <typename T>
struct BehaviorT {
    Scenario scenario;
    std::vector<T> entries;

    BehaviorT() : entries(scenario.entries(), T(0)) {}
    explicit BehaviorT(const Scenario& s) : scenario(s), entries(s.entries(), T(0)) {}
    BehaviorT(const Scenario& s, std::vector<T> e) : scenario(s), entries(std::move(e))
    {
        if (static_cast<int>(entries.size()) != s.entries())
            throw std::invalid_argument("behavior entry count does not match scenario");
    }

    T& at(int a, int b, int c, int x, int y, int z)
    {
        return entries[scenario.index(a, b, c, x, y, z)];
    }
    const T& at(int a, int b, int c, int x, int y, int z) const
    {
        return entries[scenario.index(a, b, c, x, y, z)];
    }

    T min_entry() const { return *std::min_element(entries.begin(), entries.end()); }

    /// Largest deviation of any per-setting outcome sum from 1.
    T normalization_residual() const
    {
        T worst(0);
        for (int blk = 0; blk < scenario.settings_triples(); ++blk) {
            T sum(0);
            for (int o = 0; o < 8; ++o)
                sum += entries[blk * 8 + o];
            worst = std::max(worst, detail::abs_val(sum - T(1)));
        }
        return worst;
    }

    bool is_normalized(double tol = 1e-9) const
    {
        if constexpr (std::is_same_v<T, double>)
            return min_entry() >= -tol && normalization_residual() <= tol;
        else
            return min_entry() >= 0 && normalization_residual() == 0;
    }
};

using Behavior = BehaviorT<double>;
using BehaviorQ = BehaviorT<Rat>;

/// Maximum absolute violation of the marginal no-signalling equalities:
/// for every party, the outcome-pair marginal summed over that party's
/// outcome must be independent of that party's setting. Zero iff exactly
/// no-signalling.
template <typename T>
T no_signalling_residual(const BehaviorT<T>& b)
{
    const Scenario& s = b.scenario;
    T worst(0);
    auto bump = [&](const T& lhs, const T& rhs) {
        worst = std::max(worst, detail::abs_val(lhs - rhs));
    };
    // A's setting must not influence the (b,c) marginal.
    for (int y = 0; y < s.ny; ++y)
        for (int z = 0; z < s.nz; ++z)
            for (int ob = 0; ob < 2; ++ob)
                for (int oc = 0; oc < 2; ++oc)
                    for (int x = 0; x + 1 < s.nx; ++x)
                        for (int x2 = x + 1; x2 < s.nx; ++x2) {
                            T lhs = b.at(0, ob, oc, x, y, z) + b.at(1, ob, oc, x, y, z);
                            T rhs = b.at(0, ob, oc, x2, y, z) + b.at(1, ob, oc, x2, y, z);
                            bump(lhs, rhs);
                        }
    // B's setting must not influence the (a,c) marginal.
    for (int x = 0; x < s.nx; ++x)
        for (int z = 0; z < s.nz; ++z)
            for (int oa = 0; oa < 2; ++oa)
                for (int oc = 0; oc < 2; ++oc)
                    for (int y = 0; y + 1 < s.ny; ++y)
                        for (int y2 = y + 1; y2 < s.ny; ++y2) {
                            T lhs = b.at(oa, 0, oc, x, y, z) + b.at(oa, 1, oc, x, y, z);
                            T rhs = b.at(oa, 0, oc, x, y2, z) + b.at(oa, 1, oc, x, y2, z);
                            bump(lhs, rhs);
                        }
    // C's setting must not influence the (a,b) marginal.
    for (int x = 0; x < s.nx; ++x)
        for (int y = 0; y < s.ny; ++y)
            for (int oa = 0; oa < 2; ++oa)
                for (int ob = 0; ob < 2; ++ob)
                    for (int z = 0; z + 1 < s.nz; ++z)
                        for (int z2 = z + 1; z2 < s.nz; ++z2) {
                            T lhs = b.at(oa, ob, 0, x, y, z) + b.at(oa, ob, 1, x, y, z);
                            T rhs = b.at(oa, ob, 0, x, y, z2) + b.at(oa, ob, 1, x, y, z2);
                            bump(lhs, rhs);
                        }
    return worst;
}

inline Behavior to_double(const BehaviorQ& b)
{
    Behavior out(b.scenario);
    for (std::size_t i = 0; i < b.entries.size(); ++i)
        out.entries[i] = static_cast<double>(b.entries[i]);
    return out;
}

inline Behavior uniform_behavior(const Scenario& s = Scenario())
{
    Behavior b(s);
    std::fill(b.entries.begin(), b.entries.end(), 0.125);
    return b;
}

inline BehaviorQ uniform_behavior_exact(const Scenario& s = Scenario())
{
    BehaviorQ b(s);
    std::fill(b.entries.begin(), b.entries.end(), Rat(1, 8));
    return b;
}

}  // namespace gtnl
