#pragma once

#include "gtnl/behavior.hpp"

#include <array>
#include <vector>

namespace gtnl {

/// Per settings triple: (1, M_A^x, M_B^y, M_C^z, M_AB^xy, M_BC^yz, M_AC^xz,
/// C_ABC^xyz), stored as consecutive 8-component groups in block order.
template <typename T>
struct CorrelatorVectorT {
    Scenario scenario;
    std::vector<T> comps;

    CorrelatorVectorT() : comps(scenario.entries(), T(0)) {}
    explicit CorrelatorVectorT(const Scenario& s) : scenario(s), comps(s.entries(), T(0)) {}

    T& at(int blk, int comp) { return comps[blk * 8 + comp]; }
    const T& at(int blk, int comp) const { return comps[blk * 8 + comp]; }
};

using CorrelatorVector = CorrelatorVectorT<double>;
using CorrelatorVectorQ = CorrelatorVectorT<Rat>;

/// Sign of outcome cell (4a+2b+c) in correlator component k, where component
/// order matches CorrelatorVectorT. Row k=0 is the normalization row of all
/// ones; rows 1..7 are the parity characters of the outcome triple.
int correlator_sign(int comp, int cell);

template <typename T>
CorrelatorVectorT<T> correlators_from_behavior(const BehaviorT<T>& b);

template <typename T>
struct BehaviorReconstruction {
    BehaviorT<T> behavior;
    bool valid = true;  // false if any reconstructed entry is negative
    T min_entry{};
};

template <typename T>
BehaviorReconstruction<T> behavior_from_correlators(const CorrelatorVectorT<T>& c);

extern template CorrelatorVectorT<double> correlators_from_behavior(const BehaviorT<double>&);
extern template CorrelatorVectorT<Rat> correlators_from_behavior(const BehaviorT<Rat>&);
extern template BehaviorReconstruction<double> behavior_from_correlators(
    const CorrelatorVectorT<double>&);
extern template BehaviorReconstruction<Rat> behavior_from_correlators(const CorrelatorVectorT<Rat>&);

}  // namespace gtnl
