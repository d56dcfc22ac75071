#pragma once

#include "gtnl/behavior.hpp"
#include "gtnl/bell.hpp"

#include <array>
#include <vector>

namespace gtnl {

/// A symmetry of the scenario: permute parties, permute each party's
/// settings, optionally flip each (party, setting)'s outcome. Acts on
/// behaviours as a permutation of the flat probability cells, which is the
/// stored form; compose/inverse operate on that permutation.
struct Relabeling {
    Scenario scenario;
    std::vector<int> perm;  // perm[cell] = image cell

    Relabeling() = default;
    explicit Relabeling(const Scenario& s);  // identity

    Relabeling compose(const Relabeling& then) const;  // first this, then `then`
    Relabeling inverse() const;
    bool operator==(const Relabeling&) const = default;
};

/// Builds the relabeling from its structured parts.
///   party_to[i]    = slot party i moves to (must preserve setting counts)
///   setting_map[p] = new setting label for party p's setting s
///   flip[p][s']    = 1 to flip party p's outcome on its (new) setting s'
Relabeling make_relabeling(const Scenario& s, const std::array<int, 3>& party_to,
                           const std::array<std::vector<int>, 3>& setting_map,
                           const std::array<std::vector<int>, 3>& flip);

/// All relabelings of the scenario; 3!*(2!)^3*(2!)^6 = 3072 for (2,2,2).
/// Enumerated once per scenario and cached.
const std::vector<Relabeling>& relabeling_group(const Scenario& s);

template <typename T>
BehaviorT<T> relabel(const BehaviorT<T>& b, const Relabeling& r)
{
    if (b.scenario != r.scenario)
        throw std::invalid_argument("relabeling scenario mismatch");
    BehaviorT<T> out(b.scenario);
    for (std::size_t i = 0; i < b.entries.size(); ++i)
        out.entries[r.perm[i]] = b.entries[i];
    return out;
}

BellVector relabel(const BellVector& w, const Relabeling& r);

/// Lexicographic minimum of b's orbit under the full relabeling group; equal
/// for two behaviours iff they lie in the same equivalence class.
BehaviorQ canonical_form(const BehaviorQ& b);

}  // namespace gtnl
