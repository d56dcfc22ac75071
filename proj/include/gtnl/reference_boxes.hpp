#pragma once

#include "gtnl/behavior.hpp"
#include "gtnl/bell.hpp"

namespace gtnl {

/// Behaviour of three parties measuring a visibility-theta depolarized GHZ
/// state. The CAO variant is the closed-form table of the protocol where A,C
/// measure Z/X and B measures (X+Z)/sqrt2, (X-Z)/sqrt2; the MAO variant
/// replaces B's second setting with (Z-X)/sqrt2, which flips B's outcome on
/// the y=1 blocks. Theta outside [0,1] throws.
Behavior depolarized_ghz(double theta, WitnessId variant);

enum class ExtremalBoxId { P1, P2 };

/// The two no-signalling extreme points with maximal witness violation:
/// P1 achieves 6 on the mao witness, P2 achieves 12 on the cao witness.
BehaviorQ extremal_box(ExtremalBoxId id);

/// Visibility below which the depolarized GHZ behaviour stops violating
/// either bundled witness: 2/(sqrt(2)+1).
double ghz_visibility_threshold();

}  // namespace gtnl
