#include "gtnl/reference_boxes.hpp"

#include <cmath>

namespace gtnl {

namespace {

// Closed-form entry kinds for the depolarized GHZ table. The /8 family
// appears exactly where A and C both measure Z (x=z=0); all other blocks use
// the /16 family.
enum Kind : char { P8, M8, Z8, P16, M16 };

// kind per (block, cell) for the CAO-variant protocol, rows xyz = 000..111.
// P8: (1+t+sqrt2 t)/8, M8: (1+t-sqrt2 t)/8, Z8: (1-t)/8,
// P16: (2+sqrt2 t)/16, M16: (2-sqrt2 t)/16.
constexpr Kind kGhzCao[8][8] = {
    {P8, Z8, M8, Z8, Z8, M8, Z8, P8},
    {P16, P16, M16, M16, M16, M16, P16, P16},
    {M8, Z8, P8, Z8, Z8, P8, Z8, M8},
    {M16, M16, P16, P16, P16, P16, M16, M16},
    {P16, M16, M16, P16, P16, M16, M16, P16},
    {P16, M16, M16, P16, M16, P16, P16, M16},
    {M16, P16, P16, M16, M16, P16, P16, M16},
    {P16, M16, M16, P16, M16, P16, P16, M16},
};

double kind_value(Kind k, double t)
{
    const double r = std::sqrt(2.0);
    switch (k) {
        case P8: return (1 + t + r * t) / 8;
        case M8: return (1 + t - r * t) / 8;
        case Z8: return (1 - t) / 8;
        case P16: return (2 + r * t) / 16;
        case M16: return (2 - r * t) / 16;
    }
    return 0;
}

}  // namespace

Behavior depolarized_ghz(double theta, WitnessId variant)
{
    if (!(theta >= 0.0 && theta <= 1.0))
        throw std::invalid_argument("visibility must lie in [0,1]");
    Scenario s(2, 2, 2);
    Behavior b(s);
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int z = 0; z < 2; ++z) {
                const int blk = s.block(x, y, z);
                for (int cell = 0; cell < 8; ++cell) {
                    int src = cell;
                    if (variant == WitnessId::MAO && y == 1)
                        src = cell ^ 2;  // flip B's outcome bit
                    b.entries[blk * 8 + cell] = kind_value(kGhzCao[blk][src], theta);
                }
            }
    return b;
}

BehaviorQ extremal_box(ExtremalBoxId id)
{
    Scenario s(2, 2, 2);
    BehaviorQ box(s);
    const Rat quarter(1, 4);
    for (int y = 0; y < 2; ++y)
        for (int z = 0; z < 2; ++z)
            for (int ob = 0; ob < 2; ++ob)
                for (int oc = 0; oc < 2; ++oc) {
                    if (id == ExtremalBoxId::P1) {
                        box.at(0, ob, oc, 0, y, z) =
                            quarter * ((ob == 0) ? ((oc == 0) + (oc == z)) : 0);
                        box.at(1, ob, oc, 0, y, z) =
                            quarter * ((ob == 1) ? ((oc == 1) + (oc == (z ^ 1))) : 0);
                        box.at(0, ob, oc, 1, y, z) = quarter * ((ob ^ oc) == (y & z));
                        box.at(1, ob, oc, 1, y, z) = quarter * ((ob ^ oc) == ((y & z) ^ z));
                    } else {
                        box.at(0, ob, oc, 0, y, z) =
                            quarter * ((ob == y) ? ((oc == 0) + (oc == z)) : 0);
                        box.at(1, ob, oc, 0, y, z) =
                            quarter * ((ob == (y ^ 1)) ? ((oc == 1) + (oc == (z ^ 1))) : 0);
                        box.at(0, ob, oc, 1, y, z) = quarter * ((ob ^ oc) == ((y & z) ^ y));
                        box.at(1, ob, oc, 1, y, z) = quarter * ((ob ^ oc) == ((y & z) ^ z ^ y));
                    }
                }
    return box;
}

double ghz_visibility_threshold()
{
    return 2.0 / (std::sqrt(2.0) + 1.0);
}

}  // namespace gtnl
