#include "gtnl/correlators.hpp"

namespace gtnl {

int correlator_sign(int comp, int cell)
{
    const int a = (cell >> 2) & 1;
    const int b = (cell >> 1) & 1;
    const int c = cell & 1;
    switch (comp) {
        case 0: return 1;
        case 1: return a ? -1 : 1;                  // M_A
        case 2: return b ? -1 : 1;                  // M_B
        case 3: return c ? -1 : 1;                  // M_C
        case 4: return (a ^ b) ? -1 : 1;            // M_AB
        case 5: return (b ^ c) ? -1 : 1;            // M_BC
        case 6: return (a ^ c) ? -1 : 1;            // M_AC
        case 7: return (a ^ b ^ c) ? -1 : 1;        // C_ABC
        default: throw std::invalid_argument("correlator component out of range");
    }
}

template <typename T>
CorrelatorVectorT<T> correlators_from_behavior(const BehaviorT<T>& b)
{
    CorrelatorVectorT<T> out(b.scenario);
    const int blocks = b.scenario.settings_triples();
    for (int blk = 0; blk < blocks; ++blk)
        for (int comp = 0; comp < 8; ++comp) {
            T acc(0);
            for (int cell = 0; cell < 8; ++cell) {
                if (correlator_sign(comp, cell) > 0)
                    acc += b.entries[blk * 8 + cell];
                else
                    acc -= b.entries[blk * 8 + cell];
            }
            out.at(blk, comp) = acc;
        }
    return out;
}

template <typename T>
BehaviorReconstruction<T> behavior_from_correlators(const CorrelatorVectorT<T>& c)
{
    BehaviorReconstruction<T> r;
    r.behavior = BehaviorT<T>(c.scenario);
    const int blocks = c.scenario.settings_triples();
    bool first = true;
    for (int blk = 0; blk < blocks; ++blk)
        for (int cell = 0; cell < 8; ++cell) {
            T acc(0);
            for (int comp = 0; comp < 8; ++comp) {
                if (correlator_sign(comp, cell) > 0)
                    acc += c.at(blk, comp);
                else
                    acc -= c.at(blk, comp);
            }
            acc /= 8;
            r.behavior.entries[blk * 8 + cell] = acc;
            if (first || acc < r.min_entry) {
                r.min_entry = acc;
                first = false;
            }
        }
    if constexpr (std::is_same_v<T, double>)
        r.valid = r.min_entry >= -1e-12;
    else
        r.valid = r.min_entry >= 0;
    return r;
}

template CorrelatorVectorT<double> correlators_from_behavior(const BehaviorT<double>&);
template CorrelatorVectorT<Rat> correlators_from_behavior(const BehaviorT<Rat>&);
template BehaviorReconstruction<double> behavior_from_correlators(const CorrelatorVectorT<double>&);
template BehaviorReconstruction<Rat> behavior_from_correlators(const CorrelatorVectorT<Rat>&);

}  // namespace gtnl
