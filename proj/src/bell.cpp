#include "gtnl/bell.hpp"

namespace gtnl {

namespace {

// Coefficient tables, rows xyz = 000..111, columns abc = 000..111.
constexpr int kMaoTable[8][8] = {
    { 3, -1,  1, -3, -3,  1, -1,  3},
    { 0,  0,  0,  0,  0,  0,  0,  0},
    { 1,  1, -1, -1, -1, -1,  1,  1},
    { 0,  0,  0,  0,  0,  0,  0,  0},
    { 0,  0,  0,  0,  0,  0,  0,  0},
    { 1, -1, -1,  1, -1,  1,  1, -1},
    { 0,  0,  0,  0,  0,  0,  0,  0},
    {-1,  1,  1, -1,  1, -1, -1,  1},
};

constexpr int kCaoTable[8][8] = {
    { 4, -4,  4, -4, -4,  4, -4,  4},
    { 1,  1, -1, -1, -1, -1,  1,  1},
    {-1,  1,  1, -1, -1,  1,  1, -1},
    {-1, -1,  1,  1,  1,  1, -1, -1},
    { 1, -1, -1,  1,  1, -1, -1,  1},
    { 2, -2, -2,  2, -2,  2,  2, -2},
    { 0,  0,  0,  0,  0,  0,  0,  0},
    { 2, -2, -2,  2, -2,  2,  2, -2},
};

}  // namespace

BellVector standard_witness(WitnessId id)
{
    Scenario s(2, 2, 2);
    std::vector<Rat> c(64);
    const auto& table = (id == WitnessId::MAO) ? kMaoTable : kCaoTable;
    for (int blk = 0; blk < 8; ++blk)
        for (int cell = 0; cell < 8; ++cell)
            c[blk * 8 + cell] = table[blk][cell];
    return BellVector(s, std::move(c), id == WitnessId::MAO ? 4 : 8, witness_name(id));
}

BellVector jw_pan_witness()
{
    Scenario s(2, 3, 2);
    std::vector<Rat> c(s.entries(), Rat(0));
    for (int st = 0; st < 4; ++st) {
        const int a = st >> 1;
        const int t = st & 1;
        const int parity = a ^ t;
        const Rat sign = parity ? -1 : 1;
        c[s.index(a, t, 0, 0, 1, 1)] += sign;
        c[s.index(a, t, 0, 1, 0, 1)] += sign;
        c[s.index(a, t, 0, 1, 1, 1)] -= sign;
        c[s.index(a, t, a, 0, 2, 0)] += 4 * sign;
        c[s.index(a, t, 0, 0, 0, 1)] -= parity ? 3 : 1;
    }
    return BellVector(s, std::move(c), 4, "jw-pan");
}

template <typename T, typename B>
static T witness_value_impl(const BellVector& w, const B& b)
{
    if (w.scenario != b.scenario)
        throw std::invalid_argument("witness/behavior scenario mismatch");
    T acc(0);
    for (std::size_t i = 0; i < w.coeffs.size(); ++i) {
        if (w.coeffs[i] == 0)
            continue;
        if constexpr (std::is_same_v<T, double>)
            acc += static_cast<double>(w.coeffs[i]) * b.entries[i];
        else
            acc += w.coeffs[i] * b.entries[i];
    }
    return acc;
}

Rat witness_value(const BellVector& w, const BehaviorQ& b)
{
    return witness_value_impl<Rat>(w, b);
}

double witness_value(const BellVector& w, const Behavior& b)
{
    return witness_value_impl<double>(w, b);
}

}  // namespace gtnl
