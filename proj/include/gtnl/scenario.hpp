#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace gtnl {

/// Three parties with binary outcomes; per-party measurement-setting counts.
/// Probability entries are laid out settings-major:
///
///   flat = ((x*ny + y)*nz + z)*8 + (4a + 2b + c)
///
/// so each settings triple owns a contiguous block of 8 outcome cells.
struct Scenario {
    int nx = 2;
    int ny = 2;
    int nz = 2;

    Scenario() = default;
    Scenario(int nx_, int ny_, int nz_) : nx(nx_), ny(ny_), nz(nz_)
    {
        if (nx < 1 || ny < 1 || nz < 1)
            throw std::invalid_argument("setting counts must be >= 1");
    }

    int settings_triples() const { return nx * ny * nz; }
    int entries() const { return 8 * settings_triples(); }

    int block(int x, int y, int z) const { return (x * ny + y) * nz + z; }

    int index(int a, int b, int c, int x, int y, int z) const
    {
        return block(x, y, z) * 8 + (4 * a + 2 * b + c);
    }

    bool operator==(const Scenario&) const = default;

    std::string str() const
    {
        return std::to_string(nx) + "," + std::to_string(ny) + "," + std::to_string(nz);
    }
};

inline int outcome_cell(int a, int b, int c) { return 4 * a + 2 * b + c; }

}  // namespace gtnl
