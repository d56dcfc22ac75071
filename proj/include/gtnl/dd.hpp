#pragma once

#include "gtnl/hrep.hpp"
#include "gtnl/vrep.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gtnl {

struct ResourceLimitError : std::runtime_error {
    std::size_t rays_at_abort;
    std::size_t constraints_done;
    std::size_t constraints_total;

    ResourceLimitError(std::size_t rays, std::size_t done, std::size_t total)
        : std::runtime_error("double description aborted: " + std::to_string(rays) +
                             " intermediate rays after inserting " + std::to_string(done) +
                             " of " + std::to_string(total) + " constraints"),
          rays_at_abort(rays),
          constraints_done(done),
          constraints_total(total)
    {
    }
};

struct EnumerateOptions {
    std::size_t max_rays = 5'000'000;
    int threads = 0;  // 0 = hardware concurrency
    bool progress = false;
};

/// Complete, duplicate-free vertex list of the (bounded) polyhedron described
/// by h, in exact rationals, lexicographically sorted. Double description:
/// the equalities are Gauss-eliminated into an affine chart, the chart
/// inequalities are homogenized and inserted incrementally in order of
/// increasing nonzero count (ties lexicographic), and surviving rays are
/// mapped back to full coordinates. Unbounded input throws; exceeding
/// max_rays throws ResourceLimitError. An infeasible system yields an empty
/// vertex list.
VRep enumerate_vertices(const HRep& h, const EnumerateOptions& opt = {});

}  // namespace gtnl
