#include "gtnl/dd.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <thread>

namespace gtnl {

namespace {

using Row = std::vector<Int>;

struct Ray {
    std::vector<Int> coords;              // homogeneous, primitive integer
    std::vector<uint64_t> zbits;          // tight-constraint bitset
    int sign = 0;                         // scratch for the current insertion
};

void make_primitive(std::vector<Int>& v)
{
    Int g = 0;
    for (const auto& c : v) {
        g = boost::multiprecision::gcd(g, c);
        if (g == 1)
            return;
    }
    if (g == 0 || g == 1)
        return;
    for (auto& c : v)
        c /= g;
}

int sign_of_dot(const std::vector<std::pair<int, Int>>& sparse_row, const std::vector<Int>& coords)
{
    Int acc = 0;
    for (const auto& [j, c] : sparse_row)
        acc += c * coords[j];
    return acc.sign();
}

Int dot(const std::vector<std::pair<int, Int>>& sparse_row, const std::vector<Int>& coords)
{
    Int acc = 0;
    for (const auto& [j, c] : sparse_row)
        acc += c * coords[j];
    return acc;
}

// Solve B X = I over the rationals; columns of the inverse are the extreme
// rays of the simplicial cone {y : B y >= 0}.
std::vector<std::vector<Rat>> rational_inverse(const std::vector<Row>& b)
{
    const int n = static_cast<int>(b.size());
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n, Rat(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            a[i][j] = Rat(b[i][j]);
        a[i][n + i] = 1;
    }
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (a[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0)
            throw std::logic_error("singular basis in double description setup");
        std::swap(a[col], a[piv]);
        const Rat inv = Rat(1) / a[col][col];
        for (int j = 0; j < 2 * n; ++j)
            a[col][j] *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0)
                continue;
            const Rat f = a[i][col];
            for (int j = 0; j < 2 * n; ++j)
                a[i][j] -= f * a[col][j];
        }
    }
    std::vector<std::vector<Rat>> cols(n, std::vector<Rat>(n));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            cols[j][i] = a[i][n + j];
    return cols;
}

std::vector<Int> primitive_from_rational(const std::vector<Rat>& v)
{
    Int l = 1;
    for (const auto& q : v)
        l = boost::multiprecision::lcm(l, den(q));
    std::vector<Int> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = num(v[i]) * (l / den(v[i]));
    make_primitive(out);
    return out;
}

struct RowOrderKey {
    int nonzeros;
    const Row* row;
    bool operator<(const RowOrderKey& o) const
    {
        if (nonzeros != o.nonzeros)
            return nonzeros < o.nonzeros;
        return std::lexicographical_compare(row->begin(), row->end(), o.row->begin(),
                                            o.row->end());
    }
};

// Incremental rational rank tracker for picking the initial basis.
struct RankTracker {
    std::vector<std::vector<Rat>> rref;

    bool try_add(const Row& row)
    {
        std::vector<Rat> v(row.size());
        for (std::size_t i = 0; i < row.size(); ++i)
            v[i] = Rat(row[i]);
        for (const auto& r : rref) {
            std::size_t lead = 0;
            while (lead < r.size() && r[lead] == 0)
                ++lead;
            if (lead < r.size() && v[lead] != 0) {
                const Rat f = v[lead] / r[lead];
                for (std::size_t j = lead; j < v.size(); ++j)
                    v[j] -= f * r[j];
            }
        }
        if (std::all_of(v.begin(), v.end(), [](const Rat& q) { return q == 0; }))
            return false;
        // keep rref rows sorted by leading index for the elimination above
        rref.push_back(std::move(v));
        std::sort(rref.begin(), rref.end(), [](const auto& a, const auto& b) {
            std::size_t la = 0, lb = 0;
            while (la < a.size() && a[la] == 0)
                ++la;
            while (lb < b.size() && b[lb] == 0)
                ++lb;
            return la < lb;
        });
        // re-eliminate downward so later leads stay canonical
        for (std::size_t i = 1; i < rref.size(); ++i)
            for (std::size_t p = 0; p < i; ++p) {
                std::size_t lead = 0;
                while (lead < rref[p].size() && rref[p][lead] == 0)
                    ++lead;
                if (lead < rref[i].size() && rref[i][lead] != 0) {
                    const Rat f = rref[i][lead] / rref[p][lead];
                    for (std::size_t j = lead; j < rref[i].size(); ++j)
                        rref[i][j] -= f * rref[p][j];
                }
            }
        return true;
    }
};

void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t, std::size_t)>& fn)
{
    if (threads <= 1 || n < 4096) {
        fn(0, n);
        return;
    }
    std::vector<std::thread> pool;
    const std::size_t chunk = (n + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        const std::size_t lo = std::min(n, t * chunk);
        const std::size_t hi = std::min(n, lo + chunk);
        if (lo < hi)
            pool.emplace_back(fn, lo, hi);
    }
    for (auto& th : pool)
        th.join();
}

}  // namespace

VRep enumerate_vertices(const HRep& h, const EnumerateOptions& opt)
{
    h.check_consistent_shape();
    VRep out;
    out.dim = h.dim;
    out.provenance = h.label;

    const AffineChart chart = solve_equalities(h);
    if (!chart.consistent) {
        out.provenance += " [empty]";
        return out;
    }
    const int k = static_cast<int>(chart.basis.size());

    // Transform inequalities into the chart and homogenize:
    // row.x >= rhs  becomes  [-(rhs - row.point) | row.basis] . (t0, t) >= 0.
    std::vector<Row> rows;
    for (std::size_t i = 0; i < h.ineq.size(); ++i) {
        std::vector<Rat> g(k);
        for (int j = 0; j < k; ++j) {
            Rat acc(0);
            for (int d = 0; d < h.dim; ++d)
                if (h.ineq[i][d] != 0 && chart.basis[j][d] != 0)
                    acc += h.ineq[i][d] * chart.basis[j][d];
            g[j] = acc;
        }
        Rat c = h.ineq_rhs[i];
        for (int d = 0; d < h.dim; ++d)
            if (h.ineq[i][d] != 0 && chart.point[d] != 0)
                c -= h.ineq[i][d] * chart.point[d];
        // now the chart inequality is g.t >= c
        const bool g_zero = std::all_of(g.begin(), g.end(), [](const Rat& q) { return q == 0; });
        if (g_zero) {
            if (c > 0) {
                out.provenance += " [empty]";
                return out;  // 0 >= c > 0 is infeasible
            }
            continue;
        }
        std::vector<Rat> hom(k + 1);
        hom[0] = -c;
        for (int j = 0; j < k; ++j)
            hom[j + 1] = g[j];
        rows.push_back(primitive_from_rational(hom));
    }

    if (k == 0) {
        // single candidate point; rows were all checked above
        out.vertices.push_back(chart.point);
        return out;
    }

    {
        Row t0_row(k + 1, Int(0));
        t0_row[0] = 1;
        rows.push_back(std::move(t0_row));
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

    // insertion order: increasing nonzero count, ties lexicographic
    std::vector<RowOrderKey> order(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        int nz = 0;
        for (const auto& c : rows[i])
            nz += (c != 0);
        order[i] = {nz, &rows[i]};
    }
    std::sort(order.begin(), order.end());
    std::vector<Row> sorted_rows(order.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        sorted_rows[i] = *order[i].row;

    const std::size_t nrows = sorted_rows.size();
    const std::size_t words = (nrows + 63) / 64;

    // sparse form for dot products
    std::vector<std::vector<std::pair<int, Int>>> sparse(nrows);
    for (std::size_t i = 0; i < nrows; ++i)
        for (int j = 0; j <= k; ++j)
            if (sorted_rows[i][j] != 0)
                sparse[i].emplace_back(j, sorted_rows[i][j]);

    // greedy initial basis of k+1 independent rows
    std::vector<std::size_t> basis_rows;
    std::vector<bool> in_basis(nrows, false);
    {
        RankTracker tracker;
        for (std::size_t i = 0; i < nrows && basis_rows.size() < static_cast<std::size_t>(k) + 1;
             ++i)
            if (tracker.try_add(sorted_rows[i])) {
                basis_rows.push_back(i);
                in_basis[i] = true;
            }
    }
    if (basis_rows.size() != static_cast<std::size_t>(k) + 1)
        throw std::runtime_error("unbounded polyhedron rejected (homogenized cone not pointed): " +
                                 h.label);

    std::vector<Row> basis_mat;
    for (std::size_t i : basis_rows)
        basis_mat.push_back(sorted_rows[i]);
    const auto inverse_cols = rational_inverse(basis_mat);

    std::vector<Ray> rays(k + 1);
    for (int i = 0; i <= k; ++i) {
        rays[i].coords = primitive_from_rational(inverse_cols[i]);
        rays[i].zbits.assign(words, 0);
        for (std::size_t j = 0; j < basis_rows.size(); ++j)
            if (static_cast<int>(j) != i)
                rays[i].zbits[basis_rows[j] / 64] |= uint64_t(1) << (basis_rows[j] % 64);
    }

    const int nthreads = opt.threads > 0
                             ? opt.threads
                             : std::max(1u, std::thread::hardware_concurrency());
    bool prefilter_valid = true;  // popcount prefilter assumes full-dimensional cone
    std::size_t done = basis_rows.size();
    const auto t_start = std::chrono::steady_clock::now();

    for (std::size_t ri = 0; ri < nrows; ++ri) {
        if (in_basis[ri])
            continue;
        const auto& srow = sparse[ri];

        parallel_for(rays.size(), nthreads, [&](std::size_t lo, std::size_t hi) {
            for (std::size_t i = lo; i < hi; ++i)
                rays[i].sign = sign_of_dot(srow, rays[i].coords);
        });

        std::vector<std::size_t> pos, zer, neg;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            if (rays[i].sign > 0)
                pos.push_back(i);
            else if (rays[i].sign == 0)
                zer.push_back(i);
            else
                neg.push_back(i);
        }

        if (neg.empty()) {
            for (std::size_t i : zer)
                rays[i].zbits[ri / 64] |= uint64_t(1) << (ri % 64);
            ++done;
            continue;
        }
        if (pos.empty() && zer.empty()) {
            out.provenance += " [empty]";
            out.vertices.clear();
            return out;
        }
        if (pos.empty())
            prefilter_valid = false;  // cone drops into the hyperplane

        // candidate pairs passing the common-tight-count filter
        struct Pair {
            std::size_t p, m;
        };
        std::vector<Pair> cand;
        const int need = k - 1;
        std::vector<uint64_t> common(words);
        for (std::size_t p : pos)
            for (std::size_t m : neg) {
                int cnt = 0;
                for (std::size_t w = 0; w < words; ++w) {
                    common[w] = rays[p].zbits[w] & rays[m].zbits[w];
                    cnt += __builtin_popcountll(common[w]);
                }
                if (prefilter_valid && cnt < need)
                    continue;
                cand.push_back({p, m});
            }

        // combinatorial adjacency: no third ray's tight set contains the pair's
        std::vector<char> adjacent(cand.size(), 0);
        parallel_for(cand.size(), nthreads, [&](std::size_t lo, std::size_t hi) {
            std::vector<uint64_t> cw(words);
            for (std::size_t ci = lo; ci < hi; ++ci) {
                const auto [p, m] = cand[ci];
                for (std::size_t w = 0; w < words; ++w)
                    cw[w] = rays[p].zbits[w] & rays[m].zbits[w];
                bool adj = true;
                for (std::size_t r = 0; r < rays.size() && adj; ++r) {
                    if (r == p || r == m)
                        continue;
                    bool contained = true;
                    for (std::size_t w = 0; w < words; ++w)
                        if (cw[w] & ~rays[r].zbits[w]) {
                            contained = false;
                            break;
                        }
                    if (contained)
                        adj = false;
                }
                adjacent[ci] = adj;
            }
        });

        std::vector<Ray> next;
        next.reserve(pos.size() + zer.size() + cand.size());
        for (std::size_t i = 0; i < rays.size(); ++i)
            if (rays[i].sign >= 0) {
                if (rays[i].sign == 0)
                    rays[i].zbits[ri / 64] |= uint64_t(1) << (ri % 64);
                next.push_back(std::move(rays[i]));
            }

        // new rays from adjacent crossing pairs (deterministic pair order)
        std::vector<std::size_t> adj_ids;
        for (std::size_t ci = 0; ci < cand.size(); ++ci)
            if (adjacent[ci])
                adj_ids.push_back(ci);
        std::size_t base = next.size();
        next.resize(base + adj_ids.size());
        parallel_for(adj_ids.size(), nthreads, [&](std::size_t lo, std::size_t hi) {
            for (std::size_t t = lo; t < hi; ++t) {
                const auto [p, m] = cand[adj_ids[t]];
                const Int alpha = dot(srow, rays[p].coords);
                const Int beta = -dot(srow, rays[m].coords);
                Ray nr;
                nr.coords.resize(k + 1);
                for (int j = 0; j <= k; ++j)
                    nr.coords[j] = alpha * rays[m].coords[j] + beta * rays[p].coords[j];
                make_primitive(nr.coords);
                nr.zbits.resize(words);
                for (std::size_t w = 0; w < words; ++w)
                    nr.zbits[w] = rays[p].zbits[w] & rays[m].zbits[w];
                nr.zbits[ri / 64] |= uint64_t(1) << (ri % 64);
                next[base + t] = std::move(nr);
            }
        });

        rays.swap(next);
        ++done;

        if (rays.size() > opt.max_rays)
            throw ResourceLimitError(rays.size(), done, nrows);
        if (opt.progress) {
            const auto dt = std::chrono::duration_cast<std::chrono::milliseconds>(
                                std::chrono::steady_clock::now() - t_start)
                                .count();
            std::cerr << "[dd] " << done << "/" << nrows << " constraints, " << rays.size()
                      << " rays, " << dt << " ms\n";
        }
    }

    // Rays at infinity (t0 = 0) mean either an empty polytope (no finite ray
    // at all) or an unbounded one (finite rays plus a recession direction).
    const std::size_t finite =
        static_cast<std::size_t>(std::count_if(rays.begin(), rays.end(), [](const Ray& r) {
            return r.coords[0] != 0;
        }));
    if (finite == 0) {
        out.provenance += " [empty]";
        return out;
    }
    if (finite < rays.size())
        throw std::runtime_error("unbounded polyhedron rejected (recession ray found): " +
                                 h.label);

    // map homogeneous rays back to vertices of the original polytope
    for (const auto& ray : rays) {
        std::vector<Rat> x = chart.point;
        for (int j = 0; j < k; ++j) {
            if (ray.coords[j + 1] == 0)
                continue;
            const Rat t(ray.coords[j + 1], ray.coords[0]);
            for (int d = 0; d < h.dim; ++d)
                if (chart.basis[j][d] != 0)
                    x[d] += t * chart.basis[j][d];
        }
        out.vertices.push_back(std::move(x));
    }
    out.sort_and_dedupe();
    return out;
}

}  // namespace gtnl
