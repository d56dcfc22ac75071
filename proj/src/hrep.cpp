#include "gtnl/hrep.hpp"

namespace gtnl {

void HRep::check_consistent_shape() const
{
    auto check_rows = [&](const std::vector<std::vector<Rat>>& rows,
                          const std::vector<Rat>& rhs) {
        if (rows.size() != rhs.size())
            throw std::invalid_argument("hrep row/rhs count mismatch");
        for (const auto& r : rows)
            if (static_cast<int>(r.size()) != dim)
                throw std::invalid_argument("hrep row width mismatch");
    };
    check_rows(eq, eq_rhs);
    check_rows(ineq, ineq_rhs);
}

HRep build_ns_hrep(const Scenario& s)
{
    HRep h;
    h.dim = s.entries();
    h.label = "ns(" + s.str() + ")";

    auto add_marginal_pair = [&](auto&& index_of, int n_sum, int sA, int sB) {
        // one equality: sum over the marginalized outcome at setting sA minus
        // the same sum at setting sB equals zero
        std::vector<Rat> row(h.dim, Rat(0));
        for (int o = 0; o < n_sum; ++o) {
            row[index_of(o, sA)] += 1;
            row[index_of(o, sB)] -= 1;
        }
        h.eq.push_back(std::move(row));
        h.eq_rhs.push_back(0);
    };

    // A's setting leaves the (b,c) marginal unchanged
    for (int y = 0; y < s.ny; ++y)
        for (int z = 0; z < s.nz; ++z)
            for (int ob = 0; ob < 2; ++ob)
                for (int oc = 0; oc < 2; ++oc)
                    for (int x = 0; x + 1 < s.nx; ++x)
                        add_marginal_pair(
                            [&](int oa, int xs) { return s.index(oa, ob, oc, xs, y, z); }, 2,
                            x, x + 1);
    // B
    for (int x = 0; x < s.nx; ++x)
        for (int z = 0; z < s.nz; ++z)
            for (int oa = 0; oa < 2; ++oa)
                for (int oc = 0; oc < 2; ++oc)
                    for (int y = 0; y + 1 < s.ny; ++y)
                        add_marginal_pair(
                            [&](int ob, int ys) { return s.index(oa, ob, oc, x, ys, z); }, 2,
                            y, y + 1);
    // C
    for (int x = 0; x < s.nx; ++x)
        for (int y = 0; y < s.ny; ++y)
            for (int oa = 0; oa < 2; ++oa)
                for (int ob = 0; ob < 2; ++ob)
                    for (int z = 0; z + 1 < s.nz; ++z)
                        add_marginal_pair(
                            [&](int oc, int zs) { return s.index(oa, ob, oc, x, y, zs); }, 2,
                            z, z + 1);

    // normalization per settings triple
    for (int blk = 0; blk < s.settings_triples(); ++blk) {
        std::vector<Rat> row(h.dim, Rat(0));
        for (int cell = 0; cell < 8; ++cell)
            row[blk * 8 + cell] = 1;
        h.eq.push_back(std::move(row));
        h.eq_rhs.push_back(1);
    }

    // non-negativity
    for (int i = 0; i < h.dim; ++i) {
        std::vector<Rat> row(h.dim, Rat(0));
        row[i] = 1;
        h.ineq.push_back(std::move(row));
        h.ineq_rhs.push_back(0);
    }
    return h;
}

HRep build_ns_hrep_bipartite(int nx, int ny)
{
    if (nx < 1 || ny < 1)
        throw std::invalid_argument("setting counts must be >= 1");
    HRep h;
    h.dim = 4 * nx * ny;
    h.label = "ns2(" + std::to_string(nx) + "," + std::to_string(ny) + ")";
    auto idx = [&](int a, int b, int x, int y) { return (x * ny + y) * 4 + 2 * a + b; };

    for (int y = 0; y < ny; ++y)
        for (int ob = 0; ob < 2; ++ob)
            for (int x = 0; x + 1 < nx; ++x) {
                std::vector<Rat> row(h.dim, Rat(0));
                for (int oa = 0; oa < 2; ++oa) {
                    row[idx(oa, ob, x, y)] += 1;
                    row[idx(oa, ob, x + 1, y)] -= 1;
                }
                h.eq.push_back(std::move(row));
                h.eq_rhs.push_back(0);
            }
    for (int x = 0; x < nx; ++x)
        for (int oa = 0; oa < 2; ++oa)
            for (int y = 0; y + 1 < ny; ++y) {
                std::vector<Rat> row(h.dim, Rat(0));
                for (int ob = 0; ob < 2; ++ob) {
                    row[idx(oa, ob, x, y)] += 1;
                    row[idx(oa, ob, x, y + 1)] -= 1;
                }
                h.eq.push_back(std::move(row));
                h.eq_rhs.push_back(0);
            }
    for (int x = 0; x < nx; ++x)
        for (int y = 0; y < ny; ++y) {
            std::vector<Rat> row(h.dim, Rat(0));
            for (int c = 0; c < 4; ++c)
                row[(x * ny + y) * 4 + c] = 1;
            h.eq.push_back(std::move(row));
            h.eq_rhs.push_back(1);
        }
    for (int i = 0; i < h.dim; ++i) {
        std::vector<Rat> row(h.dim, Rat(0));
        row[i] = 1;
        h.ineq.push_back(std::move(row));
        h.ineq_rhs.push_back(0);
    }
    return h;
}

HRep intersect_halfspace(HRep h, const BellVector& w)
{
    if (static_cast<int>(w.coeffs.size()) != h.dim)
        throw std::invalid_argument("witness dimension mismatch");
    std::vector<Rat> row(h.dim);
    for (int i = 0; i < h.dim; ++i)
        row[i] = -w.coeffs[i];
    h.ineq.push_back(std::move(row));
    h.ineq_rhs.push_back(-w.bound);
    h.label += " & " + w.label + "<=" + rat_to_string(w.bound);
    return h;
}

HRep intersect_hyperplane(HRep h, const BellVector& w)
{
    if (static_cast<int>(w.coeffs.size()) != h.dim)
        throw std::invalid_argument("witness dimension mismatch");
    h.eq.push_back(w.coeffs);
    h.eq_rhs.push_back(w.bound);
    h.label += " & " + w.label + "=" + rat_to_string(w.bound);
    return h;
}

AffineChart solve_equalities(const HRep& h)
{
    h.check_consistent_shape();
    const int m = static_cast<int>(h.eq.size());
    const int n = h.dim;

    // row-reduce [eq | rhs]
    std::vector<std::vector<Rat>> a(m, std::vector<Rat>(n + 1));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j)
            a[i][j] = h.eq[i][j];
        a[i][n] = h.eq_rhs[i];
    }

    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < n && row < m; ++col) {
        int piv = -1;
        for (int i = row; i < m; ++i)
            if (a[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0)
            continue;
        std::swap(a[row], a[piv]);
        const Rat inv = Rat(1) / a[row][col];
        for (int j = col; j <= n; ++j)
            a[row][j] *= inv;
        for (int i = 0; i < m; ++i) {
            if (i == row || a[i][col] == 0)
                continue;
            const Rat factor = a[i][col];
            for (int j = col; j <= n; ++j)
                a[i][j] -= factor * a[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }

    AffineChart chart;
    for (int i = row; i < m; ++i)
        if (a[i][n] != 0) {
            chart.consistent = false;
            return chart;
        }

    std::vector<bool> is_pivot(n, false);
    for (int c : pivot_col)
        is_pivot[c] = true;

    chart.point.assign(n, Rat(0));
    for (int i = 0; i < row; ++i)
        chart.point[pivot_col[i]] = a[i][n];

    for (int free = 0; free < n; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Rat> column(n, Rat(0));
        column[free] = 1;
        for (int i = 0; i < row; ++i)
            column[pivot_col[i]] = -a[i][free];
        chart.basis.push_back(std::move(column));
    }
    return chart;
}

int affine_dimension(const HRep& h)
{
    AffineChart chart = solve_equalities(h);
    if (!chart.consistent)
        return -1;
    return static_cast<int>(chart.basis.size());
}

}  // namespace gtnl
