#include "gtnl/relabel.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace gtnl {

Relabeling::Relabeling(const Scenario& s) : scenario(s), perm(s.entries())
{
    std::iota(perm.begin(), perm.end(), 0);
}

Relabeling Relabeling::compose(const Relabeling& then) const
{
    if (scenario != then.scenario)
        throw std::invalid_argument("composing relabelings of different scenarios");
    Relabeling out(scenario);
    for (std::size_t i = 0; i < perm.size(); ++i)
        out.perm[i] = then.perm[perm[i]];
    return out;
}

Relabeling Relabeling::inverse() const
{
    Relabeling out(scenario);
    for (std::size_t i = 0; i < perm.size(); ++i)
        out.perm[perm[i]] = static_cast<int>(i);
    return out;
}

Relabeling make_relabeling(const Scenario& s, const std::array<int, 3>& party_to,
                           const std::array<std::vector<int>, 3>& setting_map,
                           const std::array<std::vector<int>, 3>& flip)
{
    const std::array<int, 3> counts = {s.nx, s.ny, s.nz};
    for (int p = 0; p < 3; ++p) {
        if (counts[party_to[p]] != counts[p])
            throw std::invalid_argument("party permutation does not preserve setting counts");
        if (static_cast<int>(setting_map[p].size()) != counts[p] ||
            static_cast<int>(flip[p].size()) != counts[p])
            throw std::invalid_argument("setting map / flip size mismatch");
    }
    Relabeling r(s);
    for (int x = 0; x < s.nx; ++x)
        for (int y = 0; y < s.ny; ++y)
            for (int z = 0; z < s.nz; ++z)
                for (int cell = 0; cell < 8; ++cell) {
                    const int out[3] = {(cell >> 2) & 1, (cell >> 1) & 1, cell & 1};
                    const int set[3] = {x, y, z};
                    int nset[3], nout[3];
                    for (int p = 0; p < 3; ++p) {
                        const int sp = setting_map[p][set[p]];
                        nset[party_to[p]] = sp;
                        nout[party_to[p]] = out[p] ^ flip[p][sp];
                    }
                    r.perm[s.index(out[0], out[1], out[2], x, y, z)] =
                        s.index(nout[0], nout[1], nout[2], nset[0], nset[1], nset[2]);
                }
    return r;
}

namespace {

std::vector<std::vector<int>> permutations_of(int n)
{
    std::vector<int> base(n);
    std::iota(base.begin(), base.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

std::vector<Relabeling> build_group(const Scenario& s)
{
    const std::array<int, 3> counts = {s.nx, s.ny, s.nz};
    std::vector<std::array<int, 3>> party_perms;
    for (const auto& p : permutations_of(3)) {
        bool ok = true;
        for (int i = 0; i < 3; ++i)
            ok = ok && counts[p[i]] == counts[i];
        if (ok)
            party_perms.push_back({p[0], p[1], p[2]});
    }

    std::array<std::vector<std::vector<int>>, 3> setting_perms;
    for (int p = 0; p < 3; ++p)
        setting_perms[p] = permutations_of(counts[p]);

    std::vector<Relabeling> group;
    for (const auto& pp : party_perms)
        for (const auto& sa : setting_perms[0])
            for (const auto& sb : setting_perms[1])
                for (const auto& sc : setting_perms[2]) {
                    const int nflip = counts[0] + counts[1] + counts[2];
                    for (int mask = 0; mask < (1 << nflip); ++mask) {
                        std::array<std::vector<int>, 3> flips;
                        int bit = 0;
                        for (int p = 0; p < 3; ++p) {
                            flips[p].resize(counts[p]);
                            for (int t = 0; t < counts[p]; ++t)
                                flips[p][t] = (mask >> bit++) & 1;
                        }
                        group.push_back(make_relabeling(s, pp, {sa, sb, sc}, flips));
                    }
                }
    return group;
}

}  // namespace

const std::vector<Relabeling>& relabeling_group(const Scenario& s)
{
    static std::mutex mu;
    static std::map<std::array<int, 3>, std::vector<Relabeling>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto [it, inserted] = cache.try_emplace({s.nx, s.ny, s.nz});
    if (inserted)
        it->second = build_group(s);
    return it->second;
}

BellVector relabel(const BellVector& w, const Relabeling& r)
{
    if (w.scenario != r.scenario)
        throw std::invalid_argument("relabeling scenario mismatch");
    BellVector out = w;
    for (std::size_t i = 0; i < w.coeffs.size(); ++i)
        out.coeffs[r.perm[i]] = w.coeffs[i];
    return out;
}

BehaviorQ canonical_form(const BehaviorQ& b)
{
    const auto& group = relabeling_group(b.scenario);
    BehaviorQ candidate(b.scenario);
    BehaviorQ min_so_far(b.scenario);
    bool have = false;
    for (const auto& g : group) {
        for (std::size_t i = 0; i < b.entries.size(); ++i)
            candidate.entries[g.perm[i]] = b.entries[i];
        if (!have || std::lexicographical_compare(candidate.entries.begin(),
                                                  candidate.entries.end(),
                                                  min_so_far.entries.begin(),
                                                  min_so_far.entries.end())) {
            min_so_far = candidate;
            have = true;
        }
    }
    return min_so_far;
}

}  // namespace gtnl
