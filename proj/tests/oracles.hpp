#pragma once
// Independent reference implementations used only by tests.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "chordal/gauss.hpp"
#include "chordal/laurent.hpp"

namespace oracle {

using chordal::gauss_diagram;
using chordal::laurent_poly;

// Components after smoothing, found by walking the gaps between positions.
inline int traverse_components(const gauss_diagram& d, const std::vector<int>& labels, const std::vector<int>& choice)
{
    const auto& w = d.component(0);
    int n = static_cast<int>(w.size());
    if (labels.empty() || n == 0) return 1;
    std::vector<int> partner(n, -1);
    std::vector<char> oriented(n, 0);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const auto& c = d.chord_of(labels[i]);
        int p = static_cast<int>(c.over.offset), q = static_cast<int>(c.under.offset);
        partner[p] = q;
        partner[q] = p;
        bool o = (c.sign > 0) == (choice[i] == 0);
        oriented[p] = oriented[q] = o;
    }
    std::vector<char> used(n, 0);
    int cycles = 0;
    for (int g0 = 0; g0 < n; ++g0) {
        if (used[g0]) continue;
        ++cycles;
        int g = g0, dir = 1;
        while (!used[g]) {
            used[g] = 1;
            int x = dir > 0 ? (g + 1) % n : g;  // position reached
            if (partner[x] < 0) {
                g = dir > 0 ? x : (x - 1 + n) % n;
                continue;
            }
            int y = partner[x];
            bool fwd = dir > 0;
            if (oriented[x]) {
                g = fwd ? y : (y - 1 + n) % n;
                dir = fwd ? 1 : -1;
            } else {
                g = fwd ? (y - 1 + n) % n : y;
                dir = fwd ? -1 : 1;
            }
        }
    }
    return cycles;
}

inline laurent_poly loop_a()
{
    laurent_poly d;
    d.add_term(2, -1);
    d.add_term(-2, -1);
    return d;
}

// Full state sum over the given chords, normalized, in t.
inline laurent_poly brute_jones(const gauss_diagram& d, const std::vector<int>& labels)
{
    std::size_t k = labels.size();
    laurent_poly br;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << k); ++bits) {
        std::vector<int> choice(k);
        int a = 0;
        for (std::size_t i = 0; i < k; ++i) {
            choice[i] = (bits >> i) & 1;
            a += choice[i] ? -1 : 1;
        }
        int comps = traverse_components(d, labels, choice);
        br += laurent_poly::monomial(a) * loop_a().pow(comps - 1);
    }
    int w = chordal::writhe(d);
    laurent_poly norm = laurent_poly::monomial(-3LL * w, w % 2 == 0 ? 1 : -1);
    return (norm * br).invert_variable();
}

// Kauffman bracket from a planar diagram code: the A-smoothing of X[a,b,c,d]
// joins (a,b) and (c,d), the B-smoothing joins (a,d) and (b,c).
inline laurent_poly pd_jones(const std::vector<std::array<int, 4>>& pd, int writhe)
{
    int edges = 0;
    for (auto& x : pd)
        for (int e : x) edges = std::max(edges, e);
    std::size_t k = pd.size();
    laurent_poly br;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << k); ++bits) {
        std::vector<int> parent(edges + 1);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
        int a = 0;
        for (std::size_t i = 0; i < k; ++i) {
            auto& x = pd[i];
            bool b = (bits >> i) & 1;
            a += b ? -1 : 1;
            if (!b) {
                parent[find(x[0])] = find(x[1]);
                parent[find(x[2])] = find(x[3]);
            } else {
                parent[find(x[0])] = find(x[3]);
                parent[find(x[1])] = find(x[2]);
            }
        }
        int loops = 0;
        for (int e = 1; e <= edges; ++e) loops += find(e) == e;
        br += laurent_poly::monomial(a) * loop_a().pow(loops - 1);
    }
    laurent_poly norm = laurent_poly::monomial(-3LL * writhe, writhe % 2 == 0 ? 1 : -1);
    return (norm * br).invert_variable();
}

// Gauss code of a planar diagram code. X[i,j,k,l] lists edges counterclockwise
// from the incoming under edge; the crossing is positive when the over strand
// runs from l to j.
inline std::string pd_to_gauss(const std::vector<std::array<int, 4>>& pd)
{
    int edges = 2 * static_cast<int>(pd.size());
    auto succ = [&](int e) { return e % edges + 1; };
    std::string out;
    for (int e = 1; e <= edges; ++e) {
        for (std::size_t x = 0; x < pd.size(); ++x) {
            const auto& c = pd[x];
            bool positive = c[1] == succ(c[3]);
            int over_in = positive ? c[3] : c[1];
            char pass = c[0] == e ? 'U' : over_in == e ? 'O' : 0;
            if (!pass) continue;
            if (!out.empty()) out += ' ';
            out += pass + std::to_string(x + 1) + (positive ? "+" : "-");
        }
    }
    return out;
}

// Ordered selections of distinct chords with the given indices.
inline long long brute_a_tuple(const gauss_diagram& d, const std::map<int, int>& ind, const std::vector<int>& xs)
{
    const auto& cs = d.chords();
    long long total = 0;
    std::vector<int> pick;
    std::function<void(std::size_t, long long)> go = [&](std::size_t i, long long prod) {
        if (i == xs.size()) {
            total += prod;
            return;
        }
        for (auto& c : cs) {
            if (std::find(pick.begin(), pick.end(), c.label) != pick.end()) continue;
            if (ind.at(c.label) != xs[i]) continue;
            pick.push_back(c.label);
            go(i + 1, prod * c.sign);
            pick.pop_back();
        }
    };
    go(0, 1);
    return total;
}

// Arc colorings by exhaustive assignment; arcs found by walking to the next
// under-passage.
template <class Op>
std::uint64_t brute_quandle_colorings(const gauss_diagram& d, int q, const std::map<int, int>& ind, Op op)
{
    const auto& w = d.component(0);
    int n = static_cast<int>(w.size());
    std::vector<int> under_pos;
    for (int p = 0; p < n; ++p)
        if (w[p].is_under()) under_pos.push_back(p);
    int arcs = std::max<int>(1, static_cast<int>(under_pos.size()));
    auto arc_of = [&](int p) {
        // index of the last under-passage at or before p, cyclically
        int best = -1;
        for (int k = 0; k < static_cast<int>(under_pos.size()); ++k)
            if (under_pos[k] <= p) best = k;
        return best < 0 ? arcs - 1 : best;
    };
    std::uint64_t total = 0;
    std::vector<int> col(arcs, 0);
    while (true) {
        bool ok = true;
        for (auto& c : d.chords()) {
            int out = arc_of(static_cast<int>(c.under.offset));
            int in = (out - 1 + arcs) % arcs;
            int over = arc_of(static_cast<int>(c.over.offset));
            int i = ind.at(c.label);
            if (c.sign > 0 ? op(i, col[in], col[over]) != col[out] : op(i, col[out], col[over]) != col[in]) {
                ok = false;
                break;
            }
        }
        total += ok;
        int k = 0;
        while (k < arcs && ++col[k] == q) col[k++] = 0;
        if (k == arcs) break;
    }
    return total;
}

} // namespace oracle
