#include "chordal/bracket.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <numeric>

#include "chordal/error.hpp"
#include "chordal/index.hpp"

namespace chordal {

std::vector<int> index_class(const gauss_diagram& d, int n)
{
    if (n < 0) throw diagram_error("index class needs n >= 0");
    std::vector<int> out;
    for (auto [label, ind] : chord_indices(d))
        if (n == 0 ? ind == 0 : ind % n == 0) out.push_back(label);
    return out;
}

std::uint64_t state_cap()
{
    if (const char* env = std::getenv("CHORDAL_STATE_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
    }
    return std::uint64_t{1} << 20;
}

namespace {

struct union_find {
    std::vector<int> parent;
    explicit union_find(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x)
    {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

// Piece j runs strictly between cut offsets cuts[j] and cuts[j+1]. Node 2j
// is its start (leaving cuts[j]) and node 2j+1 its finish (arriving at
// cuts[j+1]).
struct piece_layout {
    std::vector<std::size_t> cuts;
    std::map<std::size_t, std::size_t> rank;  // offset -> index in cuts

    int out_node(std::size_t offset) const { return 2 * static_cast<int>(rank.at(offset)); }
    int in_node(std::size_t offset) const
    {
        std::size_t k = cuts.size();
        return 2 * static_cast<int>((rank.at(offset) + k - 1) % k) + 1;
    }
};

piece_layout layout_for(const gauss_diagram& d, const std::vector<int>& labels)
{
    piece_layout lay;
    for (int l : labels) {
        const chord& c = d.chord_of(l);
        lay.cuts.push_back(c.over.offset);
        lay.cuts.push_back(c.under.offset);
    }
    std::sort(lay.cuts.begin(), lay.cuts.end());
    for (std::size_t j = 0; j < lay.cuts.size(); ++j) lay.rank[lay.cuts[j]] = j;
    return lay;
}

bool oriented_choice(int sign, int choice) { return (sign > 0) == (choice == 0); }

// Node pairs joined by smoothing one chord.
std::array<std::pair<int, int>, 2> joins(const piece_layout& lay, const chord& c, bool oriented)
{
    std::size_t p = c.over.offset, q = c.under.offset;
    if (oriented) return {{{lay.in_node(p), lay.out_node(q)}, {lay.in_node(q), lay.out_node(p)}}};
    return {{{lay.in_node(p), lay.in_node(q)}, {lay.out_node(p), lay.out_node(q)}}};
}

laurent_poly loop_value()
{
    // d = -A^2 - A^-2, in A-exponent keys.
    laurent_poly v;
    v.add_term(2, -1);
    v.add_term(-2, -1);
    return v;
}

void check_states(std::size_t k)
{
    if (k >= 63 || (std::uint64_t{1} << k) > state_cap())
        throw resource_error("state enumeration over " + std::to_string(k) + " crossings exceeds the cap of " +
                             std::to_string(state_cap()) + " states");
}

laurent_poly writhe_normalizer(const gauss_diagram& d)
{
    // (-A^3)^(-w)
    int w = writhe(d);
    return laurent_poly::monomial(-3LL * w, (w % 2 == 0) ? 1 : -1);
}

} // namespace

int state_components(const gauss_diagram& d, const std::vector<int>& labels, std::uint64_t choice_bits)
{
    require_virtual_knot(d, "the bracket");
    if (labels.empty()) return 1;
    auto lay = layout_for(d, labels);
    std::size_t pieces = lay.cuts.size();
    union_find uf(2 * pieces);
    int comps = static_cast<int>(2 * pieces);
    for (std::size_t j = 0; j < pieces; ++j) comps -= uf.unite(2 * j, 2 * j + 1);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const chord& c = d.chord_of(labels[i]);
        for (auto [a, b] : joins(lay, c, oriented_choice(c.sign, (choice_bits >> i) & 1))) comps -= uf.unite(a, b);
    }
    return comps;
}

smoothing_state smooth_state(const gauss_diagram& d, const std::map<int, int>& choice)
{
    require_virtual_knot(d, "the bracket");
    smoothing_state st;
    st.choice = choice;
    std::vector<int> labels;
    for (auto [l, v] : choice) {
        d.chord_of(l);
        if (v != 0 && v != 1) throw diagram_error("smoothing choices are 0 or 1");
        labels.push_back(l);
        (v == 0 ? st.count0 : st.count1)++;
    }
    const auto& w = d.component(0);
    auto retained = [&](std::size_t from, std::size_t to, std::vector<flat_token>& out, bool backwards) {
        // Offsets strictly between from and to, read forwards or backwards.
        std::vector<flat_token> seg;
        std::size_t n = w.size();
        for (std::size_t p = (from + 1) % n; p != to; p = (p + 1) % n) seg.push_back(flat_token{false, w[p].label});
        if (backwards) std::reverse(seg.begin(), seg.end());
        out.insert(out.end(), seg.begin(), seg.end());
    };
    if (labels.empty()) {
        std::vector<flat_token> curve;
        for (auto& t : w) curve.push_back(flat_token{false, t.label});
        st.curves.components.push_back(curve);
        st.components = 1;
        return st;
    }
    auto lay = layout_for(d, labels);
    std::size_t pieces = lay.cuts.size();
    std::vector<int> partner(2 * pieces, -1);
    for (int l : labels) {
        const chord& c = d.chord_of(l);
        for (auto [a, b] : joins(lay, c, oriented_choice(c.sign, choice.at(l)))) {
            partner[a] = b;
            partner[b] = a;
        }
    }
    std::vector<char> seen(pieces, 0);
    for (std::size_t start = 0; start < pieces; ++start) {
        if (seen[start]) continue;
        std::vector<flat_token> curve;
        int node = static_cast<int>(2 * start);
        do {
            std::size_t j = node / 2;
            seen[j] = 1;
            bool forward = node % 2 == 0;
            std::size_t from = lay.cuts[j], to = lay.cuts[(j + 1) % pieces];
            retained(from, to, curve, !forward);
            int exit = forward ? node + 1 : node - 1;
            node = partner[exit];
        } while (node != static_cast<int>(2 * start));
        st.curves.components.push_back(std::move(curve));
    }
    st.components = static_cast<int>(st.curves.components.size());
    return st;
}

laurent_poly indexed_bracket(const gauss_diagram& d, int n)
{
    require_virtual_knot(d, "the bracket");
    auto labels = index_class(d, n);
    check_states(labels.size());
    std::size_t k = labels.size();
    std::vector<laurent_poly> dpow{laurent_poly(1)};
    laurent_poly total;
    std::map<std::pair<int, int>, long long> tally;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << k); ++bits) {
        int ones = __builtin_popcountll(bits);
        int comps = state_components(d, labels, bits);
        tally[{static_cast<int>(k) - 2 * ones, comps}] += 1;
    }
    for (auto [key, mult] : tally) {
        auto [aexp, comps] = key;
        while (static_cast<int>(dpow.size()) < comps) dpow.push_back(dpow.back() * loop_value());
        total += laurent_poly::monomial(aexp, mult) * dpow[comps - 1];
    }
    return total;
}

laurent_poly indexed_jones(const gauss_diagram& d, int n)
{
    return (writhe_normalizer(d) * indexed_bracket(d, n)).from_bracket();
}

bool span_bound_check(const gauss_diagram& d, int n)
{
    auto [num, den] = indexed_jones(d, n).span();
    return num <= static_cast<std::int64_t>(index_class(d, n).size()) * den;
}

std::map<std::string, graphical_term> graphical_indexed_jones(const gauss_diagram& d, int n)
{
    require_virtual_knot(d, "the bracket");
    auto labels = index_class(d, n);
    check_states(labels.size());
    std::size_t k = labels.size();
    laurent_poly norm = writhe_normalizer(d);
    std::map<std::string, graphical_term> acc;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << k); ++bits) {
        std::map<int, int> choice;
        for (std::size_t i = 0; i < k; ++i) choice[labels[i]] = (bits >> i) & 1;
        auto st = smooth_state(d, choice);
        flat_diagram kept;
        int free_circles = 0;
        for (auto& c : st.curves.components) {
            if (c.empty())
                ++free_circles;
            else
                kept.components.push_back(c);
        }
        if (kept.components.empty()) {
            kept.components.emplace_back();
            --free_circles;
        }
        auto canon = canonical_flat(kept, true);
        laurent_poly term = laurent_poly::monomial(st.count0 - st.count1) * loop_value().pow(free_circles);
        auto& slot = acc[canon.to_string()];
        slot.curves = static_cast<int>(canon.components.size());
        slot.coeff += term;
    }
    std::map<std::string, graphical_term> out;
    for (auto& [key, t] : acc) {
        laurent_poly c = (norm * t.coeff).from_bracket();
        if (!c.is_zero()) out[key] = graphical_term{t.curves, c};
    }
    return out;
}

laurent_poly specialize_to_circles(const std::map<std::string, graphical_term>& g)
{
    laurent_poly total;
    laurent_poly loop_t = loop_value().from_bracket();
    for (auto& [key, t] : g) total += t.coeff * loop_t.pow(t.curves - 1);
    return total;
}

} // namespace chordal
