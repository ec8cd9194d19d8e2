#include "chordal/index.hpp"

#include "chordal/error.hpp"

namespace chordal {

namespace {

// Marks offsets strictly between `from` and `to`, walking forward.
std::vector<char> open_arc(std::size_t n, std::size_t from, std::size_t to)
{
    std::vector<char> in(n, 0);
    for (std::size_t p = (from + 1) % n; p != to; p = (p + 1) % n) in[p] = 1;
    return in;
}

int index_with_arc(const gauss_diagram& d, const chord& c)
{
    auto inside = open_arc(d.component(0).size(), c.over.offset, c.under.offset);
    int v = 0;
    for (auto& e : d.chords()) {
        if (e.label == c.label) continue;
        bool o = inside[e.over.offset], u = inside[e.under.offset];
        if (o != u) v += o ? e.sign : -e.sign;
    }
    return v;
}

} // namespace

int chord_index_intersection(const gauss_diagram& d, int label)
{
    require_virtual_knot(d, "the chord index");
    return index_with_arc(d, d.chord_of(label));
}

std::map<int, int> chord_indices(const gauss_diagram& d)
{
    require_virtual_knot(d, "the chord index");
    std::map<int, int> out;
    for (auto& c : d.chords()) out[c.label] = index_with_arc(d, c);
    return out;
}

gauss_diagram smooth_chord(const gauss_diagram& d, int label)
{
    require_virtual_knot(d, "smoothing");
    const chord& c = d.chord_of(label);
    const auto& w = d.component(0);
    std::size_t n = w.size();
    std::vector<token> k1, k2;
    for (std::size_t p = (c.over.offset + 1) % n; p != c.under.offset; p = (p + 1) % n) k1.push_back(w[p]);
    for (std::size_t p = (c.under.offset + 1) % n; p != c.over.offset; p = (p + 1) % n) k2.push_back(w[p]);
    return gauss_diagram({k1, k2});
}

int chord_index_linking(const gauss_diagram& d, int label)
{
    auto link = smooth_chord(d, label);
    int lk_over = 0, lk_under = 0;
    for (auto& e : link.chords()) {
        if (e.over.comp == e.under.comp) continue;
        (e.over.comp == 0 ? lk_over : lk_under) += e.sign;
    }
    return lk_over - lk_under;
}

laurent_poly writhe_polynomial(const gauss_diagram& d)
{
    laurent_poly p;
    for (auto [label, ind] : chord_indices(d))
        if (ind != 0) p.add_term(4LL * ind, d.chord_of(label).sign);
    return p;
}

laurent_poly affine_index_polynomial(const gauss_diagram& d)
{
    laurent_poly p;
    for (auto [label, ind] : chord_indices(d)) {
        int s = d.chord_of(label).sign;
        p.add_term(4LL * ind, s);
        p.add_term(0, -s);
    }
    return p;
}

long long index_coefficient(const gauss_diagram& d, int n)
{
    long long a = 0;
    for (auto [label, ind] : chord_indices(d))
        if (ind == n) a += d.chord_of(label).sign;
    if (n == 0) a -= writhe(d);
    return a;
}

long long odd_writhe(const gauss_diagram& d)
{
    long long a = 0;
    for (auto [label, ind] : chord_indices(d))
        if (ind % 2 != 0) a += d.chord_of(label).sign;
    return a;
}

laurent_poly flat_invariant(const gauss_diagram& d)
{
    auto w = writhe_polynomial(d);
    return w - w.invert_variable();
}

} // namespace chordal
