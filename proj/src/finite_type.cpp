#include "chordal/finite_type.hpp"

#include "chordal/error.hpp"
#include "chordal/index.hpp"

namespace chordal {

gauss_diagram resolution(const singular_selection& s, std::uint64_t sigma)
{
    gauss_diagram d = s.base;
    for (std::size_t i = 0; i < s.marked.size(); ++i) {
        int label = s.marked[i];
        for (std::size_t j = 0; j < i; ++j)
            if (s.marked[j] == label) throw diagram_error("chord marked twice");
        bool negative = d.chord_of(label).sign < 0;
        bool want_negative = (sigma >> i) & 1;
        if (negative != want_negative) d = crossing_change(d, label);
    }
    return d;
}

long long a_tuple(const gauss_diagram& d, const std::vector<int>& xs)
{
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i] == 0) throw diagram_error("index tuple entries must be nonzero");
        if (i && xs[i] >= xs[i - 1]) throw diagram_error("index tuple must be strictly decreasing");
    }
    auto ind = chord_indices(d);
    long long product = 1;
    for (int x : xs) {
        long long a = 0;
        for (auto& c : d.chords())
            if (ind[c.label] == x) a += c.sign;
        product *= a;
    }
    return product;
}

gauss_diagram transversal_witness(int n)
{
    if (n < 1) throw diagram_error("witness needs n >= 1");
    int c = n + 1;
    std::vector<token> w{token::end(c, passage::over, 1)};
    for (int i = 1; i <= n; ++i) w.push_back(token::end(i, passage::over, 1));
    w.push_back(token::end(c, passage::under, 1));
    for (int i = 1; i <= n; ++i) w.push_back(token::end(i, passage::under, 1));
    return gauss_diagram({w});
}

} // namespace chordal
