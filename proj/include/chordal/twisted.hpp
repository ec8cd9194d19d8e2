#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "chordal/biquandle.hpp"
#include "chordal/gauss.hpp"
#include "chordal/laurent.hpp"

namespace chordal {

struct twisted_biquandle {
    finite_biquandle base;
    std::vector<int> twist;  // f
};

std::vector<axiom_violation> check_twisted_biquandle(const twisted_biquandle& t, std::size_t limit = 64);
// Carrier Z/n, x * y = x o y = x + 1, f(a) = -a.
twisted_biquandle affine_twisted(int n);
// Segment colorings: biquandle rules at crossings, f across each bar.
std::uint64_t count_twisted_colorings(const gauss_diagram& d, const twisted_biquandle& t);

// Counts for one edge (a stretch between consecutive bars).
struct edge_counts {
    int over_pos = 0;
    int over_neg = 0;
    int under_pos = 0;
    int under_neg = 0;
    std::int64_t s() const { return under_pos + over_neg - under_neg - over_pos; }
};

// Edges of a knot diagram cut at bars; edge 0 starts right after the first
// bar in the word. A bar-free diagram has a single closed edge.
struct edge_decomposition {
    std::vector<edge_counts> edges;
    std::size_t first_bar = 0;
};

edge_decomposition edge_stats(const gauss_diagram& d);

// Integer coloring of a knot diagram: col_in[p] is the color arriving at
// token p; under-passages add the sign, over-passages subtract it, bars
// negate. `closing` is the color arriving back at offset 0.
struct affine_coloring {
    std::vector<std::int64_t> col_in;
    std::int64_t closing = 0;
};
affine_coloring propagate_coloring(const gauss_diagram& d, std::int64_t start, std::int64_t modulus = 0);

// Odd bar count: the unique integer coloring, once from the closed-form
// edge-sum solution and once by solving the propagation.
affine_coloring odd_coloring_from_edges(const gauss_diagram& d);
affine_coloring odd_coloring_by_propagation(const gauss_diagram& d);

// Chord indices over_in - under_in - sign under a coloring, reduced mod
// `modulus` into [0, modulus) when it is positive.
std::map<int, std::int64_t> twisted_indices(const gauss_diagram& d, const affine_coloring& c,
                                            std::int64_t modulus = 0);

laurent_poly T_o(const gauss_diagram& d);
std::int64_t S_invariant(const gauss_diagram& d);
// Some start value yields a closed coloring over Z.
bool integer_coloring_exists(const gauss_diagram& d);
// Chords whose endpoints cut the circle into arcs with evenly many bars.
std::vector<int> even_class(const gauss_diagram& d);

struct te_value {
    std::int64_t modulus = 0;  // S(K); 0 means exponents live in Z
    std::int64_t s0 = 0;
    std::int64_t s1 = 0;
    std::map<std::int64_t, std::int64_t> t_terms;  // exponent -> coefficient, nonzero only
    std::int64_t constant = 0;

    friend bool operator==(const te_value&, const te_value&) = default;
    std::string to_string() const;
    // The t-terms plus the constant; only for modulus 0.
    laurent_poly as_poly() const;
};

te_value T_e(const gauss_diagram& d);

twisted_biquandle twisted_from_json(const std::string& text);

} // namespace chordal
