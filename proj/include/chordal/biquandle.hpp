#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "chordal/abelian.hpp"
#include "chordal/gauss.hpp"
#include "chordal/quandle.hpp"

namespace chordal {

struct finite_biquandle {
    int size = 0;
    std::vector<std::vector<int>> star;  // x * y = star[x][y]
    std::vector<std::vector<int>> circ;  // x o y = circ[x][y]
};

void validate_shape(const finite_biquandle& b);
std::vector<axiom_violation> check_biquandle(const finite_biquandle& b, std::size_t limit = 64);
// x * y = y o x implies x = y.
bool exchange_lemma_holds(const finite_biquandle& b);

// Two elements, x * y = x o y = the other element.
finite_biquandle flip_biquandle();
// x * y from the residue-0 table, x o y = x.
finite_biquandle biquandle_from_quandle(const indexed_quandle& q);
// Every biquandle on {0..n-1} (n <= 3).
std::vector<finite_biquandle> all_biquandles(int n);

// Semiarc colorings. At a positive crossing with x the incoming under
// semiarc and y the outgoing over semiarc, the outgoing under semiarc is
// x * y and the incoming over semiarc is y o x. At a negative crossing x is
// the outgoing under semiarc, y the incoming over semiarc, and the
// incoming under and outgoing over semiarcs are x * y and y o x. A bar
// applies `twist` (identity when empty). The weight of a crossing is (x, y).
struct semiarc_layout {
    std::size_t count = 0;
    std::vector<std::vector<std::size_t>> leaving;  // [comp][offset] -> semiarc after the token
    std::size_t incoming(const gauss_diagram& d, position p) const;
};
semiarc_layout layout_semiarcs(const gauss_diagram& d);

std::uint64_t count_biquandle_colorings(const gauss_diagram& d, const finite_biquandle& b,
                                        std::vector<std::vector<int>>* colorings = nullptr,
                                        const std::vector<int>& twist = {});

// Weight pair (x, y) of a chord under a coloring.
std::pair<int, int> crossing_weight(const gauss_diagram& d, const semiarc_layout& lay, const chord& c,
                                    const std::vector<int>& coloring);

enum class index_group_kind { reduced, universal };  // the group 𝔊 and G respectively

struct index_group_result {
    int size = 0;  // biquandle order; generator (x, y) is x * size + y
    abelian_presentation presentation;
    const coords& image(int x, int y) const { return presentation.image[x * size + y]; }
};

index_group_result index_group(const finite_biquandle& b, index_group_kind which = index_group_kind::reduced);

// Per chord, the multiset over all colorings of the images of the weights.
std::map<int, group_ring> crossing_indices(const gauss_diagram& d, const finite_biquandle& b);
// Sum of signs per index value; the value "sum of 1" also gets -w(d).
// Zero entries are dropped.
std::map<group_ring, std::int64_t> a_g(const gauss_diagram& d, const finite_biquandle& b);

// The infinite Z-affine biquandle x * y = x o y = x + 1 on a knot: colors
// propagate around the circle and each chord's index is y - x.
std::map<int, int> affine_biquandle_indices(const gauss_diagram& d);

finite_biquandle biquandle_from_json(const std::string& text);

} // namespace chordal
