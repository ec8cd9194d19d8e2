#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "chordal/gauss.hpp"

namespace chordal {

// Insertion point: before token `offset` of component `comp` (offset may equal the length).
struct arc_site {
    std::size_t comp = 0;
    std::size_t offset = 0;
};

gauss_diagram r1_insert(const gauss_diagram& d, arc_site at, passage first, int sign);
gauss_diagram r1_remove(const gauss_diagram& d, int label);
std::vector<int> r1_candidates(const gauss_diagram& d);

// The first new chord gets `sign`, the second -sign. Over endpoints go in as
// "a b" at over_at; under endpoints as "a b", or "b a" when under_swapped.
struct r2_variant {
    int sign = 1;
    bool under_swapped = false;
};
gauss_diagram r2_insert(const gauss_diagram& d, arc_site over_at, arc_site under_at, r2_variant v);
gauss_diagram r2_remove(const gauss_diagram& d, int label1, int label2);
std::vector<std::pair<int, int>> r2_candidates(const gauss_diagram& d);

// Chord roles in a triangle: tm = top over middle, tb = top over bottom,
// mb = middle over bottom. The bits say, for the endpoint pairs
// (O_tm, O_tb), (U_tm, O_mb), (U_tb, U_mb), whether the first endpoint
// directly precedes the second.
struct r3_pattern {
    bool top_order;
    bool middle_order;
    bool bottom_order;
    int sign_tm;
    int sign_tb;
    int sign_mb;
    friend bool operator==(const r3_pattern&, const r3_pattern&) = default;
};
const std::array<r3_pattern, 16>& r3_table();

gauss_diagram r3_apply(const gauss_diagram& d, int label1, int label2, int label3);
std::vector<std::array<int, 3>> r3_candidates(const gauss_diagram& d);

enum class twist_kind {
    bar_pair_insert,  // site.at
    bar_pair_cancel,  // site.pos is the first of two adjacent bars
    bar_slide,        // bar through a virtual crossing; identity on Gauss words
    crossing_flip,    // site.label: chord whose endpoints are both flanked by bars
    crossing_unflip,  // site.label: inverse of crossing_flip
};

struct twist_site {
    arc_site at;
    position pos;
    int label = 0;
};

std::string to_string(twist_kind k);
twist_kind twist_kind_from_string(const std::string& s);
gauss_diagram twisted_move(const gauss_diagram& d, twist_kind kind, const twist_site& site);
std::vector<int> flip_candidates(const gauss_diagram& d);
std::vector<position> bar_pair_candidates(const gauss_diagram& d);

using walk_rng = std::mt19937_64;
// Uniform in [0, n). Kept explicit so walks do not depend on the standard
// library's distribution implementation.
std::uint64_t draw(walk_rng& rng, std::uint64_t n);

struct walk_options {
    std::size_t chord_cap = 16;
    std::size_t bar_cap = 12;
    bool twisted = false;
};

// One uniformly drawn applicable move; returns d unchanged if nothing applies
// after a bounded number of redraws.
gauss_diagram random_move(const gauss_diagram& d, walk_rng& rng, const walk_options& opt);
gauss_diagram random_walk(const gauss_diagram& d, std::size_t steps, std::uint64_t seed,
                          const walk_options& opt = {}, std::vector<gauss_diagram>* trace = nullptr);

gauss_diagram random_knot(walk_rng& rng, std::size_t chords);
gauss_diagram random_link(walk_rng& rng, std::size_t components, std::size_t chords);
gauss_diagram random_twisted_knot(walk_rng& rng, std::size_t chords, std::size_t bars);

} // namespace chordal
