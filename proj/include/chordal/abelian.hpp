#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace chordal {

using coords = std::vector<std::int64_t>;

// Z^free_rank + sum Z/torsion[i]. Coordinates list the torsion part first,
// in the order given, followed by the free part.
struct fg_abelian_group {
    int free_rank = 0;
    std::vector<std::int64_t> torsion;

    std::size_t rank() const { return torsion.size() + static_cast<std::size_t>(free_rank); }
    bool trivial() const { return rank() == 0; }
    bool finite() const { return free_rank == 0; }
    std::int64_t order() const;  // throws when infinite
    coords zero() const { return coords(rank(), 0); }
    coords reduce(coords x) const;
    coords add(const coords& a, const coords& b) const;
    coords negate(const coords& a) const;
    // All elements, finite groups only.
    std::vector<coords> elements() const;
    std::string describe() const;  // "Z", "Z/2", "Z^2 + Z/3", "0"
};

std::string render_element(const coords& x);

struct smith_result {
    // Nonnegative diagonal entries, length min(rows, cols).
    std::vector<std::int64_t> diagonal;
    // cols x cols unimodular matrix V with U * M * V = D.
    std::vector<std::vector<std::int64_t>> right;
};

smith_result smith_normal_form(std::vector<std::vector<std::int64_t>> m, std::size_t cols);

// Abelian group presented by `generators` free generators modulo the rows
// of `relations`, and the image of each generator.
struct abelian_presentation {
    fg_abelian_group group;
    std::vector<coords> image;
    std::vector<std::vector<std::int64_t>> relations;
};

abelian_presentation present_abelian(std::size_t generators, const std::vector<std::vector<std::int64_t>>& relations);

// Formal integer combination of group elements.
using group_ring = std::map<coords, std::int64_t>;

void add_to(group_ring& r, const coords& x, std::int64_t mult = 1);
// "2·0 + 2·1"; elements with several coordinates are parenthesized.
std::string render(const group_ring& r);

} // namespace chordal
