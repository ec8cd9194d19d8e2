#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chordal/abelian.hpp"
#include "chordal/gauss.hpp"
#include "chordal/laurent.hpp"

namespace chordal {

// A failed axiom instance, e.g. {"distributivity", {i, j, a, b, c}}.
struct axiom_violation {
    std::string axiom;
    std::vector<std::int64_t> witness;
    std::string to_string() const;
};

// Operations *_i depend on i only through i mod period.
struct indexed_quandle {
    int size = 0;
    int period = 1;
    std::vector<std::vector<std::vector<int>>> tables;  // [residue][a][b]

    int op(std::int64_t i, int a, int b) const;
    int residue(std::int64_t i) const;
};

// Throws diagram_error on malformed tables (wrong shapes or out-of-range entries).
void validate_shape(const indexed_quandle& q);
std::vector<axiom_violation> check_indexed_quandle(const indexed_quandle& q, std::size_t limit = 64);

// i *_k j = 2j - i + k (mod n), period n.
indexed_quandle indexed_dihedral(int n);
// The dihedral quandle i * j = 2j - i (mod n) with period 1.
indexed_quandle dihedral_quandle(int n);
// a *_i b = a + i (mod 2).
indexed_quandle shift_family();
// *_i = * for every i.
indexed_quandle constant_family(const indexed_quandle& base, int period);
// *_0 = *, a *_i b = a for i != 0 (mod period).
indexed_quandle split_family(const indexed_quandle& base, int period);
// a *_i b = t a + (1 - t) b + i over Z/n, with t a unit mod n.
indexed_quandle affine_family(int n, int t);
// a *_i b = u (a - b) + b + i z over the cyclic group Z/n, u a unit.
indexed_quandle cyclic_group_family(int n, int u, int z);

// Arc colorings; arcs are cut at under-passages only.
std::uint64_t count_colorings(const gauss_diagram& d, const indexed_quandle& q);
std::vector<std::vector<int>> enumerate_colorings(const gauss_diagram& d, const indexed_quandle& q);

struct cocycle_family {
    fg_abelian_group group;
    int period = 1;
    std::vector<std::vector<std::vector<coords>>> values;  // [residue][a][b]

    const coords& at(std::int64_t i, int a, int b) const;
};

std::vector<axiom_violation> check_cocycle(const indexed_quandle& q, const cocycle_family& phi,
                                           std::size_t limit = 64);
// Sum over colorings of the product of crossing weights. Throws on an invalid cocycle.
group_ring cocycle_invariant(const gauss_diagram& d, const indexed_quandle& q, const cocycle_family& phi);
// Carrier A x Q, element (a, x) numbered index(a) * |Q| + x with A listed by
// fg_abelian_group::elements.
indexed_quandle abelian_extension(const indexed_quandle& q, const cocycle_family& phi);

// The one-element quandle with phi_i = t^i (i != 0), phi_0 = 0, valued in
// the additive group Z[t, t^-1].
laurent_poly writhe_cocycle_invariant(const gauss_diagram& d);

indexed_quandle quandle_from_json(const std::string& text);
cocycle_family cocycle_from_json(const std::string& text);

} // namespace chordal
