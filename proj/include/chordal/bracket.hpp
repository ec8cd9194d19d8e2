#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "chordal/gauss.hpp"
#include "chordal/laurent.hpp"

namespace chordal {

// Labels of chords whose index is a multiple of n (index 0 when n == 0).
std::vector<int> index_class(const gauss_diagram& d, int n);

struct smoothing_state {
    std::map<int, int> choice;
    int count0 = 0;
    int count1 = 0;
    int components = 0;
    // The curves after smoothing, carrying the retained chords flatly.
    flat_diagram curves;
};

// Choice 0 is the oriented reconnection at a positive chord and the
// disoriented one at a negative chord; choice 1 is the other.
smoothing_state smooth_state(const gauss_diagram& d, const std::map<int, int>& choice);

// Component count only, without building the curves.
int state_components(const gauss_diagram& d, const std::vector<int>& labels, std::uint64_t choice_bits);

// Maximum number of states enumerated; CHORDAL_STATE_CAP overrides 2^20.
std::uint64_t state_cap();

// Bracket sum over the states of C_n as a polynomial in A (unnormalized).
laurent_poly indexed_bracket(const gauss_diagram& d, int n);
laurent_poly indexed_jones(const gauss_diagram& d, int n);
// |C_n(d)| >= span V^n(d).
bool span_bound_check(const gauss_diagram& d, int n);

struct graphical_term {
    int curves = 1;
    laurent_poly coeff;
};

// Keys are flat normal forms of the states with free circles absorbed as
// factors; "" is the trivial single circle.
std::map<std::string, graphical_term> graphical_indexed_jones(const gauss_diagram& d, int n);
// Sends each flat state with c curves to d^(c-1).
laurent_poly specialize_to_circles(const std::map<std::string, graphical_term>& g);

} // namespace chordal
