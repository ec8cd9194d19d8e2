#pragma once

#include <map>

#include "chordal/gauss.hpp"
#include "chordal/laurent.hpp"

namespace chordal {

// Signed count of chords crossing `label`: a crossing chord contributes its
// sign when its over endpoint lies on the arc running from this chord's over
// endpoint forward to its under endpoint, and minus its sign otherwise.
int chord_index_intersection(const gauss_diagram& d, int label);

// Smooth the chord into K1 (the arc from its over endpoint to its under
// endpoint) and K2, then lk_O - lk_U.
int chord_index_linking(const gauss_diagram& d, int label);

// Two-component result of the oriented smoothing at one chord; K1 first.
gauss_diagram smooth_chord(const gauss_diagram& d, int label);

// All chord indices by the intersection formula.
std::map<int, int> chord_indices(const gauss_diagram& d);

laurent_poly writhe_polynomial(const gauss_diagram& d);
laurent_poly affine_index_polynomial(const gauss_diagram& d);
// a_n; a_0 carries the -w(K) correction.
long long index_coefficient(const gauss_diagram& d, int n);
long long odd_writhe(const gauss_diagram& d);
laurent_poly flat_invariant(const gauss_diagram& d);

} // namespace chordal
