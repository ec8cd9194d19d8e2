#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "chordal/gauss.hpp"
#include "chordal/laurent.hpp"

namespace chordal {

struct singular_selection {
    gauss_diagram base;
    std::vector<int> marked;
};

// Resolution K_sigma: bit i of sigma set means the i-th marked chord is
// resolved negatively. Marked chords are first made positive.
gauss_diagram resolution(const singular_selection& s, std::uint64_t sigma);

template <class T>
T vassiliev_sum(const std::function<T(const gauss_diagram&)>& f, const singular_selection& s)
{
    if (s.marked.size() > 20) throw std::invalid_argument("too many marked chords");
    T total{};
    std::uint64_t count = std::uint64_t{1} << s.marked.size();
    for (std::uint64_t sigma = 0; sigma < count; ++sigma) {
        T v = f(resolution(s, sigma));
        if (__builtin_popcountll(sigma) % 2)
            total = total - v;
        else
            total = total + v;
    }
    return total;
}

// xs strictly decreasing and nonzero.
long long a_tuple(const gauss_diagram& d, const std::vector<int>& xs);

// n parallel positive chords and one positive chord crossing all of them
// with index n. The transversal has label n + 1.
gauss_diagram transversal_witness(int n);

} // namespace chordal
