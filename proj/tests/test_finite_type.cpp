#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "chordal/error.hpp"
#include "chordal/finite_type.hpp"
#include "chordal/index.hpp"
#include "chordal/moves.hpp"
#include "oracles.hpp"

using namespace chordal;

namespace {

laurent_poly tp(int n, int c = 1) { return laurent_poly::t_power(n, c); }

std::vector<int> pick_labels(const gauss_diagram& d, std::size_t k, walk_rng& rng)
{
    std::vector<int> labels;
    for (auto& c : d.chords()) labels.push_back(c.label);
    std::shuffle(labels.begin(), labels.end(), rng);
    labels.resize(std::min(k, labels.size()));
    return labels;
}

} // namespace

TEST_CASE("resolutions")
{
    auto vt = parse_gauss_code("O1+ O2+ U1+ U2+");
    singular_selection s{mirror(vt), {1, 2}};
    CHECK(resolution(s, 0) == vt);
    CHECK(resolution(s, 3) == mirror(vt));
    CHECK(resolution(s, 1) == crossing_change(vt, 1));
    CHECK_THROWS_AS(resolution({vt, {1, 1}}, 0), diagram_error);
    CHECK_THROWS_AS(resolution({vt, {4}}, 0), diagram_error);
}

TEST_CASE("vassiliev sums")
{
    auto vt = parse_gauss_code("O1+ O2+ U1+ U2+");
    std::function<laurent_poly(const gauss_diagram&)> p = affine_index_polynomial;
    CHECK(vassiliev_sum(p, {vt, {}}) == affine_index_polynomial(vt));
    CHECK(vassiliev_sum(p, {vt, {1, 2}}).is_zero());
}

TEST_CASE("transversal witness")
{
    std::function<laurent_poly(const gauss_diagram&)> p = affine_index_polynomial;
    for (int n = 1; n <= 5; ++n) {
        auto d = transversal_witness(n);
        CHECK(chord_index_intersection(d, n + 1) == n);
        // The two resolutions of the transversal, term by term.
        auto v = vassiliev_sum(p, {d, {n + 1}});
        CHECK(v == affine_index_polynomial(d) - affine_index_polynomial(crossing_change(d, n + 1)));
        CHECK(v == tp(n) + tp(-n) - laurent_poly(2));
        CHECK(v.eval_at_one() == 0);
    }
}

TEST_CASE("a_tuple examples")
{
    auto vt = parse_gauss_code("O1+ O2+ U1+ U2+");
    CHECK(a_tuple(vt, {1}) == 1);
    CHECK(a_tuple(vt, {-1}) == 1);
    CHECK(a_tuple(vt, {1, -1}) == 1);
    CHECK(a_tuple(vt, {3}) == 0);
    CHECK(a_tuple(vt, {}) == 1);
    CHECK_THROWS_AS(a_tuple(vt, {-1, 1}), diagram_error);
    CHECK_THROWS_AS(a_tuple(vt, {1, 0}), diagram_error);
    CHECK_THROWS_AS(a_tuple(vt, {2, 2}), diagram_error);
}

TEST_CASE("a_tuple against ordered selections and coefficient products")
{
    walk_rng rng(21);
    for (int trial = 0; trial < 300; ++trial) {
        auto d = random_knot(rng, draw(rng, 9));
        auto ind = chord_indices(d);
        std::set<int> values;
        for (auto [l, i] : ind)
            if (i != 0) values.insert(i);
        values.insert(1);
        values.insert(-2);
        std::vector<int> all(values.rbegin(), values.rend());
        for (std::size_t len = 1; len <= 3 && len <= all.size(); ++len) {
            std::vector<int> xs;
            for (std::size_t k = 0; k < all.size(); ++k)
                if (draw(rng, 2) && xs.size() < len) xs.push_back(all[k]);
            long long product = 1;
            for (int x : xs) product *= index_coefficient(d, x);
            CHECK(a_tuple(d, xs) == oracle::brute_a_tuple(d, ind, xs));
            CHECK(a_tuple(d, xs) == product);
        }
    }
}

TEST_CASE("degree bounds on random diagrams")
{
    walk_rng rng(22);
    std::function<laurent_poly(const gauss_diagram&)> p = affine_index_polynomial;
    for (int trial = 0; trial < 200; ++trial) {
        auto d = random_knot(rng, 2 + draw(rng, 8));
        CHECK(vassiliev_sum(p, {d, pick_labels(d, 2, rng)}).is_zero());
        for (int x : {1, -1, 2}) {
            std::function<long long(const gauss_diagram&)> a = [x](const gauss_diagram& e) {
                return index_coefficient(e, x);
            };
            CHECK(vassiliev_sum(a, {d, pick_labels(d, 2, rng)}) == 0);
        }
        for (std::vector<int> xs : {std::vector<int>{1}, {2, -1}, {3, 1, -1}}) {
            std::function<long long(const gauss_diagram&)> a = [xs](const gauss_diagram& e) { return a_tuple(e, xs); };
            auto marked = pick_labels(d, xs.size() + 1, rng);
            if (marked.size() == xs.size() + 1) CHECK(vassiliev_sum(a, {d, marked}) == 0);
        }
    }
}
