#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "chordal/bracket.hpp"
#include "chordal/error.hpp"
#include "chordal/index.hpp"
#include "chordal/moves.hpp"
#include "oracles.hpp"

using namespace chordal;

namespace {

laurent_poly tp(int n, int c = 1) { return laurent_poly::t_power(n, c); }

const gauss_diagram trefoil = parse_gauss_code("O1+ U2+ O3+ U1+ O2+ U3+");
const gauss_diagram left_trefoil = parse_gauss_code("O1- U2- O3- U1- O2- U3-");
const gauss_diagram virtual_trefoil = parse_gauss_code("O1+ O2+ U1+ U2+");

} // namespace

TEST_CASE("index classes")
{
    CHECK(index_class(virtual_trefoil, 1) == std::vector<int>{1, 2});
    CHECK(index_class(virtual_trefoil, 0).empty());
    CHECK(index_class(virtual_trefoil, 2).empty());
    auto virtualized = parse_gauss_code("O1+ U2- O3+ U1+ O2- U3+");
    CHECK(index_class(virtualized, 0) == std::vector<int>{2});
    CHECK(index_class(virtualized, 2) == std::vector<int>{1, 2, 3});
    CHECK(index_class(virtualized, 3) == std::vector<int>{2});
    CHECK_THROWS_AS(index_class(virtualized, -1), diagram_error);
}

TEST_CASE("kink pins the smoothing convention")
{
    auto kink = parse_gauss_code("O1+ U1+");
    CHECK(smooth_state(kink, {{1, 0}}).components == 2);
    CHECK(smooth_state(kink, {{1, 1}}).components == 1);
    CHECK(smooth_state(gauss_diagram(), {}).components == 1);
    CHECK(indexed_bracket(kink, 1) == laurent_poly::monomial(3, -1));
    CHECK(indexed_bracket(mirror(kink), 1) == laurent_poly::monomial(-3, -1));
    CHECK(indexed_jones(kink, 1) == laurent_poly(1));
    CHECK_THROWS_AS(smooth_state(kink, {{1, 2}}), diagram_error);
}

TEST_CASE("jones examples")
{
    CHECK(indexed_jones(gauss_diagram(), 0) == laurent_poly(1));
    CHECK(indexed_jones(gauss_diagram(), 3) == laurent_poly(1));
    CHECK(indexed_jones(trefoil, 1) == oracle::brute_jones(trefoil, {1, 2, 3}));
    CHECK(indexed_jones(trefoil, 1) == tp(1) + tp(3) - tp(4));
    CHECK(indexed_jones(left_trefoil, 1) == tp(-1) + tp(-3) - tp(-4));
    CHECK(indexed_jones(trefoil, 0) == indexed_jones(trefoil, 1));
}

TEST_CASE("planar diagram oracle agrees on the left-handed trefoil")
{
    auto pd = oracle::pd_jones({{1, 4, 2, 5}, {3, 6, 4, 1}, {5, 2, 6, 3}}, -3);
    CHECK(pd == tp(-1) + tp(-3) - tp(-4));
    CHECK(indexed_jones(left_trefoil, 1) == pd);
    // figure eight knot
    CHECK(writhe(parse_gauss_code(oracle::pd_to_gauss({{1, 4, 2, 5}, {3, 6, 4, 1}, {5, 2, 6, 3}}))) == -3);
    std::vector<std::array<int, 4>> fig8{{4, 2, 5, 1}, {8, 6, 1, 5}, {6, 3, 7, 4}, {2, 7, 3, 8}};
    auto fe = oracle::pd_jones(fig8, 0);
    auto code = parse_gauss_code(oracle::pd_to_gauss(fig8));
    CHECK(writhe(code) == 0);
    CHECK(indexed_jones(code, 1) == fe);
    CHECK(fe == tp(2) - tp(1) + laurent_poly(1) - tp(-1) + tp(-2));
}

TEST_CASE("span")
{
    auto p = tp(4, -1) + tp(3) + laurent_poly::monomial(10);
    CHECK(p.span() == std::pair<std::int64_t, std::int64_t>{3, 2});
    CHECK(laurent_poly(1).span() == std::pair<std::int64_t, std::int64_t>{0, 1});
    CHECK(span_bound_check(trefoil, 1));
}

TEST_CASE("component counts match the traversal oracle")
{
    walk_rng rng(31);
    for (int trial = 0; trial < 150; ++trial) {
        auto d = random_knot(rng, draw(rng, 11));
        std::vector<int> labels;
        for (auto& c : d.chords()) labels.push_back(c.label);
        std::size_t k = labels.size();
        std::uint64_t states = std::uint64_t{1} << k;
        std::uint64_t step = states > 256 ? states / 256 + 1 : 1;
        for (std::uint64_t bits = 0; bits < states; bits += step) {
            std::vector<int> choice(k);
            std::map<int, int> cmap;
            for (std::size_t i = 0; i < k; ++i) cmap[labels[i]] = choice[i] = (bits >> i) & 1;
            int expect = oracle::traverse_components(d, labels, choice);
            CHECK(state_components(d, labels, bits) == expect);
            auto st = smooth_state(d, cmap);
            CHECK(st.components == expect);
            CHECK(st.count0 + st.count1 == static_cast<int>(k));
        }
    }
}

TEST_CASE("jones against the brute force oracle on random diagrams")
{
    walk_rng rng(32);
    for (int trial = 0; trial < 150; ++trial) {
        auto d = random_knot(rng, draw(rng, 9));
        for (int n : {0, 1, 2, 3}) {
            auto v = indexed_jones(d, n);
            CHECK(v == oracle::brute_jones(d, index_class(d, n)));
            CHECK(span_bound_check(d, n));
            auto g = graphical_indexed_jones(d, n);
            CHECK(specialize_to_circles(g) == v);
        }
    }
}

TEST_CASE("graphical variant")
{
    auto g = graphical_indexed_jones(trefoil, 1);
    REQUIRE(g.size() == 1);
    CHECK(g.begin()->first == "");
    CHECK(g.begin()->second.coeff == indexed_jones(trefoil, 1));

    auto virtualized = parse_gauss_code("O1+ U2- O3+ U1+ O2- U3+");
    auto all = graphical_indexed_jones(virtualized, 2);
    REQUIRE(all.size() == 1);
    CHECK(all.begin()->second.coeff == indexed_jones(virtualized, 2));

    // Only chord 2 lies in C_4, so every state keeps chords 1 and 3.
    auto part = graphical_indexed_jones(virtualized, 4);
    for (auto& [key, term] : part) {
        std::istringstream in(key);
        std::string tok;
        int ends = 0;
        while (in >> tok) ends += tok != "/";
        CHECK(ends == 4);
    }
    CHECK(specialize_to_circles(part) == indexed_jones(virtualized, 4));
}

TEST_CASE("state cap")
{
    setenv("CHORDAL_STATE_CAP", "4", 1);
    CHECK(state_cap() == 4);
    CHECK_THROWS_AS(indexed_jones(trefoil, 1), resource_error);
    CHECK_NOTHROW(indexed_jones(parse_gauss_code("O1+ U1+ O2+ U2+"), 1));
    unsetenv("CHORDAL_STATE_CAP");
    CHECK(state_cap() == (std::uint64_t{1} << 20));
}
