#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chordal/error.hpp"
#include "chordal/gauss.hpp"
#include "chordal/index.hpp"
#include "chordal/moves.hpp"

using namespace chordal;

namespace {

const gauss_diagram unknot;

gauss_diagram random_start(walk_rng& rng, int trial)
{
    switch (trial % 3) {
    case 0:
        return random_knot(rng, draw(rng, 7));
    case 1:
        return random_link(rng, 1 + draw(rng, 2), draw(rng, 6));
    default:
        return random_twisted_knot(rng, draw(rng, 5), draw(rng, 4));
    }
}

} // namespace

TEST_CASE("r1 examples")
{
    auto k = r1_insert(unknot, {0, 0}, passage::over, 1);
    CHECK(k == parse_gauss_code("O1+ U1+"));
    CHECK(r1_remove(k, 1) == unknot);
    CHECK_THROWS_AS(r1_remove(parse_gauss_code("O1+ O2+ U1+ U2+"), 1), diagram_error);
    CHECK_THROWS_AS(r1_insert(unknot, {0, 3}, passage::over, 1), diagram_error);
    CHECK(r1_candidates(parse_gauss_code("O1+ U1+ O2- U2-")) == std::vector<int>{1, 2});
}

TEST_CASE("r2 examples")
{
    auto p = r2_insert(unknot, {0, 0}, {0, 0}, {1, true});
    CHECK(p == parse_gauss_code("O1+ O2- U2- U1+"));
    CHECK(r2_remove(p, 1, 2) == unknot);
    auto q = r2_insert(unknot, {0, 0}, {0, 0}, {-1, false});
    CHECK(q == parse_gauss_code("O1- O2+ U1- U2+"));
    CHECK(r2_remove(q, 2, 1) == unknot);
    CHECK_THROWS_AS(r2_remove(parse_gauss_code("O1+ O2+ U1+ U2+"), 1, 2), diagram_error);
    CHECK_THROWS_AS(r2_remove(p, 1, 1), diagram_error);
}

TEST_CASE("r3 examples")
{
    // Two R2 pairs followed by a chord through both sides form a triangle.
    auto d = parse_gauss_code("O1+ O2+ U1+ O3+ U2+ U3+");
    auto cands = r3_candidates(d);
    REQUIRE(!cands.empty());
    auto [a, b, c] = cands.front();
    auto e = r3_apply(d, a, b, c);
    CHECK(e != d);
    CHECK(r3_apply(e, a, b, c) == d);
    CHECK(chord_indices(e) == chord_indices(d));
    CHECK_THROWS_AS(r3_apply(parse_gauss_code("O1+ O2+ U1+ U2+"), 1, 2, 3), diagram_error);
    CHECK_THROWS_AS(r3_apply(parse_gauss_code("O1+ U1+ O2+ U2+ O3+ U3+"), 1, 2, 3), diagram_error);
}

TEST_CASE("r3 applications keep indices and satisfy the sum relation")
{
    walk_rng rng(5);
    int found = 0;
    for (int trial = 0; trial < 300; ++trial) {
        auto d = random_walk(random_knot(rng, 1 + draw(rng, 6)), 40, trial);
        for (auto [a, b, c] : r3_candidates(d)) {
            ++found;
            auto e = r3_apply(d, a, b, c);
            auto before = chord_indices(d);
            CHECK(before == chord_indices(e));
            CHECK(writhe_polynomial(e) == writhe_polynomial(d));
            int x = before[a], y = before[b], z = before[c];
            CHECK((x == y + z || y == x + z || z == x + y));
            CHECK(r3_apply(e, a, b, c) == d);
        }
    }
    CHECK(found > 50);
}

TEST_CASE("insert then remove is the identity")
{
    walk_rng rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        auto d = random_start(rng, trial);
        std::size_t comp = draw(rng, d.component_count());
        arc_site at{comp, draw(rng, d.component(comp).size() + 1)};
        auto k = r1_insert(d, at, draw(rng, 2) ? passage::over : passage::under, draw(rng, 2) ? 1 : -1);
        CHECK(r1_remove(k, d.next_label()) == d);

        std::size_t comp2 = draw(rng, d.component_count());
        arc_site at2{comp2, draw(rng, d.component(comp2).size() + 1)};
        auto p = r2_insert(d, at, at2, {draw(rng, 2) ? 1 : -1, draw(rng, 2) == 1});
        CHECK(r2_remove(p, d.next_label(), d.next_label() + 1) == d);

        auto b = twisted_move(d, twist_kind::bar_pair_insert, {at, {}, 0});
        CHECK(b.bar_count() == d.bar_count() + 2);
        CHECK(twisted_move(b, twist_kind::bar_pair_cancel, {{}, {at.comp, at.offset}, 0}) == d);
    }
}

TEST_CASE("twisted move examples")
{
    auto bb = parse_gauss_code("B B");
    CHECK(twisted_move(bb, twist_kind::bar_pair_cancel, {{}, {0, 0}, 0}) == unknot);
    CHECK_THROWS_AS(twisted_move(parse_gauss_code("B O1+ B U1+"), twist_kind::bar_pair_cancel, {{}, {0, 0}, 0}),
                    diagram_error);

    auto k = parse_gauss_code("O1+ U1+");
    auto f = twisted_move(k, twist_kind::crossing_unflip, {{}, {}, 1});
    CHECK(f == parse_gauss_code("B U1+ B B O1+ B"));
    CHECK(flip_candidates(f) == std::vector<int>{1});
    CHECK(twisted_move(f, twist_kind::crossing_flip, {{}, {}, 1}) == k);
    CHECK_THROWS_AS(twisted_move(k, twist_kind::crossing_flip, {{}, {}, 1}), diagram_error);
    CHECK(twisted_move(bb, twist_kind::bar_slide, {{}, {0, 1}, 0}) == bb);

    for (auto kind : {twist_kind::bar_pair_insert, twist_kind::bar_pair_cancel, twist_kind::bar_slide,
                      twist_kind::crossing_flip, twist_kind::crossing_unflip})
        CHECK(twist_kind_from_string(to_string(kind)) == kind);
}

TEST_CASE("random walks")
{
    CHECK(random_walk(unknot, 0, 99) == unknot);
    auto vt = parse_gauss_code("O1+ O2+ U1+ U2+");
    auto w = random_walk(vt, 50, 7);
    CHECK(writhe_polynomial(w) == writhe_polynomial(vt));
    CHECK(random_walk(vt, 50, 7) == w);
    CHECK(serialize(random_walk(vt, 50, 7)) == serialize(w));

    walk_options opt;
    opt.twisted = true;
    walk_rng rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        auto d = random_start(rng, trial);
        std::vector<gauss_diagram> trace;
        auto e = random_walk(d, 30, trial, opt, &trace);
        CHECK(trace.size() == 31);
        for (auto& s : trace) {
            CHECK(s.bar_count() % 2 == d.bar_count() % 2);
            CHECK(s.component_count() == d.component_count());
            CHECK(s.chord_count() <= std::max<std::size_t>(opt.chord_cap, d.chord_count()) + 2);
        }
        CHECK(trace.back() == e);
    }
}
