#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "chordal/error.hpp"
#include "chordal/gauss.hpp"
#include "chordal/laurent.hpp"
#include "chordal/moves.hpp"

using namespace chordal;

TEST_CASE("laurent arithmetic")
{
    auto t = laurent_poly::t_power(1);
    auto ti = laurent_poly::t_power(-1);
    auto p = t + ti;
    CHECK(p.to_string() == "t + t^-1");
    CHECK((-p).to_string() == "-t - t^-1");
    CHECK((p * p).to_string() == "t^2 + 2 + t^-2");
    CHECK((p - p).is_zero());
    CHECK((p - p).to_string() == "0");
    CHECK(p.pow(0) == laurent_poly(1));
    CHECK(p.pow(3) == p * p * p);
    CHECK(p.eval_at_one() == 2);
    CHECK((t * laurent_poly(3)).invert_variable() == laurent_poly::t_power(-1, 3));
    CHECK(laurent_poly::monomial(10).to_string() == "t^(5/2)");
    CHECK(laurent_poly::monomial(-3, -2).to_string() == "-2t^(-3/4)");
    CHECK(laurent_poly(-1).to_string() == "-1");
}

TEST_CASE("laurent span")
{
    laurent_poly p = laurent_poly::t_power(4, -1) + laurent_poly::t_power(3) + laurent_poly::monomial(10);
    CHECK(p.to_string() == "-t^4 + t^3 + t^(5/2)");
    CHECK(p.span() == std::pair<std::int64_t, std::int64_t>{3, 2});
    CHECK(laurent_poly(1).span() == std::pair<std::int64_t, std::int64_t>{0, 1});
    CHECK_THROWS(laurent_poly().span());
    CHECK(quarter_fraction(-6) == std::pair<std::int64_t, std::int64_t>{-3, 2});
    auto tr = p.to_triples();
    REQUIRE(tr.size() == 3);
    CHECK(tr[0] == std::vector<std::int64_t>{4, 1, -1});
    CHECK(tr[2] == std::vector<std::int64_t>{5, 2, 1});
}

TEST_CASE("parse examples")
{
    auto d = parse_gauss_code("O1+ O2+ U1+ U2+");
    CHECK(d.chord_count() == 2);
    CHECK(d.is_knot());
    CHECK(d.chord_of(1).sign == 1);
    CHECK(d.chord_of(2).over.offset == 1);
    CHECK(d.chord_of(2).under.offset == 3);

    auto u = parse_gauss_code("");
    CHECK(u.component_count() == 1);
    CHECK(u.chord_count() == 0);

    CHECK_THROWS_AS(parse_gauss_code("O1+ U1-"), parse_error);
    CHECK_THROWS_AS(parse_gauss_code("O1+ O1+"), parse_error);
    CHECK_THROWS_AS(parse_gauss_code("O1+ U2+"), parse_error);
    CHECK_THROWS_AS(parse_gauss_code("O1+ U1+ U1+"), parse_error);
    CHECK_THROWS_AS(parse_gauss_code("X1+"), parse_error);
    CHECK_THROWS_AS(parse_gauss_code("O+ U+"), parse_error);
}

TEST_CASE("parse syntax variants")
{
    auto a = parse_gauss_code("O1+,O2+,U1+,U2+");
    auto b = parse_gauss_code("O1− U1−");
    CHECK(a == parse_gauss_code("O1+ O2+ U1+ U2+"));
    CHECK(b.chord_of(1).sign == -1);
    auto l = parse_gauss_code("O1+ / U1+ B");
    CHECK(l.component_count() == 2);
    CHECK(l.bar_count() == 1);
    auto empty_comp = parse_gauss_code("O1+ U1+ /");
    CHECK(empty_comp.component_count() == 2);
    try {
        parse_gauss_code("O1+ Q2+");
        FAIL("expected parse error");
    } catch (const parse_error& e) {
        CHECK(e.position() == 4);
    }
}

TEST_CASE("serialize")
{
    CHECK(serialize(parse_gauss_code("")) == "");
    CHECK(serialize(parse_gauss_code("U1+ U2+ O1+ O2+")) == "O1+ O2+ U1+ U2+");
    CHECK(serialize(parse_gauss_code("O1+ O2+ / U1+ U2+")) == "O1+ O2+ / U1+ U2+");
    CHECK(serialize(parse_gauss_code("U1+ B O1+")) == "B O1+ U1+");
}

TEST_CASE("mirror, crossing change, delete, writhe")
{
    auto vt = parse_gauss_code("O1+ O2+ U1+ U2+");
    CHECK(mirror(vt) == parse_gauss_code("U1- U2- O1- O2-"));
    CHECK(crossing_change(vt, 1) == parse_gauss_code("U1- O2+ O1- U2+"));
    CHECK(delete_chord(vt, 2) == parse_gauss_code("O1+ U1+"));
    CHECK(writhe(vt) == 2);
    CHECK(writhe(parse_gauss_code("")) == 0);
    CHECK(writhe(mirror(vt)) == -2);
    CHECK_THROWS_AS(crossing_change(vt, 7), diagram_error);
    CHECK_THROWS_AS(delete_chord(vt, 7), diagram_error);
}

TEST_CASE("equality is up to rotation and relabeling only")
{
    CHECK(parse_gauss_code("O5+ O9+ U5+ U9+") == parse_gauss_code("O1+ O2+ U1+ U2+"));
    CHECK(parse_gauss_code("O1+ O2+ U1+ U2+") != parse_gauss_code("O1+ O2+ U2+ U1+"));
    CHECK(parse_gauss_code("O1+ / U1+") == parse_gauss_code("U1+ / O1+"));
    CHECK(parse_gauss_code("O1+ U1+ / ") != parse_gauss_code("O1+ U1+"));
}

TEST_CASE("json round trip")
{
    auto d = parse_gauss_code("B O1+ U2- / O2- B U1+");
    auto j = to_json_string(d);
    CHECK(from_json_string(j) == d);
    CHECK(serialize(from_json_string(j)) == serialize(d));
    CHECK_THROWS(from_json_string("{\"components\": [[{\"chord\": 1, \"passage\": \"X\", \"sign\": 1}]]}"));
}

TEST_CASE("flat projection")
{
    auto vt = parse_gauss_code("O1+ O2+ U1+ U2+");
    auto f = flat_projection(vt);
    CHECK(f.to_string() == "1 2 1 2");
    auto g = flat_projection(mirror(crossing_change(vt, 2)));
    CHECK(canonical_flat(f, false).to_string() == canonical_flat(g, false).to_string());
}

TEST_CASE("random round trips and involutions")
{
    walk_rng rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        gauss_diagram d = trial % 3 == 0   ? random_link(rng, 1 + draw(rng, 3), draw(rng, 7))
                          : trial % 3 == 1 ? random_twisted_knot(rng, draw(rng, 6), draw(rng, 4))
                                           : random_knot(rng, draw(rng, 9));
        auto s = serialize(d);
        CHECK(parse_gauss_code(s) == d);
        CHECK(serialize(parse_gauss_code(s)) == s);
        CHECK(mirror(mirror(d)) == d);
        CHECK(reverse(reverse(d)) == d);
        CHECK(writhe(mirror(d)) == -writhe(d));
        CHECK(from_json_string(to_json_string(d)) == d);
        for (auto& c : d.chords()) {
            auto e = delete_chord(d, c.label);
            CHECK(e.chord_count() + 1 == d.chord_count());
            CHECK(crossing_change(crossing_change(d, c.label), c.label) == d);
        }
    }
}
