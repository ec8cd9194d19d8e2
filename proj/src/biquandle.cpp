#include "chordal/biquandle.hpp"

#include <algorithm>
#include <numeric>

#include <json.hpp>

#include "chordal/coloring.hpp"
#include "chordal/error.hpp"

namespace chordal {

void validate_shape(const finite_biquandle& b)
{
    if (b.size <= 0) throw diagram_error("biquandle size must be positive");
    for (auto* t : {&b.star, &b.circ}) {
        if (static_cast<int>(t->size()) != b.size) throw diagram_error("biquandle table has the wrong shape");
        for (auto& row : *t) {
            if (static_cast<int>(row.size()) != b.size) throw diagram_error("biquandle table has the wrong shape");
            for (int x : row)
                if (x < 0 || x >= b.size) throw diagram_error("biquandle table entry out of range");
        }
    }
}

std::vector<axiom_violation> check_biquandle(const finite_biquandle& b, std::size_t limit)
{
    validate_shape(b);
    std::vector<axiom_violation> out;
    auto report = [&](const char* name, std::vector<std::int64_t> w) {
        if (out.size() < limit) out.push_back({name, std::move(w)});
    };
    int n = b.size;
    const auto& s = b.star;
    const auto& c = b.circ;
    for (int x = 0; x < n; ++x)
        if (s[x][x] != c[x][x]) report("diagonal", {x});
    for (int x = 0; x < n; ++x) {
        std::vector<char> hs(n, 0), hc(n, 0);
        for (int z = 0; z < n; ++z) {
            hs[s[z][x]] = 1;
            hc[c[z][x]] = 1;
        }
        for (int y = 0; y < n; ++y) {
            if (!hs[y]) report("star-invertibility", {x, y});
            if (!hc[y]) report("circ-invertibility", {x, y});
        }
    }
    std::vector<char> hit(n * n, 0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) hit[c[y][x] * n + s[x][y]] = 1;
    for (int k = 0; k < n * n; ++k)
        if (!hit[k]) {
            report("switch-invertibility", {k / n, k % n});
            break;
        }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                if (c[c[z][y]][s[x][y]] != c[c[z][x]][c[y][x]]) report("exchange-1", {x, y, z});
                if (s[c[y][x]][c[z][x]] != c[s[y][z]][s[x][z]]) report("exchange-2", {x, y, z});
                if (s[s[x][y]][c[z][y]] != s[s[x][z]][s[y][z]]) report("exchange-3", {x, y, z});
            }
    return out;
}

bool exchange_lemma_holds(const finite_biquandle& b)
{
    for (int x = 0; x < b.size; ++x)
        for (int y = 0; y < b.size; ++y)
            if (b.star[x][y] == b.circ[y][x] && x != y) return false;
    return true;
}

finite_biquandle flip_biquandle()
{
    finite_biquandle b{2, {{1, 1}, {0, 0}}, {{1, 1}, {0, 0}}};
    return b;
}

finite_biquandle biquandle_from_quandle(const indexed_quandle& q)
{
    validate_shape(q);
    finite_biquandle b{q.size, q.tables[0], {}};
    b.circ.assign(q.size, std::vector<int>(q.size));
    for (int x = 0; x < q.size; ++x)
        for (int y = 0; y < q.size; ++y) b.circ[x][y] = x;
    return b;
}

std::vector<finite_biquandle> all_biquandles(int n)
{
    if (n < 1 || n > 3) throw diagram_error("biquandle enumeration supports orders 1 to 3");
    // Tables whose columns are permutations.
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> perms;
    do perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));
    std::vector<std::vector<std::vector<int>>> tables;
    std::vector<std::size_t> pick(n, 0);
    while (true) {
        std::vector<std::vector<int>> t(n, std::vector<int>(n));
        for (int col = 0; col < n; ++col)
            for (int row = 0; row < n; ++row) t[row][col] = perms[pick[col]][row];
        tables.push_back(std::move(t));
        int k = 0;
        while (k < n && ++pick[k] == perms.size()) pick[k++] = 0;
        if (k == n) break;
    }
    std::vector<finite_biquandle> out;
    for (auto& s : tables)
        for (auto& c : tables) {
            finite_biquandle b{n, s, c};
            if (check_biquandle(b, 1).empty()) out.push_back(std::move(b));
        }
    return out;
}

std::size_t semiarc_layout::incoming(const gauss_diagram& d, position p) const
{
    return leaving[p.comp][d.prev(p).offset];
}

semiarc_layout layout_semiarcs(const gauss_diagram& d)
{
    semiarc_layout lay;
    for (auto& w : d.components()) {
        lay.leaving.emplace_back(w.size());
        for (std::size_t k = 0; k < w.size(); ++k) lay.leaving.back()[k] = lay.count++;
        if (w.empty()) ++lay.count;  // a bare circle is one free semiarc
    }
    return lay;
}

namespace {

std::vector<coloring_constraint> semiarc_constraints(const gauss_diagram& d, const semiarc_layout& lay,
                                                     const finite_biquandle& b, const std::vector<int>& twist)
{
    std::vector<coloring_constraint> cons;
    const finite_biquandle* bp = &b;
    for (auto& c : d.chords()) {
        int in_u = static_cast<int>(lay.incoming(d, c.under));
        int out_u = static_cast<int>(lay.leaving[c.under.comp][c.under.offset]);
        int in_o = static_cast<int>(lay.incoming(d, c.over));
        int out_o = static_cast<int>(lay.leaving[c.over.comp][c.over.offset]);
        std::vector<int> vars = c.sign > 0 ? std::vector<int>{in_u, out_o, out_u, in_o}
                                           : std::vector<int>{out_u, in_o, in_u, out_o};
        cons.push_back({vars, [bp](const int* v) {
                            return bp->star[v[0]][v[1]] == v[2] && bp->circ[v[1]][v[0]] == v[3];
                        }});
    }
    if (d.bar_count() > 0) {
        if (static_cast<int>(twist.size()) != b.size) throw diagram_error("bars need a twist map on the carrier");
        const std::vector<int>* tp = &twist;
        for (std::size_t ci = 0; ci < d.component_count(); ++ci)
            for (std::size_t k = 0; k < d.component(ci).size(); ++k) {
                position p{ci, k};
                if (!d.at(p).bar) continue;
                int in = static_cast<int>(lay.incoming(d, p));
                int out = static_cast<int>(lay.leaving[ci][k]);
                cons.push_back({{in, out}, [tp](const int* v) { return (*tp)[v[0]] == v[1]; }});
            }
    }
    return cons;
}

} // namespace

std::uint64_t count_biquandle_colorings(const gauss_diagram& d, const finite_biquandle& b,
                                        std::vector<std::vector<int>>* colorings, const std::vector<int>& twist)
{
    validate_shape(b);
    auto lay = layout_semiarcs(d);
    coloring_search search(static_cast<int>(lay.count), b.size, semiarc_constraints(d, lay, b, twist));
    if (!colorings) return search.count();
    std::uint64_t n = 0;
    search.run([&](const std::vector<int>& v) {
        colorings->push_back(v);
        ++n;
    });
    return n;
}

std::pair<int, int> crossing_weight(const gauss_diagram& d, const semiarc_layout& lay, const chord& c,
                                    const std::vector<int>& col)
{
    if (c.sign > 0) return {col[lay.incoming(d, c.under)], col[lay.leaving[c.over.comp][c.over.offset]]};
    return {col[lay.leaving[c.under.comp][c.under.offset]], col[lay.incoming(d, c.over)]};
}

index_group_result index_group(const finite_biquandle& b, index_group_kind which)
{
    validate_shape(b);
    int n = b.size;
    auto gen = [n](int x, int y) { return static_cast<std::size_t>(x * n + y); };
    std::vector<std::vector<std::int64_t>> rels;
    auto row = [&]() { return std::vector<std::int64_t>(n * n, 0); };
    const auto& s = b.star;
    const auto& c = b.circ;
    for (int x = 0; x < n; ++x) {
        auto r = row();
        r[gen(x, x)] = 1;
        rels.push_back(std::move(r));
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                if (which == index_group_kind::reduced) {
                    auto eq = [&](std::size_t a, std::size_t bb) {
                        if (a == bb) return;
                        auto r = row();
                        r[a] += 1;
                        r[bb] -= 1;
                        rels.push_back(std::move(r));
                    };
                    eq(gen(x, y), gen(s[x][z], s[y][z]));
                    eq(gen(y, z), gen(c[y][x], c[z][x]));
                    eq(gen(x, z), gen(s[x][y], c[z][y]));
                } else {
                    auto r = row();
                    r[gen(x, y)] += 1;
                    r[gen(y, z)] += 1;
                    r[gen(s[x][y], c[z][y])] += 1;
                    r[gen(s[x][z], s[y][z])] -= 1;
                    r[gen(c[y][x], c[z][x])] -= 1;
                    r[gen(x, z)] -= 1;
                    if (std::any_of(r.begin(), r.end(), [](std::int64_t v) { return v != 0; }))
                        rels.push_back(std::move(r));
                }
            }
    return index_group_result{n, present_abelian(static_cast<std::size_t>(n * n), rels)};
}

std::map<int, group_ring> crossing_indices(const gauss_diagram& d, const finite_biquandle& b)
{
    if (d.bar_count() != 0) throw diagram_error("biquandle indices are defined for bar-free diagrams");
    auto grp = index_group(b);
    auto lay = layout_semiarcs(d);
    std::map<int, group_ring> out;
    for (auto& c : d.chords()) out[c.label];
    coloring_search search(static_cast<int>(lay.count), b.size, semiarc_constraints(d, lay, b, {}));
    search.run([&](const std::vector<int>& col) {
        for (auto& c : d.chords()) {
            auto [x, y] = crossing_weight(d, lay, c, col);
            add_to(out[c.label], grp.image(x, y));
        }
    });
    return out;
}

std::map<group_ring, std::int64_t> a_g(const gauss_diagram& d, const finite_biquandle& b)
{
    auto ind = crossing_indices(d, b);
    auto grp = index_group(b);
    std::uint64_t col = count_biquandle_colorings(d, b);
    group_ring sum_one;
    add_to(sum_one, grp.presentation.group.zero(), static_cast<std::int64_t>(col));
    std::map<group_ring, std::int64_t> out;
    for (auto& c : d.chords()) out[ind[c.label]] += c.sign;
    out[sum_one] -= writhe(d);
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

std::map<int, int> affine_biquandle_indices(const gauss_diagram& d)
{
    require_virtual_knot(d, "the Z-affine biquandle index");
    const auto& w = d.component(0);
    auto lay = layout_semiarcs(d);
    std::vector<long long> col(lay.count, 0);
    long long x = 0;
    for (std::size_t k = 0; k < w.size(); ++k) {
        const token& t = w[k];
        // The under strand gains 1 along a positive crossing and loses 1
        // along a negative one; the over strand does the opposite.
        int step = t.is_under() ? t.sign : -t.sign;
        x += step;
        col[lay.leaving[0][k]] = x;
    }
    if (x != 0) throw diagram_error("affine coloring does not close up");
    std::map<int, int> out;
    for (auto& c : d.chords()) {
        long long in_u = col[lay.incoming(d, c.under)], out_u = col[lay.leaving[0][c.under.offset]];
        long long in_o = col[lay.incoming(d, c.over)], out_o = col[lay.leaving[0][c.over.offset]];
        out[c.label] = static_cast<int>(c.sign > 0 ? out_o - in_u : in_o - out_u);
    }
    return out;
}

finite_biquandle biquandle_from_json(const std::string& text)
{
    try {
        auto j = nlohmann::json::parse(text);
        finite_biquandle b;
        b.size = j.at("size").get<int>();
        b.star = j.at("star").get<std::vector<std::vector<int>>>();
        b.circ = j.at("circ").get<std::vector<std::vector<int>>>();
        validate_shape(b);
        return b;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("biquandle file: ") + e.what(), 0);
    } catch (const diagram_error& e) {
        throw parse_error(std::string("biquandle file: ") + e.what(), 0);
    }
}

} // namespace chordal
