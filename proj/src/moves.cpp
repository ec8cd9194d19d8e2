#include "chordal/moves.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "chordal/error.hpp"

namespace chordal {

namespace {

using words = std::vector<std::vector<token>>;

void check_site(const gauss_diagram& d, arc_site at)
{
    if (at.comp >= d.component_count() || at.offset > d.component(at.comp).size())
        throw diagram_error("insertion site out of range");
}

// Inserts groups of tokens before given offsets of the original words.
gauss_diagram insert_groups(const gauss_diagram& d, const std::vector<std::pair<arc_site, std::vector<token>>>& groups)
{
    words out;
    for (std::size_t c = 0; c < d.component_count(); ++c) {
        const auto& w = d.component(c);
        std::vector<token> nw;
        for (std::size_t k = 0; k <= w.size(); ++k) {
            for (auto& [at, toks] : groups)
                if (at.comp == c && at.offset == k) nw.insert(nw.end(), toks.begin(), toks.end());
            if (k < w.size()) nw.push_back(w[k]);
        }
        out.push_back(std::move(nw));
    }
    return gauss_diagram(std::move(out));
}

gauss_diagram remove_labels(const gauss_diagram& d, const std::set<int>& labels)
{
    words out = d.components();
    for (auto& w : out)
        w.erase(std::remove_if(w.begin(), w.end(), [&](const token& t) { return !t.bar && labels.count(t.label); }),
                w.end());
    return gauss_diagram(std::move(out));
}

bool r1_removable(const gauss_diagram& d, const chord& c)
{
    return d.adjacent(c.over, c.under) || d.adjacent(c.under, c.over);
}

bool r2_removable(const gauss_diagram& d, const chord& a, const chord& b)
{
    if (a.sign != -b.sign) return false;
    bool overs = d.adjacent(a.over, b.over) || d.adjacent(b.over, a.over);
    bool unders = d.adjacent(a.under, b.under) || d.adjacent(b.under, a.under);
    return overs && unders;
}

position end_of(const chord& c, passage p) { return p == passage::over ? c.over : c.under; }

} // namespace

gauss_diagram r1_insert(const gauss_diagram& d, arc_site at, passage first, int sign)
{
    check_site(d, at);
    if (sign != 1 && sign != -1) throw diagram_error("sign must be +1 or -1");
    int l = d.next_label();
    std::vector<token> pair{token::end(l, first, sign), token::end(l, opposite(first), sign)};
    return insert_groups(d, {{at, pair}});
}

gauss_diagram r1_remove(const gauss_diagram& d, int label)
{
    const chord& c = d.chord_of(label);
    if (!r1_removable(d, c)) throw diagram_error("chord " + std::to_string(label) + " is not isolated");
    return remove_labels(d, {label});
}

std::vector<int> r1_candidates(const gauss_diagram& d)
{
    std::vector<int> out;
    for (auto& c : d.chords())
        if (r1_removable(d, c)) out.push_back(c.label);
    return out;
}

gauss_diagram r2_insert(const gauss_diagram& d, arc_site over_at, arc_site under_at, r2_variant v)
{
    check_site(d, over_at);
    check_site(d, under_at);
    if (v.sign != 1 && v.sign != -1) throw diagram_error("sign must be +1 or -1");
    int a = d.next_label(), b = a + 1;
    std::vector<token> overs{token::end(a, passage::over, v.sign), token::end(b, passage::over, -v.sign)};
    std::vector<token> unders{token::end(a, passage::under, v.sign), token::end(b, passage::under, -v.sign)};
    if (v.under_swapped) std::swap(unders[0], unders[1]);
    return insert_groups(d, {{over_at, overs}, {under_at, unders}});
}

gauss_diagram r2_remove(const gauss_diagram& d, int label1, int label2)
{
    const chord& a = d.chord_of(label1);
    const chord& b = d.chord_of(label2);
    if (label1 == label2 || !r2_removable(d, a, b))
        throw diagram_error("chords " + std::to_string(label1) + ", " + std::to_string(label2) +
                            " do not form a cancelling pair");
    return remove_labels(d, {label1, label2});
}

std::vector<std::pair<int, int>> r2_candidates(const gauss_diagram& d)
{
    std::vector<std::pair<int, int>> out;
    const auto& cs = d.chords();
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = i + 1; j < cs.size(); ++j)
            if (r2_removable(d, cs[i], cs[j])) out.emplace_back(cs[i].label, cs[j].label);
    return out;
}

const std::array<r3_pattern, 16>& r3_table()
{
    static const std::array<r3_pattern, 16> table{{
        {false, false, false, -1, -1, -1}, {false, false, false, 1, 1, 1},
        {false, false, true, -1, 1, 1},    {false, false, true, 1, -1, -1},
        {false, true, false, -1, 1, -1},   {false, true, false, 1, -1, 1},
        {false, true, true, -1, -1, 1},    {false, true, true, 1, 1, -1},
        {true, false, false, -1, -1, 1},   {true, false, false, 1, 1, -1},
        {true, false, true, -1, 1, -1},    {true, false, true, 1, -1, 1},
        {true, true, false, -1, 1, 1},     {true, true, false, 1, -1, -1},
        {true, true, true, -1, -1, -1},    {true, true, true, 1, 1, 1},
    }};
    return table;
}

namespace {

struct r3_match {
    std::array<std::pair<position, position>, 3> pairs;
};

bool match_r3(const gauss_diagram& d, int l1, int l2, int l3, r3_match& out)
{
    std::array<int, 3> labels{l1, l2, l3};
    std::sort(labels.begin(), labels.end());
    if (labels[0] == labels[1] || labels[1] == labels[2]) return false;
    do {
        const chord& tm = d.chord_of(labels[0]);
        const chord& tb = d.chord_of(labels[1]);
        const chord& mb = d.chord_of(labels[2]);
        std::array<std::pair<position, position>, 3> pairs{
            std::pair{end_of(tm, passage::over), end_of(tb, passage::over)},
            std::pair{end_of(tm, passage::under), end_of(mb, passage::over)},
            std::pair{end_of(tb, passage::under), end_of(mb, passage::under)},
        };
        std::array<bool, 3> bits{};
        bool ok = true;
        for (int k = 0; k < 3 && ok; ++k) {
            if (d.adjacent(pairs[k].first, pairs[k].second))
                bits[k] = true;
            else if (d.adjacent(pairs[k].second, pairs[k].first))
                bits[k] = false;
            else
                ok = false;
        }
        if (!ok) continue;
        r3_pattern p{bits[0], bits[1], bits[2], tm.sign, tb.sign, mb.sign};
        const auto& table = r3_table();
        if (std::find(table.begin(), table.end(), p) == table.end()) continue;
        out.pairs = pairs;
        return true;
    } while (std::next_permutation(labels.begin(), labels.end()));
    return false;
}

} // namespace

gauss_diagram r3_apply(const gauss_diagram& d, int label1, int label2, int label3)
{
    d.chord_of(label1);
    d.chord_of(label2);
    d.chord_of(label3);
    r3_match m;
    if (!match_r3(d, label1, label2, label3, m)) throw diagram_error("chords do not form an R3 configuration");
    words out = d.components();
    for (auto& [a, b] : m.pairs) std::swap(out[a.comp][a.offset], out[b.comp][b.offset]);
    return gauss_diagram(std::move(out));
}

std::vector<std::array<int, 3>> r3_candidates(const gauss_diagram& d)
{
    std::vector<std::array<int, 3>> out;
    const auto& cs = d.chords();
    std::size_t n = cs.size();
    // Each chord of a triangle has an endpoint adjacent to an endpoint of
    // each other chord, so prefilter by adjacency.
    std::map<int, std::set<int>> near;
    for (auto& c : cs) {
        for (position p : {c.over, c.under}) {
            if (d.component(p.comp).size() < 2) continue;
            for (position q : {d.next(p), d.prev(p)}) {
                const token& t = d.at(q);
                if (!t.bar && t.label != c.label) near[c.label].insert(t.label);
            }
        }
    }
    r3_match m;
    for (std::size_t i = 0; i < n; ++i) {
        int a = cs[i].label;
        for (int b : near[a]) {
            if (b <= a) continue;
            for (int c : near[b]) {
                if (c <= b || !near[a].count(c)) continue;
                if (match_r3(d, a, b, c, m)) out.push_back({a, b, c});
            }
        }
    }
    return out;
}

std::string to_string(twist_kind k)
{
    switch (k) {
    case twist_kind::bar_pair_insert: return "bar-pair-insert";
    case twist_kind::bar_pair_cancel: return "bar-pair-cancel";
    case twist_kind::bar_slide: return "bar-slide";
    case twist_kind::crossing_flip: return "crossing-flip";
    case twist_kind::crossing_unflip: return "crossing-unflip";
    }
    return "?";
}

twist_kind twist_kind_from_string(const std::string& s)
{
    for (auto k : {twist_kind::bar_pair_insert, twist_kind::bar_pair_cancel, twist_kind::bar_slide,
                   twist_kind::crossing_flip, twist_kind::crossing_unflip})
        if (to_string(k) == s) return k;
    throw diagram_error("unknown twisted move kind '" + s + "'");
}

namespace {

bool is_bar(const gauss_diagram& d, position p) { return d.at(p).bar; }

// The four bars around a chord's endpoints, if all present and distinct.
bool flanking_bars(const gauss_diagram& d, const chord& c, std::array<position, 4>& out)
{
    for (position p : {c.over, c.under})
        if (d.component(p.comp).size() < 3) return false;
    out = {d.prev(c.over), d.next(c.over), d.prev(c.under), d.next(c.under)};
    for (std::size_t i = 0; i < 4; ++i) {
        if (!is_bar(d, out[i])) return false;
        for (std::size_t j = 0; j < i; ++j)
            if (out[i] == out[j]) return false;
    }
    return true;
}

} // namespace

std::vector<int> flip_candidates(const gauss_diagram& d)
{
    std::vector<int> out;
    std::array<position, 4> bars;
    for (auto& c : d.chords())
        if (flanking_bars(d, c, bars)) out.push_back(c.label);
    return out;
}

std::vector<position> bar_pair_candidates(const gauss_diagram& d)
{
    std::vector<position> out;
    for (std::size_t c = 0; c < d.component_count(); ++c) {
        std::size_t n = d.component(c).size();
        if (n < 2) continue;
        for (std::size_t k = 0; k < n; ++k) {
            position p{c, k};
            if (is_bar(d, p) && is_bar(d, d.next(p))) out.push_back(p);
        }
    }
    return out;
}

gauss_diagram twisted_move(const gauss_diagram& d, twist_kind kind, const twist_site& site)
{
    switch (kind) {
    case twist_kind::bar_pair_insert:
        check_site(d, site.at);
        return insert_groups(d, {{site.at, {token::make_bar(), token::make_bar()}}});
    case twist_kind::bar_pair_cancel: {
        position p = site.pos;
        if (p.comp >= d.component_count() || p.offset >= d.component(p.comp).size() ||
            d.component(p.comp).size() < 2 || !is_bar(d, p) || !is_bar(d, d.next(p)))
            throw diagram_error("no adjacent bar pair at the given position");
        words out = d.components();
        auto& w = out[p.comp];
        std::size_t a = p.offset, b = d.next(p).offset;
        w.erase(w.begin() + std::max(a, b));
        w.erase(w.begin() + std::min(a, b));
        return gauss_diagram(std::move(out));
    }
    case twist_kind::bar_slide: {
        position p = site.pos;
        if (p.comp >= d.component_count() || p.offset >= d.component(p.comp).size() || !is_bar(d, p))
            throw diagram_error("no bar at the given position");
        return d;
    }
    case twist_kind::crossing_flip: {
        const chord& c = d.chord_of(site.label);
        std::array<position, 4> bars;
        if (!flanking_bars(d, c, bars))
            throw diagram_error("chord " + std::to_string(site.label) + " is not flanked by four bars");
        words out = d.components();
        for (auto& w : out)
            for (auto& t : w)
                if (!t.bar && t.label == c.label) t.pass = opposite(t.pass);
        std::sort(bars.begin(), bars.end(), [](position a, position b) {
            return a.comp != b.comp ? a.comp > b.comp : a.offset > b.offset;
        });
        for (position p : bars) out[p.comp].erase(out[p.comp].begin() + p.offset);
        return gauss_diagram(std::move(out));
    }
    case twist_kind::crossing_unflip: {
        const chord& c = d.chord_of(site.label);
        words out;
        for (auto& w : d.components()) {
            std::vector<token> nw;
            for (auto t : w) {
                if (!t.bar && t.label == c.label) {
                    t.pass = opposite(t.pass);
                    nw.push_back(token::make_bar());
                    nw.push_back(t);
                    nw.push_back(token::make_bar());
                } else {
                    nw.push_back(t);
                }
            }
            out.push_back(std::move(nw));
        }
        return gauss_diagram(std::move(out));
    }
    }
    throw diagram_error("unknown twisted move");
}

std::uint64_t draw(walk_rng& rng, std::uint64_t n)
{
    return n == 0 ? 0 : rng() % n;
}

namespace {

arc_site random_site(const gauss_diagram& d, walk_rng& rng)
{
    std::size_t c = draw(rng, d.component_count());
    return {c, draw(rng, d.component(c).size() + 1)};
}

template <class T>
const T& pick(const std::vector<T>& v, walk_rng& rng)
{
    return v[draw(rng, v.size())];
}

} // namespace

gauss_diagram random_move(const gauss_diagram& d, walk_rng& rng, const walk_options& opt)
{
    std::size_t n = d.chord_count();
    std::size_t kinds = opt.twisted ? 9 : 5;
    for (int attempt = 0; attempt < 64; ++attempt) {
        switch (draw(rng, kinds)) {
        case 0:
            if (n < opt.chord_cap) {
                arc_site at = random_site(d, rng);
                passage first = draw(rng, 2) ? passage::under : passage::over;
                return r1_insert(d, at, first, draw(rng, 2) ? -1 : 1);
            }
            break;
        case 1:
            if (auto c = r1_candidates(d); !c.empty()) return r1_remove(d, pick(c, rng));
            break;
        case 2:
            if (n + 2 <= opt.chord_cap) {
                arc_site a = random_site(d, rng);
                arc_site b = random_site(d, rng);
                r2_variant v{draw(rng, 2) ? -1 : 1, draw(rng, 2) == 1};
                return r2_insert(d, a, b, v);
            }
            break;
        case 3:
            if (auto c = r2_candidates(d); !c.empty()) {
                auto [a, b] = pick(c, rng);
                return r2_remove(d, a, b);
            }
            break;
        case 4:
            if (auto c = r3_candidates(d); !c.empty()) {
                auto t = pick(c, rng);
                return r3_apply(d, t[0], t[1], t[2]);
            }
            break;
        case 5:
            if (d.bar_count() + 2 <= opt.bar_cap) {
                twist_site s;
                s.at = random_site(d, rng);
                return twisted_move(d, twist_kind::bar_pair_insert, s);
            }
            break;
        case 6:
            if (auto c = bar_pair_candidates(d); !c.empty()) {
                twist_site s;
                s.pos = pick(c, rng);
                return twisted_move(d, twist_kind::bar_pair_cancel, s);
            }
            break;
        case 7:
            if (auto c = flip_candidates(d); !c.empty()) {
                twist_site s;
                s.label = pick(c, rng);
                return twisted_move(d, twist_kind::crossing_flip, s);
            }
            break;
        case 8:
            if (n > 0 && d.bar_count() + 4 <= opt.bar_cap) {
                twist_site s;
                s.label = d.chords()[draw(rng, n)].label;
                return twisted_move(d, twist_kind::crossing_unflip, s);
            }
            break;
        }
    }
    return d;
}

gauss_diagram random_walk(const gauss_diagram& d, std::size_t steps, std::uint64_t seed, const walk_options& opt,
                          std::vector<gauss_diagram>* trace)
{
    walk_rng rng(seed);
    gauss_diagram cur = d;
    if (trace) trace->push_back(cur);
    for (std::size_t s = 0; s < steps; ++s) {
        cur = random_move(cur, rng, opt);
        if (trace) trace->push_back(cur);
    }
    return cur;
}

namespace {

template <class T>
void shuffle(std::vector<T>& v, walk_rng& rng)
{
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[draw(rng, i)]);
}

} // namespace

gauss_diagram random_knot(walk_rng& rng, std::size_t chords)
{
    std::vector<token> w;
    for (std::size_t l = 1; l <= chords; ++l) {
        int s = draw(rng, 2) ? -1 : 1;
        w.push_back(token::end(static_cast<int>(l), passage::over, s));
        w.push_back(token::end(static_cast<int>(l), passage::under, s));
    }
    shuffle(w, rng);
    return gauss_diagram({w});
}

gauss_diagram random_link(walk_rng& rng, std::size_t components, std::size_t chords)
{
    if (components == 0) throw diagram_error("a link needs at least one component");
    auto knot = random_knot(rng, chords);
    std::vector<std::vector<token>> out(components);
    for (auto& t : knot.component(0)) out[draw(rng, components)].push_back(t);
    return gauss_diagram(std::move(out));
}

gauss_diagram random_twisted_knot(walk_rng& rng, std::size_t chords, std::size_t bars)
{
    auto w = random_knot(rng, chords).component(0);
    for (std::size_t b = 0; b < bars; ++b) w.insert(w.begin() + draw(rng, w.size() + 1), token::make_bar());
    return gauss_diagram({w});
}

} // namespace chordal
