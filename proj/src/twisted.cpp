#include "chordal/twisted.hpp"

#include <algorithm>

#include <json.hpp>

#include "chordal/error.hpp"

namespace chordal {

namespace {

std::int64_t pmod(std::int64_t a, std::int64_t m)
{
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

void require_twisted_knot(const gauss_diagram& d, const char* what)
{
    if (d.component_count() != 1)
        throw diagram_error(std::string(what) + " is defined for knot diagrams (one component)");
}

void require_bar_parity(const gauss_diagram& d, bool odd, const char* what)
{
    if ((d.bar_count() % 2 == 1) != odd)
        throw diagram_error(std::string(what) + " needs an " + (odd ? "odd" : "even") + " number of bars");
}

} // namespace

std::vector<axiom_violation> check_twisted_biquandle(const twisted_biquandle& t, std::size_t limit)
{
    auto out = check_biquandle(t.base, limit);
    int n = t.base.size;
    if (static_cast<int>(t.twist.size()) != n) throw diagram_error("twist map has the wrong size");
    for (int x : t.twist)
        if (x < 0 || x >= n) throw diagram_error("twist map entry out of range");
    const auto& s = t.base.star;
    const auto& c = t.base.circ;
    const auto& f = t.twist;
    auto report = [&](const char* name, std::vector<std::int64_t> w) {
        if (out.size() < limit) out.push_back({name, std::move(w)});
    };
    for (int x = 0; x < n; ++x) {
        if (f[f[x]] != x) report("involution", {x});
        for (int y = 0; y < n; ++y) {
            if (s[f[c[y][x]]][f[s[x][y]]] != f[y]) report("twist-1", {x, y});
            if (c[f[s[x][y]]][f[c[y][x]]] != f[x]) report("twist-2", {x, y});
        }
    }
    return out;
}

twisted_biquandle affine_twisted(int n)
{
    if (n < 1) throw diagram_error("carrier size must be positive");
    twisted_biquandle t;
    t.base.size = n;
    t.base.star.assign(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) t.base.star[x][y] = (x + 1) % n;
    t.base.circ = t.base.star;
    for (int x = 0; x < n; ++x) t.twist.push_back((n - x) % n);
    return t;
}

std::uint64_t count_twisted_colorings(const gauss_diagram& d, const twisted_biquandle& t)
{
    return count_biquandle_colorings(d, t.base, nullptr, t.twist);
}

edge_decomposition edge_stats(const gauss_diagram& d)
{
    require_twisted_knot(d, "edge statistics");
    const auto& w = d.component(0);
    std::size_t n = w.size();
    edge_decomposition e;
    if (d.bar_count() == 0) {
        edge_counts c;
        for (auto& t : w) {
            if (t.is_over()) (t.sign > 0 ? c.over_pos : c.over_neg)++;
            else (t.sign > 0 ? c.under_pos : c.under_neg)++;
        }
        e.edges.push_back(c);
        return e;
    }
    while (!w[e.first_bar].bar) ++e.first_bar;
    e.edges.resize(d.bar_count());
    std::size_t idx = 0;
    for (std::size_t i = 1; i < n; ++i) {
        const token& t = w[(e.first_bar + i) % n];
        if (t.bar) {
            ++idx;
            continue;
        }
        auto& c = e.edges[idx];
        if (t.is_over()) (t.sign > 0 ? c.over_pos : c.over_neg)++;
        else (t.sign > 0 ? c.under_pos : c.under_neg)++;
    }
    return e;
}

affine_coloring propagate_coloring(const gauss_diagram& d, std::int64_t start, std::int64_t modulus)
{
    require_twisted_knot(d, "affine coloring");
    const auto& w = d.component(0);
    affine_coloring c;
    std::int64_t x = modulus ? pmod(start, modulus) : start;
    for (auto& t : w) {
        c.col_in.push_back(x);
        if (t.bar)
            x = -x;
        else
            x += t.is_under() ? t.sign : -t.sign;
        if (modulus) x = pmod(x, modulus);
    }
    c.closing = x;
    return c;
}

affine_coloring odd_coloring_by_propagation(const gauss_diagram& d)
{
    require_twisted_knot(d, "the odd coloring");
    require_bar_parity(d, true, "the odd coloring");
    // Around the loop x maps to closing(0) - x, so the fixed point is half of it.
    std::int64_t end0 = propagate_coloring(d, 0).closing;
    if (end0 % 2 != 0) throw std::logic_error("odd-bar coloring has no integer solution");
    auto c = propagate_coloring(d, end0 / 2);
    if (c.closing != end0 / 2) throw std::logic_error("odd-bar coloring does not close");
    return c;
}

affine_coloring odd_coloring_from_edges(const gauss_diagram& d)
{
    require_bar_parity(d, true, "the odd coloring");
    auto e = edge_stats(d);
    // Color k at the start of e_1 satisfies
    // sum_even s(e_i) - sum_odd s(e_i) - k = k (edges numbered from 1).
    std::int64_t even = 0, odd = 0;
    for (std::size_t i = 0; i < e.edges.size(); ++i) (i % 2 == 0 ? odd : even) += e.edges[i].s();
    std::int64_t twice = even - odd;
    if (twice % 2 != 0) throw std::logic_error("edge sums have odd difference");
    std::int64_t k = twice / 2;
    // Walk from just after the first bar, then rotate back to offset 0.
    const auto& w = d.component(0);
    std::size_t n = w.size();
    affine_coloring c;
    c.col_in.assign(n, 0);
    std::int64_t x = k;
    for (std::size_t i = 1; i <= n; ++i) {
        std::size_t p = (e.first_bar + i) % n;
        c.col_in[p] = x;
        const token& t = w[p];
        if (t.bar)
            x = -x;
        else
            x += t.is_under() ? t.sign : -t.sign;
    }
    if (x != k) throw std::logic_error("edge-sum coloring does not close");
    c.closing = c.col_in[0];
    return c;
}

std::map<int, std::int64_t> twisted_indices(const gauss_diagram& d, const affine_coloring& c, std::int64_t modulus)
{
    std::map<int, std::int64_t> out;
    for (auto& ch : d.chords()) {
        std::int64_t v = c.col_in[ch.over.offset] - c.col_in[ch.under.offset] - ch.sign;
        out[ch.label] = modulus ? pmod(v, modulus) : v;
    }
    return out;
}

laurent_poly T_o(const gauss_diagram& d)
{
    require_twisted_knot(d, "T_o");
    require_bar_parity(d, true, "T_o");
    auto ind = twisted_indices(d, odd_coloring_by_propagation(d));
    laurent_poly p;
    for (auto& ch : d.chords()) p.add_term(4 * ind[ch.label], ch.sign);
    p.add_term(0, -writhe(d));
    return p;
}

std::int64_t S_invariant(const gauss_diagram& d)
{
    require_twisted_knot(d, "S");
    require_bar_parity(d, false, "S");
    auto e = edge_stats(d);
    std::int64_t alt = 0;
    for (std::size_t i = 0; i < e.edges.size(); ++i) alt += (i % 2 == 0 ? 1 : -1) * e.edges[i].s();
    return alt < 0 ? -alt : alt;
}

bool integer_coloring_exists(const gauss_diagram& d)
{
    require_twisted_knot(d, "affine coloring");
    std::int64_t end0 = propagate_coloring(d, 0).closing;
    if (d.bar_count() % 2 == 1) return end0 % 2 == 0;
    // With evenly many bars the loop map is x -> x + end0.
    return end0 == 0;
}

std::vector<int> even_class(const gauss_diagram& d)
{
    require_twisted_knot(d, "the chord partition");
    const auto& w = d.component(0);
    std::size_t n = w.size();
    std::vector<int> out;
    for (auto& ch : d.chords()) {
        std::size_t bars = 0;
        for (std::size_t p = (ch.over.offset + 1) % n; p != ch.under.offset; p = (p + 1) % n) bars += w[p].bar;
        if (bars % 2 == 0) out.push_back(ch.label);
    }
    return out;
}

te_value T_e(const gauss_diagram& d)
{
    require_twisted_knot(d, "T_e");
    require_bar_parity(d, false, "T_e");
    te_value v;
    v.modulus = S_invariant(d);
    auto col = propagate_coloring(d, 0, v.modulus);
    if (v.modulus == 0 && col.closing != 0)
        throw std::logic_error("no integer coloring although S = 0");
    auto ind = twisted_indices(d, col, v.modulus);
    auto even = even_class(d);
    for (auto& ch : d.chords()) {
        std::int64_t i = ind[ch.label];
        if (std::binary_search(even.begin(), even.end(), ch.label)) {
            auto& slot = v.t_terms[i];
            slot += ch.sign;
            if (slot == 0) v.t_terms.erase(i);
        } else {
            (pmod(i, 2) == 0 ? v.s0 : v.s1) += ch.sign;
        }
    }
    v.constant = -writhe(d);
    if (auto it = v.t_terms.find(0); it != v.t_terms.end()) {
        v.constant += it->second;
        v.t_terms.erase(it);
    }
    return v;
}

std::string te_value::to_string() const
{
    std::string s;
    auto term = [&](std::int64_t c, const std::string& sym) {
        if (c == 0) return;
        bool neg = c < 0;
        std::int64_t m = neg ? -c : c;
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        if (sym.empty())
            s += std::to_string(m);
        else
            s += (m == 1 ? "" : std::to_string(m)) + sym;
    };
    term(s0, "s0");
    term(s1, "s1");
    for (auto it = t_terms.rbegin(); it != t_terms.rend(); ++it) {
        std::string sym = it->first == 1 ? "t" : "t^" + std::to_string(it->first);
        term(it->second, sym);
    }
    term(constant, "");
    if (s.empty()) s = "0";
    if (modulus) s += " (exponents mod " + std::to_string(modulus) + ")";
    return s;
}

laurent_poly te_value::as_poly() const
{
    if (modulus != 0) throw diagram_error("exponents are only integral when S = 0");
    laurent_poly p;
    for (auto [e, c] : t_terms) p.add_term(4 * e, c);
    p.add_term(0, constant);
    return p;
}

twisted_biquandle twisted_from_json(const std::string& text)
{
    try {
        auto j = nlohmann::json::parse(text);
        twisted_biquandle t;
        t.base = biquandle_from_json(text);
        t.twist = j.at("twist").get<std::vector<int>>();
        if (static_cast<int>(t.twist.size()) != t.base.size) throw diagram_error("twist map has the wrong size");
        return t;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("twisted biquandle file: ") + e.what(), 0);
    } catch (const diagram_error& e) {
        throw parse_error(std::string("twisted biquandle file: ") + e.what(), 0);
    }
}

} // namespace chordal
