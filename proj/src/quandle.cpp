#include "chordal/quandle.hpp"

#include <algorithm>
#include <numeric>

#include <json.hpp>

#include "chordal/coloring.hpp"
#include "chordal/error.hpp"
#include "chordal/index.hpp"

namespace chordal {

namespace {

int pmod(std::int64_t a, std::int64_t m)
{
    std::int64_t r = a % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

} // namespace

std::string axiom_violation::to_string() const
{
    std::string s = axiom + "(";
    for (std::size_t i = 0; i < witness.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(witness[i]);
    }
    return s + ")";
}

int indexed_quandle::residue(std::int64_t i) const { return pmod(i, period); }

int indexed_quandle::op(std::int64_t i, int a, int b) const { return tables[residue(i)][a][b]; }

void validate_shape(const indexed_quandle& q)
{
    if (q.size <= 0) throw diagram_error("quandle size must be positive");
    if (q.period <= 0) throw diagram_error("quandle period must be positive");
    if (static_cast<int>(q.tables.size()) != q.period) throw diagram_error("one table per residue is required");
    for (auto& t : q.tables) {
        if (static_cast<int>(t.size()) != q.size) throw diagram_error("table has the wrong number of rows");
        for (auto& row : t) {
            if (static_cast<int>(row.size()) != q.size) throw diagram_error("table row has the wrong length");
            for (int x : row)
                if (x < 0 || x >= q.size) throw diagram_error("table entry out of range");
        }
    }
}

std::vector<axiom_violation> check_indexed_quandle(const indexed_quandle& q, std::size_t limit)
{
    validate_shape(q);
    limit = std::max<std::size_t>(limit, 1);
    std::vector<axiom_violation> out;
    auto report = [&](const char* name, std::vector<std::int64_t> w) {
        if (out.size() < limit) out.push_back({name, std::move(w)});
    };
    int n = q.size, m = q.period;
    for (int a = 0; a < n; ++a)
        if (q.op(0, a, a) != a) report("idempotency", {a});
    for (int i = 0; i < m; ++i)
        for (int b = 0; b < n; ++b) {
            std::vector<char> hit(n, 0);
            for (int a = 0; a < n; ++a) hit[q.op(i, a, b)] = 1;
            for (int c = 0; c < n; ++c)
                if (!hit[c]) {
                    report("right-invertibility", {i, b, c});
                    break;
                }
        }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    for (int c = 0; c < n; ++c)
                        if (q.op(j, q.op(i, a, b), c) != q.op(i, q.op(j, a, c), q.op(j - i, b, c))) {
                            report("distributivity", {i, j, a, b, c});
                            if (out.size() >= limit) return out;
                        }
    return out;
}

namespace {

indexed_quandle make(int n, int m, const std::function<int(int, int, int)>& f)
{
    indexed_quandle q{n, m, {}};
    q.tables.assign(m, std::vector<std::vector<int>>(n, std::vector<int>(n)));
    for (int i = 0; i < m; ++i)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) q.tables[i][a][b] = pmod(f(i, a, b), n);
    return q;
}

} // namespace

indexed_quandle indexed_dihedral(int n)
{
    return make(n, n, [](int k, int i, int j) { return 2 * j - i + k; });
}

indexed_quandle dihedral_quandle(int n)
{
    return make(n, 1, [](int, int i, int j) { return 2 * j - i; });
}

indexed_quandle shift_family()
{
    return make(2, 2, [](int i, int a, int) { return a + i; });
}

indexed_quandle constant_family(const indexed_quandle& base, int period)
{
    return make(base.size, period, [&](int, int a, int b) { return base.op(0, a, b); });
}

indexed_quandle split_family(const indexed_quandle& base, int period)
{
    return make(base.size, period, [&](int i, int a, int b) { return i == 0 ? base.op(0, a, b) : a; });
}

indexed_quandle affine_family(int n, int t)
{
    if (std::gcd(pmod(t, n), n) != 1) throw diagram_error("t must be a unit");
    return make(n, n, [=](int i, int a, int b) { return t * a + (1 - t) * b + i; });
}

indexed_quandle cyclic_group_family(int n, int u, int z)
{
    if (std::gcd(pmod(u, n), n) != 1) throw diagram_error("u must be a unit");
    int zr = pmod(z, n);
    int period = zr == 0 ? 1 : n / std::gcd(zr, n);
    return make(n, period, [=](int i, int a, int b) { return u * (a - b) + b + i * z; });
}

namespace {

// Arc structure of a knot diagram cut at under-passages.
struct crossing_arcs {
    int label;
    int sign;
    int index;
    int in;
    int out;
    int over;
};

std::vector<crossing_arcs> arcs_of(const gauss_diagram& d, int& arc_count)
{
    auto ind = chord_indices(d);
    const auto& w = d.component(0);
    std::size_t n = w.size();
    std::vector<int> arc_at(n, 0);
    int unders = 0;
    for (auto& t : w) unders += t.is_under();
    arc_count = std::max(unders, 1);
    // Arc j starts at the j-th under-passage; positions before the first one
    // belong to the last arc.
    int cur = unders > 0 ? unders - 1 : 0;
    for (std::size_t p = 0; p < n; ++p) {
        if (w[p].is_under()) cur = (cur + 1) % arc_count;
        arc_at[p] = cur;
    }
    std::vector<crossing_arcs> out;
    for (auto& c : d.chords()) {
        int o = arc_at[c.under.offset];
        int i = (o + arc_count - 1) % arc_count;
        out.push_back({c.label, c.sign, ind[c.label], i, o, arc_at[c.over.offset]});
    }
    return out;
}

coloring_search quandle_search(const gauss_diagram& d, const indexed_quandle& q, std::vector<crossing_arcs>& xs)
{
    require_virtual_knot(d, "indexed quandle coloring");
    validate_shape(q);
    int arcs = 0;
    xs = arcs_of(d, arcs);
    std::vector<coloring_constraint> cons;
    for (auto& x : xs) {
        std::int64_t i = x.index;
        const indexed_quandle* qp = &q;
        if (x.sign > 0)
            cons.push_back({{x.in, x.over, x.out}, [=](const int* v) { return qp->op(i, v[0], v[1]) == v[2]; }});
        else
            cons.push_back({{x.out, x.over, x.in}, [=](const int* v) { return qp->op(i, v[0], v[1]) == v[2]; }});
    }
    return coloring_search(arcs, q.size, std::move(cons));
}

} // namespace

std::uint64_t count_colorings(const gauss_diagram& d, const indexed_quandle& q)
{
    std::vector<crossing_arcs> xs;
    return quandle_search(d, q, xs).count();
}

std::vector<std::vector<int>> enumerate_colorings(const gauss_diagram& d, const indexed_quandle& q)
{
    std::vector<crossing_arcs> xs;
    std::vector<std::vector<int>> out;
    quandle_search(d, q, xs).run([&](const std::vector<int>& v) { out.push_back(v); });
    return out;
}

const coords& cocycle_family::at(std::int64_t i, int a, int b) const
{
    return values[pmod(i, period)][a][b];
}

namespace {

void validate_cocycle_shape(const indexed_quandle& q, const cocycle_family& phi)
{
    if (phi.period <= 0) throw diagram_error("cocycle period must be positive");
    if (static_cast<int>(phi.values.size()) != phi.period) throw diagram_error("one cocycle table per residue");
    for (auto& t : phi.values) {
        if (static_cast<int>(t.size()) != q.size) throw diagram_error("cocycle table has the wrong shape");
        for (auto& row : t) {
            if (static_cast<int>(row.size()) != q.size) throw diagram_error("cocycle table has the wrong shape");
            for (auto& x : row)
                if (x.size() != phi.group.rank()) throw diagram_error("cocycle value has the wrong rank");
        }
    }
}

} // namespace

std::vector<axiom_violation> check_cocycle(const indexed_quandle& q, const cocycle_family& phi, std::size_t limit)
{
    validate_shape(q);
    validate_cocycle_shape(q, phi);
    limit = std::max<std::size_t>(limit, 1);
    std::vector<axiom_violation> out;
    const auto& g = phi.group;
    int n = q.size;
    int m = std::lcm(q.period, phi.period);
    for (int a = 0; a < n; ++a)
        if (g.reduce(phi.at(0, a, a)) != g.zero() && out.size() < limit) out.push_back({"normalization", {a}});
    if (out.size() >= limit) return out;
    // phi_i(a,b) + phi_j(a *_i b, c) = phi_j(a,c) + phi_i(a *_j c, b *_(j-i) c)
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    for (int c = 0; c < n; ++c) {
                        auto lhs = g.add(phi.at(i, a, b), phi.at(j, q.op(i, a, b), c));
                        auto rhs = g.add(phi.at(j, a, c), phi.at(i, q.op(j, a, c), q.op(j - i, b, c)));
                        if (lhs == rhs) continue;
                        out.push_back({"cocycle", {i, j, a, b, c}});
                        if (out.size() >= limit) return out;
                    }
    return out;
}

group_ring cocycle_invariant(const gauss_diagram& d, const indexed_quandle& q, const cocycle_family& phi)
{
    if (!check_indexed_quandle(q, 1).empty()) throw diagram_error("not an indexed quandle");
    if (!check_cocycle(q, phi, 1).empty()) throw diagram_error("not an indexed quandle 2-cocycle");
    std::vector<crossing_arcs> xs;
    auto search = quandle_search(d, q, xs);
    const auto& g = phi.group;
    group_ring out;
    search.run([&](const std::vector<int>& col) {
        coords acc = g.zero();
        for (auto& x : xs) {
            int a = x.sign > 0 ? col[x.in] : col[x.out];
            coords wgt = phi.at(x.index, a, col[x.over]);
            acc = g.add(acc, x.sign > 0 ? g.reduce(wgt) : g.negate(wgt));
        }
        add_to(out, acc);
    });
    return out;
}

indexed_quandle abelian_extension(const indexed_quandle& q, const cocycle_family& phi)
{
    validate_shape(q);
    validate_cocycle_shape(q, phi);
    if (!phi.group.finite()) throw diagram_error("abelian extensions need a finite group");
    auto elems = phi.group.elements();
    std::map<coords, int> id;
    for (std::size_t k = 0; k < elems.size(); ++k) id[elems[k]] = static_cast<int>(k);
    int n = q.size;
    int m = std::lcm(q.period, phi.period);
    int size = static_cast<int>(elems.size()) * n;
    indexed_quandle e{size, m, {}};
    e.tables.assign(m, std::vector<std::vector<int>>(size, std::vector<int>(size)));
    for (int i = 0; i < m; ++i)
        for (int u = 0; u < size; ++u)
            for (int v = 0; v < size; ++v) {
                int a1 = u / n, x1 = u % n, x2 = v % n;
                coords s = phi.group.add(elems[a1], phi.at(i, x1, x2));
                e.tables[i][u][v] = id.at(s) * n + q.op(i, x1, x2);
            }
    return e;
}

laurent_poly writhe_cocycle_invariant(const gauss_diagram& d)
{
    laurent_poly total;
    for (auto [label, ind] : chord_indices(d)) {
        if (ind == 0) continue;
        total += laurent_poly::t_power(ind, d.chord_of(label).sign);
    }
    return total;
}

indexed_quandle quandle_from_json(const std::string& text)
{
    try {
        auto j = nlohmann::json::parse(text);
        indexed_quandle q;
        q.size = j.at("size").get<int>();
        q.period = j.value("period", 1);
        q.tables = j.at("tables").get<std::vector<std::vector<std::vector<int>>>>();
        validate_shape(q);
        return q;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("quandle file: ") + e.what(), 0);
    } catch (const diagram_error& e) {
        throw parse_error(std::string("quandle file: ") + e.what(), 0);
    }
}

cocycle_family cocycle_from_json(const std::string& text)
{
    try {
        auto j = nlohmann::json::parse(text);
        cocycle_family phi;
        phi.group.free_rank = j.at("group").value("free_rank", 0);
        phi.group.torsion = j.at("group").value("torsion", std::vector<std::int64_t>{});
        for (auto t : phi.group.torsion)
            if (t < 2) throw diagram_error("torsion orders must be at least 2");
        phi.period = j.value("period", 1);
        phi.values = j.at("values").get<std::vector<std::vector<std::vector<coords>>>>();
        return phi;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("cocycle file: ") + e.what(), 0);
    } catch (const diagram_error& e) {
        throw parse_error(std::string("cocycle file: ") + e.what(), 0);
    }
}

} // namespace chordal
