#include "chordal/abelian.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "chordal/error.hpp"

namespace chordal {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw resource_error("integer overflow in Smith normal form");
    return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw resource_error("integer overflow in Smith normal form");
    return r;
}

std::int64_t mod_pos(std::int64_t a, std::int64_t m)
{
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

} // namespace

std::int64_t fg_abelian_group::order() const
{
    if (free_rank) throw diagram_error("group is infinite");
    std::int64_t n = 1;
    for (auto t : torsion) n = checked_mul(n, t);
    return n;
}

coords fg_abelian_group::reduce(coords x) const
{
    if (x.size() != rank()) throw diagram_error("coordinate vector has the wrong length");
    for (std::size_t i = 0; i < torsion.size(); ++i) x[i] = mod_pos(x[i], torsion[i]);
    return x;
}

coords fg_abelian_group::add(const coords& a, const coords& b) const
{
    coords r(rank());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.at(i) + b.at(i);
    return reduce(std::move(r));
}

coords fg_abelian_group::negate(const coords& a) const
{
    coords r(rank());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = -a.at(i);
    return reduce(std::move(r));
}

std::vector<coords> fg_abelian_group::elements() const
{
    std::int64_t n = order();
    std::vector<coords> out;
    out.reserve(n);
    for (std::int64_t k = 0; k < n; ++k) {
        coords x(rank());
        std::int64_t v = k;
        for (std::size_t i = torsion.size(); i-- > 0;) {
            x[i] = v % torsion[i];
            v /= torsion[i];
        }
        out.push_back(std::move(x));
    }
    return out;
}

std::string fg_abelian_group::describe() const
{
    if (trivial()) return "0";
    std::string s;
    if (free_rank) s = free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
    for (auto t : torsion) {
        if (!s.empty()) s += " + ";
        s += "Z/" + std::to_string(t);
    }
    return s;
}

std::string render_element(const coords& x)
{
    if (x.size() == 1) return std::to_string(x[0]);
    std::string s = "(";
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(x[i]);
    }
    return s + ")";
}

smith_result smith_normal_form(std::vector<std::vector<std::int64_t>> m, std::size_t cols)
{
    std::size_t rows = m.size();
    for (auto& r : m)
        if (r.size() != cols) throw diagram_error("relation rows must have one entry per generator");
    std::vector<std::vector<std::int64_t>> v(cols, std::vector<std::int64_t>(cols, 0));
    for (std::size_t i = 0; i < cols; ++i) v[i][i] = 1;

    auto swap_cols = [&](std::size_t a, std::size_t b) {
        for (auto& r : m) std::swap(r[a], r[b]);
        for (auto& r : v) std::swap(r[a], r[b]);
    };
    // col[b] -= q * col[a]
    auto sub_col = [&](std::size_t b, std::size_t a, std::int64_t q) {
        for (auto& r : m) r[b] = checked_sub(r[b], checked_mul(q, r[a]));
        for (auto& r : v) r[b] = checked_sub(r[b], checked_mul(q, r[a]));
    };
    auto sub_row = [&](std::size_t b, std::size_t a, std::int64_t q) {
        for (std::size_t j = 0; j < cols; ++j) m[b][j] = checked_sub(m[b][j], checked_mul(q, m[a][j]));
    };

    std::size_t diag = std::min(rows, cols);
    for (std::size_t t = 0; t < diag; ++t) {
        while (true) {
            // Pivot: smallest nonzero magnitude in the remaining block.
            std::size_t pi = rows, pj = cols;
            std::int64_t best = 0;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (m[i][j] != 0 && (best == 0 || std::llabs(m[i][j]) < best)) {
                        best = std::llabs(m[i][j]);
                        pi = i;
                        pj = j;
                    }
            if (best == 0) break;
            std::swap(m[t], m[pi]);
            swap_cols(t, pj);
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (m[i][t] == 0) continue;
                sub_row(i, t, m[i][t] / m[t][t]);
                if (m[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (m[t][j] == 0) continue;
                sub_col(j, t, m[t][j] / m[t][t]);
                if (m[t][j] != 0) clean = false;
            }
            if (!clean) continue;
            // Enforce divisibility of the rest by the pivot.
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (m[i][j] % m[t][t] != 0) {
                        for (std::size_t k = 0; k < cols; ++k) m[t][k] = checked_sub(m[t][k], -m[i][k]);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (m[t][t] < 0) {
            for (auto& r : m) r[t] = -r[t];
            for (auto& r : v) r[t] = -r[t];
        }
    }
    smith_result res;
    for (std::size_t t = 0; t < diag; ++t) res.diagonal.push_back(m[t][t]);
    res.right = std::move(v);
    return res;
}

abelian_presentation present_abelian(std::size_t generators, const std::vector<std::vector<std::int64_t>>& relations)
{
    auto snf = smith_normal_form(relations, generators);
    // Coordinate i of the quotient is Z/d_i (Z when d_i = 0 or beyond the
    // diagonal); coordinates with d_i = 1 vanish.
    std::vector<std::int64_t> mod(generators, 0);
    for (std::size_t i = 0; i < snf.diagonal.size(); ++i) mod[i] = snf.diagonal[i];
    std::vector<std::size_t> tors_idx, free_idx;
    for (std::size_t i = 0; i < generators; ++i) {
        if (mod[i] == 1) continue;
        (mod[i] == 0 ? free_idx : tors_idx).push_back(i);
    }
    abelian_presentation out;
    out.relations = relations;
    out.group.free_rank = static_cast<int>(free_idx.size());
    for (auto i : tors_idx) out.group.torsion.push_back(mod[i]);
    for (std::size_t g = 0; g < generators; ++g) {
        coords x;
        for (auto i : tors_idx) x.push_back(snf.right[g][i]);
        for (auto i : free_idx) x.push_back(snf.right[g][i]);
        out.image.push_back(out.group.reduce(std::move(x)));
    }
    // Fix the sign of each free coordinate: the first generator with a
    // nonzero entry there maps to a positive value.
    std::size_t t = tors_idx.size();
    for (std::size_t k = t; k < out.group.rank(); ++k) {
        for (auto& img : out.image) {
            if (img[k] == 0) continue;
            if (img[k] < 0)
                for (auto& other : out.image) other[k] = -other[k];
            break;
        }
    }
    return out;
}

void add_to(group_ring& r, const coords& x, std::int64_t mult)
{
    if (mult == 0) return;
    auto it = r.find(x);
    if (it == r.end()) {
        r.emplace(x, mult);
        return;
    }
    it->second += mult;
    if (it->second == 0) r.erase(it);
}

std::string render(const group_ring& r)
{
    if (r.empty()) return "0";
    std::string s;
    for (auto& [x, m] : r) {
        if (!s.empty()) s += m < 0 ? " - " : " + ";
        else if (m < 0) s += "-";
        s += std::to_string(m < 0 ? -m : m) + "·" + render_element(x);
    }
    return s;
}

} // namespace chordal
