#include "chordal/gauss.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "chordal/error.hpp"

namespace chordal {

std::string token::to_string() const
{
    if (bar) return "B";
    std::string s = pass == passage::over ? "O" : "U";
    s += std::to_string(label);
    s += sign > 0 ? '+' : '-';
    return s;
}

gauss_diagram::gauss_diagram() : comps_(1) {}

gauss_diagram::gauss_diagram(std::vector<std::vector<token>> components) : comps_(std::move(components))
{
    if (comps_.empty()) throw diagram_error("a diagram needs at least one component");
    std::map<int, chord> table;
    std::map<int, int> seen_over, seen_under;
    for (std::size_t c = 0; c < comps_.size(); ++c) {
        for (std::size_t k = 0; k < comps_[c].size(); ++k) {
            const token& t = comps_[c][k];
            if (t.bar) {
                ++bars_;
                continue;
            }
            if (t.sign != 1 && t.sign != -1) throw diagram_error("chord sign must be +1 or -1");
            auto [it, fresh] = table.try_emplace(t.label);
            chord& ch = it->second;
            if (fresh) {
                ch.label = t.label;
                ch.sign = t.sign;
            } else if (ch.sign != t.sign) {
                throw diagram_error("sign mismatch on chord " + std::to_string(t.label));
            }
            auto& counter = t.pass == passage::over ? seen_over : seen_under;
            if (++counter[t.label] > 1)
                throw diagram_error("chord " + std::to_string(t.label) + " has two " +
                                    (t.pass == passage::over ? "over" : "under") + " passages");
            (t.pass == passage::over ? ch.over : ch.under) = position{c, k};
        }
    }
    for (auto& [label, ch] : table) {
        if (!seen_over.count(label) || !seen_under.count(label))
            throw diagram_error("chord " + std::to_string(label) + " occurs only once");
        chords_.push_back(ch);
    }
}

position gauss_diagram::next(position p) const
{
    return {p.comp, (p.offset + 1) % comps_[p.comp].size()};
}

position gauss_diagram::prev(position p) const
{
    std::size_t n = comps_[p.comp].size();
    return {p.comp, (p.offset + n - 1) % n};
}

bool gauss_diagram::adjacent(position a, position b) const
{
    return a.comp == b.comp && comps_[a.comp].size() > 1 && next(a) == b;
}

const chord& gauss_diagram::chord_of(int label) const
{
    auto it = std::lower_bound(chords_.begin(), chords_.end(), label,
                               [](const chord& c, int l) { return c.label < l; });
    if (it == chords_.end() || it->label != label)
        throw diagram_error("unknown chord label " + std::to_string(label));
    return *it;
}

bool gauss_diagram::has_chord(int label) const
{
    auto it = std::lower_bound(chords_.begin(), chords_.end(), label,
                               [](const chord& c, int l) { return c.label < l; });
    return it != chords_.end() && it->label == label;
}

std::size_t gauss_diagram::token_count() const
{
    std::size_t n = 0;
    for (auto& c : comps_) n += c.size();
    return n;
}

int gauss_diagram::next_label() const
{
    return chords_.empty() ? 1 : chords_.back().label + 1;
}

namespace {

// Encoded letter used by the canonical search: kind 0 = bar, 1 = chord end.
struct item {
    int kind;
    int label;
    int attr;
};
using seq = std::vector<item>;

struct canon_search {
    const std::vector<seq>& comps;
    bool allow_reversal;
    std::vector<std::int64_t> best;
    bool have_best = false;

    void encode(const seq& s, std::size_t rot, bool rev, std::map<int, int>& names, int& next_name,
                std::vector<std::int64_t>& out) const
    {
        std::size_t n = s.size();
        out.push_back(static_cast<std::int64_t>(n));
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t k = rev ? (rot + n - i) % n : (rot + i) % n;
            const item& it = s[k];
            if (it.kind == 0) {
                out.push_back(0);
                continue;
            }
            auto [pos, fresh] = names.try_emplace(it.label, next_name);
            if (fresh) ++next_name;
            out.push_back(1);
            out.push_back(pos->second);
            out.push_back(it.attr);
        }
    }

    void run(std::vector<bool>& used, std::map<int, int>& names, int next_name, std::vector<std::int64_t>& prefix)
    {
        if (have_best) {
            std::size_t m = std::min(prefix.size(), best.size());
            if (std::lexicographical_compare(best.begin(), best.begin() + m, prefix.begin(), prefix.begin() + m))
                return;
        }
        bool done = std::all_of(used.begin(), used.end(), [](bool b) { return b; });
        if (done) {
            if (!have_best || prefix < best) {
                best = prefix;
                have_best = true;
            }
            return;
        }
        struct cand {
            std::vector<std::int64_t> seg;
            std::map<int, int> names;
            int next_name;
            std::size_t comp;
        };
        std::vector<cand> cands;
        for (std::size_t c = 0; c < comps.size(); ++c) {
            if (used[c]) continue;
            std::size_t n = std::max<std::size_t>(comps[c].size(), 1);
            for (int rev = 0; rev < (allow_reversal ? 2 : 1); ++rev) {
                for (std::size_t r = 0; r < n; ++r) {
                    cand x{{}, names, next_name, c};
                    encode(comps[c], r, rev == 1, x.names, x.next_name, x.seg);
                    if (!cands.empty()) {
                        if (x.seg > cands.front().seg) continue;
                        if (x.seg < cands.front().seg) cands.clear();
                    }
                    bool dup = std::any_of(cands.begin(), cands.end(), [&](const cand& y) {
                        return y.comp == x.comp && y.names == x.names;
                    });
                    if (!dup) cands.push_back(std::move(x));
                }
            }
        }
        for (auto& x : cands) {
            std::size_t mark = prefix.size();
            prefix.insert(prefix.end(), x.seg.begin(), x.seg.end());
            used[x.comp] = true;
            run(used, x.names, x.next_name, prefix);
            used[x.comp] = false;
            prefix.resize(mark);
        }
    }
};

std::vector<std::int64_t> canonical_encoding(const std::vector<seq>& comps, bool allow_reversal)
{
    canon_search s{comps, allow_reversal, {}, false};
    std::vector<bool> used(comps.size(), false);
    std::map<int, int> names;
    std::vector<std::int64_t> prefix;
    s.run(used, names, 1, prefix);
    return s.best;
}

int attr_of(const token& t)
{
    return (t.pass == passage::over ? 0 : 2) + (t.sign > 0 ? 0 : 1);
}

std::tuple<int, int, int> order_key(const token& t)
{
    if (t.bar) return {0, 0, 0};
    return {t.pass == passage::over ? 1 : 2, t.label, t.sign > 0 ? 0 : 1};
}

std::vector<token> minimal_rotation(const std::vector<token>& w)
{
    std::vector<token> best = w;
    auto key = [](const std::vector<token>& v) {
        std::vector<std::tuple<int, int, int>> k;
        k.reserve(v.size());
        for (auto& t : v) k.push_back(order_key(t));
        return k;
    };
    auto best_key = key(best);
    for (std::size_t r = 1; r < w.size(); ++r) {
        std::vector<token> cand(w.begin() + r, w.end());
        cand.insert(cand.end(), w.begin(), w.begin() + r);
        auto k = key(cand);
        if (k < best_key) {
            best_key = std::move(k);
            best = std::move(cand);
        }
    }
    return best;
}

} // namespace

std::vector<std::int64_t> canonical_key(const gauss_diagram& d)
{
    std::vector<seq> comps;
    for (auto& c : d.components()) {
        seq s;
        for (auto& t : c) s.push_back(t.bar ? item{0, 0, 0} : item{1, t.label, attr_of(t)});
        comps.push_back(std::move(s));
    }
    return canonical_encoding(comps, false);
}

bool operator==(const gauss_diagram& a, const gauss_diagram& b)
{
    if (a.component_count() != b.component_count() || a.token_count() != b.token_count()) return false;
    return canonical_key(a) == canonical_key(b);
}

gauss_diagram parse_gauss_code(const std::string& text)
{
    std::vector<std::vector<token>> comps(1);
    std::map<int, std::size_t> first_pos;
    std::size_t i = 0, n = text.size();
    auto is_sep = [](char c) { return std::isspace(static_cast<unsigned char>(c)) || c == ','; };
    auto minus_at = [&](std::size_t k) -> std::size_t {
        // Returns the byte length of a minus sign at k, 0 if none.
        if (k < n && text[k] == '-') return 1;
        if (k + 2 < n && static_cast<unsigned char>(text[k]) == 0xE2 &&
            static_cast<unsigned char>(text[k + 1]) == 0x88 && static_cast<unsigned char>(text[k + 2]) == 0x92)
            return 3;
        return 0;
    };
    while (i < n) {
        char c = text[i];
        if (is_sep(c)) {
            ++i;
            continue;
        }
        if (c == '/') {
            comps.emplace_back();
            ++i;
            continue;
        }
        std::size_t start = i;
        if (c == 'B') {
            ++i;
            if (i < n && !is_sep(text[i]) && text[i] != '/') throw parse_error("unexpected character after bar", i);
            comps.back().push_back(token::make_bar());
            continue;
        }
        if (c != 'O' && c != 'U') throw parse_error(std::string("unexpected character '") + c + "'", i);
        ++i;
        std::size_t digits = i;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == digits) throw parse_error("expected a chord label", i);
        if (i - digits > 9) throw parse_error("chord label too long", digits);
        int label = std::stoi(text.substr(digits, i - digits));
        int sign;
        if (i < n && text[i] == '+') {
            sign = 1;
            ++i;
        } else if (std::size_t m = minus_at(i)) {
            sign = -1;
            i += m;
        } else {
            throw parse_error("expected '+' or '-' after chord label", i);
        }
        if (i < n && !is_sep(text[i]) && text[i] != '/') throw parse_error("unexpected character after token", i);
        comps.back().push_back(token::end(label, c == 'O' ? passage::over : passage::under, sign));
        first_pos.try_emplace(label, start);
    }
    try {
        return gauss_diagram(std::move(comps));
    } catch (const diagram_error& e) {
        // Point at the first occurrence of the offending label when we can.
        std::string msg = e.what();
        std::size_t at = 0;
        auto k = msg.find("chord ");
        if (k != std::string::npos) {
            try {
                int label = std::stoi(msg.substr(k + 6));
                if (auto it = first_pos.find(label); it != first_pos.end()) at = it->second;
            } catch (...) {
            }
        }
        throw parse_error(msg, at);
    }
}

std::string serialize(const gauss_diagram& d)
{
    std::string out;
    for (std::size_t c = 0; c < d.component_count(); ++c) {
        if (c) out += " / ";
        auto w = minimal_rotation(d.component(c));
        for (std::size_t k = 0; k < w.size(); ++k) {
            if (k) out += ' ';
            out += w[k].to_string();
        }
    }
    return out;
}

std::string to_json_string(const gauss_diagram& d)
{
    nlohmann::json comps = nlohmann::json::array();
    for (auto& c : d.components()) {
        nlohmann::json arr = nlohmann::json::array();
        for (auto& t : c) {
            if (t.bar)
                arr.push_back({{"bar", true}});
            else
                arr.push_back({{"chord", t.label}, {"passage", t.pass == passage::over ? "O" : "U"}, {"sign", t.sign}});
        }
        comps.push_back(std::move(arr));
    }
    return nlohmann::json{{"components", comps}}.dump();
}

gauss_diagram from_json_string(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(e.what(), e.byte);
    }
    try {
        std::vector<std::vector<token>> comps;
        for (auto& c : j.at("components")) {
            std::vector<token> w;
            for (auto& t : c) {
                if (t.contains("bar") && t.at("bar").get<bool>()) {
                    w.push_back(token::make_bar());
                    continue;
                }
                std::string p = t.at("passage").get<std::string>();
                if (p != "O" && p != "U") throw diagram_error("passage must be \"O\" or \"U\"");
                w.push_back(token::end(t.at("chord").get<int>(), p == "O" ? passage::over : passage::under,
                                       t.at("sign").get<int>()));
            }
            comps.push_back(std::move(w));
        }
        return gauss_diagram(std::move(comps));
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(e.what(), 0);
    } catch (const diagram_error& e) {
        throw parse_error(e.what(), 0);
    }
}

gauss_diagram mirror(const gauss_diagram& d)
{
    auto comps = d.components();
    for (auto& c : comps)
        for (auto& t : c)
            if (!t.bar) {
                t.sign = -t.sign;
                t.pass = opposite(t.pass);
            }
    return gauss_diagram(std::move(comps));
}

gauss_diagram reverse(const gauss_diagram& d)
{
    auto comps = d.components();
    for (auto& c : comps) std::reverse(c.begin(), c.end());
    return gauss_diagram(std::move(comps));
}

gauss_diagram crossing_change(const gauss_diagram& d, int label)
{
    d.chord_of(label);
    auto comps = d.components();
    for (auto& c : comps)
        for (auto& t : c)
            if (!t.bar && t.label == label) {
                t.sign = -t.sign;
                t.pass = opposite(t.pass);
            }
    return gauss_diagram(std::move(comps));
}

gauss_diagram delete_chord(const gauss_diagram& d, int label)
{
    d.chord_of(label);
    auto comps = d.components();
    for (auto& c : comps)
        c.erase(std::remove_if(c.begin(), c.end(), [&](const token& t) { return !t.bar && t.label == label; }),
                c.end());
    return gauss_diagram(std::move(comps));
}

int writhe(const gauss_diagram& d)
{
    int w = 0;
    for (auto& c : d.chords()) w += c.sign;
    return w;
}

flat_diagram flat_projection(const gauss_diagram& d)
{
    flat_diagram f;
    for (auto& c : d.components()) {
        std::vector<flat_token> w;
        for (auto& t : c) w.push_back(flat_token{t.bar, t.bar ? 0 : t.label});
        f.components.push_back(std::move(w));
    }
    return f;
}

flat_diagram canonical_flat(const flat_diagram& f, bool allow_reversal)
{
    std::vector<seq> comps;
    for (auto& c : f.components) {
        seq s;
        for (auto& t : c) s.push_back(t.bar ? item{0, 0, 0} : item{1, t.label, 0});
        comps.push_back(std::move(s));
    }
    auto enc = canonical_encoding(comps, allow_reversal);
    flat_diagram out;
    std::size_t i = 0;
    while (i < enc.size()) {
        std::int64_t len = enc[i++];
        std::vector<flat_token> w;
        for (std::int64_t k = 0; k < len; ++k) {
            if (enc[i] == 0) {
                w.push_back(flat_token{true, 0});
                ++i;
            } else {
                w.push_back(flat_token{false, static_cast<int>(enc[i + 1])});
                i += 3;
            }
        }
        out.components.push_back(std::move(w));
    }
    return out;
}

std::string flat_diagram::to_string() const
{
    std::string out;
    for (std::size_t c = 0; c < components.size(); ++c) {
        if (c) out += " / ";
        for (std::size_t k = 0; k < components[c].size(); ++k) {
            if (k) out += ' ';
            const auto& t = components[c][k];
            out += t.bar ? "B" : std::to_string(t.label);
        }
    }
    return out;
}

void require_virtual_knot(const gauss_diagram& d, const char* what)
{
    if (d.component_count() != 1)
        throw diagram_error(std::string(what) + " is defined for knot diagrams (one component)");
    if (d.bar_count() != 0) throw diagram_error(std::string(what) + " is defined for bar-free diagrams");
}

} // namespace chordal
