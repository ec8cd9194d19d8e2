#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "chordal/biquandle.hpp"
#include "chordal/bracket.hpp"
#include "chordal/error.hpp"
#include "chordal/finite_type.hpp"
#include "chordal/gauss.hpp"
#include "chordal/index.hpp"
#include "chordal/moves.hpp"
#include "chordal/quandle.hpp"
#include "chordal/twisted.hpp"

using json = nlohmann::json;
using namespace chordal;

namespace {

struct diagram_input {
    std::string code;
    std::string file;
    CLI::Option* code_opt = nullptr;
    CLI::Option* file_opt = nullptr;

    void attach(CLI::App* app, const std::string& name = "code")
    {
        code_opt = app->add_option(name, code, "Gauss code, e.g. \"O1+ O2+ U1+ U2+\"");
        file_opt = app->add_option("--file", file, "read the diagram from a file (Gauss code or JSON)");
    }

    gauss_diagram load() const
    {
        if (file_opt && file_opt->count()) {
            std::string text = read_file(file);
            auto p = text.find_first_not_of(" \t\r\n");
            if (p != std::string::npos && text[p] == '{') return from_json_string(text);
            while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
            return parse_gauss_code(text);
        }
        if (!code_opt || !code_opt->count()) throw parse_error("no diagram given (positional code or --file)", 0);
        return parse_gauss_code(code);
    }

    static std::string read_file(const std::string& path)
    {
        std::ifstream in(path);
        if (!in) throw parse_error("cannot read " + path, 0);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
};

json poly_json(const laurent_poly& p) { return p.to_triples(); }

std::string span_string(const laurent_poly& p)
{
    if (p.is_zero()) return "undefined";
    auto [num, den] = p.span();
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

std::vector<int> parse_int_list(const std::string& s)
{
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw parse_error("bad integer list '" + s + "'", 0);
        }
    }
    return out;
}

json group_ring_json(const group_ring& r)
{
    json terms = json::array();
    for (auto& [x, m] : r) terms.push_back({{"element", x}, {"multiplicity", m}});
    return terms;
}

cocycle_family shift_cocycle()
{
    cocycle_family phi;
    phi.group.torsion = {2};
    phi.values = {{{{0}, {1}}, {{1}, {0}}}};
    return phi;
}

std::string tuple_values(const gauss_diagram& d)
{
    std::string s;
    for (std::vector<int> xs : {std::vector<int>{1}, {2, -1}, {3, 1, -1}, {1, -1}, {-2}})
        s += std::to_string(a_tuple(d, xs)) + " ";
    return s;
}

std::string a_g_string(const gauss_diagram& d, const finite_biquandle& b)
{
    std::string s;
    for (auto& [k, v] : a_g(d, b)) s += "[" + render(k) + "]=" + std::to_string(v) + " ";
    return s;
}

enum class start_kind { knot, link, odd, even };

struct fuzz_invariant {
    start_kind start;
    std::function<std::string(const gauss_diagram&)> eval;
};

std::map<std::string, fuzz_invariant> fuzz_table()
{
    auto poly = [](laurent_poly (*f)(const gauss_diagram&)) {
        return [f](const gauss_diagram& d) { return f(d).to_string(); };
    };
    auto jones = [](int n) { return [n](const gauss_diagram& d) { return indexed_jones(d, n).to_string(); }; };
    std::map<std::string, fuzz_invariant> t;
    t["writhe-poly"] = {start_kind::knot, poly(writhe_polynomial)};
    t["affine"] = {start_kind::knot, poly(affine_index_polynomial)};
    t["flat"] = {start_kind::knot, poly(flat_invariant)};
    t["odd-writhe"] = {start_kind::knot, [](const gauss_diagram& d) { return std::to_string(odd_writhe(d)); }};
    t["a-tuple"] = {start_kind::knot, tuple_values};
    t["jones0"] = {start_kind::knot, jones(0)};
    t["jones1"] = {start_kind::knot, jones(1)};
    t["jones2"] = {start_kind::knot, jones(2)};
    t["graphical2"] = {start_kind::knot, [](const gauss_diagram& d) {
                           std::string s;
                           for (auto& [k, v] : graphical_indexed_jones(d, 2)) s += "[" + k + "]" + v.coeff.to_string();
                           return s;
                       }};
    t["colorings"] = {start_kind::knot, [](const gauss_diagram& d) {
                          return std::to_string(count_colorings(d, indexed_dihedral(3)));
                      }};
    t["phi"] = {start_kind::knot, [](const gauss_diagram& d) {
                    return render(cocycle_invariant(d, shift_family(), shift_cocycle()));
                }};
    t["a-g"] = {start_kind::link, [](const gauss_diagram& d) { return a_g_string(d, flip_biquandle()); }};
    t["To"] = {start_kind::odd, [](const gauss_diagram& d) { return T_o(d).to_string(); }};
    t["S"] = {start_kind::even, [](const gauss_diagram& d) { return std::to_string(S_invariant(d)); }};
    t["Te"] = {start_kind::even, [](const gauss_diagram& d) { return T_e(d).to_string(); }};
    return t;
}

int run_fuzz(std::size_t steps, std::size_t trials, std::uint64_t seed, const std::string& name, std::size_t chords,
             std::size_t cap)
{
    auto table = fuzz_table();
    auto it = table.find(name);
    if (it == table.end()) {
        std::string known;
        for (auto& [k, v] : table) known += " " + k;
        throw parse_error("unknown invariant '" + name + "'; known:" + known, 0);
    }
    const auto& inv = it->second;
    walk_rng rng(seed);
    walk_options opt;
    opt.chord_cap = cap;
    opt.twisted = inv.start == start_kind::odd || inv.start == start_kind::even;
    for (std::size_t trial = 0; trial < trials; ++trial) {
        std::size_t n = draw(rng, chords + 1);
        gauss_diagram d;
        switch (inv.start) {
        case start_kind::knot:
            d = random_knot(rng, n);
            break;
        case start_kind::link:
            d = random_link(rng, 1 + draw(rng, 2), n);
            break;
        case start_kind::odd:
            d = random_twisted_knot(rng, n, 1 + 2 * draw(rng, 2));
            break;
        case start_kind::even:
            d = random_twisted_knot(rng, n, 2 * draw(rng, 2));
            break;
        }
        std::uint64_t walk_seed = rng();
        std::vector<gauss_diagram> trace;
        random_walk(d, steps, walk_seed, opt, &trace);
        std::string before = inv.eval(trace.front());
        for (std::size_t k = 1; k < trace.size(); ++k) {
            std::string after = inv.eval(trace[k]);
            if (after == before) continue;
            json w;
            w["drift"] = name;
            w["trial"] = trial;
            w["step"] = k;
            w["seed"] = seed;
            w["walk_seed"] = walk_seed;
            w["before"] = before;
            w["after"] = after;
            json tr = json::array();
            for (std::size_t j = 0; j <= k; ++j) tr.push_back(serialize(trace[j]));
            w["trace"] = tr;
            std::cout << w.dump(2) << "\n";
            return 3;
        }
    }
    std::cout << "no drift: " << name << ", " << trials << " trials x " << steps << " steps, seed " << seed << "\n";
    return 0;
}

struct compare_flags {
    bool writhe = false, affine = false, flat = false, odd = false;
    std::vector<int> jones;
};

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Chord index invariants of virtual and twisted knot diagrams"};
    app.require_subcommand(1);

    auto* validate = app.add_subcommand("validate", "parse a diagram and print its normal form");
    diagram_input validate_in;
    validate_in.attach(validate);

    auto* invariants = app.add_subcommand("invariants", "chord indices and degree-one polynomials");
    diagram_input inv_in;
    inv_in.attach(invariants);
    bool want_w = false, want_p = false, want_f = false, want_odd = false, want_ind = false;
    invariants->add_flag("--writhe-poly", want_w, "writhe polynomial W");
    invariants->add_flag("--affine", want_p, "affine index polynomial P");
    invariants->add_flag("--flat", want_f, "flat invariant F(t) = W(t) - W(1/t)");
    invariants->add_flag("--odd-writhe", want_odd, "odd writhe");
    invariants->add_flag("--indices", want_ind, "per-chord indices");

    auto* jones = app.add_subcommand("jones", "indexed Jones polynomial");
    diagram_input jones_in;
    jones_in.attach(jones);
    int jones_n = 1;
    bool graphical = false;
    jones->add_option("--n", jones_n, "smooth chords whose index is a multiple of n")->check(CLI::NonNegativeNumber);
    jones->add_flag("--graphical", graphical, "keep unsmoothed chords as flat states");

    auto* finite = app.add_subcommand("finite-type", "degree-n invariant a_(x1,...,xn)");
    diagram_input finite_in;
    finite_in.attach(finite);
    std::string tuple_text;
    finite->add_option("--tuple", tuple_text, "strictly decreasing nonzero indices, e.g. 3,1,-2")->required();

    auto* vass = app.add_subcommand("vassiliev", "alternating sum over resolutions of marked chords");
    diagram_input vass_in;
    vass_in.attach(vass);
    std::string mark_text, vass_inv = "affine", vass_tuple;
    int vass_n = 1;
    vass->add_option("--mark", mark_text, "chord labels, e.g. 1,4")->required();
    vass->add_option("--invariant", vass_inv, "affine | writhe-poly | jones | tuple")
        ->check(CLI::IsMember({"affine", "writhe-poly", "jones", "tuple"}));
    vass->add_option("--n", vass_n, "index modulus for jones")->check(CLI::NonNegativeNumber);
    vass->add_option("--tuple", vass_tuple, "index tuple for tuple");

    auto* color = app.add_subcommand("color", "indexed quandle coloring count");
    diagram_input color_in;
    color_in.attach(color);
    std::string quandle_file;
    bool list_colorings = false;
    color->add_option("--quandle", quandle_file, "indexed quandle JSON")->required();
    color->add_flag("--list", list_colorings, "print every coloring");

    auto* cocycle = app.add_subcommand("cocycle", "indexed cocycle invariant");
    diagram_input cocycle_in;
    cocycle_in.attach(cocycle);
    std::string cocycle_q, phi_file;
    cocycle->add_option("--quandle", cocycle_q, "indexed quandle JSON")->required();
    cocycle->add_option("--phi", phi_file, "cocycle JSON")->required();

    auto* bq = app.add_subcommand("bq-index", "biquandle chord indices and a_g");
    diagram_input bq_in;
    bq_in.attach(bq);
    std::string bq_file;
    bq->add_option("--bq", bq_file, "biquandle JSON")->required();

    auto* twisted = app.add_subcommand("twisted", "twisted knot invariants T_o, S, T_e");
    diagram_input tw_in;
    tw_in.attach(twisted);
    bool want_to = false, want_s = false, want_te = false;
    twisted->add_flag("--To", want_to, "T_o (odd bar count)");
    twisted->add_flag("--S", want_s, "S (even bar count)");
    twisted->add_flag("--Te", want_te, "T_e (even bar count)");

    auto* fuzz = app.add_subcommand("fuzz", "random move walks checking one invariant");
    std::size_t steps = 50, trials = 20, fuzz_chords = 6, fuzz_cap = 12;
    std::uint64_t seed = 0;
    std::string fuzz_inv = "writhe-poly";
    fuzz->add_option("--steps", steps, "moves per walk");
    fuzz->add_option("--trials", trials, "number of walks");
    fuzz->add_option("--seed", seed, "random seed");
    fuzz->add_option("--invariant", fuzz_inv, "invariant name");
    fuzz->add_option("--chords", fuzz_chords, "maximum chords of the starting diagram");
    fuzz->add_option("--cap", fuzz_cap, "chord cap during walks");

    auto* compare = app.add_subcommand("compare", "compare two diagrams by invariants");
    std::string code_a, code_b;
    compare->add_option("a", code_a, "first Gauss code")->required();
    compare->add_option("b", code_b, "second Gauss code")->required();
    compare_flags cf;
    compare->add_flag("--writhe-poly", cf.writhe, "writhe polynomial");
    compare->add_flag("--affine", cf.affine, "affine index polynomial");
    compare->add_flag("--flat", cf.flat, "flat invariant");
    compare->add_flag("--odd-writhe", cf.odd, "odd writhe");
    compare->add_option("--jones", cf.jones, "indexed Jones polynomial for the given n (repeatable)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        json out;
        if (*validate) {
            auto d = validate_in.load();
            out["status"] = "ok";
            out["normal_form"] = serialize(d);
            out["components"] = d.component_count();
            out["chords"] = d.chord_count();
            out["bars"] = d.bar_count();
            out["writhe"] = writhe(d);
            out["unknot_diagram"] = d.component_count() == 1 && d.token_count() == 0;
        } else if (*invariants) {
            auto d = inv_in.load();
            bool all = !(want_w || want_p || want_f || want_odd || want_ind);
            if (all || want_w) {
                auto w = writhe_polynomial(d);
                out["W"] = w.to_string();
                out["W_terms"] = poly_json(w);
            }
            if (all || want_p) {
                auto p = affine_index_polynomial(d);
                out["P"] = p.to_string();
                out["P_terms"] = poly_json(p);
            }
            if (all || want_f) {
                auto f = flat_invariant(d);
                out["F"] = f.to_string();
                out["F_terms"] = poly_json(f);
            }
            if (all || want_odd) out["odd_writhe"] = odd_writhe(d);
            if (all || want_ind) {
                json ind = json::object();
                for (auto [l, i] : chord_indices(d)) ind[std::to_string(l)] = i;
                out["indices"] = ind;
            }
        } else if (*jones) {
            auto d = jones_in.load();
            out["n"] = jones_n;
            out["C_n"] = index_class(d, jones_n).size();
            if (graphical) {
                json g = json::object();
                for (auto& [k, t] : graphical_indexed_jones(d, jones_n)) g[k] = t.coeff.to_string();
                out["graphical"] = g;
            } else {
                auto v = indexed_jones(d, jones_n);
                out["V"] = v.to_string();
                out["V_terms"] = poly_json(v);
                out["span"] = span_string(v);
                out["span_bound_holds"] = span_bound_check(d, jones_n);
            }
        } else if (*finite) {
            auto d = finite_in.load();
            auto xs = parse_int_list(tuple_text);
            out["tuple"] = xs;
            out["value"] = a_tuple(d, xs);
        } else if (*vass) {
            auto d = vass_in.load();
            singular_selection s{d, parse_int_list(mark_text)};
            out["marked"] = s.marked;
            out["invariant"] = vass_inv;
            if (vass_inv == "tuple") {
                auto xs = parse_int_list(vass_tuple);
                std::function<long long(const gauss_diagram&)> f = [&](const gauss_diagram& e) { return a_tuple(e, xs); };
                out["tuple"] = xs;
                out["value"] = vassiliev_sum(f, s);
            } else {
                std::function<laurent_poly(const gauss_diagram&)> f;
                if (vass_inv == "affine")
                    f = affine_index_polynomial;
                else if (vass_inv == "writhe-poly")
                    f = writhe_polynomial;
                else
                    f = [&](const gauss_diagram& e) { return indexed_jones(e, vass_n); };
                auto v = vassiliev_sum(f, s);
                out["value"] = v.to_string();
                out["value_terms"] = poly_json(v);
            }
        } else if (*color) {
            auto d = color_in.load();
            auto q = quandle_from_json(diagram_input::read_file(quandle_file));
            auto bad = check_indexed_quandle(q, 1);
            if (!bad.empty()) throw parse_error("not an indexed quandle: " + bad.front().to_string(), 0);
            if (list_colorings) {
                auto cs = enumerate_colorings(d, q);
                out["count"] = cs.size();
                out["colorings"] = cs;
            } else {
                out["count"] = count_colorings(d, q);
            }
        } else if (*cocycle) {
            auto d = cocycle_in.load();
            auto q = quandle_from_json(diagram_input::read_file(cocycle_q));
            auto phi = cocycle_from_json(diagram_input::read_file(phi_file));
            auto bad = check_cocycle(q, phi, 1);
            if (!bad.empty()) throw parse_error("not an indexed 2-cocycle: " + bad.front().to_string(), 0);
            auto r = cocycle_invariant(d, q, phi);
            out["group"] = phi.group.describe();
            out["invariant"] = render(r);
            out["terms"] = group_ring_json(r);
        } else if (*bq) {
            auto d = bq_in.load();
            auto b = biquandle_from_json(diagram_input::read_file(bq_file));
            auto bad = check_biquandle(b, 1);
            if (!bad.empty()) throw parse_error("not a biquandle: " + bad.front().to_string(), 0);
            auto grp = index_group(b);
            out["group"] = grp.presentation.group.describe();
            out["colorings"] = count_biquandle_colorings(d, b);
            json ind = json::object();
            for (auto& [l, v] : crossing_indices(d, b)) ind[std::to_string(l)] = render(v);
            out["indices"] = ind;
            json ag = json::object();
            for (auto& [k, v] : a_g(d, b)) ag[render(k)] = v;
            out["a_g"] = ag;
        } else if (*twisted) {
            auto d = tw_in.load();
            bool odd = d.bar_count() % 2 == 1;
            bool all = !(want_to || want_s || want_te);
            if (want_to || (all && odd)) {
                auto t = T_o(d);
                out["To"] = t.to_string();
                out["To_terms"] = poly_json(t);
            }
            if (want_s || want_te || (all && !odd)) out["S"] = S_invariant(d);
            if (want_te || (all && !odd)) {
                auto v = T_e(d);
                json tm = json::object();
                for (auto [e, c] : v.t_terms) tm[std::to_string(e)] = c;
                out["Te"] = {{"s0", v.s0}, {"s1", v.s1}, {"t_mod_S", tm}};
                out["const"] = v.constant;
                out["Te_text"] = v.to_string();
            }
        } else if (*fuzz) {
            return run_fuzz(steps, trials, seed, fuzz_inv, fuzz_chords, fuzz_cap);
        } else if (*compare) {
            auto a = parse_gauss_code(code_a);
            auto b = parse_gauss_code(code_b);
            bool all = !(cf.writhe || cf.affine || cf.flat || cf.odd || !cf.jones.empty());
            std::vector<std::pair<std::string, std::function<std::string(const gauss_diagram&)>>> checks;
            if (all || cf.writhe) checks.push_back({"W", [](auto& d) { return writhe_polynomial(d).to_string(); }});
            if (all || cf.affine) checks.push_back({"P", [](auto& d) { return affine_index_polynomial(d).to_string(); }});
            if (all || cf.flat) checks.push_back({"F", [](auto& d) { return flat_invariant(d).to_string(); }});
            if (all || cf.odd) checks.push_back({"odd_writhe", [](auto& d) { return std::to_string(odd_writhe(d)); }});
            for (int n : cf.jones)
                checks.push_back({"V^" + std::to_string(n), [n](auto& d) { return indexed_jones(d, n).to_string(); }});
            bool any_distinct = false;
            for (auto& [name, f] : checks) {
                std::string va = f(a), vb = f(b);
                bool same = va == vb;
                any_distinct = any_distinct || !same;
                out["results"][name] = {{"a", va}, {"b", vb}, {"verdict", same ? "equal" : "distinct"}};
            }
            out["verdict"] = any_distinct ? "distinct" : "equal";
            out["note"] = any_distinct ? "a distinct invariant proves the diagrams are inequivalent"
                                       : "equal invariants prove nothing about equivalence";
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const diagram_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const resource_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
