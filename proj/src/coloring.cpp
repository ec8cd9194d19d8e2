#include "chordal/coloring.hpp"

#include <algorithm>

#include "chordal/error.hpp"

namespace chordal {

coloring_search::coloring_search(int variables, int q, std::vector<coloring_constraint> constraints)
    : n_(variables), q_(q), cons_(std::move(constraints)), watch_(variables)
{
    // Greedy static order: prefer variables that close the most constraints,
    // then those touching the most already-ordered variables.
    std::vector<char> placed(n_, 0);
    std::vector<int> rank(n_, -1);
    for (int step = 0; step < n_; ++step) {
        int best = -1;
        std::pair<int, int> best_score{-1, -1};
        for (int v = 0; v < n_; ++v) {
            if (placed[v]) continue;
            int closes = 0, touches = 0;
            for (auto& c : cons_) {
                if (std::find(c.vars.begin(), c.vars.end(), v) == c.vars.end()) continue;
                bool all = true, any = false;
                for (int u : c.vars) {
                    if (u == v) continue;
                    if (placed[u])
                        any = true;
                    else
                        all = false;
                }
                closes += all;
                touches += any;
            }
            std::pair<int, int> score{closes, touches};
            if (score > best_score) {
                best_score = score;
                best = v;
            }
        }
        placed[best] = 1;
        rank[best] = step;
        order_.push_back(best);
    }
    for (std::size_t i = 0; i < cons_.size(); ++i) {
        int last = 0;
        for (int u : cons_[i].vars) last = std::max(last, rank[u]);
        watch_[last].push_back(static_cast<int>(i));
    }
}

void coloring_search::run(const std::function<void(const std::vector<int>&)>& visit, std::uint64_t node_budget)
{
    if (q_ <= 0) return;
    std::vector<int> val(n_, -1);
    std::uint64_t nodes = 0;
    std::vector<int> buf;
    std::function<void(int)> go = [&](int step) {
        if (++nodes > node_budget)
            throw resource_error("coloring search exceeded " + std::to_string(node_budget) + " nodes");
        if (step == n_) {
            visit(val);
            return;
        }
        int v = order_[step];
        for (int x = 0; x < q_; ++x) {
            val[v] = x;
            bool ok = true;
            for (int ci : watch_[step]) {
                const auto& c = cons_[ci];
                buf.resize(c.vars.size());
                for (std::size_t k = 0; k < c.vars.size(); ++k) buf[k] = val[c.vars[k]];
                if (!c.holds(buf.data())) {
                    ok = false;
                    break;
                }
            }
            if (ok) go(step + 1);
        }
        val[v] = -1;
    };
    go(0);
}

std::uint64_t coloring_search::count(std::uint64_t node_budget)
{
    std::uint64_t c = 0;
    run([&](const std::vector<int>&) { ++c; }, node_budget);
    return c;
}

} // namespace chordal
