#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace chordal {

// A relation among a few variables, checked once all of them are assigned.
struct coloring_constraint {
    std::vector<int> vars;
    std::function<bool(const int*)> holds;  // values in `vars` order
};

// Backtracking over variables in index order with domain [0, q). A variable
// whose constraints have all other variables assigned only tries the values
// those constraints accept. Throws resource_error past `node_budget` nodes.
class coloring_search {
public:
    coloring_search(int variables, int q, std::vector<coloring_constraint> constraints);
    void run(const std::function<void(const std::vector<int>&)>& visit, std::uint64_t node_budget = 100000000ULL);
    std::uint64_t count(std::uint64_t node_budget = 100000000ULL);

private:
    int n_;
    int q_;
    std::vector<coloring_constraint> cons_;
    std::vector<int> order_;
    std::vector<std::vector<int>> watch_;  // constraints closed at each step
};

} // namespace chordal
