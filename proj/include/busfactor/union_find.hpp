#ifndef BUSFACTOR_UNION_FIND_HPP
#define BUSFACTOR_UNION_FIND_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace busfactor {

// Union-find over task nodes, with path compression and union by rank.
// Tracks the size of every component and the current maximum component size
// tau. Rank ties are broken toward the smaller index so the root choice is
// deterministic; callers index tasks by lexicographic rank when they need
// lexicographic tie-breaking.
class TaskUnionFind {
public:
    explicit TaskUnionFind(std::size_t n_tasks);

    std::size_t size() const { return parent_.size(); }

    // Canonical root of a task's component; compresses the path walked.
    int find(int task);

    std::size_t component_size(int root) const { return comp_size_[root]; }

    // Maximum component size; 1 for a fresh non-empty structure, 0 when the
    // structure holds no tasks.
    std::size_t tau() const { return tau_; }

    // Merges the components of all listed tasks into one and returns the
    // updated tau. Throws DomainError on an empty list.
    std::size_t union_all(std::span<const int> tasks);

    struct Simulation {
        std::vector<int> roots;     // distinct roots, ascending
        std::size_t merged_size;    // size the merged component would have
    };

    // Simulates merging the listed tasks' components without mutating the
    // component structure (path compression aside). Returned roots stay
    // valid until a union touches them.
    Simulation resulting_size(std::span<const int> tasks);

private:
    std::vector<int> parent_;
    std::vector<int> rank_;
    std::vector<std::size_t> comp_size_;
    std::size_t tau_;
    std::vector<int> scratch_;  // root dedup buffer
};

}  // namespace busfactor

#endif
