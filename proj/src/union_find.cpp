#include "busfactor/union_find.hpp"

#include <algorithm>
#include <numeric>

#include "busfactor/errors.hpp"

namespace busfactor {

TaskUnionFind::TaskUnionFind(std::size_t n_tasks)
    : parent_(n_tasks), rank_(n_tasks, 0), comp_size_(n_tasks, 1),
      tau_(n_tasks > 0 ? 1 : 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
}

int TaskUnionFind::find(int task) {
    if (task < 0 || static_cast<std::size_t>(task) >= parent_.size()) {
        throw NotFoundError("union-find: task index out of range");
    }
    int root = task;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[task] != root) {
        int next = parent_[task];
        parent_[task] = root;
        task = next;
    }
    return root;
}

std::size_t TaskUnionFind::union_all(std::span<const int> tasks) {
    if (tasks.empty()) {
        throw DomainError("union_all: empty task list");
    }
    int acc = find(tasks[0]);
    for (std::size_t i = 1; i < tasks.size(); ++i) {
        int r = find(tasks[i]);
        if (r == acc) continue;
        // Union by rank; rank ties go to the smaller index.
        int hi = acc, lo = r;
        if (rank_[hi] < rank_[lo] ||
            (rank_[hi] == rank_[lo] && lo < hi)) {
            std::swap(hi, lo);
        }
        parent_[lo] = hi;
        comp_size_[hi] += comp_size_[lo];
        if (rank_[hi] == rank_[lo]) ++rank_[hi];
        acc = hi;
    }
    tau_ = std::max(tau_, comp_size_[acc]);
    return tau_;
}

TaskUnionFind::Simulation TaskUnionFind::resulting_size(std::span<const int> tasks) {
    if (tasks.empty()) {
        throw DomainError("resulting_size: empty task list");
    }
    scratch_.clear();
    for (int t : tasks) {
        scratch_.push_back(find(t));
    }
    std::sort(scratch_.begin(), scratch_.end());
    scratch_.erase(std::unique(scratch_.begin(), scratch_.end()), scratch_.end());
    std::size_t total = 0;
    for (int r : scratch_) {
        total += comp_size_[r];
    }
    return Simulation{scratch_, total};
}

}  // namespace busfactor
