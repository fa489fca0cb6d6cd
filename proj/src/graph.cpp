#include "busfactor/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "busfactor/errors.hpp"
#include "busfactor/stats.hpp"

namespace busfactor {

int BipartiteGraph::add_person(std::string id) {
    if (task_index_.count(id)) {
        throw DomainError("identifier '" + id + "' already names a task");
    }
    auto [it, inserted] = person_index_.try_emplace(std::move(id),
                                                   static_cast<int>(person_ids_.size()));
    if (!inserted) {
        return it->second;
    }
    person_ids_.push_back(it->first);
    person_adj_.emplace_back();
    return it->second;
}

int BipartiteGraph::add_task(std::string id) {
    if (person_index_.count(id)) {
        throw DomainError("identifier '" + id + "' already names a person");
    }
    auto [it, inserted] = task_index_.try_emplace(std::move(id),
                                                 static_cast<int>(task_ids_.size()));
    if (!inserted) {
        return it->second;
    }
    task_ids_.push_back(it->first);
    task_adj_.emplace_back();
    return it->second;
}

void BipartiteGraph::add_edge(const std::string& person_id, const std::string& task_id) {
    int p = person_index(person_id);
    if (p < 0) throw NotFoundError("unknown person '" + person_id + "'");
    int t = task_index(task_id);
    if (t < 0) throw NotFoundError("unknown task '" + task_id + "'");
    add_edge(p, t);
}

void BipartiteGraph::add_edge(int person, int task) {
    if (!edge_set_.insert(edge_key(person, task)).second) {
        throw DomainError("duplicate edge (" + person_ids_[person] + ", " +
                          task_ids_[task] + ")");
    }
    person_adj_[person].push_back(task);
    task_adj_[task].push_back(person);
    ++n_edges_;
}

void BipartiteGraph::add_edge_unchecked(int person, int task) {
    edge_set_.insert(edge_key(person, task));
    person_adj_[person].push_back(task);
    task_adj_[task].push_back(person);
    ++n_edges_;
}

bool BipartiteGraph::has_person(std::string_view id) const {
    return person_index(id) >= 0;
}

bool BipartiteGraph::has_task(std::string_view id) const {
    return task_index(id) >= 0;
}

int BipartiteGraph::person_index(std::string_view id) const {
    auto it = person_index_.find(std::string(id));
    return it == person_index_.end() ? -1 : it->second;
}

int BipartiteGraph::task_index(std::string_view id) const {
    auto it = task_index_.find(std::string(id));
    return it == task_index_.end() ? -1 : it->second;
}

bool BipartiteGraph::has_edge(int person, int task) const {
    return edge_set_.count(edge_key(person, task)) != 0;
}

std::size_t BipartiteGraph::degree(std::string_view id) const {
    if (int p = person_index(id); p >= 0) return person_adj_[p].size();
    if (int t = task_index(id); t >= 0) return task_adj_[t].size();
    throw NotFoundError("unknown node '" + std::string(id) + "'");
}

std::size_t BipartiteGraph::coverage() const {
    std::size_t covered = 0;
    for (const auto& adj : task_adj_) {
        if (!adj.empty()) ++covered;
    }
    return covered;
}

std::size_t BipartiteGraph::max_connected_tasks() const {
    const std::size_t n = num_people();
    const std::size_t m = num_tasks();
    if (m == 0) return 0;

    // BFS over the mixed node set; people get indices [0,n), tasks [n,n+m).
    std::vector<char> visited(n + m, 0);
    std::vector<std::size_t> stack;
    std::size_t best = 0;
    for (std::size_t start = 0; start < n + m; ++start) {
        if (visited[start]) continue;
        visited[start] = 1;
        stack.assign(1, start);
        std::size_t tasks_here = 0;
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            if (v >= n) {
                ++tasks_here;
                for (int p : task_adj_[v - n]) {
                    if (!visited[p]) {
                        visited[p] = 1;
                        stack.push_back(static_cast<std::size_t>(p));
                    }
                }
            } else {
                for (int t : person_adj_[v]) {
                    std::size_t tv = n + static_cast<std::size_t>(t);
                    if (!visited[tv]) {
                        visited[tv] = 1;
                        stack.push_back(tv);
                    }
                }
            }
        }
        best = std::max(best, tasks_here);
    }
    return best;
}

bool BipartiteGraph::is_connected() const {
    const std::size_t n = num_people();
    const std::size_t m = num_tasks();
    if (n + m <= 1) return true;
    std::vector<char> visited(n + m, 0);
    std::vector<std::size_t> stack{0};
    visited[0] = 1;
    std::size_t seen = 1;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        if (v >= n) {
            for (int p : task_adj_[v - n]) {
                if (!visited[p]) {
                    visited[p] = 1;
                    ++seen;
                    stack.push_back(static_cast<std::size_t>(p));
                }
            }
        } else {
            for (int t : person_adj_[v]) {
                std::size_t tv = n + static_cast<std::size_t>(t);
                if (!visited[tv]) {
                    visited[tv] = 1;
                    ++seen;
                    stack.push_back(tv);
                }
            }
        }
    }
    return seen == n + m;
}

BipartiteGraph BipartiteGraph::remove_people(std::span<const std::string> ids) const {
    std::vector<char> removed(num_people(), 0);
    for (const auto& id : ids) {
        int p = person_index(id);
        if (p < 0) {
            throw DomainError("'" + id + "' is not a person in this graph");
        }
        removed[p] = 1;
    }
    BipartiteGraph out;
    std::vector<int> remap(num_people(), -1);
    for (std::size_t i = 0; i < num_people(); ++i) {
        if (!removed[i]) remap[i] = out.add_person(person_ids_[i]);
    }
    for (const auto& id : task_ids_) {
        out.add_task(id);
    }
    for (std::size_t i = 0; i < num_people(); ++i) {
        if (removed[i]) continue;
        for (int t : person_adj_[i]) {
            out.add_edge_unchecked(remap[i], t);
        }
    }
    return out;
}

StructuralFeatures BipartiteGraph::structural_features() const {
    if (num_people() == 0 || num_tasks() == 0) {
        throw DomainError("structural features need at least one person and one task");
    }
    StructuralFeatures f;
    f.n_people = num_people();
    f.n_tasks = num_tasks();
    f.n_edges = num_edges();
    f.density = static_cast<double>(f.n_edges) /
                (static_cast<double>(f.n_people) * static_cast<double>(f.n_tasks));
    for (const auto& adj : person_adj_) {
        if (adj.size() == 1) ++f.leaf_people;
    }
    for (const auto& adj : task_adj_) {
        if (adj.size() == 1) ++f.leaf_tasks;
    }
    if (f.n_edges >= 2) {
        std::vector<double> dp, dt;
        dp.reserve(f.n_edges);
        dt.reserve(f.n_edges);
        for (std::size_t p = 0; p < num_people(); ++p) {
            for (int t : person_adj_[p]) {
                dp.push_back(static_cast<double>(person_adj_[p].size()));
                dt.push_back(static_cast<double>(task_adj_[t].size()));
            }
        }
        if (auto r = pearson(dp, dt)) {
            f.assortativity = *r;
            f.assortativity_defined = true;
        }
    }
    return f;
}

std::vector<int> BipartiteGraph::people_by_id() const {
    std::vector<int> idx(num_people());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [this](int a, int b) { return person_ids_[a] < person_ids_[b]; });
    return idx;
}

std::vector<int> BipartiteGraph::person_lex_rank() const {
    auto by_id = people_by_id();
    std::vector<int> rank(num_people());
    for (std::size_t r = 0; r < by_id.size(); ++r) {
        rank[by_id[r]] = static_cast<int>(r);
    }
    return rank;
}

std::vector<int> BipartiteGraph::tasks_by_id() const {
    std::vector<int> idx(num_tasks());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [this](int a, int b) { return task_ids_[a] < task_ids_[b]; });
    return idx;
}

std::vector<int> BipartiteGraph::task_lex_rank() const {
    auto by_id = tasks_by_id();
    std::vector<int> rank(num_tasks());
    for (std::size_t r = 0; r < by_id.size(); ++r) {
        rank[by_id[r]] = static_cast<int>(r);
    }
    return rank;
}

bool BipartiteGraph::operator==(const BipartiteGraph& other) const {
    if (num_people() != other.num_people() || num_tasks() != other.num_tasks() ||
        num_edges() != other.num_edges()) {
        return false;
    }
    for (const auto& [id, p] : person_index_) {
        int q = other.person_index(id);
        if (q < 0) return false;
        if (person_adj_[p].size() != other.person_adj_[q].size()) return false;
        for (int t : person_adj_[p]) {
            int ot = other.task_index(task_ids_[t]);
            if (ot < 0 || !other.has_edge(q, ot)) return false;
        }
    }
    for (const auto& id : task_ids_) {
        if (!other.has_task(id)) return false;
    }
    return true;
}

}  // namespace busfactor
