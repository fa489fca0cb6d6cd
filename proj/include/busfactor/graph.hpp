#ifndef BUSFACTOR_GRAPH_HPP
#define BUSFACTOR_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace busfactor {

// Structural summary of a people-task graph. Generator parameters are filled
// in when the graph came out of the synthetic generator.
struct StructuralFeatures {
    std::size_t n_people = 0;
    std::size_t n_tasks = 0;
    std::size_t n_edges = 0;
    std::optional<double> lambda_p;
    std::optional<double> lambda_t;
    std::optional<int> k_p;
    std::optional<int> k_t;
    double density = 0.0;           // |E| / (|P| * |T|)
    std::size_t leaf_people = 0;    // degree-1 people
    std::size_t leaf_tasks = 0;     // degree-1 tasks
    // Pearson correlation of the endpoint degrees over all edges. Undefined
    // (flagged) when either endpoint degree sequence is constant.
    double assortativity = 0.0;
    bool assortativity_defined = false;
};

// Undirected bipartite graph of people and tasks. Node identifiers are
// opaque strings; the two namespaces may never intersect. Edges are a set
// (no duplicates). People and tasks are addressed internally by dense
// indices in insertion order; lexicographic ranks are available separately
// for deterministic tie-breaking.
class BipartiteGraph {
public:
    BipartiteGraph() = default;

    int add_person(std::string id);
    int add_task(std::string id);
    void add_edge(const std::string& person_id, const std::string& task_id);
    void add_edge(int person, int task);
    // Skips the duplicate check; for generators that guarantee uniqueness.
    void add_edge_unchecked(int person, int task);

    std::size_t num_people() const { return person_ids_.size(); }
    std::size_t num_tasks() const { return task_ids_.size(); }
    std::size_t num_edges() const { return n_edges_; }

    bool has_person(std::string_view id) const;
    bool has_task(std::string_view id) const;
    int person_index(std::string_view id) const;  // -1 when absent
    int task_index(std::string_view id) const;    // -1 when absent
    const std::string& person_id(int i) const { return person_ids_[i]; }
    const std::string& task_id(int i) const { return task_ids_[i]; }
    const std::vector<std::string>& people() const { return person_ids_; }
    const std::vector<std::string>& tasks() const { return task_ids_; }

    bool has_edge(int person, int task) const;

    // Degree of either a person or a task, by identifier.
    std::size_t degree(std::string_view id) const;
    std::size_t person_degree(int i) const { return person_adj_[i].size(); }
    std::size_t task_degree(int i) const { return task_adj_[i].size(); }
    const std::vector<int>& person_neighbors(int i) const { return person_adj_[i]; }
    const std::vector<int>& task_neighbors(int i) const { return task_adj_[i]; }

    // Number of tasks with degree >= 1.
    std::size_t coverage() const;

    // Largest number of task nodes in any connected component of the mixed
    // people+tasks node set; 0 for a graph with no tasks.
    std::size_t max_connected_tasks() const;

    bool is_connected() const;  // single component over all nodes

    // Induced subgraph with the listed people (and their edges) deleted.
    // Tasks always persist, possibly isolated.
    BipartiteGraph remove_people(std::span<const std::string> ids) const;

    StructuralFeatures structural_features() const;

    // Person indices sorted by identifier, and the inverse (index -> rank).
    std::vector<int> people_by_id() const;
    std::vector<int> person_lex_rank() const;
    std::vector<int> tasks_by_id() const;
    std::vector<int> task_lex_rank() const;

    // Node-set and edge-set equality (identifier based, order independent).
    bool operator==(const BipartiteGraph& other) const;

private:
    static std::uint64_t edge_key(int p, int t) {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(p)) << 32) |
               static_cast<std::uint32_t>(t);
    }

    std::vector<std::string> person_ids_;
    std::vector<std::string> task_ids_;
    std::unordered_map<std::string, int> person_index_;
    std::unordered_map<std::string, int> task_index_;
    std::vector<std::vector<int>> person_adj_;
    std::vector<std::vector<int>> task_adj_;
    std::unordered_set<std::uint64_t> edge_set_;
    std::size_t n_edges_ = 0;
};

}  // namespace busfactor

#endif
