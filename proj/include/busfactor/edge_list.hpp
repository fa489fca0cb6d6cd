#ifndef BUSFACTOR_EDGE_LIST_HPP
#define BUSFACTOR_EDGE_LIST_HPP

#include <iosfwd>
#include <string>

#include "busfactor/graph.hpp"

namespace busfactor {

// Edge-list text format:
//   - UTF-8, lines ending in '\n'
//   - lines starting with '#' are comments
//   - optional header comment: "# people: N tasks: M"
//   - isolated nodes are declared as "# node: <id>"
//   - data lines: "<person-id> <task-id>" with a single space separator
//   - person ids match p[A-Za-z0-9_]+, task ids match t[A-Za-z0-9_]+
// The writer emits the header, isolated-node declarations (people first,
// each side sorted), then edges sorted by person id and task id within
// person.

BipartiteGraph read_edge_list(std::istream& in);
BipartiteGraph read_edge_list_file(const std::string& path);

void write_edge_list(const BipartiteGraph& g, std::ostream& out);
void write_edge_list_file(const BipartiteGraph& g, const std::string& path);

}  // namespace busfactor

#endif
