#include "busfactor/edge_list.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "busfactor/errors.hpp"

namespace busfactor {

namespace {

bool valid_id(std::string_view tok, char prefix) {
    if (tok.size() < 2 || tok[0] != prefix) return false;
    for (std::size_t i = 1; i < tok.size(); ++i) {
        const char c = tok[i];
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    }
    return true;
}

}  // namespace

BipartiteGraph read_edge_list(std::istream& in) {
    BipartiteGraph g;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            // Only "# node: <id>" comments carry content.
            static constexpr std::string_view kNode = "# node: ";
            if (line.rfind(kNode, 0) == 0) {
                std::string id = line.substr(kNode.size());
                if (valid_id(id, 'p')) {
                    g.add_person(std::move(id));
                } else if (valid_id(id, 't')) {
                    g.add_task(std::move(id));
                } else {
                    throw ParseError(lineno, "bad node declaration '" + id + "'");
                }
            }
            continue;
        }
        const auto space = line.find(' ');
        if (space == std::string::npos || line.find(' ', space + 1) != std::string::npos) {
            throw ParseError(lineno, "expected '<person-id> <task-id>'");
        }
        std::string ptok = line.substr(0, space);
        std::string ttok = line.substr(space + 1);
        if (!valid_id(ptok, 'p')) {
            throw ParseError(lineno, "bad person id '" + ptok + "'");
        }
        if (!valid_id(ttok, 't')) {
            throw ParseError(lineno, "bad task id '" + ttok + "'");
        }
        int p = g.add_person(std::move(ptok));
        int t = g.add_task(std::move(ttok));
        if (g.has_edge(p, t)) {
            throw ParseError(lineno, "duplicate edge");
        }
        g.add_edge(p, t);
    }
    return g;
}

BipartiteGraph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw DomainError("cannot open '" + path + "' for reading");
    }
    return read_edge_list(in);
}

void write_edge_list(const BipartiteGraph& g, std::ostream& out) {
    out << "# people: " << g.num_people() << " tasks: " << g.num_tasks() << "\n";

    std::vector<std::string> isolated;
    for (std::size_t i = 0; i < g.num_people(); ++i) {
        if (g.person_degree(static_cast<int>(i)) == 0) isolated.push_back(g.person_id(static_cast<int>(i)));
    }
    std::sort(isolated.begin(), isolated.end());
    for (const auto& id : isolated) out << "# node: " << id << "\n";
    isolated.clear();
    for (std::size_t i = 0; i < g.num_tasks(); ++i) {
        if (g.task_degree(static_cast<int>(i)) == 0) isolated.push_back(g.task_id(static_cast<int>(i)));
    }
    std::sort(isolated.begin(), isolated.end());
    for (const auto& id : isolated) out << "# node: " << id << "\n";

    for (int p : g.people_by_id()) {
        std::vector<std::string> task_ids;
        task_ids.reserve(g.person_degree(p));
        for (int t : g.person_neighbors(p)) task_ids.push_back(g.task_id(t));
        std::sort(task_ids.begin(), task_ids.end());
        for (const auto& tid : task_ids) {
            out << g.person_id(p) << ' ' << tid << "\n";
        }
    }
}

void write_edge_list_file(const BipartiteGraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw DomainError("cannot open '" + path + "' for writing");
    }
    write_edge_list(g, out);
}

}  // namespace busfactor
