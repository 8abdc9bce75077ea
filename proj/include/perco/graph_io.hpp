#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "perco/graph.hpp"

namespace perco {

// Graph-spec documents are JSON objects:
//
//   {
//     "vertices": [{"id": 0, "x": 0, "y": 1}, ...],
//     "edges":    [{"id": 0, "tail": 0, "head": 1, "oriented": false, "p": "1/2"}, ...],
//     "cycle":    {"vertices": [{"id": 0, "role": "u"}, ...], "U": [0], "W": [2]}
//   }
//
// "p" is a string ("3/10", "0.3") or a JSON number; numbers are read through
// their shortest decimal text, so 0.3 means exactly 3/10. "cycle" is
// optional and lists the boundary clockwise.

GraphSpec parse_graph_spec(const nlohmann::json& doc);
GraphSpec read_graph_spec(std::istream& in);
GraphSpec load_graph_spec(const std::string& path);

nlohmann::json graph_spec_json(const GraphSpec& spec);
void write_graph_spec(std::ostream& out, const GraphSpec& spec);

}  // namespace perco
