#ifndef EDGERES_GRAPH_IO_HPP
#define EDGERES_GRAPH_IO_HPP

#include <iosfwd>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "edgeres/graph.hpp"

namespace edgeres {

// Text format: first line n, then one "u v" line per edge, 1-based.
// Lines starting with '#' are comments; blank lines are skipped.
SimpleGraph read_graph_text(std::istream& in);
void write_graph_text(std::ostream& out, const SimpleGraph& g);

SimpleGraph read_graph_file(const std::string& path);  // .json by extension, text otherwise

nlohmann::json graph_to_json(const SimpleGraph& g);
SimpleGraph graph_from_json(const nlohmann::json& j);

}  // namespace edgeres

#endif
