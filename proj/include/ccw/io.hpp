#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "ccw/cover.hpp"
#include "ccw/decompose.hpp"
#include "ccw/graph.hpp"
#include "ccw/oracles.hpp"
#include "ccw/orientation.hpp"
#include "ccw/ramsey.hpp"

namespace ccw::io {

using json = nlohmann::ordered_json;

enum class graph_format { edge_list, json, dot };

graph_format parse_format(std::string_view name);

// Edge list: "p <n> <m>" then m lines "e <u> <v>", '#' starts a comment.
// JSON: {"n": int, "edges": [[u, v], ...]}. DOT is export only.
graph parse_graph(std::string_view text, graph_format format);

// Canonical: edges sorted by (min endpoint, max endpoint).
std::string serialize_graph(const graph& g, graph_format format);

// Undirected DOT; when a cover is given each part becomes a cluster.
std::string to_dot(const graph& g, const ordered_cover* cover = nullptr, std::string_view name = "G");

json to_json(const graph& g);
json to_json(const ordered_cover& c);
json to_json(const orientation& o);
json to_json(const star_certificate& s);
json to_json(const decomposition& d);
json to_json(const decomposition_report& r);
json to_json(const ramsey_answer& a);
json to_json(const ramsey_verification& v);
json to_json(const intersection_verdict& v);

graph graph_from_json(const json& j);
ordered_cover cover_from_json(const json& j);
orientation orientation_from_json(const json& j);
decomposition decomposition_from_json(const json& j);

// Parses text into a json value, mapping syntax errors to parse_error with
// line and column.
json parse_json(std::string_view text);

}  // namespace ccw::io
