#pragma once

#include <string>
#include <string_view>

#include "bitonic/graph.hpp"

namespace bitonic {

/// Line-oriented graph format:
///
///     # comment
///     n s t
///     u: v_1 v_2 ... v_m        (successors of u, clockwise)
///
/// Vertices without a line have no successors. to_text emits one line per
/// vertex and no comments, so parse_graph_text(to_text(g)) == g and
/// to_text(parse_graph_text(x)) == x for every canonical x.
EmbeddedStGraph parse_graph_text(std::string_view text);
std::string to_text(const EmbeddedStGraph& g);

/// JSON mirror: {"n":..,"s":..,"t":..,"succ":[[..],..]}.
EmbeddedStGraph parse_graph_json(std::string_view text);
std::string to_json(const EmbeddedStGraph& g);

/// Dispatches on the first non-blank character ('{' selects JSON).
EmbeddedStGraph parse_graph(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace bitonic
