#pragma once

#include <stdexcept>
#include <string>

#include "topograph/graph.hpp"

namespace topograph {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Text graph format, one declaration per line, '#' starts a comment:
///
///   vertex <id>
///   edge <id> <dom> <range|?>
///   omega <id> <dom> <range|?>
///   relative <id> [<id> ...]
///   escape omega
///
/// parse_graph ∘ print_graph is the identity on canonicalized graphs.
Graph parse_graph(const std::string& text);

std::string print_graph(const Graph& g);

}  // namespace topograph
