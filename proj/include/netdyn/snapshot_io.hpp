#pragma once

#include <iosfwd>

#include "netdyn/graph.hpp"

namespace netdyn {

// Snapshot text format:
//
//   # nodes: <n> edges: <m>
//   N <id>            (n lines, sorted by id)
//   E <from> <to> <w> (m lines, sorted by (from, to), w with 9 decimals)

void write_snapshot(std::ostream& out, const GraphSnapshot& graph);

/// Throws ParseError (with line number) on malformed input, including a
/// header whose counts disagree with the body.
GraphSnapshot read_snapshot(std::istream& in);

}  // namespace netdyn
