#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nccw/moves.hpp"

namespace nccw {

// Every move preserves the column lattice im(Z0 - Z1) in Z^l, so a pure-multiplicities form
// is reachable only if that lattice is the (scaled) cut lattice of a graph on the F-blocks.
struct PureTarget {
    // Columns of Z0 - Z1 for a pure form with the same lattice; empty when none was found.
    std::optional<std::vector<IntVector>> columns;
    bool exhaustive = true;  // false when the graph search was skipped as too large
    std::string reason;
};

// Canonical Hermite basis of im(Z0 - Z1); identical across every legal move.
std::vector<IntVector> column_lattice(const NccwComplex& a);

PureTarget pure_target(const IntMatrix& d, std::size_t max_graph_edges = 6);

struct PureFormUnreachable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Drives tb.current() to pure multiplicities by splitting and merging E-summands along the
// column lattice. Throws PureFormUnreachable when pure_target finds nothing.
void lattice_route(TraceBuilder& tb);

// Case I on every impure row until all rows are pure; assumes Z0 - Z1 already has pure columns.
void case_one_cleanup(TraceBuilder& tb);

}  // namespace nccw
