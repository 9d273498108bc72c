#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "nccw/lattice_route.hpp"
#include "nccw/moves.hpp"

namespace nccw {

// A row purified earlier lost purity while a later row was processed by the Case I/II loop.
struct RowPurityViolation {
    std::size_t broken_row = 0;
    std::size_t processing_row = 0;
    MoveTrace partial;  // moves up to and including the offending iteration

    std::string to_string() const;
};

struct RowPurityError : std::logic_error {
    RowPurityViolation violation;
    explicit RowPurityError(RowPurityViolation v) : std::logic_error(v.to_string()), violation(std::move(v)) {}
};

enum class Route { CaseAnalysis, LatticeFallback };
const char* route_name(Route r);

struct Reduction {
    NccwComplex result;
    MoveTrace trace;
    Route route = Route::CaseAnalysis;
    std::optional<RowPurityViolation> finding;  // set when the case analysis tripped and the fallback ran
};

// The row-by-row Case I / Case II loop; throws RowPurityError when purity monotonicity fails.
MoveTrace reduce_by_case_analysis(const NccwComplex& a);

// Case analysis first; on a purity violation, the lattice route from the original input.
// Throws PureFormUnreachable (message carries the lattice obstruction) when no pure form exists.
Reduction reduce_to_pure_multiplicities(const NccwComplex& a);

struct NotK1Trivial {
    AbelianGroup cokernel;
};

struct TreeCertificate {
    SummandGraph graph;
    MoveTrace trace;
    Route route = Route::CaseAnalysis;
};

std::variant<TreeCertificate, NotK1Trivial> tree_certificate(const NccwComplex& a);

struct EuclideanChain {
    MoveTrace trace;
    std::vector<std::pair<unsigned, unsigned>> pairs;  // (p, q) of every A_{p,q} presentation reached
};

EuclideanChain euclidean_chain(unsigned p, unsigned q);

}  // namespace nccw
