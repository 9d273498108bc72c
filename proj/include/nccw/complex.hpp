#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nccw/intlinalg.hpp"

namespace nccw {

// A 1-dimensional NCCW complex up to isomorphism: E = sum M_{e_j}, F = sum M_{f_i},
// and multiplicity matrices Z0, Z1 (l x k) of the endpoint maps E -> F.
struct NccwComplex {
    IntVector e;
    IntVector f;
    IntMatrix Z0, Z1;

    std::size_t k() const { return e.size(); }
    std::size_t l() const { return f.size(); }
    IntMatrix difference() const { return Z0 - Z1; }  // K0(phi0) - K0(phi1)

    friend bool operator==(const NccwComplex& a, const NccwComplex& b) {
        return a.e == b.e && a.f == b.f && a.Z0 == b.Z0 && a.Z1 == b.Z1;
    }
};

// Thrown when a move or constructor is applied outside its precondition.
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ValidationReport {
    bool ok = true;
    std::optional<std::size_t> row;  // first violated F-block, when the failure is row-specific
    std::string message;
};

ValidationReport validate(const NccwComplex& a);
void require_valid(const NccwComplex& a);

bool is_unital(const NccwComplex& a);

struct KTheory {
    AbelianGroup k0;
    std::vector<IntVector> k0_kernel_basis;
    AbelianGroup k1;
};

KTheory k_theory(const NccwComplex& a);

// f_i = max((Z0 e)_i, (Z1 e)_i, 1).
IntVector minimal_f(const IntMatrix& z0, const IntMatrix& z1, const IntVector& e);

NccwComplex unitize(const NccwComplex& a);
NccwComplex remove_unit(const NccwComplex& a, std::size_t j);
NccwComplex hereditary_cut(const NccwComplex& a, std::size_t i, const Integer& fi);
NccwComplex stable_iso_replace(const NccwComplex& a, const IntVector& e, const IntVector& f);
// Result column t is input column perm[t].
NccwComplex permute_summands(const NccwComplex& a, const std::vector<std::size_t>& perm);
NccwComplex direct_sum(const NccwComplex& a, const NccwComplex& b);

bool row_is_pure(const NccwComplex& a, std::size_t i);
bool has_pure_multiplicities(const NccwComplex& a);
bool is_commutative_pure(const NccwComplex& a);  // pure, and every nonzero entry is 1

struct SummandGraph {
    std::size_t vertices = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // (j0(i), j1(i)) per F-block
    bool is_forest = false;
};

SummandGraph to_graph(const NccwComplex& a);

}  // namespace nccw
