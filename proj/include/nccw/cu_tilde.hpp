#pragma once

#include <variant>

#include "nccw/cuntz.hpp"

namespace nccw {

// Ambient for Cu~(A): A itself when unital, otherwise unitize(A) with the adjoined summand last.
struct CuTildeAmbient {
    NccwComplex original;
    AmbientPtr model;
    bool unitized = false;

    static CuTildeAmbient of(const NccwComplex& a);
};

CuElement unit_class(const NccwComplex& a);
CuElement strictly_positive_class(const NccwComplex& a);

// The formal difference x - units [1].
struct CuTildeElement {
    CuElement x;
    std::uint64_t units = 0;
    bool unitized = false;
};

// For a non-unital A, checks the membership condition: the adjoined-summand rank of x is finite
// and equals units.
CuTildeElement make_cu_tilde(const CuTildeAmbient& amb, CuElement x, std::uint64_t units);

bool leq(const CuTildeElement& u, const CuTildeElement& v);
bool eq(const CuTildeElement& u, const CuTildeElement& v);
CuTildeElement add(const CuTildeElement& u, const CuTildeElement& v);

// Same order relation but with the stabilizing k in 0..max_k quantified explicitly; used to
// confirm that dropping k is harmless on the models.
bool leq_stabilized(const CuTildeElement& u, const CuTildeElement& v, std::uint64_t max_k);

bool is_positive(const CuTildeElement& u);
struct NotPositive {};
std::variant<CuElement, NotPositive> positive_representative(const CuTildeElement& u);

// The rank at the adjoined summand; throws when the ambient was not built by unitization
// or the rank is infinite.
std::uint64_t quotient_count(const CuTildeElement& u);

}  // namespace nccw
