#pragma once

#include <json.hpp>

#include "nccw/cu_tilde.hpp"
#include "nccw/gallery.hpp"
#include "nccw/reduction.hpp"

namespace nccw {

using Json = nlohmann::ordered_json;

// Thrown for malformed documents; the CLI maps it to exit code 2.
struct FormatError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Integers are written as numbers when they fit in 64 bits and as decimal strings otherwise;
// both forms are accepted on input. Matrices always use decimal strings.
Json to_json(const Integer& x);
Integer integer_from_json(const Json& j);
Json to_json(const IntVector& v);
IntVector int_vector_from_json(const Json& j);
Json to_json(const IntMatrix& m);
IntMatrix int_matrix_from_json(const Json& j);

Json to_json(const NccwComplex& a);
NccwComplex complex_from_json(const Json& j);  // shape only; call validate() separately
std::string content_hash(const NccwComplex& a);

Json to_json(const Move& m);
Move move_from_json(const Json& j);
Json to_json(const MoveTrace& t);
MoveTrace trace_from_json(const Json& j);

Json to_json(const Polynomial& p);
Json to_json(const CrossedBlockReport& r);
Json to_json(const SummandGraph& g);

Json to_json(const ExtNat& x);
ExtNat ext_nat_from_json(const Json& j);
Json to_json(const StepFn& f);
StepFn step_fn_from_json(const Json& j);
Json to_json(const CuElement& x);
// Checks the embedded ambient hash, when present, against the given ambient.
CuElement cu_element_from_json(const Json& j, const AmbientPtr& ambient);
Json to_json(const CuTildeElement& u);
CuTildeElement cu_tilde_from_json(const Json& j, const CuTildeAmbient& ambient);

}  // namespace nccw
