#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nccw/complex.hpp"

namespace nccw {

struct Unitize {
    friend bool operator==(const Unitize&, const Unitize&) = default;
};
struct RemoveUnit {
    std::size_t j;
    friend bool operator==(const RemoveUnit&, const RemoveUnit&) = default;
};
struct HereditaryCut {
    std::size_t i;
    Integer f;
    friend bool operator==(const HereditaryCut&, const HereditaryCut&) = default;
};
struct StableIsoReplace {
    IntVector e, f;
    friend bool operator==(const StableIsoReplace&, const StableIsoReplace&) = default;
};
struct PermuteSummands {
    std::vector<std::size_t> perm;
    friend bool operator==(const PermuteSummands&, const PermuteSummands&) = default;
};

using Move = std::variant<Unitize, RemoveUnit, HereditaryCut, StableIsoReplace, PermuteSummands>;

NccwComplex apply_move(const NccwComplex& a, const Move& m);
std::string describe(const Move& m);

struct TraceStep {
    Move move;
    NccwComplex result;
    friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct MoveTrace {
    NccwComplex initial;
    std::vector<TraceStep> steps;

    const NccwComplex& final() const { return steps.empty() ? initial : steps.back().result; }
    friend bool operator==(const MoveTrace&, const MoveTrace&) = default;
};

struct TraceCheck {
    bool ok = true;
    std::optional<std::size_t> failing_step;  // index into steps; unset when the initial complex is at fault
    std::string cause;
};

TraceCheck verify_trace(const MoveTrace& t);

// Applies moves to a running complex and records them.
class TraceBuilder {
public:
    explicit TraceBuilder(NccwComplex initial) : trace_{initial, {}}, cur_(std::move(initial)) {}

    const NccwComplex& current() const { return cur_; }
    const MoveTrace& trace() const { return trace_; }
    MoveTrace take() { return std::move(trace_); }

    void apply(const Move& m);
    void unitize() { apply(Unitize{}); }
    void remove_unit(std::size_t j) { apply(RemoveUnit{j}); }
    void cut(std::size_t i, const Integer& fi) { apply(HereditaryCut{i, fi}); }
    void stable_iso(const IntVector& e, const IntVector& f) { apply(StableIsoReplace{e, f}); }
    void stable_iso_minimal(const IntVector& e);
    void permute(const std::vector<std::size_t>& perm) { apply(PermuteSummands{perm}); }
    void move_last_to(std::size_t slot);

    // e -> all ones with minimal f when some e_j != 1, then unitize if needed.
    void normalize();

private:
    MoveTrace trace_;
    NccwComplex cur_;
};

}  // namespace nccw
