#include "nccw/moves.hpp"

namespace nccw {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string join(const IntVector& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : ",") + x.get_str();
    return "(" + s + ")";
}

}  // namespace

NccwComplex apply_move(const NccwComplex& a, const Move& m) {
    return std::visit(overloaded{
                          [&](const Unitize&) { return unitize(a); },
                          [&](const RemoveUnit& r) { return remove_unit(a, r.j); },
                          [&](const HereditaryCut& h) { return hereditary_cut(a, h.i, h.f); },
                          [&](const StableIsoReplace& s) { return stable_iso_replace(a, s.e, s.f); },
                          [&](const PermuteSummands& p) { return permute_summands(a, p.perm); },
                      },
                      m);
}

std::string describe(const Move& m) {
    return std::visit(overloaded{
                          [](const Unitize&) { return std::string("unitize"); },
                          [](const RemoveUnit& r) { return "remove_unit(" + std::to_string(r.j) + ")"; },
                          [](const HereditaryCut& h) { return "hereditary_cut(" + std::to_string(h.i) + ", " + h.f.get_str() + ")"; },
                          [](const StableIsoReplace& s) { return "stable_iso_replace(" + join(s.e) + ", " + join(s.f) + ")"; },
                          [](const PermuteSummands& p) {
                              std::string s;
                              for (auto x : p.perm) s += (s.empty() ? "" : ",") + std::to_string(x);
                              return "permute_summands(" + s + ")";
                          },
                      },
                      m);
}

TraceCheck verify_trace(const MoveTrace& t) {
    ValidationReport v = validate(t.initial);
    if (!v.ok) return {false, std::nullopt, "initial complex invalid: " + v.message};
    const AbelianGroup k1 = k_theory(t.initial).k1;
    NccwComplex cur = t.initial;
    for (std::size_t s = 0; s < t.steps.size(); ++s) {
        try {
            cur = apply_move(cur, t.steps[s].move);
        } catch (const PreconditionError& e) {
            return {false, s, describe(t.steps[s].move) + " is illegal: " + e.what()};
        }
        if (!(cur == t.steps[s].result)) return {false, s, describe(t.steps[s].move) + " does not replay to the recorded result"};
        if (!(k_theory(cur).k1 == k1)) return {false, s, "K1 changed to " + k_theory(cur).k1.to_string() + " (was " + k1.to_string() + ")"};
    }
    return {};
}

void TraceBuilder::apply(const Move& m) {
    cur_ = apply_move(cur_, m);
    trace_.steps.push_back({m, cur_});
}

void TraceBuilder::stable_iso_minimal(const IntVector& e) { stable_iso(e, minimal_f(cur_.Z0, cur_.Z1, e)); }

void TraceBuilder::move_last_to(std::size_t slot) {
    const std::size_t k = cur_.k();
    if (slot + 1 == k) return;
    std::vector<std::size_t> perm;
    for (std::size_t t = 0; t + 1 < k; ++t) perm.push_back(t);
    perm.insert(perm.begin() + static_cast<long>(slot), k - 1);
    permute(perm);
}

void TraceBuilder::normalize() {
    for (const auto& x : cur_.e)
        if (x != 1) {
            stable_iso_minimal(ones(cur_.k()));
            break;
        }
    if (!is_unital(cur_)) unitize();
}

}  // namespace nccw
