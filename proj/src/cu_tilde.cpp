#include "nccw/cu_tilde.hpp"

namespace nccw {

namespace {

CuElement full_class(const AmbientPtr& amb) {
    const NccwComplex& a = amb->complex();
    std::vector<ExtNat> n;
    for (const auto& x : a.e) n.emplace_back(to_u64(x));
    std::vector<StepFn> F;
    for (const auto& x : a.f) F.push_back(StepFn::constant(ExtNat(to_u64(x))));
    return CuElement::make(amb, std::move(n), std::move(F));
}

CuElement unit_of(const CuTildeElement& u) { return full_class(u.x.ambient()); }

}  // namespace

CuTildeAmbient CuTildeAmbient::of(const NccwComplex& a) {
    require_valid(a);
    CuTildeAmbient amb;
    amb.original = a;
    amb.unitized = !is_unital(a);
    amb.model = CuAmbient::of(amb.unitized ? unitize(a) : a);
    return amb;
}

CuElement unit_class(const NccwComplex& a) {
    require_valid(a);
    if (!is_unital(a)) throw PreconditionError("unit_class: complex is not unital");
    return full_class(CuAmbient::of(a));
}

CuElement strictly_positive_class(const NccwComplex& a) { return full_class(CuAmbient::of(a)); }

CuTildeElement make_cu_tilde(const CuTildeAmbient& amb, CuElement x, std::uint64_t units) {
    if (!same_ambient(x.ambient(), amb.model)) throw AmbientMismatch();
    CuTildeElement u{std::move(x), units, amb.unitized};
    if (amb.unitized && quotient_count(u) != units)
        throw std::invalid_argument("Cu~ membership: adjoined-summand rank differs from the unit count");
    return u;
}

bool leq(const CuTildeElement& u, const CuTildeElement& v) {
    const CuElement one = unit_of(u);
    return leq(add(u.x, scale(v.units, one)), add(v.x, scale(u.units, one)));
}

bool eq(const CuTildeElement& u, const CuTildeElement& v) { return leq(u, v) && leq(v, u); }

CuTildeElement add(const CuTildeElement& u, const CuTildeElement& v) { return {add(u.x, v.x), u.units + v.units, u.unitized}; }

bool leq_stabilized(const CuTildeElement& u, const CuTildeElement& v, std::uint64_t max_k) {
    const CuElement one = unit_of(u);
    for (std::uint64_t k = 0; k <= max_k; ++k)
        if (leq(add(u.x, scale(v.units + k, one)), add(v.x, scale(u.units + k, one)))) return true;
    return false;
}

bool is_positive(const CuTildeElement& u) { return leq(scale(u.units, unit_of(u)), u.x); }

std::variant<CuElement, NotPositive> positive_representative(const CuTildeElement& u) {
    auto r = compact_decomposition(scale(u.units, unit_of(u)), u.x);
    if (std::holds_alternative<NotDominated>(r)) return NotPositive{};
    return std::get<CuElement>(r);
}

std::uint64_t quotient_count(const CuTildeElement& u) {
    if (!u.unitized) throw std::invalid_argument("quotient_count: ambient was not built by unitization");
    const ExtNat c = u.x.n().back();
    if (c.is_inf()) throw std::invalid_argument("quotient_count: infinite rank at the adjoined summand");
    return c.value();
}

}  // namespace nccw
