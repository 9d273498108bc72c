#include "nccw/json_io.hpp"

#include <cstdio>

namespace nccw {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::size_t index_from_json(const Json& j) {
    Integer x = integer_from_json(j);
    if (x < 0) throw FormatError("negative index");
    return static_cast<std::size_t>(to_u64(x));
}

}  // namespace

Json to_json(const Integer& x) {
    if (fits_int64(x)) return Json(static_cast<std::int64_t>(std::stoll(x.get_str())));
    return Json(x.get_str());
}

Integer integer_from_json(const Json& j) {
    if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(std::to_string(j.get<std::uint64_t>())) : Integer(std::to_string(j.get<std::int64_t>()));
    if (j.is_string()) {
        try {
            return parse_integer(j.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw FormatError(e.what());
        }
    }
    throw FormatError("expected an integer, got " + j.dump());
}

Json to_json(const IntVector& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

IntVector int_vector_from_json(const Json& j) {
    if (!j.is_array()) throw FormatError("expected an array of integers");
    IntVector v;
    for (const auto& x : j) v.push_back(integer_from_json(x));
    return v;
}

Json to_json(const IntMatrix& m) {
    Json a = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(i, c).get_str());
        a.push_back(row);
    }
    return a;
}

IntMatrix int_matrix_from_json(const Json& j) {
    if (!j.is_array()) throw FormatError("expected a matrix (array of rows)");
    std::vector<IntVector> rows;
    for (const auto& r : j) rows.push_back(int_vector_from_json(r));
    try {
        return IntMatrix::from_rows(rows);
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

Json to_json(const NccwComplex& a) {
    Json j;
    j["e"] = to_json(a.e);
    j["f"] = to_json(a.f);
    j["Z0"] = to_json(a.Z0);
    j["Z1"] = to_json(a.Z1);
    return j;
}

NccwComplex complex_from_json(const Json& j) {
    NccwComplex a{int_vector_from_json(field(j, "e")), int_vector_from_json(field(j, "f")), int_matrix_from_json(field(j, "Z0")),
                  int_matrix_from_json(field(j, "Z1"))};
    // An l x 0 matrix parses as l empty rows; give it the declared width.
    if (a.Z0.rows() == 0) a.Z0 = IntMatrix(0, a.k());
    if (a.Z1.rows() == 0) a.Z1 = IntMatrix(0, a.k());
    return a;
}

std::string content_hash(const NccwComplex& a) {
    // 64-bit FNV-1a of the compact serialization.
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : to_json(a).dump()) h = (h ^ c) * 1099511628211ull;
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Json to_json(const Move& m) {
    return std::visit(overloaded{
                          [](const Unitize&) { return Json{{"type", "unitize"}}; },
                          [](const RemoveUnit& r) { return Json{{"type", "remove_unit"}, {"j", r.j}}; },
                          [](const HereditaryCut& h) { return Json{{"type", "hereditary_cut"}, {"i", h.i}, {"f", to_json(h.f)}}; },
                          [](const StableIsoReplace& s) { return Json{{"type", "stable_iso_replace"}, {"e", to_json(s.e)}, {"f", to_json(s.f)}}; },
                          [](const PermuteSummands& p) { return Json{{"type", "permute_summands"}, {"perm", p.perm}}; },
                      },
                      m);
}

Move move_from_json(const Json& j) {
    const Json& t = field(j, "type");
    if (!t.is_string()) throw FormatError("move type must be a string");
    const std::string type = t.get<std::string>();
    if (type == "unitize") return Unitize{};
    if (type == "remove_unit") return RemoveUnit{index_from_json(field(j, "j"))};
    if (type == "hereditary_cut") return HereditaryCut{index_from_json(field(j, "i")), integer_from_json(field(j, "f"))};
    if (type == "stable_iso_replace") return StableIsoReplace{int_vector_from_json(field(j, "e")), int_vector_from_json(field(j, "f"))};
    if (type == "permute_summands") {
        std::vector<std::size_t> perm;
        const Json& p = field(j, "perm");
        if (!p.is_array()) throw FormatError("perm must be an array");
        for (const auto& x : p) perm.push_back(index_from_json(x));
        return PermuteSummands{perm};
    }
    throw FormatError("unknown move type '" + type + "'");
}

Json to_json(const MoveTrace& t) {
    Json steps = Json::array();
    for (const auto& s : t.steps) steps.push_back(Json{{"move", to_json(s.move)}, {"result", to_json(s.result)}});
    return Json{{"initial", to_json(t.initial)}, {"steps", steps}};
}

MoveTrace trace_from_json(const Json& j) {
    MoveTrace t{complex_from_json(field(j, "initial")), {}};
    const Json& steps = field(j, "steps");
    if (!steps.is_array()) throw FormatError("steps must be an array");
    for (const auto& s : steps) t.steps.push_back({move_from_json(field(s, "move")), complex_from_json(field(s, "result"))});
    return t;
}

Json to_json(const Polynomial& p) { return to_json(IntVector(p.coeffs)); }

Json to_json(const CrossedBlockReport& r) {
    Json j;
    j["p"] = r.p;
    j["q"] = r.q;
    j["A"] = to_json(r.A);
    j["charpoly"] = r.charpoly.to_string();
    j["charpoly_coefficients"] = to_json(r.charpoly);
    j["det_I_minus_A"] = to_json(r.det_I_minus_A);
    j["det_minus_A"] = to_json(r.det_minus_A);
    j["Z0"] = to_json(r.Z0);
    j["Z1"] = to_json(r.Z1);
    j["k1_trivial"] = r.k1_trivial;
    return j;
}

Json to_json(const SummandGraph& g) {
    Json edges = Json::array();
    for (auto [u, v] : g.edges) edges.push_back(Json::array({u, v}));
    return Json{{"vertices", g.vertices}, {"edges", edges}, {"is_forest", g.is_forest}};
}

Json to_json(const ExtNat& x) { return x.is_inf() ? Json("inf") : Json(x.value()); }

ExtNat ext_nat_from_json(const Json& j) {
    if (j.is_string() && j.get<std::string>() == "inf") return ExtNat::inf();
    Integer v = integer_from_json(j);
    if (v < 0) throw FormatError("rank values must be nonnegative");
    return ExtNat(to_u64(v));
}

Json to_json(const StepFn& f) {
    Json br = Json::array(), iv = Json::array(), pv = Json::array();
    for (const auto& b : f.breakpoints()) br.push_back(b.get_str());
    for (const auto& x : f.interval_values()) iv.push_back(to_json(x));
    for (const auto& x : f.point_values()) pv.push_back(to_json(x));
    return Json{{"breakpoints", br}, {"interval_values", iv}, {"point_values", pv}};
}

StepFn step_fn_from_json(const Json& j) {
    std::vector<Rational> br;
    std::vector<ExtNat> iv, pv;
    const Json& b = field(j, "breakpoints");
    const Json& i = field(j, "interval_values");
    const Json& p = field(j, "point_values");
    if (!b.is_array() || !i.is_array() || !p.is_array()) throw FormatError("step function fields must be arrays");
    try {
        for (const auto& x : b) br.push_back(parse_rational(x.is_string() ? x.get<std::string>() : x.dump()));
        for (const auto& x : i) iv.push_back(ext_nat_from_json(x));
        for (const auto& x : p) pv.push_back(ext_nat_from_json(x));
        return StepFn::make(br, iv, pv);
    } catch (const FormatError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

Json to_json(const CuElement& x) {
    Json n = Json::array(), F = Json::array();
    for (const auto& v : x.n()) n.push_back(to_json(v));
    for (const auto& f : x.F()) F.push_back(to_json(f));
    return Json{{"n", n}, {"F", F}, {"ambient", content_hash(x.ambient()->complex())}};
}

CuElement cu_element_from_json(const Json& j, const AmbientPtr& ambient) {
    if (j.contains("ambient") && j.at("ambient") != content_hash(ambient->complex()))
        throw FormatError("element was built over a different complex (ambient hash mismatch)");
    std::vector<ExtNat> n;
    std::vector<StepFn> F;
    const Json& jn = field(j, "n");
    const Json& jF = field(j, "F");
    if (!jn.is_array() || !jF.is_array()) throw FormatError("n and F must be arrays");
    for (const auto& v : jn) n.push_back(ext_nat_from_json(v));
    for (const auto& f : jF) F.push_back(step_fn_from_json(f));
    try {
        return CuElement::make(ambient, std::move(n), std::move(F));
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

Json to_json(const CuTildeElement& u) {
    return Json{{"x", to_json(u.x)}, {"units", u.units}, {"ambient_kind", u.unitized ? "unitized" : "unital"}};
}

CuTildeElement cu_tilde_from_json(const Json& j, const CuTildeAmbient& ambient) {
    const Json& kind = field(j, "ambient_kind");
    if (kind != (ambient.unitized ? "unitized" : "unital")) throw FormatError("ambient_kind does not match the complex");
    CuElement x = cu_element_from_json(field(j, "x"), ambient.model);
    const Integer units = integer_from_json(field(j, "units"));
    if (units < 0) throw FormatError("units must be nonnegative");
    try {
        return make_cu_tilde(ambient, std::move(x), to_u64(units));
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

}  // namespace nccw
