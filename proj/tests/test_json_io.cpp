#include <doctest.h>

#include "nccw/json_io.hpp"
#include "nccw/random_gen.hpp"

using namespace nccw;

namespace {

template <class T, class Read>
void round_trip(const T& value, Read read) {
    const Json j = to_json(value);
    const Json reparsed = Json::parse(j.dump());
    CHECK(read(reparsed) == value);
    CHECK(to_json(read(reparsed)).dump() == j.dump());
}

}  // namespace

TEST_CASE("integers: numbers when small, strings when big") {
    CHECK(to_json(Integer(-7)) == Json(-7));
    const Integer big("123456789012345678901234567890");
    CHECK(to_json(big) == Json("123456789012345678901234567890"));
    CHECK(integer_from_json(Json("123456789012345678901234567890")) == big);
    CHECK(integer_from_json(Json(12)) == 12);
    CHECK_THROWS_AS(integer_from_json(Json("12x")), FormatError);
    CHECK_THROWS_AS(integer_from_json(Json(1.5)), FormatError);
}

TEST_CASE("complexes") {
    const NccwComplex a = dimension_drop(2, 3);
    const Json j = to_json(a);
    CHECK(j["Z0"] == Json::parse(R"([["3","0"]])"));
    round_trip(a, complex_from_json);
    // Plain numbers are accepted for matrix entries too.
    const NccwComplex b = complex_from_json(Json::parse(R"({"e":[1],"f":[1],"Z0":[[1]],"Z1":[["1"]]})"));
    CHECK(b == circle());
    CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"e":[1],"f":[1],"Z0":[[1]]})")), FormatError);
    CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"e":[1],"f":[1],"Z0":[[1],[1,2]],"Z1":[[1]]})")), FormatError);
    CHECK(content_hash(a) == content_hash(dimension_drop(2, 3)));
    CHECK(content_hash(a) != content_hash(dimension_drop(3, 4)));
    CHECK(content_hash(a).size() == 16);
}

TEST_CASE("moves and traces") {
    for (const Move& m : std::vector<Move>{Unitize{}, RemoveUnit{2}, HereditaryCut{1, 7}, StableIsoReplace{{1, 2}, {5}}, PermuteSummands{{1, 0, 2}}})
        round_trip(m, move_from_json);
    CHECK_THROWS_AS(move_from_json(Json::parse(R"({"type":"teleport"})")), FormatError);
    CHECK_THROWS_AS(move_from_json(Json::parse(R"({"type":"remove_unit","j":-1})")), FormatError);

    const EuclideanChain c = euclidean_chain(3, 8);
    round_trip(c.trace, trace_from_json);
    CHECK(verify_trace(trace_from_json(Json::parse(to_json(c.trace).dump()))).ok);

    Rng rng(51);
    for (int t = 0; t < 40; ++t) {
        try {
            const Reduction r = reduce_to_pure_multiplicities(random_complex(rng));
            round_trip(r.trace, trace_from_json);
        } catch (const PureFormUnreachable&) {
        }
    }
}

TEST_CASE("crossed report carries a big-integer matrix power") {
    const CrossedBlockReport r = crossed_block(5, 8);
    const Json j = to_json(r);
    CHECK(j["charpoly"] == "t^8 - t^3 - 1");
    CHECK(j["det_I_minus_A"] == -1);
    CHECK(j["k1_trivial"] == true);
    CHECK(int_matrix_from_json(j["Z0"]) == r.Z0);
}

TEST_CASE("step functions and Cu elements") {
    const StepFn f = StepFn::make({Rational(1, 3), Rational(2, 3)}, {1, 0, ExtNat::inf()}, {0, 0});
    const Json j = to_json(f);
    CHECK(j == Json::parse(R"({"breakpoints":["1/3","2/3"],"interval_values":[1,0,"inf"],"point_values":[0,0]})"));
    round_trip(f, step_fn_from_json);
    CHECK_THROWS_AS(step_fn_from_json(Json::parse(R"({"breakpoints":["1/2"],"interval_values":[1,1],"point_values":[2]})")), FormatError);
    CHECK_THROWS_AS(step_fn_from_json(Json::parse(R"({"breakpoints":["3/2"],"interval_values":[1,1],"point_values":[1]})")), FormatError);

    Rng rng(52);
    const AmbientPtr amb = CuAmbient::of(interval());
    for (int t = 0; t < 100; ++t) {
        const CuElement x = random_element(amb, rng, 8, 4, 10);
        round_trip(x, [&](const Json& v) { return cu_element_from_json(v, amb); });
    }
    const CuElement x = random_element(amb, rng, 8, 4);
    CHECK_THROWS_AS(cu_element_from_json(to_json(x), CuAmbient::of(tree(2, {{2, 1}}))), FormatError);
    CHECK_THROWS_AS(cu_element_from_json(Json::parse(R"({"n":[2,0],"F":[{"breakpoints":[],"interval_values":[1],"point_values":[]}]})"), amb), FormatError);
}

TEST_CASE("Cu~ elements") {
    const CuTildeAmbient amb = CuTildeAmbient::of(razak(3));
    const CuTildeElement u = make_cu_tilde(amb, unit_class(amb.model->complex()), 1);
    const Json j = to_json(u);
    CHECK(j["ambient_kind"] == "unitized");
    const CuTildeElement back = cu_tilde_from_json(Json::parse(j.dump()), amb);
    CHECK(back.x == u.x);
    CHECK(back.units == u.units);
    Json wrong = j;
    wrong["units"] = 0;
    CHECK_THROWS_AS(cu_tilde_from_json(wrong, amb), FormatError);
    CHECK_THROWS_AS(cu_tilde_from_json(j, CuTildeAmbient::of(interval())), FormatError);
}

TEST_CASE("other documents") {
    CHECK(to_json(to_graph(circle())) == Json::parse(R"({"vertices":1,"edges":[[0,0]],"is_forest":false})"));
    CHECK(to_json(ExtNat::inf()) == "inf");
    CHECK(ext_nat_from_json(Json(3)) == ExtNat(3));
    CHECK_THROWS_AS(ext_nat_from_json(Json(-1)), FormatError);
}
