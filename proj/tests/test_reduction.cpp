#include <doctest.h>

#include "nccw/gallery.hpp"
#include "nccw/random_gen.hpp"
#include "nccw/reduction.hpp"

using namespace nccw;

namespace {

NccwComplex z23() { return {{2, 3}, {6}, IntMatrix::of({{3, 0}}), IntMatrix::of({{0, 2}})}; }

// Unital, and purifying the second row re-impurifies the first.
NccwComplex shared_column() {
    return {{1, 1, 1}, {2, 1}, IntMatrix::of({{1, 1, 0}, {1, 0, 0}}), IntMatrix::of({{0, 0, 2}, {0, 1, 0}})};
}

bool lattice_constant(const MoveTrace& t) {
    const auto base = column_lattice(t.initial);
    for (const auto& s : t.steps)
        if (column_lattice(s.result) != base) return false;
    return true;
}

}  // namespace

TEST_CASE("verify_trace") {
    CHECK(verify_trace(MoveTrace{interval(), {}}).ok);

    MoveTrace t{interval(), {}};
    t.steps.push_back({HereditaryCut{0, 1}, interval()});
    CHECK(verify_trace(t).ok);

    const NccwComplex big{{1, 1}, {5}, IntMatrix::of({{1, 1}}), IntMatrix::of({{2, 0}})};
    MoveTrace illegal{big, {}};
    illegal.steps.push_back({Unitize{}, unitize(big)});
    NccwComplex cut = unitize(big);
    cut.f = {1};
    illegal.steps.push_back({HereditaryCut{0, 1}, cut});
    const TraceCheck chk = verify_trace(illegal);
    CHECK_FALSE(chk.ok);
    CHECK(chk.failing_step == 1u);

    MoveTrace wrong_result{interval(), {}};
    wrong_result.steps.push_back({RemoveUnit{0}, interval()});
    CHECK(verify_trace(wrong_result).failing_step == 0u);

    MoveTrace invalid_start{{{2}, {1}, IntMatrix::of({{1}}), IntMatrix::of({{1}})}, {}};
    const TraceCheck bad = verify_trace(invalid_start);
    CHECK_FALSE(bad.ok);
    CHECK_FALSE(bad.failing_step.has_value());
}

TEST_CASE("reduction of small examples") {
    Reduction r = reduce_to_pure_multiplicities(interval());
    CHECK(r.trace.steps.empty());
    CHECK(r.result == interval());

    r = reduce_to_pure_multiplicities(z23());
    CHECK(has_pure_multiplicities(r.result));
    CHECK(verify_trace(r.trace).ok);
    CHECK(k_theory(r.result).k1.is_trivial());
    CHECK(to_graph(r.result).is_forest);
    CHECK(r.route == Route::CaseAnalysis);
}

TEST_CASE("row purity can break during the case analysis") {
    const NccwComplex a = shared_column();
    REQUIRE(validate(a).ok);
    try {
        reduce_by_case_analysis(a);
        FAIL("expected a row purity violation");
    } catch (const RowPurityError& e) {
        CHECK(e.violation.broken_row == 0);
        CHECK(e.violation.processing_row == 1);
        CHECK(verify_trace(e.violation.partial).ok);
        CHECK_FALSE(row_is_pure(e.violation.partial.final(), 0));
    }
    // Its lattice {(a, b) : a = b mod 2} is not the lattice of any pure form.
    CHECK_FALSE(pure_target(a.difference()).columns.has_value());
    CHECK_THROWS_AS(reduce_to_pure_multiplicities(a), PureFormUnreachable);
}

TEST_CASE("pure targets") {
    // Diagonal lattice: a star with one leaf per block, plus the centre column.
    PureTarget t = pure_target(IntMatrix::of({{1, 0}, {0, 3}}));
    REQUIRE(t.columns.has_value());
    CHECK(t.columns->size() == 3);
    CHECK(same_lattice(IntMatrix::from_columns(2, *t.columns), IntMatrix::of({{1, 0}, {0, 3}})));
    // Rank deficient but a graph lattice: the edge (1, -1).
    t = pure_target(IntMatrix::of({{2, 1}, {-2, -1}}));
    REQUIRE(t.columns.has_value());
    CHECK(same_lattice(IntMatrix::from_columns(2, *t.columns), IntMatrix::of({{1}, {-1}})));
    CHECK(pure_target(IntMatrix(2, 2)).columns.has_value());
}

TEST_CASE("random reductions: pure output, verified traces, constant lattice") {
    Rng rng(5);
    int fallback = 0, unreachable = 0;
    for (int t = 0; t < 150; ++t) {
        const NccwComplex a = random_complex(rng);
        try {
            const Reduction r = reduce_to_pure_multiplicities(a);
            CHECK(has_pure_multiplicities(r.result));
            CHECK(r.trace.final() == r.result);
            CHECK(verify_trace(r.trace).ok);
            CHECK(lattice_constant(r.trace));
            CHECK(k_theory(r.result).k1 == k_theory(a).k1);
            if (r.route == Route::LatticeFallback) {
                ++fallback;
                CHECK(r.finding.has_value());
            }
        } catch (const PureFormUnreachable&) {
            ++unreachable;
            CHECK_FALSE(pure_target(a.difference()).columns.has_value());
        }
    }
    CHECK(fallback > 0);
    CHECK(unreachable > 0);
}

TEST_CASE("tree certificates") {
    for (const NccwComplex& a : {q_c(), razak(2), razak(7), interval(), tree(4, {{1, 2}, {1, 3}, {1, 4}}), dimension_drop(2, 3)}) {
        auto cert = tree_certificate(a);
        REQUIRE(std::holds_alternative<TreeCertificate>(cert));
        const auto& c = std::get<TreeCertificate>(cert);
        CHECK(c.graph.is_forest);
        CHECK(verify_trace(c.trace).ok);
        CHECK(c.trace.initial == a);
    }
    auto circ = tree_certificate(circle());
    REQUIRE(std::holds_alternative<NotK1Trivial>(circ));
    CHECK(std::get<NotK1Trivial>(circ).cokernel.to_string() == "Z");
    auto dd = tree_certificate(dimension_drop(2, 4));
    REQUIRE(std::holds_alternative<NotK1Trivial>(dd));
    CHECK(std::get<NotK1Trivial>(dd).cokernel.to_string() == "Z/2");
}

TEST_CASE("pure commutative complexes: K1 trivial exactly on forests") {
    Rng rng(9);
    for (int t = 0; t < 300; ++t) {
        const std::size_t k = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
        const std::size_t l = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
        NccwComplex a{ones(k), ones(l), IntMatrix(l, k), IntMatrix(l, k)};
        for (std::size_t i = 0; i < l; ++i) {
            a.Z0(i, std::uniform_int_distribution<std::size_t>(0, k - 1)(rng)) = 1;
            a.Z1(i, std::uniform_int_distribution<std::size_t>(0, k - 1)(rng)) = 1;
        }
        REQUIRE(is_commutative_pure(a));
        CHECK(k_theory(a).k1.is_trivial() == to_graph(a).is_forest);
    }
}

TEST_CASE("euclidean chains") {
    EuclideanChain c = euclidean_chain(1, 2);
    CHECK(c.trace.steps.empty());
    CHECK(c.pairs == std::vector<std::pair<unsigned, unsigned>>{{1, 2}});

    c = euclidean_chain(2, 3);
    CHECK(c.pairs == std::vector<std::pair<unsigned, unsigned>>{{2, 3}, {1, 2}});
    CHECK(verify_trace(c.trace).ok);
    CHECK(c.trace.final() == a_pq(1, 2));

    c = euclidean_chain(3, 5);
    CHECK(c.pairs == std::vector<std::pair<unsigned, unsigned>>{{3, 5}, {2, 3}, {1, 2}});

    c = euclidean_chain(5, 12);
    CHECK(verify_trace(c.trace).ok);
    CHECK(c.pairs.back().first == 1);

    CHECK_THROWS_AS(euclidean_chain(2, 4), PreconditionError);
    CHECK_THROWS_AS(euclidean_chain(3, 3), PreconditionError);
}

TEST_CASE("trace builder normalization") {
    TraceBuilder tb(razak(3));
    tb.normalize();
    CHECK(is_unital(tb.current()));
    CHECK(tb.current().e == ones(2));
    CHECK(verify_trace(tb.trace()).ok);

    TraceBuilder tz(z23());
    tz.normalize();
    // e -> (1, 1) with f = (3), then Z1 * e = 2 < 3 forces a unitization.
    CHECK(tz.current().e == ones(3));
    CHECK(tz.current().f == IntVector{3});
    CHECK(is_unital(tz.current()));
}
