#include <doctest.h>

#include <numeric>

#include "generators.hpp"
#include "nccw/gallery.hpp"
#include "nccw/reduction.hpp"

using namespace nccw;

TEST_CASE("presentations") {
    CHECK(q_c() == NccwComplex{{1, 1}, {2}, IntMatrix::of({{0, 0}}), IntMatrix::of({{1, 1}})});
    CHECK(razak(4) == NccwComplex{{1}, {4}, IntMatrix::of({{3}}), IntMatrix::of({{4}})});
    CHECK(dimension_drop(2, 3) == NccwComplex{{2, 3}, {6}, IntMatrix::of({{3, 0}}), IntMatrix::of({{0, 2}})});
    CHECK(a_pq(2, 5) == NccwComplex{{1, 1}, {5}, IntMatrix::of({{0, 2}}), IntMatrix::of({{5, 0}})});
    CHECK_THROWS_AS(razak(1), PreconditionError);
    CHECK_THROWS_AS(dimension_drop(3, 3), PreconditionError);
    CHECK_THROWS_AS(a_pq(0, 2), PreconditionError);
    CHECK_THROWS_AS(tree(3, {{1, 2}, {2, 1}}), PreconditionError);
    CHECK_THROWS_AS(tree(3, {{1, 4}}), PreconditionError);
    CHECK_THROWS_AS(tree(3, {}), PreconditionError);
}

TEST_CASE("k-theory of the named complexes") {
    CHECK(k_theory(interval()).k1.is_trivial());
    CHECK(k_theory(circle()).k1.to_string() == "Z");
    const KTheory qc = k_theory(q_c());
    CHECK(qc.k0.to_string() == "Z");
    CHECK(qc.k1.is_trivial());
    CHECK_FALSE(is_unital(q_c()));
    CHECK(is_unital(dimension_drop(2, 3)));
    CHECK(k_theory(dimension_drop(2, 3)).k1.is_trivial());
    CHECK(k_theory(dimension_drop(2, 4)).k1.to_string() == "Z/2");
    CHECK(k_theory(razak(2)).k0.is_trivial());
    CHECK(k_theory(razak(2)).k1.is_trivial());
    for (unsigned q = 2; q <= 9; ++q)
        for (unsigned p = 1; p < q; ++p) {
            const KTheory dd = k_theory(dimension_drop(p, q)), apq = k_theory(a_pq(p, q));
            CHECK(dd.k0 == apq.k0);
            CHECK(dd.k1 == apq.k1);
            CHECK(dd.k1.is_trivial() == (std::gcd(p, q) == 1));
        }
}

TEST_CASE("crossed-product blocks") {
    const CrossedBlockReport r = crossed_block(1, 2);
    CHECK(r.A == IntMatrix::of({{0, 1}, {1, 1}}));
    CHECK(r.Z0 - r.Z1 == IntMatrix::of({{0, 1}, {1, 1}}));
    CHECK(r.charpoly.to_string() == "t^2 - t - 1");
    CHECK(r.det_I_minus_A == -1);
    CHECK(r.det_minus_A == -1);
    CHECK(r.k1_trivial);

    for (unsigned q = 2; q <= 10; ++q)
        for (unsigned p = 1; p < q; ++p) {
            if (std::gcd(p, q) != 1) {
                CHECK_THROWS_AS(crossed_block(p, q), PreconditionError);
                continue;
            }
            const CrossedBlockReport b = crossed_block(p, q);
            CHECK(b.det_I_minus_A == -1);
            CHECK(b.det_minus_A == -1);
            const Integer d = determinant(b.Z0 - b.Z1);
            CHECK((d == 1 || d == -1));
            CHECK(b.k1_trivial);
            if (q <= 6) CHECK(testgen::laplace_det(IntMatrix::identity(q) - b.A) == -1);
            const NccwComplex c = crossed_nccw(p, q);
            CHECK(validate(c).ok);
            CHECK(c.e == ones(q));
            CHECK(k_theory(c).k1.is_trivial());
        }
}

TEST_CASE("gallery outputs are valid and certify exactly when K1 vanishes") {
    std::vector<NccwComplex> items = {interval(), circle(), pointed_interval(), q_c(), tree(4, {{1, 2}, {1, 3}, {1, 4}}), tree(2, {{1, 2}})};
    for (unsigned n = 2; n <= 6; ++n) items.push_back(razak(n));
    for (unsigned q = 2; q <= 5; ++q)
        for (unsigned p = 1; p < q; ++p) {
            items.push_back(dimension_drop(p, q));
            items.push_back(a_pq(p, q));
        }
    for (const auto& a : items) {
        CHECK(validate(a).ok);
        auto cert = tree_certificate(a);
        CHECK(std::holds_alternative<TreeCertificate>(cert) == k_theory(a).k1.is_trivial());
    }
}
