#include <doctest.h>

#include <numeric>

#include "nccw/gallery.hpp"
#include "nccw/moves.hpp"
#include "nccw/random_gen.hpp"

using namespace nccw;

namespace {

NccwComplex z23() { return {{2, 3}, {6}, IntMatrix::of({{3, 0}}), IntMatrix::of({{0, 2}})}; }

// Row i of Z0 and Z1 with the given row sums, in a block of size 10.
NccwComplex with_row_sums() { return {{1, 1}, {10}, IntMatrix::of({{1, 3}}), IntMatrix::of({{4, 3}})}; }

}  // namespace

TEST_CASE("validation") {
    CHECK(validate(interval()).ok);
    CHECK(validate(z23()).ok);
    ValidationReport bad = validate({{2}, {1}, IntMatrix::of({{1}}), IntMatrix::of({{1}})});
    CHECK_FALSE(bad.ok);
    CHECK(bad.row == 0u);
    CHECK_FALSE(validate({{1}, {0}, IntMatrix::of({{0}}), IntMatrix::of({{0}})}).ok);
    CHECK_FALSE(validate({{1}, {1}, IntMatrix::of({{-1}}), IntMatrix::of({{0}})}).ok);
    CHECK_FALSE(validate({{1, 1}, {1}, IntMatrix::of({{1}}), IntMatrix::of({{1}})}).ok);
    CHECK_FALSE(validate({{}, {}, IntMatrix(), IntMatrix()}).ok);
    CHECK_THROWS_AS(require_valid({{2}, {1}, IntMatrix::of({{1}}), IntMatrix::of({{1}})}), PreconditionError);
}

TEST_CASE("unitality") {
    CHECK(is_unital(z23()));
    for (unsigned n = 2; n <= 6; ++n) CHECK_FALSE(is_unital(razak(n)));
    CHECK_FALSE(is_unital(q_c()));
    CHECK(is_unital(interval()));
}

TEST_CASE("k-theory of named complexes") {
    KTheory kt = k_theory(circle());
    CHECK(kt.k0.to_string() == "Z");
    CHECK(kt.k1.to_string() == "Z");
    for (unsigned n = 2; n <= 10; ++n) {
        kt = k_theory(razak(n));
        CHECK(kt.k0.is_trivial());
        CHECK(kt.k1.is_trivial());
    }
    CHECK(k_theory(z23()).k1.is_trivial());
    CHECK(k_theory(dimension_drop(2, 4)).k1.to_string() == "Z/2");
    CHECK(k_theory(dimension_drop(3, 9)).k1.to_string() == "Z/3");
}

TEST_CASE("unitize") {
    CHECK(unitize(pointed_interval()) == NccwComplex{{1, 1}, {1}, IntMatrix::of({{0, 1}}), IntMatrix::of({{1, 0}})});
    const NccwComplex r = unitize(razak(5));
    CHECK(r.Z0 == IntMatrix::of({{4, 1}}));
    CHECK(r.Z1 == IntMatrix::of({{5, 0}}));
    const NccwComplex q = unitize(q_c());
    CHECK(q.Z0 == IntMatrix::of({{0, 0, 2}}));
    CHECK(q.Z1 == IntMatrix::of({{1, 1, 0}}));
    CHECK_THROWS_AS(unitize(interval()), PreconditionError);
}

TEST_CASE("remove_unit") {
    const NccwComplex c = remove_unit(interval(), 1);
    CHECK(c == NccwComplex{{1}, {1}, IntMatrix::of({{1}}), IntMatrix::of({{0}})});
    CHECK(unitize(c) == interval());
    const NccwComplex d = remove_unit(interval(), 0);
    CHECK(validate(d).ok);
    CHECK_FALSE(is_unital(d));
    for (unsigned n = 2; n <= 6; ++n) CHECK(remove_unit(unitize(razak(n)), 1) == razak(n));
    CHECK_THROWS_AS(remove_unit(razak(3), 0), PreconditionError);  // not unital
    CHECK_THROWS_AS(remove_unit(circle(), 0), PreconditionError);  // k would drop to 0
    CHECK_THROWS_AS(remove_unit(z23(), 0), PreconditionError);     // e_j != 1
}

TEST_CASE("hereditary_cut") {
    const NccwComplex a = with_row_sums();  // row sums 4 and 7
    CHECK(hereditary_cut(a, 0, 7).f == IntVector{7});
    CHECK_THROWS_AS(hereditary_cut(a, 0, 6), PreconditionError);
    CHECK_THROWS_AS(hereditary_cut(a, 0, 11), PreconditionError);
    CHECK(hereditary_cut(a, 0, 10) == a);
    const NccwComplex zero_row{{1}, {1, 5}, IntMatrix::of({{1}, {0}}), IntMatrix::of({{1}, {0}})};
    CHECK(hereditary_cut(zero_row, 1, 1).f == IntVector{1, 1});
    CHECK_THROWS_AS(hereditary_cut(zero_row, 1, 0), PreconditionError);
}

TEST_CASE("stable_iso_replace") {
    const NccwComplex a = stable_iso_replace(z23(), {1, 1}, {3});
    CHECK(a.Z0 == z23().Z0);
    CHECK(validate(a).ok);
    CHECK(stable_iso_replace(z23(), z23().e, z23().f) == z23());
    CHECK(validate(stable_iso_replace(razak(3), {2}, {6})).ok);
    CHECK_THROWS_AS(stable_iso_replace(razak(3), {2}, {5}), PreconditionError);
}

TEST_CASE("direct sums") {
    const NccwComplex s = direct_sum(interval(), interval());
    CHECK(s.k() == 4);
    CHECK(s.l() == 2);
    CHECK(s.Z0 == IntMatrix::of({{1, 0, 0, 0}, {0, 0, 1, 0}}));
    const KTheory a = k_theory(dimension_drop(2, 4)), b = k_theory(circle()), ab = k_theory(direct_sum(dimension_drop(2, 4), circle()));
    CHECK(ab.k1.free_rank == a.k1.free_rank + b.k1.free_rank);
    CHECK(ab.k1.invariant_factors == std::vector<Integer>{2});
    CHECK(ab.k0.free_rank == a.k0.free_rank + b.k0.free_rank);
    CHECK_THROWS_AS(direct_sum(interval(), NccwComplex{}), PreconditionError);
}

TEST_CASE("pure multiplicities") {
    CHECK(has_pure_multiplicities(interval()));
    CHECK_FALSE(has_pure_multiplicities(z23()));
    CHECK_FALSE(has_pure_multiplicities({{1, 1}, {2}, IntMatrix::of({{1, 1}}), IntMatrix::of({{2, 0}})}));
    CHECK(is_commutative_pure(tree(4, {{1, 2}, {1, 3}, {1, 4}})));
}

TEST_CASE("summand graphs") {
    SummandGraph g = to_graph(interval());
    CHECK(g.vertices == 2);
    CHECK(g.edges.size() == 1);
    CHECK(g.is_forest);
    g = to_graph(circle());
    CHECK(g.edges == std::vector<std::pair<std::size_t, std::size_t>>{{0, 0}});
    CHECK_FALSE(g.is_forest);
    CHECK(to_graph(tree(4, {{1, 2}, {1, 3}, {1, 4}})).is_forest);
    // Two blocks joining the same pair of summands form a cycle of length 2.
    const NccwComplex doubled{{1, 1}, {1, 1}, IntMatrix::of({{1, 0}, {1, 0}}), IntMatrix::of({{0, 1}, {0, 1}})};
    CHECK_FALSE(to_graph(doubled).is_forest);
    CHECK_THROWS_AS(to_graph(z23()), PreconditionError);
}

TEST_CASE("moves on random complexes keep K1 and shift K0 by the documented amounts") {
    Rng rng(77);
    for (int t = 0; t < 300; ++t) {
        const NccwComplex a = random_complex(rng);
        REQUIRE(validate(a).ok);
        const KTheory ka = k_theory(a);
        if (!is_unital(a)) {
            const NccwComplex u = unitize(a);
            const KTheory ku = k_theory(u);
            CHECK(ku.k1 == ka.k1);
            CHECK(ku.k0.free_rank == ka.k0.free_rank + 1);
            CHECK(remove_unit(u, u.k() - 1) == a);
        } else if (a.k() >= 2) {
            for (std::size_t j = 0; j < a.k(); ++j) {
                if (a.e[j] != 1) continue;
                const NccwComplex r = remove_unit(a, j);
                CHECK(k_theory(r).k1 == ka.k1);
                CHECK(k_theory(r).k0.free_rank + 1 == ka.k0.free_rank);
                // Unitizing again puts the removed summand back, now last.
                std::vector<std::size_t> perm(a.k());
                std::iota(perm.begin(), perm.end(), std::size_t{0});
                perm.erase(perm.begin() + static_cast<long>(j));
                perm.push_back(j);
                CHECK(unitize(r) == permute_summands(a, perm));
            }
        }
        const IntVector ones_e = ones(a.k());
        const NccwComplex s = stable_iso_replace(a, ones_e, minimal_f(a.Z0, a.Z1, ones_e));
        CHECK(k_theory(s).k1 == ka.k1);
        CHECK(k_theory(s).k0.free_rank == ka.k0.free_rank);
        const IntVector floor_f = minimal_f(a.Z0, a.Z1, a.e);
        const NccwComplex c = hereditary_cut(a, 0, floor_f[0]);
        CHECK(k_theory(c).k1 == ka.k1);
    }
}
