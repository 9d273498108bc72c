#include <doctest.h>

#include "nccw/cu_tilde.hpp"
#include "nccw/gallery.hpp"
#include "nccw/random_gen.hpp"

using namespace nccw;

namespace {

Rational q(long a, long b) {
    Rational r(a, b);
    r.canonicalize();
    return r;
}

CuElement elem(const AmbientPtr& amb, std::vector<ExtNat> n, std::vector<StepFn> F) { return CuElement::make(amb, std::move(n), std::move(F)); }

// g_j = 1 on [1/j, 1), 0 on (0, 1/j).
CuElement cone_ramp(const AmbientPtr& cone, long j) { return elem(cone, {0}, {StepFn::make({q(1, j)}, {0, 1}, {0})}); }

}  // namespace

TEST_CASE("order and addition") {
    const AmbientPtr iv = CuAmbient::of(interval());
    const CuElement one = elem(iv, {1, 1}, {StepFn::constant(1)}), two = elem(iv, {1, 1}, {StepFn::constant(2)});
    CHECK(leq(one, two));
    CHECK_FALSE(leq(two, one));
    const CuElement zero = CuElement::zero(iv);
    CHECK(add(one, zero) == one);
    CHECK(add(one, one) == elem(iv, {2, 2}, {StepFn::constant(2)}));
    CHECK(sup_increasing({one, one, one}) == one);
    CHECK_THROWS(sup_increasing({two, one}));
    CHECK_THROWS_AS(elem(iv, {2, 0}, {StepFn::constant(1)}), std::invalid_argument);

    const AmbientPtr cone = CuAmbient::of(pointed_interval());
    CHECK(sup_increasing({cone_ramp(cone, 2), cone_ramp(cone, 3), cone_ramp(cone, 4)}) == cone_ramp(cone, 4));
    CHECK_THROWS_AS(leq(one, CuElement::zero(cone)), AmbientMismatch);
}

TEST_CASE("compact containment: the documented cases") {
    const AmbientPtr iv = CuAmbient::of(interval());
    const AmbientPtr cone = CuAmbient::of(pointed_interval());
    const CuElement unit = unit_class(interval());
    const CuElement cone_one = elem(cone, {0}, {StepFn::constant(1)});
    const CuElement with_inf = elem(iv, {1, 1}, {StepFn::make({q(1, 2)}, {1, ExtNat::inf()}, {1})});
    const CuElement big = elem(iv, {ExtNat::inf(), ExtNat::inf()}, {StepFn::constant(ExtNat::inf())});

    CHECK(compactly_contained(unit, unit));
    CHECK_FALSE(compactly_contained(cone_one, cone_one));
    CHECK_FALSE(compactly_contained(with_inf, big));
    CHECK(compactly_contained_oracle(unit, unit, 8, 4));
    CHECK_FALSE(compactly_contained_oracle(cone_one, cone_one, 8, 4));
    CHECK_FALSE(compactly_contained_oracle(with_inf, big, 8, 4));

    CHECK(is_compact(unit));
    CHECK_FALSE(is_compact(cone_one));
    CHECK(is_compact(CuElement::zero(iv)));
    CHECK(is_compact(CuElement::zero(cone)));

    // A dip at 1/2 in y must be avoided by x on a whole neighbourhood.
    const CuElement dip = elem(iv, {1, 1}, {StepFn::make({q(1, 2)}, {2, 2}, {1})});
    const CuElement bump = elem(iv, {0, 0}, {StepFn::make({q(1, 4), q(3, 4)}, {0, 2, 0}, {0, 0})});
    CHECK_FALSE(compactly_contained(bump, dip));
    CHECK_FALSE(compactly_contained_oracle(bump, dip, 8, 4));
    CHECK(compactly_contained(bump, elem(iv, {0, 0}, {StepFn::constant(2)})));
    CHECK(compactly_contained_oracle(bump, elem(iv, {0, 0}, {StepFn::constant(2)}), 8, 4));
    // Endpoint slack: F_x(0+) must fit under Z0 n_y.
    const CuElement flat = elem(iv, {0, 0}, {StepFn::constant(1)});
    CHECK_FALSE(compactly_contained(flat, elem(iv, {0, 0}, {StepFn::constant(2)})));
    CHECK_FALSE(compactly_contained_oracle(flat, elem(iv, {0, 0}, {StepFn::constant(2)}), 8, 4));
    CHECK(compactly_contained(flat, elem(iv, {1, 1}, {StepFn::constant(2)})));
    CHECK_THROWS(compactly_contained_oracle(bump, dip, 3, 4));  // 1/4 is off the 1/3 grid
}

TEST_CASE("candidate agrees with the oracle on random pairs") {
    Rng rng(31);
    for (const AmbientPtr& amb : {CuAmbient::of(interval()), CuAmbient::of(pointed_interval()), CuAmbient::of(circle())}) {
        for (int t = 0; t < 300; ++t) {
            const CuElement y = random_element(amb, rng, 4, 3, 10);
            const CuElement x = t % 2 ? random_element(amb, rng, 4, 3) : random_element(amb, rng, 4, 1);
            const bool cand = compactly_contained(x, y);
            const bool orc = compactly_contained_oracle(x, y, 4, 3);
            CHECK((!cand || orc));
            if (orc) CHECK(leq(x, y));
        }
    }
}

TEST_CASE("compact decomposition") {
    const AmbientPtr iv = CuAmbient::of(interval());
    const CuElement unit = unit_class(interval());
    const CuElement x = elem(iv, {1, 1}, {StepFn::constant(2)});
    auto d = compact_decomposition(CuElement::zero(iv), x);
    REQUIRE(std::holds_alternative<CuElement>(d));
    CHECK(std::get<CuElement>(d) == x);
    d = compact_decomposition(unit, x);
    REQUIRE(std::holds_alternative<CuElement>(d));
    CHECK(std::get<CuElement>(d) == elem(iv, {0, 0}, {StepFn::constant(1)}));
    CHECK(add(unit, std::get<CuElement>(d)) == x);
    CHECK(std::holds_alternative<NotDominated>(compact_decomposition(unit, elem(iv, {1, 0}, {StepFn::constant(1)}))));
    CHECK_THROWS_AS(compact_decomposition(elem(iv, {0, 0}, {StepFn::constant(1)}), x), PreconditionError);

    Rng rng(32);
    for (int t = 0; t < 300; ++t) {
        const CuElement e = random_compact(iv, rng, 3);
        const CuElement y = add(e, random_element(iv, rng, 8, 4, 10));
        auto r = compact_decomposition(e, y);
        REQUIRE(std::holds_alternative<CuElement>(r));
        CHECK(add(e, std::get<CuElement>(r)) == y);
    }
}

TEST_CASE("semigroup laws on random triples") {
    Rng rng(33);
    const AmbientPtr amb = CuAmbient::of(tree(3, {{1, 2}, {2, 3}}));
    for (int t = 0; t < 300; ++t) {
        const CuElement x = random_element(amb, rng, 6, 3, 10), y = random_element(amb, rng, 6, 3, 10), z = random_element(amb, rng, 6, 3, 10);
        CHECK(leq(x, x));
        CHECK(add(x, y) == add(y, x));
        CHECK(add(add(x, y), z) == add(x, add(y, z)));
        CHECK(leq(x, add(x, y)));
        if (leq(x, y) && leq(y, x)) CHECK(x == y);
        if (leq(x, y)) CHECK(leq(add(x, z), add(y, z)));
        const CuElement s1 = sup_increasing({x, add(x, y)}), s2 = sup_increasing({z, add(z, z)});
        CHECK(add(s1, s2) == sup_increasing({add(x, z), add(add(x, y), add(z, z))}));
    }
}

TEST_CASE("rapidly increasing chains") {
    Rng rng(34);
    for (const AmbientPtr& amb : {CuAmbient::of(interval()), CuAmbient::of(pointed_interval())}) {
        for (int t = 0; t < 200; ++t) {
            const CuElement x = random_element(amb, rng, 8, 4);
            const auto chain = rapid_chain(x, 5);
            REQUIRE(chain.size() == 5);
            CHECK(chain.back() == x);
            for (std::size_t s = 0; s + 1 < chain.size(); ++s) {
                CHECK(compactly_contained(chain[s], chain[s + 1]));
                CHECK(leq(chain[s], chain[s + 1]));
            }
        }
    }
    const AmbientPtr iv = CuAmbient::of(interval());
    CHECK_THROWS(rapid_chain(elem(iv, {0, 0}, {StepFn::constant(ExtNat::inf())}), 3));
}

TEST_CASE("floor division and the divisibility report") {
    const AmbientPtr circ = CuAmbient::of(circle());
    auto constant = [&](std::uint64_t v) { return elem(circ, {v}, {StepFn::constant(v)}); };
    CHECK(floor_div(constant(7), 1) == constant(7));
    CHECK(floor_div(constant(7), 2) == constant(3));
    DivisibilityReport rep = divisibility_check(constant(7), 2);
    CHECK(rep.lower_ok);
    CHECK(rep.upper_ok);

    rep = divisibility_check(constant(5), 3);
    CHECK(rep.lower_ok);
    CHECK_FALSE(rep.upper_ok);
    CHECK(rep.min_rank == 5u);

    for (std::uint64_t d = 1; d <= 8; ++d) {
        rep = divisibility_check(constant(d * (d + 1)), d);
        CHECK(rep.lower_ok);
        CHECK(rep.upper_ok);
        // Every rank from d(d - 1) upwards divides with the d + 1 slack.
        for (std::uint64_t m = d * (d - 1); m < d * (d - 1) + 3 * d; ++m)
            if (m > 0) CHECK(divisibility_check(constant(m), d).upper_ok);
    }
    CHECK(divisibility_check(elem(circ, {ExtNat::inf()}, {StepFn::constant(ExtNat::inf())}), 3).min_rank == std::nullopt);
    CHECK_THROWS(floor_div(constant(3), 0));
}
