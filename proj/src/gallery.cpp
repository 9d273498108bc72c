#include "nccw/gallery.hpp"

#include <numeric>
#include <stdexcept>

namespace nccw {

namespace {

NccwComplex make(IntVector e, IntVector f, IntMatrix z0, IntMatrix z1) {
    NccwComplex a{std::move(e), std::move(f), std::move(z0), std::move(z1)};
    require_valid(a);
    return a;
}

void require_pair(unsigned p, unsigned q, bool coprime) {
    if (p == 0 || p >= q) throw PreconditionError("need 0 < p < q");
    if (coprime && std::gcd(p, q) != 1) throw PreconditionError("p and q must be coprime");
}

}  // namespace

NccwComplex interval() { return make({1, 1}, {1}, IntMatrix::of({{1, 0}}), IntMatrix::of({{0, 1}})); }

NccwComplex circle() { return make({1}, {1}, IntMatrix::of({{1}}), IntMatrix::of({{1}})); }

NccwComplex pointed_interval() { return make({1}, {1}, IntMatrix::of({{0}}), IntMatrix::of({{1}})); }

NccwComplex tree(std::size_t vertices, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    if (vertices == 0 || edges.empty()) throw PreconditionError("tree: needs at least one edge");
    std::vector<std::size_t> parent(vertices);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto root = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x];
        return x;
    };
    IntMatrix z0(edges.size(), vertices), z1(edges.size(), vertices);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        if (u < 1 || v < 1 || u > vertices || v > vertices) throw PreconditionError("tree: vertex out of range");
        std::size_t ru = root(u - 1), rv = root(v - 1);
        if (ru == rv) throw PreconditionError("tree: edge list contains a cycle");
        parent[ru] = rv;
        z0(i, u - 1) = 1;
        z1(i, v - 1) = 1;
    }
    return make(ones(vertices), ones(edges.size()), z0, z1);
}

NccwComplex q_c() { return make({1, 1}, {2}, IntMatrix::of({{0, 0}}), IntMatrix::of({{1, 1}})); }

NccwComplex razak(unsigned n) {
    if (n < 2) throw PreconditionError("razak: need n >= 2");
    return make({1}, {n}, IntMatrix::of({{long(n) - 1}}), IntMatrix::of({{long(n)}}));
}

NccwComplex dimension_drop(unsigned p, unsigned q) {
    require_pair(p, q, false);
    return make({p, q}, {p * q}, IntMatrix::of({{long(q), 0}}), IntMatrix::of({{0, long(p)}}));
}

NccwComplex a_pq(unsigned p, unsigned q) {
    require_pair(p, q, false);
    return make({1, 1}, {q}, IntMatrix::of({{0, long(p)}}), IntMatrix::of({{long(q), 0}}));
}

IntMatrix crossed_matrix(unsigned p, unsigned q) {
    require_pair(p, q, true);
    IntMatrix a(q, q);
    for (unsigned i = 0; i + 1 < q; ++i) a(i, i + 1) = 1;
    a(q - 1, 0) += 1;
    a(q - 1, q - p) += 1;
    return a;
}

CrossedBlockReport crossed_block(unsigned p, unsigned q) {
    CrossedBlockReport r;
    r.p = p;
    r.q = q;
    r.A = crossed_matrix(p, q);
    r.charpoly = char_poly(r.A);
    Polynomial expected;
    expected.coeffs.assign(q + 1, Integer(0));
    expected.coeffs[q] = 1;
    expected.coeffs[q - p] -= 1;
    expected.coeffs[0] -= 1;
    if (!(r.charpoly == expected)) throw std::logic_error("crossed_block: characteristic polynomial is " + r.charpoly.to_string());
    const IntMatrix id = IntMatrix::identity(q);
    r.det_I_minus_A = determinant(id - r.A);
    r.det_minus_A = determinant(IntMatrix(q, q) - r.A);
    r.Z0 = r.A.power(q + 1);
    r.Z1 = r.A.power(q);
    r.k1_trivial = is_surjective(r.Z0 - r.Z1);
    return r;
}

NccwComplex crossed_nccw(unsigned p, unsigned q) {
    IntMatrix a = crossed_matrix(p, q);
    IntMatrix z0 = a.power(q + 1), z1 = a.power(q);
    IntVector e = ones(q);
    return make(e, minimal_f(z0, z1, e), z0, z1);
}

}  // namespace nccw
