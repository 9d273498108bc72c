#include "nccw/complex.hpp"

#include <numeric>

namespace nccw {

namespace {

std::size_t nonzeros_in_row(const IntMatrix& z, std::size_t i) {
    std::size_t n = 0;
    for (std::size_t j = 0; j < z.cols(); ++j) n += z(i, j) != 0;
    return n;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
}

}  // namespace

ValidationReport validate(const NccwComplex& a) {
    auto fail = [](std::string msg, std::optional<std::size_t> row = std::nullopt) {
        return ValidationReport{false, row, std::move(msg)};
    };
    if (a.k() == 0) return fail("E has no summands (k = 0)");
    if (a.l() == 0) return fail("F has no summands (l = 0)");
    if (a.Z0.rows() != a.l() || a.Z0.cols() != a.k()) return fail("Z0 is not l x k");
    if (a.Z1.rows() != a.l() || a.Z1.cols() != a.k()) return fail("Z1 is not l x k");
    for (std::size_t j = 0; j < a.k(); ++j)
        if (a.e[j] <= 0) return fail("e[" + std::to_string(j) + "] is not positive");
    const IntVector r0 = a.Z0 * a.e, r1 = a.Z1 * a.e;
    for (std::size_t i = 0; i < a.l(); ++i) {
        if (a.f[i] <= 0) return fail("f[" + std::to_string(i) + "] is not positive", i);
        for (std::size_t j = 0; j < a.k(); ++j)
            if (a.Z0(i, j) < 0 || a.Z1(i, j) < 0) return fail("negative multiplicity in row " + std::to_string(i), i);
        if (r0[i] > a.f[i])
            return fail("row " + std::to_string(i) + ": (Z0 e) = " + r0[i].get_str() + " exceeds f = " + a.f[i].get_str(), i);
        if (r1[i] > a.f[i])
            return fail("row " + std::to_string(i) + ": (Z1 e) = " + r1[i].get_str() + " exceeds f = " + a.f[i].get_str(), i);
    }
    return {};
}

void require_valid(const NccwComplex& a) {
    ValidationReport r = validate(a);
    if (!r.ok) throw PreconditionError("invalid complex: " + r.message);
}

bool is_unital(const NccwComplex& a) { return a.Z0 * a.e == a.f && a.Z1 * a.e == a.f; }

KTheory k_theory(const NccwComplex& a) {
    require_valid(a);
    KernelCokernel kc = kernel_and_cokernel(a.difference());
    KTheory kt;
    kt.k0.free_rank = kc.kernel_basis.size();
    kt.k0_kernel_basis = std::move(kc.kernel_basis);
    kt.k1 = std::move(kc.cokernel);
    return kt;
}

IntVector minimal_f(const IntMatrix& z0, const IntMatrix& z1, const IntVector& e) {
    IntVector r0 = z0 * e, r1 = z1 * e, f(z0.rows());
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = std::max({r0[i], r1[i], Integer(1)});
    return f;
}

NccwComplex unitize(const NccwComplex& a) {
    require_valid(a);
    if (is_unital(a)) throw PreconditionError("unitize: complex is already unital");
    IntVector r0 = a.Z0 * a.e, r1 = a.Z1 * a.e, c0(a.l()), c1(a.l());
    for (std::size_t i = 0; i < a.l(); ++i) c0[i] = a.f[i] - r0[i], c1[i] = a.f[i] - r1[i];
    NccwComplex b{a.e, a.f, a.Z0.with_column(c0), a.Z1.with_column(c1)};
    b.e.emplace_back(1);
    return b;
}

NccwComplex remove_unit(const NccwComplex& a, std::size_t j) {
    require_valid(a);
    if (j >= a.k()) throw PreconditionError("remove_unit: summand index out of range");
    if (!is_unital(a)) throw PreconditionError("remove_unit: complex is not unital");
    if (a.e[j] != 1) throw PreconditionError("remove_unit: e[" + std::to_string(j) + "] != 1");
    if (a.k() == 1) throw PreconditionError("remove_unit: would leave no E-summands");
    NccwComplex b{a.e, a.f, a.Z0.without_column(j), a.Z1.without_column(j)};
    b.e.erase(b.e.begin() + static_cast<long>(j));
    return b;
}

NccwComplex hereditary_cut(const NccwComplex& a, std::size_t i, const Integer& fi) {
    require_valid(a);
    if (i >= a.l()) throw PreconditionError("hereditary_cut: block index out of range");
    const IntVector floor = minimal_f(a.Z0, a.Z1, a.e);
    if (fi < floor[i]) throw PreconditionError("hereditary_cut: " + fi.get_str() + " is below the fullness bound " + floor[i].get_str());
    if (fi > a.f[i]) throw PreconditionError("hereditary_cut: " + fi.get_str() + " exceeds f = " + a.f[i].get_str());
    NccwComplex b = a;
    b.f[i] = fi;
    return b;
}

NccwComplex stable_iso_replace(const NccwComplex& a, const IntVector& e, const IntVector& f) {
    require_valid(a);
    if (e.size() != a.k() || f.size() != a.l()) throw PreconditionError("stable_iso_replace: dimension vector length mismatch");
    NccwComplex b{e, f, a.Z0, a.Z1};
    ValidationReport r = validate(b);
    if (!r.ok) throw PreconditionError("stable_iso_replace: unattainable dimensions: " + r.message);
    return b;
}

NccwComplex permute_summands(const NccwComplex& a, const std::vector<std::size_t>& perm) {
    require_valid(a);
    if (perm.size() != a.k()) throw PreconditionError("permute_summands: permutation length mismatch");
    std::vector<bool> seen(a.k());
    for (std::size_t p : perm) {
        if (p >= a.k() || seen[p]) throw PreconditionError("permute_summands: not a permutation");
        seen[p] = true;
    }
    NccwComplex b{IntVector(a.k()), a.f, a.Z0.permute_columns(perm), a.Z1.permute_columns(perm)};
    for (std::size_t t = 0; t < a.k(); ++t) b.e[t] = a.e[perm[t]];
    return b;
}

NccwComplex direct_sum(const NccwComplex& a, const NccwComplex& b) {
    require_valid(a);
    require_valid(b);
    NccwComplex s;
    s.e = a.e;
    s.e.insert(s.e.end(), b.e.begin(), b.e.end());
    s.f = a.f;
    s.f.insert(s.f.end(), b.f.begin(), b.f.end());
    s.Z0 = IntMatrix(s.l(), s.k());
    s.Z1 = IntMatrix(s.l(), s.k());
    for (std::size_t i = 0; i < a.l(); ++i)
        for (std::size_t j = 0; j < a.k(); ++j) s.Z0(i, j) = a.Z0(i, j), s.Z1(i, j) = a.Z1(i, j);
    for (std::size_t i = 0; i < b.l(); ++i)
        for (std::size_t j = 0; j < b.k(); ++j)
            s.Z0(a.l() + i, a.k() + j) = b.Z0(i, j), s.Z1(a.l() + i, a.k() + j) = b.Z1(i, j);
    return s;
}

bool row_is_pure(const NccwComplex& a, std::size_t i) {
    return nonzeros_in_row(a.Z0, i) <= 1 && nonzeros_in_row(a.Z1, i) <= 1;
}

bool has_pure_multiplicities(const NccwComplex& a) {
    if (!is_unital(a)) return false;
    for (const auto& x : a.e)
        if (x != 1) return false;
    for (std::size_t i = 0; i < a.l(); ++i)
        if (!row_is_pure(a, i)) return false;
    return true;
}

bool is_commutative_pure(const NccwComplex& a) {
    if (!has_pure_multiplicities(a)) return false;
    for (std::size_t i = 0; i < a.l(); ++i)
        for (std::size_t j = 0; j < a.k(); ++j)
            if (a.Z0(i, j) > 1 || a.Z1(i, j) > 1) return false;
    return true;
}

SummandGraph to_graph(const NccwComplex& a) {
    require_valid(a);
    if (!is_commutative_pure(a)) throw PreconditionError("to_graph: needs pure multiplicities with all nonzero entries equal to 1");
    SummandGraph g;
    g.vertices = a.k();
    std::vector<std::size_t> parent(a.k());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    g.is_forest = true;
    for (std::size_t i = 0; i < a.l(); ++i) {
        // Unital with f_i >= 1, so each row has exactly one nonzero entry in each matrix.
        std::size_t u = 0, v = 0;
        while (a.Z0(i, u) == 0) ++u;
        while (a.Z1(i, v) == 0) ++v;
        g.edges.emplace_back(u, v);
        std::size_t ru = find_root(parent, u), rv = find_root(parent, v);
        if (ru == rv)
            g.is_forest = false;  // loops and parallel edges land here too
        else
            parent[ru] = rv;
    }
    return g;
}

}  // namespace nccw
