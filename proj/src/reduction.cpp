#include "nccw/reduction.hpp"

#include <algorithm>
#include <numeric>

#include "nccw/gallery.hpp"

namespace nccw {

namespace {

std::size_t nonzeros(const IntVector& row) {
    return static_cast<std::size_t>(std::count_if(row.begin(), row.end(), [](const Integer& x) { return x != 0; }));
}

// Indices of the two smallest nonzero entries, lowest index first on ties.
std::pair<std::size_t, std::size_t> two_smallest(const IntVector& row) {
    std::vector<std::size_t> idx;
    for (std::size_t j = 0; j < row.size(); ++j)
        if (row[j] != 0) idx.push_back(j);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return row[x] < row[y]; });
    return {idx[0], idx[1]};
}

const IntMatrix& side(const NccwComplex& a, bool z0) { return z0 ? a.Z0 : a.Z1; }

void cut_to_floor(TraceBuilder& tb, std::size_t r) {
    const Integer floor = minimal_f(tb.current().Z0, tb.current().Z1, tb.current().e)[r];
    if (floor < tb.current().f[r]) tb.cut(r, floor);
}

// Doubles e_c while keeping every f_i at least as large as the new row sums; f_r itself must not grow.
void double_summand(TraceBuilder& tb, std::size_t c, std::size_t r) {
    IntVector e = tb.current().e;
    e[c] = 2;
    IntVector need = minimal_f(tb.current().Z0, tb.current().Z1, e);
    IntVector f = tb.current().f;
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = std::max(f[i], need[i]);
    if (f[r] != tb.current().f[r]) throw std::logic_error("case II: doubling summand " + std::to_string(c) + " would enlarge block " + std::to_string(r));
    tb.stable_iso(e, f);
}

void case_two(TraceBuilder& tb, std::size_t r, bool m_is_z0, std::size_t a, std::size_t b) {
    tb.remove_unit(b);
    if (b < a) --a;
    double_summand(tb, a, r);
    if (!is_unital(tb.current())) tb.unitize();

    const IntVector nrow = side(tb.current(), !m_is_z0).row(r);
    if (nonzeros(nrow) == 1) {
        const std::size_t c = static_cast<std::size_t>(std::find_if(nrow.begin(), nrow.end(), [](const Integer& x) { return x != 0; }) - nrow.begin());
        tb.remove_unit(c);
    } else {
        auto [c, d] = two_smallest(nrow);
        if (side(tb.current(), m_is_z0)(r, c) != 0) {
            tb.remove_unit(c);
            cut_to_floor(tb, r);
        } else {
            tb.remove_unit(d);
            if (d < c) --c;
            double_summand(tb, c, r);
        }
    }
    tb.stable_iso_minimal(ones(tb.current().k()));
}

}  // namespace

std::string RowPurityViolation::to_string() const {
    return "row " + std::to_string(broken_row) + " lost purity while row " + std::to_string(processing_row) + " was processed";
}

const char* route_name(Route r) { return r == Route::CaseAnalysis ? "case_analysis" : "lattice_fallback"; }

MoveTrace reduce_by_case_analysis(const NccwComplex& input) {
    require_valid(input);
    TraceBuilder tb(input);
    tb.normalize();
    for (std::size_t r = 0; r < tb.current().l(); ++r) {
        while (!row_is_pure(tb.current(), r)) {
            const NccwComplex& cur = tb.current();
            const Integer before = cur.f[r];
            const bool m_is_z0 = nonzeros(cur.Z0.row(r)) >= 2;
            auto [a, b] = two_smallest(side(cur, m_is_z0).row(r));
            if (side(cur, !m_is_z0)(r, a) != 0) {
                tb.remove_unit(a);
                cut_to_floor(tb, r);
            } else {
                case_two(tb, r, m_is_z0, a, b);
            }
            tb.normalize();
            if (!(tb.current().f[r] < before)) throw std::logic_error("case analysis: f_" + std::to_string(r) + " did not decrease");
            for (std::size_t i = 0; i < r; ++i)
                if (!row_is_pure(tb.current(), i)) throw RowPurityError({i, r, tb.trace()});
        }
    }
    if (!has_pure_multiplicities(tb.current())) throw std::logic_error("case analysis ended impure");
    return tb.take();
}

Reduction reduce_to_pure_multiplicities(const NccwComplex& a) {
    require_valid(a);
    try {
        MoveTrace t = reduce_by_case_analysis(a);
        NccwComplex b = t.final();
        return {std::move(b), std::move(t), Route::CaseAnalysis, std::nullopt};
    } catch (const RowPurityError& e) {
        TraceBuilder tb(a);
        try {
            lattice_route(tb);
        } catch (const PureFormUnreachable& u) {
            throw PureFormUnreachable(e.violation.to_string() + "; " + u.what());
        }
        MoveTrace t = tb.take();
        NccwComplex b = t.final();
        return {std::move(b), std::move(t), Route::LatticeFallback, e.violation};
    }
}

std::variant<TreeCertificate, NotK1Trivial> tree_certificate(const NccwComplex& a) {
    KTheory kt = k_theory(a);
    if (!kt.k1.is_trivial()) return NotK1Trivial{kt.k1};
    Reduction red = reduce_to_pure_multiplicities(a);
    if (!is_commutative_pure(red.result)) throw std::logic_error("tree_certificate: K1 = 0 but a multiplicity exceeds 1");
    SummandGraph g = to_graph(red.result);
    if (!g.is_forest) throw std::logic_error("tree_certificate: K1 = 0 but the graph has a cycle");
    return TreeCertificate{std::move(g), std::move(red.trace), red.route};
}

EuclideanChain euclidean_chain(unsigned p, unsigned q) {
    if (p == 0 || p >= q) throw PreconditionError("euclidean_chain: need 0 < p < q");
    if (std::gcd(p, q) != 1) throw PreconditionError("euclidean_chain: p and q must be coprime");
    EuclideanChain out;
    TraceBuilder tb(a_pq(p, q));
    out.pairs.emplace_back(p, q);
    while (p > 1) {
        if (2 * p > q) {
            // A_{p,q} and A_{q-p,q} share a unitization.
            tb.unitize();
            tb.remove_unit(1);
            p = q - p;
        }
        // A_{p,q} sits fully in A' (lambda enlarged to M_2); A'~ is also the unitization of A''.
        tb.stable_iso(IntVector{1, 2}, IntVector{q});
        tb.unitize();
        tb.remove_unit(0);
        tb.stable_iso(IntVector{1, 1}, IntVector{q - p});
        tb.unitize();
        tb.remove_unit(1);
        tb.permute({1, 0});
        q = q - p;
        if (!(tb.current() == a_pq(p, q))) throw std::logic_error("euclidean_chain: step did not land on A_{p,q}");
        out.pairs.emplace_back(p, q);
    }
    out.trace = tb.take();
    return out;
}

}  // namespace nccw
