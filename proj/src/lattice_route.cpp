#include "nccw/lattice_route.hpp"

#include <functional>

namespace nccw {

namespace {

IntVector column_of(const NccwComplex& a, std::size_t j) {
    IntVector c(a.l());
    for (std::size_t i = 0; i < a.l(); ++i) c[i] = a.Z0(i, j) - a.Z1(i, j);
    return c;
}

bool all_zero(const IntVector& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

IntVector plus_one(const IntVector& g) {
    IntVector e(g.size());
    for (std::size_t t = 0; t < g.size(); ++t) e[t] = g[t] + 1;
    return e;
}

// Replaces column a by a - D g and appends D g, for g >= 0 with g[a] = 0.
void split(TraceBuilder& tb, std::size_t a, IntVector g) {
    tb.remove_unit(a);
    g.erase(g.begin() + static_cast<long>(a));
    tb.stable_iso_minimal(plus_one(g));
    if (is_unital(tb.current())) throw std::logic_error("split: remaining column vanished");
    tb.unitize();
    tb.stable_iso_minimal(ones(tb.current().k()));
    if (is_unital(tb.current())) throw std::logic_error("split: split-off column vanished");
    tb.unitize();
    const std::size_t k = tb.current().k();
    std::vector<std::size_t> perm;
    for (std::size_t t = 0; t + 2 < k; ++t) perm.push_back(t);
    perm.insert(perm.begin() + static_cast<long>(a), k - 2);
    perm.push_back(k - 1);
    bool identity = true;
    for (std::size_t t = 0; t < k; ++t) identity = identity && perm[t] == t;
    if (!identity) tb.permute(perm);
}

// Adds 1 to both Z0 and Z1 at (r, c).
void pad(TraceBuilder& tb, std::size_t r, std::size_t c) {
    tb.remove_unit(c);
    IntVector f = tb.current().f;
    f[r] += 1;
    tb.stable_iso(tb.current().e, f);
    tb.unitize();
    tb.move_last_to(c);
}

// Deletes column w and adds it into column u, where D g = column w with g >= 0, g[w] = g[u] = 0.
// Returns u's new index, or nothing when the merged column vanished.
std::optional<std::size_t> merge(TraceBuilder& tb, std::size_t w, std::size_t u, IntVector g) {
    for (std::size_t r = 0; r < tb.current().l(); ++r) {
        bool empty = true;
        for (std::size_t j = 0; j < tb.current().k() && empty; ++j)
            if (j != w && (tb.current().Z0(r, j) != 0 || tb.current().Z1(r, j) != 0)) empty = false;
        if (empty) pad(tb, r, u);
    }
    tb.remove_unit(w);
    g.erase(g.begin() + static_cast<long>(w));
    if (w < u) --u;
    tb.stable_iso_minimal(plus_one(g));
    if (!is_unital(tb.current())) throw std::logic_error("merge: weighted complex is not unital");
    tb.remove_unit(u);
    tb.stable_iso_minimal(ones(tb.current().k()));
    if (is_unital(tb.current())) return std::nullopt;
    tb.unitize();
    tb.move_last_to(u);
    return u;
}

// x >= 0 with cols * x = target, using a strictly positive relation cols * rel = 0.
IntVector nonneg_combination(const std::vector<IntVector>& cols, const IntVector& rel, const IntVector& target) {
    IntMatrix m = IntMatrix::from_columns(target.size(), cols);
    if (!all_zero(m * rel)) throw std::logic_error("nonneg_combination: relation does not hold");
    auto x = solve_integer(m, target);
    if (!x) throw std::logic_error("nonneg_combination: target outside the lattice");
    Integer shift = 0;
    for (std::size_t t = 0; t < x->size(); ++t)
        if ((*x)[t] < 0) {
            Integer need;
            mpz_cdiv_q(need.get_mpz_t(), Integer(-(*x)[t]).get_mpz_t(), rel[t].get_mpz_t());
            shift = std::max(shift, need);
        }
    for (std::size_t t = 0; t < x->size(); ++t) (*x)[t] += shift * rel[t];
    return *x;
}

IntVector coefficients_on(std::size_t k, const std::vector<std::size_t>& idx, const IntVector& x) {
    IntVector g(k);
    for (std::size_t t = 0; t < idx.size(); ++t) g[idx[t]] = x[t];
    return g;
}

}  // namespace

std::vector<IntVector> column_lattice(const NccwComplex& a) { return lattice_hnf(a.difference()); }

PureTarget pure_target(const IntMatrix& d, std::size_t max_graph_edges) {
    const std::size_t l = d.rows();
    IntVector m(l);
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < l; ++i) {
        m[i] = row_gcd(d, i);
        if (m[i] != 0) support.push_back(i);
    }
    PureTarget out;
    if (support.empty()) {
        out.columns = std::vector<IntVector>{};
        return out;
    }

    std::vector<IntVector> diag;
    for (std::size_t i : support) {
        IntVector c(l);
        c[i] = m[i];
        diag.push_back(c);
    }
    if (same_lattice(d, IntMatrix::from_columns(l, diag))) {
        // Weighted star: one centre joined to a leaf through every non-loop block.
        IntVector centre(l);
        std::vector<IntVector> cols;
        for (std::size_t i : support) centre[i] = m[i];
        cols.push_back(centre);
        for (auto c : diag) {
            for (auto& x : c) x = -x;
            cols.push_back(c);
        }
        out.columns = cols;
        return out;
    }
    if (support.size() > max_graph_edges) {
        out.exhaustive = false;
        out.reason = "lattice is not diagonal and the graph search over " + std::to_string(support.size()) + " blocks was skipped";
        return out;
    }

    // Enumerate multigraphs without loops, one edge per supported block, vertices labelled in
    // order of first appearance; block i contributes +m_i at its source and -m_i at its target.
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::optional<std::vector<IntVector>> found;
    std::function<void(std::size_t, std::size_t)> search = [&](std::size_t t, std::size_t nv) {
        if (found) return;
        if (t == support.size()) {
            std::vector<IntVector> cols(nv, IntVector(l));
            for (std::size_t s = 0; s < edges.size(); ++s) {
                cols[edges[s].first][support[s]] += m[support[s]];
                cols[edges[s].second][support[s]] -= m[support[s]];
            }
            if (same_lattice(IntMatrix::from_columns(l, cols), d)) found = cols;
            return;
        }
        for (std::size_t x = 0; x <= nv; ++x) {
            const std::size_t ymax = x == nv ? nv + 1 : nv;
            for (std::size_t y = 0; y <= ymax; ++y) {
                if (y == x) continue;
                edges.emplace_back(x, y);
                search(t + 1, std::max({nv, x + 1, y + 1}));
                edges.pop_back();
            }
        }
    };
    search(0, 0);
    if (found)
        out.columns = found;
    else
        out.reason = "no graph on the " + std::to_string(support.size()) + " non-loop blocks has the column lattice of Z0 - Z1";
    return out;
}

void case_one_cleanup(TraceBuilder& tb) {
    for (std::size_t guard = 0;; ++guard) {
        if (guard > 10000) throw std::logic_error("case_one_cleanup: no progress");
        const NccwComplex& a = tb.current();
        std::optional<std::pair<std::size_t, std::size_t>> hit;
        for (std::size_t r = 0; r < a.l() && !hit; ++r) {
            if (row_is_pure(a, r)) continue;
            for (std::size_t c = 0; c < a.k(); ++c)
                if (a.Z0(r, c) != 0 && a.Z1(r, c) != 0) {
                    hit = std::make_pair(r, c);
                    break;
                }
            if (!hit) throw std::logic_error("case_one_cleanup: impure row " + std::to_string(r) + " has no shared column");
        }
        if (!hit) return;
        auto [r, c] = *hit;
        tb.remove_unit(c);
        const Integer floor = minimal_f(tb.current().Z0, tb.current().Z1, tb.current().e)[r];
        if (floor < tb.current().f[r]) tb.cut(r, floor);
        if (!is_unital(tb.current())) {
            tb.unitize();
            tb.move_last_to(c);
        }
    }
}

void lattice_route(TraceBuilder& tb) {
    tb.normalize();
    const IntMatrix d0 = tb.current().difference();
    if (d0.is_zero()) {
        case_one_cleanup(tb);
        return;
    }
    PureTarget target = pure_target(d0);
    if (!target.columns) throw PureFormUnreachable(target.reason);
    std::vector<IntVector> P = *target.columns;

    // Step 1: double a nonzero column a; the new last column b is -a.
    std::size_t a = 0;
    while (d0.column_is_zero(a)) ++a;
    {
        IntVector g = ones(tb.current().k());
        g[a] = 0;
        split(tb, a, g);
    }
    const std::size_t b = tb.current().k() - 1;
    std::vector<std::size_t> reservoir;
    IntVector rel;
    for (std::size_t j = 0; j < b; ++j) {
        reservoir.push_back(j);
        rel.emplace_back(j == a ? 1 : 2);
    }

    // Step 2: peel the target columns off b in an order whose remainders never vanish.
    const IntVector bcol = column_of(tb.current(), b);
    std::vector<std::size_t> order;
    std::vector<bool> used(P.size());
    std::function<bool(const IntVector&)> arrange = [&](const IntVector& rest) {
        if (order.size() == P.size()) return true;
        for (std::size_t t = 0; t < P.size(); ++t) {
            if (used[t]) continue;
            IntVector next = rest;
            for (std::size_t i = 0; i < next.size(); ++i) next[i] -= P[t][i];
            if (all_zero(next)) continue;
            used[t] = true;
            order.push_back(t);
            if (arrange(next)) return true;
            order.pop_back();
            used[t] = false;
        }
        return false;
    };
    if (!arrange(bcol)) throw std::logic_error("lattice_route: no admissible splitting order");
    for (std::size_t t : order) {
        std::vector<IntVector> cols;
        for (std::size_t j : reservoir) cols.push_back(column_of(tb.current(), j));
        IntVector x = nonneg_combination(cols, rel, P[t]);
        split(tb, b, coefficients_on(tb.current().k(), reservoir, x));
    }

    // Step 3: merge the zero-sum block {0..b} into one accumulator, drawing on the target columns.
    std::vector<std::size_t> targets, pending;
    for (std::size_t j = b + 1; j < tb.current().k(); ++j) targets.push_back(j);
    for (std::size_t j = 0; j <= b; ++j) pending.push_back(j);
    bool have_acc = false;
    std::size_t acc = 0;
    while (!pending.empty()) {
        const std::size_t w = pending.back();
        pending.pop_back();
        if (!have_acc) {
            have_acc = true;
            acc = w;
            continue;
        }
        std::vector<IntVector> cols;
        for (std::size_t j : targets) cols.push_back(column_of(tb.current(), j));
        IntVector x = nonneg_combination(cols, ones(cols.size()), column_of(tb.current(), w));
        std::optional<std::size_t> merged = merge(tb, w, acc, coefficients_on(tb.current().k(), targets, x));
        for (auto& j : targets) --j;
        for (auto& j : pending)
            if (j > w) --j;
        if (merged) {
            acc = *merged;
        } else {
            const std::size_t gone = acc - (w < acc ? 1 : 0);
            for (auto& j : targets) --j;
            for (auto& j : pending)
                if (j > gone) --j;
            have_acc = false;
        }
    }
    if (have_acc) {
        if (!all_zero(column_of(tb.current(), acc))) throw std::logic_error("lattice_route: accumulator is not zero");
        tb.remove_unit(acc);
        const IntVector floor = minimal_f(tb.current().Z0, tb.current().Z1, tb.current().e);
        for (std::size_t r = 0; r < tb.current().l(); ++r)
            if (floor[r] < tb.current().f[r]) tb.cut(r, floor[r]);
        if (!is_unital(tb.current())) tb.unitize();
    }

    case_one_cleanup(tb);
    if (!has_pure_multiplicities(tb.current())) throw std::logic_error("lattice_route: result is not pure");
}

}  // namespace nccw
