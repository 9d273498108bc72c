#include "nccw/cuntz.hpp"

#include <algorithm>

namespace nccw {

namespace {

void require_same(const CuElement& x, const CuElement& y) {
    if (!same_ambient(x.ambient(), y.ambient())) throw AmbientMismatch();
}

std::vector<ExtNat> combine(const std::vector<ExtNat>& a, const std::vector<ExtNat>& b, ExtNat (*op)(const ExtNat&, const ExtNat&)) {
    std::vector<ExtNat> out(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) out[j] = op(a[j], b[j]);
    return out;
}

ExtNat plus(const ExtNat& a, const ExtNat& b) { return a + b; }
ExtNat maximum(const ExtNat& a, const ExtNat& b) { return max(a, b); }

// Value v on the closed window [lo, hi] within (0,1), infinity elsewhere; lo = 0 or hi = 1 mean open ends.
StepFn window(const Rational& lo, const Rational& hi, ExtNat v) {
    std::vector<Rational> br;
    std::vector<ExtNat> iv, pv;
    if (lo > 0) {
        br.push_back(lo);
        iv.push_back(ExtNat::inf());
        pv.push_back(v);
    }
    iv.push_back(v);
    if (hi < 1) {
        br.push_back(hi);
        pv.push_back(v);
        iv.push_back(ExtNat::inf());
    }
    return StepFn::make(br, iv, pv);
}

StepFn lower_on(const StepFn& f, const StepFn& w) {
    return pointwise(f, w, [](ExtNat a, ExtNat b) { return min(a, b); });
}

std::vector<ExtNat> all_values(const CuElement& x) {
    std::vector<ExtNat> v = x.n();
    for (const auto& f : x.F()) {
        v.insert(v.end(), f.interval_values().begin(), f.interval_values().end());
        v.insert(v.end(), f.point_values().begin(), f.point_values().end());
    }
    return v;
}

CuElement with_block(const CuElement& y, std::size_t i, StepFn f) {
    std::vector<StepFn> F = y.F();
    F[i] = std::move(f);
    return CuElement::make(y.ambient(), y.n(), std::move(F));
}

}  // namespace

std::shared_ptr<const CuAmbient> CuAmbient::of(const NccwComplex& a) {
    require_valid(a);
    auto amb = std::make_shared<CuAmbient>();
    amb->complex_ = a;
    for (const IntMatrix* z : {&a.Z0, &a.Z1}) {
        auto& dst = z == &a.Z0 ? amb->z0_ : amb->z1_;
        dst.assign(a.l(), std::vector<std::uint64_t>(a.k()));
        for (std::size_t i = 0; i < a.l(); ++i)
            for (std::size_t j = 0; j < a.k(); ++j) dst[i][j] = to_u64((*z)(i, j));
    }
    return amb;
}

ExtNat CuAmbient::apply(const std::vector<std::vector<std::uint64_t>>& z, std::size_t i, const std::vector<ExtNat>& n) {
    ExtNat s(0);
    for (std::size_t j = 0; j < n.size(); ++j) s = s + z[i][j] * n[j];
    return s;
}

std::uint64_t CuAmbient::max_row_sum() const {
    std::uint64_t m = 1;
    for (const auto* z : {&z0_, &z1_})
        for (const auto& row : *z) {
            std::uint64_t s = 0;
            for (auto x : row) s += x;
            m = std::max(m, s);
        }
    return m;
}

bool same_ambient(const AmbientPtr& a, const AmbientPtr& b) {
    return a == b || (a && b && a->complex() == b->complex());
}

CuElement CuElement::make(AmbientPtr ambient, std::vector<ExtNat> n, std::vector<StepFn> F) {
    if (!ambient) throw std::invalid_argument("CuElement: missing ambient");
    if (n.size() != ambient->k() || F.size() != ambient->l()) throw std::invalid_argument("CuElement: shape does not match the ambient");
    for (std::size_t i = 0; i < F.size(); ++i) {
        F[i] = F[i].canonical();
        if (!(ambient->left_rank(i, n) <= F[i].left_limit()))
            throw std::invalid_argument("CuElement: (Z0 n)_" + std::to_string(i) + " exceeds F(0+)");
        if (!(ambient->right_rank(i, n) <= F[i].right_limit()))
            throw std::invalid_argument("CuElement: (Z1 n)_" + std::to_string(i) + " exceeds F(1-)");
    }
    CuElement x;
    x.ambient_ = std::move(ambient);
    x.n_ = std::move(n);
    x.F_ = std::move(F);
    return x;
}

CuElement CuElement::zero(AmbientPtr ambient) {
    const std::size_t k = ambient->k(), l = ambient->l();
    return make(std::move(ambient), std::vector<ExtNat>(k), std::vector<StepFn>(l));
}

bool leq(const CuElement& x, const CuElement& y) {
    require_same(x, y);
    for (std::size_t j = 0; j < x.n().size(); ++j)
        if (!(x.n()[j] <= y.n()[j])) return false;
    for (std::size_t i = 0; i < x.F().size(); ++i)
        if (!leq(x.F()[i], y.F()[i])) return false;
    return true;
}

CuElement add(const CuElement& x, const CuElement& y) {
    require_same(x, y);
    std::vector<StepFn> F;
    for (std::size_t i = 0; i < x.F().size(); ++i) F.push_back(pointwise(x.F()[i], y.F()[i], [](ExtNat a, ExtNat b) { return a + b; }));
    return CuElement::make(x.ambient(), combine(x.n(), y.n(), plus), std::move(F));
}

CuElement scale(std::uint64_t d, const CuElement& x) {
    std::vector<ExtNat> n;
    for (const auto& v : x.n()) n.push_back(d * v);
    std::vector<StepFn> F;
    for (const auto& f : x.F()) F.push_back(map_values(f, [d](ExtNat v) { return d * v; }));
    return CuElement::make(x.ambient(), std::move(n), std::move(F));
}

CuElement sup_increasing(const std::vector<CuElement>& xs) {
    if (xs.empty()) throw std::invalid_argument("sup_increasing: empty list");
    for (std::size_t t = 1; t < xs.size(); ++t)
        if (!leq(xs[t - 1], xs[t])) throw std::invalid_argument("sup_increasing: list is not increasing at position " + std::to_string(t));
    std::vector<ExtNat> n = xs[0].n();
    std::vector<StepFn> F = xs[0].F();
    for (std::size_t t = 1; t < xs.size(); ++t) {
        n = combine(n, xs[t].n(), maximum);
        for (std::size_t i = 0; i < F.size(); ++i) F[i] = pointwise(F[i], xs[t].F()[i], [](ExtNat a, ExtNat b) { return max(a, b); });
    }
    return CuElement::make(xs[0].ambient(), std::move(n), std::move(F));
}

bool compactly_contained(const CuElement& x, const CuElement& y) {
    require_same(x, y);
    const CuAmbient& amb = *x.ambient();
    for (std::size_t j = 0; j < x.n().size(); ++j)
        if (x.n()[j].is_inf() || !(x.n()[j] <= y.n()[j])) return false;
    for (std::size_t i = 0; i < x.F().size(); ++i) {
        const StepFn& fx = x.F()[i];
        if (!fx.all_finite()) return false;
        const std::vector<Rational> g = merged_grid(fx, y.F()[i]);
        const StepFn rx = fx.refine(g), ry = y.F()[i].refine(g);
        for (std::size_t j = 0; j <= g.size(); ++j)
            if (!(rx.interval_values()[j] <= ry.interval_values()[j])) return false;
        // Near a breakpoint of either function, x must fit under y's value at that point.
        for (std::size_t j = 0; j < g.size(); ++j) {
            ExtNat near = max(max(rx.interval_values()[j], rx.point_values()[j]), rx.interval_values()[j + 1]);
            if (!(near <= ry.point_values()[j])) return false;
        }
        if (!(fx.left_limit() <= amb.left_rank(i, y.n()))) return false;
        if (!(fx.right_limit() <= amb.right_rank(i, y.n()))) return false;
    }
    return true;
}

bool representable(const CuElement& x, unsigned D, std::uint64_t N) {
    for (const auto& v : all_values(x))
        if (!v.is_inf() && v.value() > N) return false;
    for (const auto& f : x.F())
        for (const auto& b : f.breakpoints())
            if (Integer(D) % b.get_den() != 0) return false;
    return true;
}

OracleWitnesses oracle_witnesses(const CuElement& y, unsigned D, std::uint64_t N) {
    if (D == 0) throw std::invalid_argument("oracle: grid denominator must be positive");
    if (!representable(y, D, N)) throw std::invalid_argument("oracle: y is not representable on the grid");
    OracleWitnesses w;
    w.D = D;
    w.N = N;
    w.eventual_terms.push_back(y);  // the constant sequence
    for (const auto& v : all_values(y)) w.truncation = w.truncation || v.is_inf();

    // Shrinking closed windows around a point dip the sequence there; once the radius is below
    // the grid spacing, domination no longer changes, so the radius 1/(4D) term decides.
    const Rational r(1, 4 * D);
    const CuAmbient& amb = *y.ambient();
    for (std::size_t i = 0; i < y.F().size(); ++i) {
        const StepFn& f = y.F()[i];
        for (unsigned k = 1; k < D; ++k) {
            Rational b(k, D);
            b.canonicalize();
            const ExtNat floor = f.at(b);  // the supremum must still reach y(b)
            if (floor.is_inf()) continue;
            for (std::uint64_t v = floor.value(); v <= N; ++v)
                for (const auto& [lo, hi] : {std::pair<Rational, Rational>{b - r, b + r}, {b - r, b}, {b, b + r}})
                    w.eventual_terms.push_back(with_block(y, i, lower_on(f, window(lo, hi, ExtNat(v)))));
        }
        // Near the ends, validity only asks the sequence to stay above Z n_y.
        const ExtNat lo0 = amb.left_rank(i, y.n()), lo1 = amb.right_rank(i, y.n());
        if (!lo0.is_inf())
            for (std::uint64_t v = lo0.value(); v <= N; ++v) w.eventual_terms.push_back(with_block(y, i, lower_on(f, window(0, r, ExtNat(v)))));
        if (!lo1.is_inf())
            for (std::uint64_t v = lo1.value(); v <= N; ++v) w.eventual_terms.push_back(with_block(y, i, lower_on(f, window(1 - r, 1, ExtNat(v)))));
    }
    return w;
}

bool oracle_accepts(const CuElement& x, const CuElement& y, const OracleWitnesses& w) {
    require_same(x, y);
    if (!representable(x, w.D, w.N)) throw std::invalid_argument("oracle: x is not representable on the grid");
    for (const auto& z : w.eventual_terms)
        if (!leq(x, z)) return false;
    if (w.truncation) {
        // min(y, c j) with j beyond every finite value of x; x infinite where y is infinite never fits.
        std::uint64_t cap = 1;
        for (const auto& v : all_values(x))
            if (!v.is_inf()) cap = std::max(cap, v.value() + 1);
        const std::uint64_t c = y.ambient()->max_row_sum();
        std::vector<ExtNat> n;
        for (const auto& v : y.n()) n.push_back(min(v, ExtNat(cap)));
        std::vector<StepFn> F;
        for (const auto& f : y.F()) F.push_back(map_values(f, [&](ExtNat v) { return min(v, ExtNat(c * cap)); }));
        if (!leq(x, CuElement::make(y.ambient(), std::move(n), std::move(F)))) return false;
    }
    return true;
}

bool compactly_contained_oracle(const CuElement& x, const CuElement& y, unsigned D, std::uint64_t N) {
    return oracle_accepts(x, y, oracle_witnesses(y, D, N));
}

bool is_compact(const CuElement& x) { return compactly_contained(x, x); }

std::variant<CuElement, NotDominated> compact_decomposition(const CuElement& e, const CuElement& x) {
    require_same(e, x);
    if (!is_compact(e)) throw PreconditionError("compact_decomposition: e is not compact");
    if (!leq(e, x)) return NotDominated{};
    std::vector<ExtNat> n;
    for (std::size_t j = 0; j < x.n().size(); ++j) n.push_back(x.n()[j] - e.n()[j]);
    std::vector<StepFn> F;
    for (std::size_t i = 0; i < x.F().size(); ++i) F.push_back(pointwise(x.F()[i], e.F()[i], [](ExtNat a, ExtNat b) { return a - b; }));
    return CuElement::make(x.ambient(), std::move(n), std::move(F));
}

CuElement floor_div(const CuElement& x, std::uint64_t d) {
    if (d == 0) throw std::invalid_argument("floor_div: d must be at least 1");
    std::vector<ExtNat> n;
    for (const auto& v : x.n()) n.push_back(v.floor_div(d));
    std::vector<StepFn> F;
    for (const auto& f : x.F()) F.push_back(map_values(f, [d](ExtNat v) { return v.floor_div(d); }));
    return CuElement::make(x.ambient(), std::move(n), std::move(F));
}

DivisibilityReport divisibility_check(const CuElement& x, std::uint64_t d) {
    const CuElement y = floor_div(x, d);
    DivisibilityReport rep;
    rep.lower_ok = leq(scale(d, y), x);
    rep.upper_ok = leq(x, scale(d + 1, y));
    for (const auto& v : all_values(x))
        if (!v.is_inf()) rep.min_rank = rep.min_rank ? std::min(*rep.min_rank, v.value()) : v.value();
    return rep;
}

CuElement erode(const CuElement& x, const Rational& r) {
    const CuAmbient& amb = *x.ambient();
    std::vector<StepFn> F;
    for (std::size_t i = 0; i < x.F().size(); ++i) {
        StepFn f = x.F()[i];
        const StepFn orig = f;
        for (std::size_t j = 0; j < orig.breakpoints().size(); ++j) {
            const Rational& b = orig.breakpoints()[j];
            f = lower_on(f, window(b - r, b + r, orig.point_values()[j]));
        }
        f = lower_on(f, window(0, r, amb.left_rank(i, x.n())));
        f = lower_on(f, window(1 - r, 1, amb.right_rank(i, x.n())));
        F.push_back(f);
    }
    return CuElement::make(x.ambient(), x.n(), std::move(F));
}

std::vector<CuElement> rapid_chain(const CuElement& x, std::size_t len) {
    if (len == 0) throw std::invalid_argument("rapid_chain: length must be positive");
    for (const auto& v : all_values(x))
        if (v.is_inf()) throw std::invalid_argument("rapid_chain: x must be finite-valued");
    Rational gap(1);
    for (const auto& f : x.F()) {
        Rational prev(0);
        for (const auto& b : f.breakpoints()) gap = std::min(gap, Rational(b - prev)), prev = b;
        gap = std::min(gap, Rational(1 - prev));
    }
    std::vector<CuElement> chain;
    Rational r = gap / 4;
    for (std::size_t t = 0; t + 1 < len; ++t, r /= 2) chain.push_back(erode(x, r));
    chain.push_back(x);
    return chain;
}

}  // namespace nccw
