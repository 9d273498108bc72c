#include "nccw/random_gen.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

namespace nccw {

namespace {

std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) { return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng); }

ExtNat random_value(Rng& rng, std::uint64_t N, unsigned inf_percent) {
    if (inf_percent && uniform(rng, 1, 100) <= inf_percent) return ExtNat::inf();
    return ExtNat(uniform(rng, 0, N));
}

StepFn random_step_fn(Rng& rng, unsigned D, std::uint64_t N, unsigned inf_percent) {
    std::vector<Rational> br;
    for (unsigned k = 1; k < D; ++k)
        if (uniform(rng, 0, 2) == 0) br.emplace_back(k, D);
    for (auto& b : br) b.canonicalize();
    std::vector<ExtNat> iv, pv;
    for (std::size_t j = 0; j <= br.size(); ++j) iv.push_back(random_value(rng, N, inf_percent));
    for (std::size_t j = 0; j < br.size(); ++j) {
        ExtNat cap = min(iv[j], iv[j + 1]);
        pv.push_back(uniform(rng, 0, 1) == 0 ? cap : min(cap, ExtNat(uniform(rng, 0, N))));
    }
    return StepFn::make(br, iv, pv);
}

// Lowers n until the boundary constraints hold against F.
void fit_ranks(const CuAmbient& amb, std::vector<ExtNat>& n, const std::vector<StepFn>& F) {
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < amb.l(); ++i) {
            while (!(amb.left_rank(i, n) <= F[i].left_limit()) || !(amb.right_rank(i, n) <= F[i].right_limit())) {
                std::size_t big = 0;
                for (std::size_t j = 1; j < n.size(); ++j)
                    if (n[big] < n[j]) big = j;
                n[big] = n[big].is_inf() ? ExtNat(0) : ExtNat(n[big].value() - 1);
                changed = true;
            }
        }
    }
}

}  // namespace

NccwComplex random_complex(Rng& rng) {
    for (;;) {
        const std::size_t k = uniform(rng, 1, 4), l = uniform(rng, 1, 4);
        NccwComplex a{IntVector(k), IntVector(l), IntMatrix(l, k), IntMatrix(l, k)};
        for (std::size_t i = 0; i < l; ++i)
            for (std::size_t j = 0; j < k; ++j) a.Z0(i, j) = static_cast<unsigned long>(uniform(rng, 0, 3));
        for (std::size_t i = 0; i < l; ++i)
            for (std::size_t j = 0; j < k; ++j) a.Z1(i, j) = static_cast<unsigned long>(uniform(rng, 0, 3));
        for (auto& x : a.e) x = static_cast<unsigned long>(uniform(rng, 1, 4));
        const IntVector need = minimal_f(a.Z0, a.Z1, a.e);
        bool fits = true;
        for (std::size_t i = 0; i < l; ++i) {
            if (need[i] > 40) {
                fits = false;
                break;
            }
            const std::uint64_t lo = to_u64(need[i]);
            a.f[i] = static_cast<unsigned long>(uniform(rng, lo, std::min<std::uint64_t>(40, lo + 4)));
        }
        if (fits) return a;
    }
}

CuElement random_element(const AmbientPtr& amb, Rng& rng, unsigned D, std::uint64_t N, unsigned inf_percent) {
    std::vector<StepFn> F;
    for (std::size_t i = 0; i < amb->l(); ++i) F.push_back(random_step_fn(rng, D, N, inf_percent));
    std::vector<ExtNat> n;
    for (std::size_t j = 0; j < amb->k(); ++j) n.push_back(random_value(rng, N, inf_percent));
    fit_ranks(*amb, n, F);
    return CuElement::make(amb, std::move(n), std::move(F));
}

CuElement random_compact(const AmbientPtr& amb, Rng& rng, std::uint64_t N) {
    std::vector<ExtNat> n(amb->k());
    for (int attempt = 0; attempt < 64; ++attempt) {
        for (auto& v : n) v = ExtNat(uniform(rng, 0, N));
        bool balanced = true;
        for (std::size_t i = 0; i < amb->l(); ++i) balanced = balanced && amb->left_rank(i, n) == amb->right_rank(i, n);
        if (balanced) break;
        if (attempt == 63) n.assign(amb->k(), ExtNat(0));
    }
    std::vector<StepFn> F;
    for (std::size_t i = 0; i < amb->l(); ++i) F.push_back(StepFn::constant(amb->left_rank(i, n)));
    return CuElement::make(amb, std::move(n), std::move(F));
}

std::vector<CuElement> enumerate_grid(const AmbientPtr& amb, unsigned D, std::uint64_t N) {
    // All lsc step functions on the full grid, deduplicated through their canonical forms.
    std::vector<Rational> grid;
    for (unsigned k = 1; k < D; ++k) grid.emplace_back(k, D), grid.back().canonicalize();
    std::map<std::string, StepFn> fns;
    std::vector<ExtNat> iv(D), pv(grid.size());
    std::function<void(std::size_t)> points = [&](std::size_t j) {
        if (j == pv.size()) {
            StepFn f = StepFn::make(grid, iv, pv);
            fns.emplace(f.to_string(), f);
            return;
        }
        const std::uint64_t cap = min(iv[j], iv[j + 1]).value();
        for (std::uint64_t v = 0; v <= cap; ++v) pv[j] = ExtNat(v), points(j + 1);
    };
    std::function<void(std::size_t)> intervals = [&](std::size_t j) {
        if (j == iv.size()) return points(0);
        for (std::uint64_t v = 0; v <= N; ++v) iv[j] = ExtNat(v), intervals(j + 1);
    };
    intervals(0);

    std::vector<StepFn> all;
    for (auto& [key, f] : fns) all.push_back(f);
    std::vector<CuElement> out;
    std::vector<ExtNat> n(amb->k());
    std::vector<StepFn> F(amb->l());
    std::function<void(std::size_t)> blocks = [&](std::size_t i) {
        if (i == F.size()) {
            for (std::size_t t = 0; t < F.size(); ++t)
                if (!(amb->left_rank(t, n) <= F[t].left_limit()) || !(amb->right_rank(t, n) <= F[t].right_limit())) return;
            out.push_back(CuElement::make(amb, n, F));
            return;
        }
        for (const auto& f : all) F[i] = f, blocks(i + 1);
    };
    std::function<void(std::size_t)> ranks = [&](std::size_t j) {
        if (j == n.size()) return blocks(0);
        for (std::uint64_t v = 0; v <= N; ++v) n[j] = ExtNat(v), ranks(j + 1);
    };
    ranks(0);
    return out;
}

unsigned worker_count() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("NCCW_KIT_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1) hw = std::min<unsigned>(hw, static_cast<unsigned>(cap));
    }
    return hw;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(worker_count(), n));
    if (workers <= 1) {
        for (std::size_t t = 0; t < n; ++t) body(t);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_lock;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t t; (t = next++) < n;) {
                try {
                    body(t);
                } catch (...) {
                    std::lock_guard<std::mutex> g(error_lock);
                    if (!error) error = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace nccw
