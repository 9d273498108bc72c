#include "nccw/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <mutex>
#include <numeric>
#include <sstream>

#include "nccw/cu_tilde.hpp"
#include "nccw/gallery.hpp"
#include "nccw/random_gen.hpp"
#include "nccw/reduction.hpp"

namespace nccw::acceptance {

namespace {

using Clock = std::chrono::steady_clock;

CriterionResult timed(int id, std::string title, const std::function<void(CriterionResult&)>& body) {
    CriterionResult r;
    r.id = id;
    r.title = std::move(title);
    const auto start = Clock::now();
    try {
        body(r);
    } catch (const std::exception& e) {
        r.passed = false;
        r.detail += (r.detail.empty() ? "" : "; ") + std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return r;
}

std::vector<NccwComplex> random_batch(std::uint64_t seed, std::size_t count) {
    Rng rng(seed);
    std::vector<NccwComplex> out;
    for (std::size_t t = 0; t < count; ++t) out.push_back(random_complex(rng));
    return out;
}

std::vector<std::pair<std::string, NccwComplex>> gallery_items() {
    std::vector<std::pair<std::string, NccwComplex>> g = {
        {"interval", interval()},
        {"circle", circle()},
        {"pointed_interval", pointed_interval()},
        {"q_c", q_c()},
        {"path", tree(3, {{1, 2}, {2, 3}})},
        {"3-star", tree(4, {{1, 2}, {1, 3}, {1, 4}})},
        {"interval+circle", direct_sum(interval(), circle())},
    };
    for (unsigned n = 2; n <= 10; ++n) g.emplace_back("razak(" + std::to_string(n) + ")", razak(n));
    for (unsigned q = 2; q <= 6; ++q)
        for (unsigned p = 1; p < q; ++p) {
            const std::string pq = std::to_string(p) + "," + std::to_string(q);
            g.emplace_back("dimension_drop(" + pq + ")", dimension_drop(p, q));
            g.emplace_back("a_pq(" + pq + ")", a_pq(p, q));
        }
    for (unsigned q = 2; q <= 5; ++q)
        for (unsigned p = 1; p < q; ++p)
            if (std::gcd(p, q) == 1) g.emplace_back("crossed_nccw(" + std::to_string(p) + "," + std::to_string(q) + ")", crossed_nccw(p, q));
    return g;
}

std::string count_line(const std::vector<std::pair<std::string, std::size_t>>& counts) {
    std::string s;
    for (const auto& [k, v] : counts) s += (s.empty() ? "" : ", ") + k + " " + std::to_string(v);
    return s;
}

}  // namespace

CriterionResult k1_grid() {
    return timed(1, "K1 of dimension-drop algebras for 1 <= p < q <= 12", [](CriterionResult& r) {
        std::size_t checked = 0, bad = 0;
        for (unsigned q = 2; q <= 12; ++q)
            for (unsigned p = 1; p < q; ++p) {
                const AbelianGroup k1 = k_theory(dimension_drop(p, q)).k1;
                const unsigned g = std::gcd(p, q);
                AbelianGroup expected;
                if (g > 1) expected.invariant_factors.push_back(Integer(g));
                bad += !(k1 == expected);
                ++checked;
            }
        r.detail = std::to_string(checked) + " pairs, " + std::to_string(bad) + " mismatches";
        r.passed = bad == 0;
    });
}

CriterionResult named_k_theory() {
    return timed(2, "named K-theory values", [](CriterionResult& r) {
        struct Case {
            std::string name;
            NccwComplex a;
            std::string k0, k1;
        };
        std::vector<Case> cases = {{"circle", circle(), "Z", "Z"}, {"interval", interval(), "Z", "0"}, {"q_c", q_c(), "Z", "0"}};
        for (unsigned n = 2; n <= 10; ++n) cases.push_back({"razak(" + std::to_string(n) + ")", razak(n), "0", "0"});
        std::string wrong;
        for (const auto& c : cases) {
            KTheory kt = k_theory(c.a);
            if (kt.k0.to_string() != c.k0 || kt.k1.to_string() != c.k1)
                wrong += " " + c.name + "=(" + kt.k0.to_string() + "," + kt.k1.to_string() + ")";
        }
        r.detail = std::to_string(cases.size()) + " complexes" + (wrong.empty() ? "" : ", wrong:" + wrong);
        r.passed = wrong.empty();
    });
}

CriterionResult random_reductions(std::uint64_t seed) {
    return timed(3, "reduction to pure multiplicities on 500 random complexes", [seed](CriterionResult& r) {
        const auto batch = random_batch(seed, 500);
        enum Outcome { kCase, kFallback, kUnreachable, kBroken };
        std::vector<Outcome> outcome(batch.size());
        std::vector<std::string> note(batch.size());
        const auto start = Clock::now();
        parallel_for(batch.size(), [&](std::size_t t) {
            try {
                Reduction red = reduce_to_pure_multiplicities(batch[t]);
                TraceCheck chk = verify_trace(red.trace);
                if (!has_pure_multiplicities(red.result) || !chk.ok || !(red.trace.final() == red.result)) {
                    outcome[t] = kBroken;
                    note[t] = chk.cause;
                } else {
                    outcome[t] = red.route == Route::CaseAnalysis ? kCase : kFallback;
                }
            } catch (const PureFormUnreachable& e) {
                outcome[t] = kUnreachable;
                note[t] = e.what();
            } catch (const std::exception& e) {
                outcome[t] = kBroken;
                note[t] = e.what();
            }
        });
        const double secs = std::chrono::duration<double>(Clock::now() - start).count();
        std::size_t n[4] = {0, 0, 0, 0};
        for (auto o : outcome) ++n[o];
        r.detail = count_line({{"pure via case analysis", n[kCase]},
                               {"pure via lattice fallback (case analysis broke row purity)", n[kFallback]},
                               {"no pure form reachable (column lattice obstruction)", n[kUnreachable]},
                               {"errors", n[kBroken]}});
        for (std::size_t t = 0; t < batch.size(); ++t)
            if (outcome[t] == kBroken) {
                r.detail += "; first error at instance " + std::to_string(t) + ": " + note[t];
                break;
            }
        r.passed = n[kUnreachable] == 0 && n[kBroken] == 0 && secs < 60;
        if (secs >= 60) r.detail += "; over the 60 s budget";
    });
}

CriterionResult forest_certificates(std::uint64_t seed) {
    return timed(4, "forest certificates exactly on K1-trivial inputs", [seed](CriterionResult& r) {
        std::vector<std::pair<std::string, NccwComplex>> items = gallery_items();
        const auto batch = random_batch(seed, 500);
        for (std::size_t t = 0; t < batch.size(); ++t) items.emplace_back("random#" + std::to_string(t), batch[t]);
        std::vector<int> status(items.size());  // 0 certified, 1 correctly refused, 2 wrong
        std::vector<std::string> note(items.size());
        parallel_for(items.size(), [&](std::size_t t) {
            const bool trivial = k_theory(items[t].second).k1.is_trivial();
            try {
                auto cert = tree_certificate(items[t].second);
                if (auto* c = std::get_if<TreeCertificate>(&cert)) {
                    const bool ok = trivial && c->graph.is_forest && verify_trace(c->trace).ok;
                    status[t] = ok ? 0 : 2;
                } else {
                    status[t] = trivial ? 2 : 1;
                }
            } catch (const std::exception& e) {
                status[t] = 2;
                note[t] = e.what();
            }
        });
        std::size_t n[3] = {0, 0, 0};
        std::string first;
        for (std::size_t t = 0; t < items.size(); ++t) {
            ++n[status[t]];
            if (status[t] == 2 && first.empty()) first = items[t].first + (note[t].empty() ? "" : ": " + note[t]);
        }
        r.detail = count_line({{"certified", n[0]}, {"refused with K1 != 0", n[1]}, {"wrong", n[2]}});
        if (!first.empty()) r.detail += "; first wrong: " + first;
        r.passed = n[2] == 0;
    });
}

CriterionResult crossed_products() {
    return timed(5, "crossed-product matrices for coprime p < q <= 8", [](CriterionResult& r) {
        std::size_t pairs = 0;
        std::string bad;
        for (unsigned q = 2; q <= 8; ++q)
            for (unsigned p = 1; p < q; ++p) {
                if (std::gcd(p, q) != 1) continue;
                ++pairs;
                CrossedBlockReport rep = crossed_block(p, q);  // throws if the charpoly is off
                if (rep.det_I_minus_A != -1 || rep.det_minus_A != -1 || !rep.k1_trivial || !is_surjective(rep.Z0 - rep.Z1))
                    bad += " (" + std::to_string(p) + "," + std::to_string(q) + ")";
            }
        r.detail = std::to_string(pairs) + " pairs" + (bad.empty() ? "" : ", failing:" + bad);
        r.passed = bad.empty();
    });
}

CriterionResult euclidean_chains() {
    return timed(6, "Euclidean chains for coprime p < q <= 12", [](CriterionResult& r) {
        std::size_t pairs = 0, steps = 0;
        std::string bad;
        for (unsigned q = 2; q <= 12; ++q)
            for (unsigned p = 1; p < q; ++p) {
                if (std::gcd(p, q) != 1) continue;
                ++pairs;
                EuclideanChain ch = euclidean_chain(p, q);
                std::vector<std::pair<unsigned, unsigned>> expected{{p, q}};
                for (unsigned a = p, b = q; a > 1;) {
                    const unsigned lo = std::min(a, b - a), hi = std::max(a, b - a);
                    a = lo, b = hi;
                    expected.emplace_back(a, b);
                }
                bool ok = verify_trace(ch.trace).ok && ch.pairs == expected;
                for (const auto& s : ch.trace.steps) ok = ok && k_theory(s.result).k1.is_trivial();
                steps += ch.trace.steps.size();
                if (!ok) bad += " (" + std::to_string(p) + "," + std::to_string(q) + ")";
            }
        r.detail = std::to_string(pairs) + " chains, " + std::to_string(steps) + " moves" + (bad.empty() ? "" : ", failing:" + bad);
        r.passed = bad.empty();
    });
}

CriterionResult cu_axioms(std::uint64_t seed) {
    return timed(7, "Cu model laws on 1000 random triples (grid 1/8, values <= 4)", [seed](CriterionResult& r) {
        const AmbientPtr ambients[2] = {CuAmbient::of(interval()), CuAmbient::of(pointed_interval())};
        const unsigned D = 8;
        const std::uint64_t N = 4;
        std::vector<std::string> failures(1000);
        std::vector<int> cancellation_hits(1000);
        parallel_for(1000, [&](std::size_t t) {
            Rng rng(seed + 7919 * t);
            const AmbientPtr& amb = ambients[t % 2];
            std::string& fail = failures[t];
            auto check = [&](bool cond, const char* what) {
                if (!cond && fail.empty()) fail = what;
            };
            const CuElement x = random_element(amb, rng, D, N, 5), y = random_element(amb, rng, D, N, 5), z = random_element(amb, rng, D, N, 5);
            const CuElement zero = CuElement::zero(amb);

            check(leq(x, x), "reflexivity");
            if (leq(x, y) && leq(y, x)) check(x == y, "antisymmetry");
            if (leq(x, y) && leq(y, z)) check(leq(x, z), "transitivity");
            const CuElement xy = add(x, y), xyz = add(xy, z);
            check(leq(x, xy) && leq(xy, xyz) && leq(x, xyz), "transitivity along sums");
            check(xy == add(y, x), "commutativity");
            check(add(xy, z) == add(x, add(y, z)), "associativity");
            check(add(x, zero) == x, "zero is neutral");
            if (leq(x, y)) check(leq(add(x, z), add(y, z)), "monotonicity of add");
            check(leq(add(x, z), add(xy, z)), "monotonicity of add along x <= x + y");

            const std::vector<CuElement> xs = {x, xy, xyz}, ys = {z, add(z, x), add(add(z, x), y)};
            std::vector<CuElement> sums;
            for (std::size_t s = 0; s < xs.size(); ++s) sums.push_back(add(xs[s], ys[s]));
            check(add(sup_increasing(xs), sup_increasing(ys)) == sup_increasing(sums), "O4 sup additivity");

            // Weak cancellation on finite elements small enough for the oracle.
            const CuElement fx = random_element(amb, rng, D, 2), fz = random_element(amb, rng, D, 2);
            const CuElement fy = (t % 4 < 2) ? add(fx, random_element(amb, rng, D, 1)) : random_element(amb, rng, D, 2);
            const CuElement lhs = add(fx, fz), rhs = add(fy, fz);
            const bool cand = compactly_contained(lhs, rhs);
            const bool orc = compactly_contained_oracle(lhs, rhs, D, 3 * N);
            check(!cand || orc, "candidate << accepted a pair the oracle rejects");
            if (cand) check(leq(fx, fy), "weak cancellation");
            cancellation_hits[t] = cand;

            const CuElement e = random_compact(amb, rng, 2);
            check(is_compact(e), "random compact element is not compact");
            const CuElement sum = add(e, x);
            auto dec = compact_decomposition(e, sum);
            check(std::holds_alternative<CuElement>(dec) && add(e, std::get<CuElement>(dec)) == sum, "compact decomposition e + r = x");

            const CuElement fin = random_element(amb, rng, D, N);
            const auto chain = rapid_chain(fin, 4);
            for (std::size_t s = 0; s + 1 < chain.size(); ++s) check(compactly_contained(chain[s], chain[s + 1]), "O2 rapidly increasing chain");
        });
        std::size_t bad = 0, hits = 0;
        std::string first;
        for (std::size_t t = 0; t < failures.size(); ++t) {
            hits += cancellation_hits[t];
            if (!failures[t].empty()) {
                ++bad;
                if (first.empty()) first = "triple " + std::to_string(t) + ": " + failures[t];
            }
        }
        r.detail = "1000 triples, " + std::to_string(bad) + " failing, " + std::to_string(hits) + " nontrivial weak-cancellation premises";
        if (!first.empty()) r.detail += "; first: " + first;
        r.passed = bad == 0;
    });
}

CriterionResult compact_containment_soundness() {
    return timed(8, "candidate << implies oracle << on grid families", [](CriterionResult& r) {
        std::size_t pairs = 0, accepted = 0, violations = 0, incomplete = 0;
        const NccwComplex models[2] = {interval(), pointed_interval()};
        for (const auto& model : models) {
            const AmbientPtr amb = CuAmbient::of(model);
            for (unsigned D : {3u, 4u}) {
                const std::vector<CuElement> family = enumerate_grid(amb, D, 2);
                std::vector<std::size_t> acc(family.size()), vio(family.size()), inc(family.size());
                parallel_for(family.size(), [&](std::size_t b) {
                    const CuElement& y = family[b];
                    const OracleWitnesses w = oracle_witnesses(y, D, 2);
                    for (const auto& x : family) {
                        const bool cand = compactly_contained(x, y);
                        const bool orc = leq(x, y) && oracle_accepts(x, y, w);
                        acc[b] += cand;
                        vio[b] += cand && !orc;
                        inc[b] += orc && !cand;
                    }
                });
                pairs += family.size() * family.size();
                accepted += std::accumulate(acc.begin(), acc.end(), std::size_t{0});
                violations += std::accumulate(vio.begin(), vio.end(), std::size_t{0});
                incomplete += std::accumulate(inc.begin(), inc.end(), std::size_t{0});
            }
        }
        const CuElement unit = unit_class(interval());
        const AmbientPtr cone = CuAmbient::of(pointed_interval());
        const CuElement one = CuElement::make(cone, {ExtNat(0)}, {StepFn::constant(ExtNat(1))});
        const bool unit_ok = is_compact(unit) && compactly_contained_oracle(unit, unit, 8, 4);
        const bool cone_ok = !is_compact(one) && !compactly_contained_oracle(one, one, 8, 4);
        r.detail = std::to_string(pairs) + " pairs, " + std::to_string(accepted) + " accepted by the candidate, " + std::to_string(violations) +
                   " soundness violations, " + std::to_string(incomplete) + " oracle-only pairs (incompleteness); interval unit compact: " +
                   (unit_ok ? "yes" : "NO") + "; C0(0,1] constant 1 not compact: " + (cone_ok ? "yes" : "NO");
        r.passed = violations == 0 && unit_ok && cone_ok;
    });
}

CriterionResult divisibility(std::uint64_t seed) {
    return timed(9, "floor-division divisibility", [seed](CriterionResult& r) {
        Rng rng(seed);
        const AmbientPtr ambients[3] = {CuAmbient::of(interval()), CuAmbient::of(circle()), CuAmbient::of(pointed_interval())};
        std::size_t instances = 0, lower_bad = 0, above_threshold = 0, upper_bad = 0;
        for (std::size_t t = 0; t < 600; ++t) {
            const std::uint64_t d = 1 + t % 5;
            const AmbientPtr& amb = ambients[t % 2];  // ambients with a unit, so ranks can be lifted uniformly
            CuElement x = random_element(amb, rng, 8, 12, 5);
            if (t % 3 != 0) x = add(x, scale(d * (d - 1) + t % 4, unit_class(amb->complex())));
            const DivisibilityReport rep = divisibility_check(x, d);
            ++instances;
            lower_bad += !rep.lower_ok;
            if (!rep.min_rank || *rep.min_rank >= std::max<std::uint64_t>(1, d * (d - 1))) {
                ++above_threshold;
                upper_bad += !rep.upper_ok;
            }
        }
        for (std::size_t t = 0; t < 100; ++t) {
            const CuElement x = random_element(ambients[2], rng, 8, 12, 5);
            lower_bad += !divisibility_check(x, 1 + t % 5).lower_ok;
            ++instances;
        }
        // Constant rank 5 with d = 3 clears the d + 1 threshold but not d(d - 1).
        const AmbientPtr circ = ambients[1];
        const CuElement five = CuElement::make(circ, {ExtNat(5)}, {StepFn::constant(ExtNat(5))});
        const DivisibilityReport rep5 = divisibility_check(five, 3);
        const bool reproduced = rep5.lower_ok && !rep5.upper_ok && rep5.min_rank == 5u;
        bool exact = true;
        for (std::uint64_t d = 1; d <= 6; ++d) {
            const CuElement x = CuElement::make(circ, {ExtNat(d * (d + 1))}, {StepFn::constant(ExtNat(d * (d + 1)))});
            const DivisibilityReport rep = divisibility_check(x, d);
            exact = exact && rep.lower_ok && rep.upper_ok;
        }
        r.detail = std::to_string(instances) + " instances, " + std::to_string(lower_bad) + " lower failures, " + std::to_string(above_threshold) +
                   " above the d(d-1) threshold with " + std::to_string(upper_bad) + " upper failures; rank 5, d = 3: upper_ok " +
                   (rep5.upper_ok ? "true" : "false") + " (min_rank " + std::to_string(rep5.min_rank.value_or(0)) + ")";
        r.passed = lower_bad == 0 && upper_bad == 0 && reproduced && exact;
    });
}

CriterionResult run_criterion(int id, std::uint64_t seed) {
    CriterionResult r;
    switch (id) {
        case 1: r = k1_grid(); break;
        case 2: r = named_k_theory(); break;
        case 3: r = random_reductions(seed); break;
        case 4: r = forest_certificates(seed); break;
        case 5: r = crossed_products(); break;
        case 6: r = euclidean_chains(); break;
        case 7: r = cu_axioms(seed); break;
        case 8: r = compact_containment_soundness(); break;
        case 9: r = divisibility(seed); break;
        default: throw std::invalid_argument("no acceptance criterion " + std::to_string(id));
    }
    const double budget = id == 1 ? 1 : id == 3 ? 60 : id == 5 ? 5 : id == 7 ? 120 : 0;
    if (budget > 0 && r.seconds >= budget) {
        r.passed = false;
        r.detail += "; exceeded the " + std::to_string(static_cast<int>(budget)) + " s budget";
    }
    return r;
}

std::vector<CriterionResult> run_all(std::uint64_t seed) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= 9; ++id) out.push_back(run_criterion(id, seed));
    return out;
}

std::string format_line(const CriterionResult& r) {
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2f s", r.seconds);
    return std::string(r.passed ? "PASS" : "FAIL") + " criterion " + std::to_string(r.id) + ": " + r.title + " [" + r.detail + "] (" + secs + ")";
}

}  // namespace nccw::acceptance
