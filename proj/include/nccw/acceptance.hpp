#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace nccw::acceptance {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;  // deterministic summary (counts), no timings
    double seconds = 0;
};

CriterionResult k1_grid();
CriterionResult named_k_theory();
CriterionResult random_reductions(std::uint64_t seed);
CriterionResult forest_certificates(std::uint64_t seed);
CriterionResult crossed_products();
CriterionResult euclidean_chains();
CriterionResult cu_axioms(std::uint64_t seed);
CriterionResult compact_containment_soundness();
CriterionResult divisibility(std::uint64_t seed);

CriterionResult run_criterion(int id, std::uint64_t seed);
std::vector<CriterionResult> run_all(std::uint64_t seed);

std::string format_line(const CriterionResult& r);

}  // namespace nccw::acceptance
