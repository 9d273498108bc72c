#pragma once

#include <functional>
#include <random>
#include <vector>

#include "nccw/cuntz.hpp"

namespace nccw {

using Rng = std::mt19937_64;

// k, l in 1..4, multiplicities in 0..3, e_j in 1..4, f_i between the attainability floor and 40.
NccwComplex random_complex(Rng& rng);

// Random valid element with breakpoints on the 1/D grid and values in 0..N (infinite with
// probability inf_percent/100 per slot).
CuElement random_element(const AmbientPtr& amb, Rng& rng, unsigned D, std::uint64_t N, unsigned inf_percent = 0);

// Compact element: n with Z0 n = Z1 n and F constant equal to that common value.
CuElement random_compact(const AmbientPtr& amb, Rng& rng, std::uint64_t N);

// Every valid element whose breakpoints lie on the 1/D grid and whose values are at most N.
std::vector<CuElement> enumerate_grid(const AmbientPtr& amb, unsigned D, std::uint64_t N);

// Thread count from NCCW_KIT_THREADS (capped by the hardware), at least 1.
unsigned worker_count();
// Runs body(0..n-1) over worker_count() threads; body must only touch its own slot.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace nccw
