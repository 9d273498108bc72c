#pragma once

#include <utility>
#include <vector>

#include "nccw/complex.hpp"

namespace nccw {

NccwComplex interval();          // C[0,1]
NccwComplex circle();            // C(S^1)
NccwComplex pointed_interval();  // C0(0,1]
// Commutative complex of a tree on vertices 1..vertices.
NccwComplex tree(std::size_t vertices, const std::vector<std::pair<std::size_t, std::size_t>>& edges);
NccwComplex q_c();
NccwComplex razak(unsigned n);
NccwComplex dimension_drop(unsigned p, unsigned q);
NccwComplex a_pq(unsigned p, unsigned q);

struct CrossedBlockReport {
    unsigned p = 0, q = 0;
    IntMatrix A;
    Polynomial charpoly;
    Integer det_I_minus_A, det_minus_A;
    IntMatrix Z0, Z1;
    bool k1_trivial = false;
};

// Superdiagonal ones, last row ones at columns 1 and q-p+1 (1-based); charpoly t^q - t^(q-p) - 1.
IntMatrix crossed_matrix(unsigned p, unsigned q);
CrossedBlockReport crossed_block(unsigned p, unsigned q);
NccwComplex crossed_nccw(unsigned p, unsigned q);

}  // namespace nccw
