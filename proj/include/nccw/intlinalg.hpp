#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nccw/int_matrix.hpp"

namespace nccw {

struct SmithForm {
    IntMatrix U, D, V;  // U * M * V == D
    std::size_t rank = 0;
};

SmithForm smith_normal_form(const IntMatrix& m);

// Finitely generated abelian group Z^free_rank + sum Z/d_i, with d_1 | d_2 | ... and every d_i >= 2.
struct AbelianGroup {
    std::size_t free_rank = 0;
    std::vector<Integer> invariant_factors;

    bool is_trivial() const { return free_rank == 0 && invariant_factors.empty(); }
    std::string to_string() const;  // "0", "Z", "Z/2 + Z^3", ...
    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

// Inverse of AbelianGroup::to_string.
AbelianGroup parse_abelian_group(const std::string& text);

struct KernelCokernel {
    std::vector<IntVector> kernel_basis;
    AbelianGroup cokernel;
};

bool is_surjective(const IntMatrix& m);
KernelCokernel kernel_and_cokernel(const IntMatrix& m);

// Coefficients in ascending degree order.
struct Polynomial {
    std::vector<Integer> coeffs;

    std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
    Integer eval(const Integer& t) const;
    std::string to_string(char var = 't') const;
    friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

Polynomial char_poly(const IntMatrix& m);
Integer determinant(const IntMatrix& m);

// Canonical Hermite basis of the column lattice of m, one generator per row of the result.
std::vector<IntVector> lattice_hnf(const IntMatrix& m);
bool same_lattice(const IntMatrix& a, const IntMatrix& b);

// Some integer x with m * x == b, if one exists.
std::optional<IntVector> solve_integer(const IntMatrix& m, const IntVector& b);

Integer row_gcd(const IntMatrix& m, std::size_t i);

}  // namespace nccw
