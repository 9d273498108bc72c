#pragma once

#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "nccw/complex.hpp"
#include "nccw/step_fn.hpp"

namespace nccw {

// An NCCW complex with its multiplicities cached as machine words for rank arithmetic.
class CuAmbient {
public:
    static std::shared_ptr<const CuAmbient> of(const NccwComplex& a);

    const NccwComplex& complex() const { return complex_; }
    std::size_t k() const { return complex_.k(); }
    std::size_t l() const { return complex_.l(); }
    ExtNat left_rank(std::size_t i, const std::vector<ExtNat>& n) const { return apply(z0_, i, n); }   // (Z0 n)_i
    ExtNat right_rank(std::size_t i, const std::vector<ExtNat>& n) const { return apply(z1_, i, n); }  // (Z1 n)_i
    std::uint64_t max_row_sum() const;

private:
    static ExtNat apply(const std::vector<std::vector<std::uint64_t>>& z, std::size_t i, const std::vector<ExtNat>& n);
    NccwComplex complex_;
    std::vector<std::vector<std::uint64_t>> z0_, z1_;
};

using AmbientPtr = std::shared_ptr<const CuAmbient>;

bool same_ambient(const AmbientPtr& a, const AmbientPtr& b);

struct AmbientMismatch : std::invalid_argument {
    AmbientMismatch() : std::invalid_argument("Cu elements live over different complexes") {}
};

// A pair (n, F): ranks on the E-blocks and lsc rank functions on the F-blocks, with
// Z0 n <= F(0+) and Z1 n <= F(1-).
class CuElement {
public:
    static CuElement make(AmbientPtr ambient, std::vector<ExtNat> n, std::vector<StepFn> F);
    static CuElement zero(AmbientPtr ambient);

    const AmbientPtr& ambient() const { return ambient_; }
    const std::vector<ExtNat>& n() const { return n_; }
    const std::vector<StepFn>& F() const { return F_; }

    friend bool operator==(const CuElement& a, const CuElement& b) {
        return same_ambient(a.ambient_, b.ambient_) && a.n_ == b.n_ && a.F_ == b.F_;
    }

private:
    AmbientPtr ambient_;
    std::vector<ExtNat> n_;
    std::vector<StepFn> F_;
};

bool leq(const CuElement& x, const CuElement& y);
CuElement add(const CuElement& x, const CuElement& y);
CuElement scale(std::uint64_t d, const CuElement& x);
CuElement sup_increasing(const std::vector<CuElement>& xs);

// Candidate closed form for x << y.
bool compactly_contained(const CuElement& x, const CuElement& y);

// Breakpoints on the 1/D grid and finite values at most N.
bool representable(const CuElement& x, unsigned D, std::uint64_t N);

// Increasing sequences with supremum >= y, each given by the limit term it settles to when the
// shrinking windows become narrower than the grid spacing.
struct OracleWitnesses {
    unsigned D = 0;
    std::uint64_t N = 0;
    std::vector<CuElement> eventual_terms;
    bool truncation = false;  // y has an infinite value, so the capped sequences min(y, c j) apply
};

OracleWitnesses oracle_witnesses(const CuElement& y, unsigned D, std::uint64_t N);
bool oracle_accepts(const CuElement& x, const CuElement& y, const OracleWitnesses& w);
bool compactly_contained_oracle(const CuElement& x, const CuElement& y, unsigned D, std::uint64_t N);

bool is_compact(const CuElement& x);

struct NotDominated {};
std::variant<CuElement, NotDominated> compact_decomposition(const CuElement& e, const CuElement& x);

CuElement floor_div(const CuElement& x, std::uint64_t d);

struct DivisibilityReport {
    bool lower_ok = false;
    bool upper_ok = false;
    std::optional<std::uint64_t> min_rank;  // unset when every rank is infinite
};

DivisibilityReport divisibility_check(const CuElement& x, std::uint64_t d);

// Every breakpoint dip widened to [b - r, b + r] and the ends lowered to Z n on (0, r] and [1 - r, 1).
CuElement erode(const CuElement& x, const Rational& r);

// x_1 << x_2 << ... << x_len = x, by eroding x less and less; x must be finite-valued.
std::vector<CuElement> rapid_chain(const CuElement& x, std::size_t len);

}  // namespace nccw
