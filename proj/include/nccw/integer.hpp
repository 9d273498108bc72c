#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace nccw {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;

// Accepts an optional sign followed by decimal digits; throws std::invalid_argument otherwise.
Integer parse_integer(const std::string& text);

inline std::string to_string(const Integer& x) { return x.get_str(); }

bool fits_int64(const Integer& x);

// Throws std::overflow_error when x is negative or does not fit.
std::uint64_t to_u64(const Integer& x);

IntVector ones(std::size_t n);

}  // namespace nccw
