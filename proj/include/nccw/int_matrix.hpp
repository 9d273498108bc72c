#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "nccw/integer.hpp"

namespace nccw {

// Dense row-major matrix over Z.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);

    static IntMatrix identity(std::size_t n);
    static IntMatrix of(std::initializer_list<std::initializer_list<long>> rows);
    static IntMatrix from_rows(const std::vector<IntVector>& rows);
    static IntMatrix from_columns(std::size_t rows, const std::vector<IntVector>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Integer& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    IntVector row(std::size_t i) const;
    IntVector column(std::size_t j) const;
    bool is_zero() const;
    bool column_is_zero(std::size_t j) const;

    IntMatrix transpose() const;
    IntMatrix power(unsigned exponent) const;
    IntMatrix without_column(std::size_t j) const;
    IntMatrix with_column(const IntVector& c) const;
    IntMatrix permute_columns(const std::vector<std::size_t>& perm) const;

    IntVector operator*(const IntVector& v) const;
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b);

    // Elementary operations, used by the normal-form routines.
    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    void add_row_multiple(std::size_t dst, std::size_t src, const Integer& q);  // row dst += q*row src
    void add_col_multiple(std::size_t dst, std::size_t src, const Integer& q);
    void negate_row(std::size_t i);

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> a_;
};

}  // namespace nccw
