#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "qcl/errors.hpp"

namespace qcl {

using Int = std::int64_t;
using IntVector = std::vector<Int>;

inline Int checked_add(Int a, Int b) {
    Int out;
    if (__builtin_add_overflow(a, b, &out)) {
        refuse("overflow", "64-bit integer addition overflowed");
    }
    return out;
}

inline Int checked_mul(Int a, Int b) {
    Int out;
    if (__builtin_mul_overflow(a, b, &out)) {
        refuse("overflow", "64-bit integer multiplication overflowed");
    }
    return out;
}

inline Int dot(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) {
        fail_input("dimension-mismatch", "dot product of vectors of different length");
    }
    Int sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        sum = checked_add(sum, checked_mul(a[i], b[i]));
    }
    return sum;
}

IntVector operator+(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a);

// Dense row-major integer matrix. Sized for exchange matrices and Cartan
// matrices, i.e. tens of rows at most.
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols, Int fill = 0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
    IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<IntVector>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    Int operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntVector row(std::size_t i) const;
    IntVector col(std::size_t j) const;
    std::vector<IntVector> to_rows() const;

    IntMatrix transpose() const;
    bool is_skew_symmetric() const;

    // M v
    IntVector apply(const IntVector& v) const;
    // a^T M b
    Int bilinear(const IntVector& a, const IntVector& b) const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

    std::string to_string() const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

} // namespace qcl
