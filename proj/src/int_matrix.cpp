#include "qcl/int_matrix.hpp"

#include <sstream>

namespace qcl {

IntVector operator+(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) {
        fail_input("dimension-mismatch", "vector sum of different lengths");
    }
    IntVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = checked_add(a[i], b[i]);
    }
    return out;
}

IntVector operator-(const IntVector& a) {
    IntVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = -a[i];
    }
    return out;
}

IntVector operator-(const IntVector& a, const IntVector& b) { return a + (-b); }

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) {
            fail_input("dimension-mismatch", "ragged matrix literal");
        }
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) {
            fail_input("dimension-mismatch", "ragged matrix rows");
        }
        for (std::size_t j = 0; j < cols; ++j) {
            m(i, j) = rows[i][j];
        }
    }
    return m;
}

IntVector IntMatrix::row(std::size_t i) const {
    return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVector IntMatrix::col(std::size_t j) const {
    IntVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        out[i] = (*this)(i, j);
    }
    return out;
}

std::vector<IntVector> IntMatrix::to_rows() const {
    std::vector<IntVector> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        out.push_back(row(i));
    }
    return out;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            t(j, i) = (*this)(i, j);
        }
    }
    return t;
}

bool IntMatrix::is_skew_symmetric() const {
    if (!square()) {
        return false;
    }
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = i; j < cols_; ++j) {
            if ((*this)(i, j) != -(*this)(j, i)) {
                return false;
            }
        }
    }
    return true;
}

IntVector IntMatrix::apply(const IntVector& v) const {
    if (v.size() != cols_) {
        fail_input("dimension-mismatch", "matrix-vector product with wrong length");
    }
    IntVector out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        Int sum = 0;
        for (std::size_t j = 0; j < cols_; ++j) {
            sum = checked_add(sum, checked_mul((*this)(i, j), v[j]));
        }
        out[i] = sum;
    }
    return out;
}

Int IntMatrix::bilinear(const IntVector& a, const IntVector& b) const {
    if (a.size() != rows_) {
        fail_input("dimension-mismatch", "bilinear form argument has wrong length");
    }
    return dot(a, apply(b));
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) {
        fail_input("dimension-mismatch", "matrix product with incompatible shapes");
    }
    IntMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Int aik = a(i, k);
            if (aik == 0) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols_; ++j) {
                out(i, j) = checked_add(out(i, j), checked_mul(aik, b(k, j)));
            }
        }
    }
    return out;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j) {
            os << (j ? ", " : "") << (*this)(i, j);
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

} // namespace qcl
