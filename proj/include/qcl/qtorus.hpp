#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include "qcl/int_matrix.hpp"

namespace qcl {

/// Laurent polynomial in v = q^{1/2} with integer coefficients, kept sparse
/// with no stored zeros.
class QLaurent {
  public:
    QLaurent() = default;
    explicit QLaurent(Int constant);
    static QLaurent monomial(long power, Int coef = 1);

    const std::map<long, Int>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_positive() const noexcept;
    Int coefficient(long power) const;
    long min_power() const;
    long max_power() const;

    void add_term(long power, Int coef);
    QLaurent shifted(long power) const;
    /// Value at v = 1.
    Int at_one() const;

    /// Exact quotient in Z[v, v^{-1}], if one exists.
    std::optional<QLaurent> divide_exact(const QLaurent& divisor) const;

    QLaurent& operator+=(const QLaurent& other);
    QLaurent& operator-=(const QLaurent& other);
    friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
    friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }
    friend QLaurent operator-(const QLaurent& a);
    friend QLaurent operator*(const QLaurent& a, const QLaurent& b);
    friend bool operator==(const QLaurent&, const QLaurent&) = default;

    std::string to_string() const;

  private:
    std::map<long, Int> terms_;
};

using LMatrixPtr = std::shared_ptr<const IntMatrix>;

/// L(a, b) = sum_{i,j} a_i b_j l_ij, the exponent of v in X^a X^b = v^{L(a,b)} X^{a+b}.
Int torus_form(const IntMatrix& L, const IntVector& a, const IntVector& b);

/// Element of the based quantum torus T(L), written in the basis {X^a}.
/// Terms are ordered lexicographically by exponent.
class TorusElement {
  public:
    using Terms = std::map<IntVector, QLaurent>;

    explicit TorusElement(LMatrixPtr L);
    TorusElement(LMatrixPtr L, Terms terms);

    static TorusElement unit(LMatrixPtr L);
    static TorusElement x_pow(LMatrixPtr L, const IntVector& a);

    const LMatrixPtr& L_ptr() const noexcept { return L_; }
    const IntMatrix& L() const noexcept { return *L_; }
    std::size_t rank() const noexcept { return L_->rows(); }
    const Terms& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    QLaurent coefficient(const IntVector& a) const;

    void add_term(const IntVector& a, const QLaurent& coef);
    TorusElement scaled(const QLaurent& c) const;
    /// Multiply every coefficient by v^power.
    TorusElement shifted(long power) const;

    TorusElement& operator+=(const TorusElement& other);
    TorusElement& operator-=(const TorusElement& other);
    friend TorusElement operator+(TorusElement a, const TorusElement& b) { return a += b; }
    friend TorusElement operator-(TorusElement a, const TorusElement& b) { return a -= b; }
    friend TorusElement operator*(const TorusElement& a, const TorusElement& b);
    friend bool operator==(const TorusElement& a, const TorusElement& b);

    std::string to_string() const;

  private:
    void check_same_torus(const TorusElement& other) const;

    LMatrixPtr L_;
    Terms terms_;
};

TorusElement x_pow(const LMatrixPtr& L, const IntVector& a);
TorusElement mul(const TorusElement& p, const TorusElement& q);
TorusElement power(const TorusElement& p, Int n);
/// The unique R with R * q == p; throws not-divisible otherwise.
TorusElement exact_div_right(const TorusElement& p, const TorusElement& q);
bool is_positive(const TorusElement& p);

} // namespace qcl
