#pragma once

#include <boost/rational.hpp>

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcl/int_matrix.hpp"

namespace qcl {

using Rational = boost::rational<Int>;

/// An integral weight, stored in the fundamental-weight basis. Coordinate i
/// is the pairing with the simple coroot h_i.
struct Weight {
    IntVector coords;

    std::size_t rank() const noexcept { return coords.size(); }
    static Weight zero(std::size_t rank) { return Weight{IntVector(rank, 0)}; }
    static Weight fundamental(std::size_t rank, std::size_t i);

    friend Weight operator+(const Weight& a, const Weight& b) { return Weight{a.coords + b.coords}; }
    friend Weight operator-(const Weight& a, const Weight& b) { return Weight{a.coords - b.coords}; }
    friend Weight operator-(const Weight& a) { return Weight{-a.coords}; }
    friend Weight operator*(Int s, const Weight& a) {
        Weight out = a;
        for (Int& c : out.coords) c = checked_mul(s, c);
        return out;
    }
    friend bool operator==(const Weight&, const Weight&) = default;
};

/// An element of the root lattice in simple-root coordinates.
struct Root {
    IntVector coords;

    std::size_t rank() const noexcept { return coords.size(); }
    static Root simple(std::size_t rank, std::size_t i);
    bool is_positive() const;

    friend Root operator+(const Root& a, const Root& b) { return Root{a.coords + b.coords}; }
    friend Root operator-(const Root& a, const Root& b) { return Root{a.coords - b.coords}; }
    friend bool operator==(const Root&, const Root&) = default;
};

/// Symmetrizable Cartan matrix together with its symmetrizers d_i, normalized
/// so that (alpha_i, alpha_i) = 2 d_i and d_i a_ij = d_j a_ji.
class CartanDatum {
  public:
    CartanDatum(IntMatrix cartan, IntVector symmetrizers, std::vector<std::string> labels = {},
                std::string type_label = {});

    /// A1, A2, A3, B2, B3, C3, G2 (Bourbaki numbering).
    static CartanDatum preset(std::string_view name);
    static std::vector<std::string> preset_names();

    std::size_t rank() const noexcept { return cartan_.rows(); }
    const IntMatrix& cartan() const noexcept { return cartan_; }
    const IntVector& symmetrizers() const noexcept { return symmetrizers_; }
    Int a(std::size_t i, std::size_t j) const { return cartan_(i, j); }
    Int d(std::size_t i) const { return symmetrizers_[i]; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& type_label() const noexcept { return type_label_; }
    std::size_t index_of(std::string_view label) const;
    void check_index(std::size_t i) const;

    bool invertible() const noexcept { return inverse_.has_value(); }
    /// Rational inverse of the Cartan matrix, when it exists.
    const std::optional<std::vector<std::vector<Rational>>>& inverse() const noexcept { return inverse_; }

    /// alpha_j expressed in the fundamental-weight basis: column j of A.
    Weight simple_root(std::size_t j) const;
    Weight to_weight(const Root& root) const;
    /// Integral simple-root coordinates of a weight, if it lies in the root
    /// lattice. Requires an invertible Cartan matrix.
    std::optional<Root> root_coords(const Weight& weight) const;

  private:
    IntMatrix cartan_;
    IntVector symmetrizers_;
    std::vector<std::string> labels_;
    std::string type_label_;
    std::optional<std::vector<std::vector<Rational>>> inverse_;
};

/// The invariant symmetric form on weights. Throws form-not-computable when
/// the Cartan matrix is singular.
Rational bilinear_form(const CartanDatum& datum, const Weight& lambda, const Weight& mu);

/// (beta, lambda) for beta in the root lattice; always integral and defined
/// for every symmetrizable datum.
Int pair(const CartanDatum& datum, const Root& beta, const Weight& lambda);
Int pair(const CartanDatum& datum, const Root& beta, const Root& gamma);

Weight reflect(const CartanDatum& datum, std::size_t i, const Weight& lambda);
Root reflect(const CartanDatum& datum, std::size_t i, const Root& beta);

struct PositionMaps {
    // Positions are 0-based. k_plus == size() and k_minus == -1 encode the
    // empty-set conventions.
    long k_plus;
    long k_minus;
    long k_min;
    long k_max;
};

/// A sequence of simple-reflection indices (0-based) over a Cartan datum.
class WeylWord {
  public:
    WeylWord(std::shared_ptr<const CartanDatum> datum, std::vector<std::size_t> letters);

    const CartanDatum& datum() const noexcept { return *datum_; }
    const std::shared_ptr<const CartanDatum>& datum_ptr() const noexcept { return datum_; }
    const std::vector<std::size_t>& letters() const noexcept { return letters_; }
    std::size_t size() const noexcept { return letters_.size(); }
    std::size_t letter(std::size_t k) const { return letters_.at(k); }

    /// w_{<=k} lambda = s_{i_1} ... s_{i_k} lambda.
    Weight act(const Weight& lambda, std::size_t prefix_len) const;
    /// lambda - w_{<=k} lambda, which always lies in the root lattice.
    Root drop(const Weight& lambda, std::size_t prefix_len) const;
    Root act(const Root& beta, std::size_t prefix_len) const;

    bool is_reduced() const;
    /// beta_k = w_{<k} alpha_{i_k}; throws not-reduced.
    std::vector<Root> beta_roots() const;
    std::vector<Weight> beta_sequence() const;

    PositionMaps position_maps(std::size_t k) const;
    long k_plus(std::size_t k) const;
    long k_minus(std::size_t k) const;

    friend bool operator==(const WeylWord& a, const WeylWord& b) {
        return a.letters_ == b.letters_ && a.datum_->cartan() == b.datum_->cartan();
    }

  private:
    std::shared_ptr<const CartanDatum> datum_;
    std::vector<std::size_t> letters_;
};

/// Positive roots of a finite-type datum, in simple-root coordinates, sorted
/// by height then lexicographically. Throws form-not-computable for infinite
/// types (detected by a size bound).
std::vector<Root> positive_roots(const CartanDatum& datum);

/// Every reduced word of the longest Weyl group element, lexicographically.
std::vector<std::vector<std::size_t>> reduced_words_of_longest(const CartanDatum& datum);

} // namespace qcl
