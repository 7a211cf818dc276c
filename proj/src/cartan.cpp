#include "qcl/cartan.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace qcl {

namespace {

std::optional<std::vector<std::vector<Rational>>> rational_inverse(const IntMatrix& m) {
    const std::size_t n = m.rows();
    std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(2 * n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            aug[i][j] = Rational(m(i, j));
        }
        aug[i][n + i] = Rational(1);
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && aug[pivot][col].numerator() == 0) {
            ++pivot;
        }
        if (pivot == n) {
            return std::nullopt;
        }
        std::swap(aug[pivot], aug[col]);
        const Rational p = aug[col][col];
        for (auto& x : aug[col]) {
            x /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || aug[r][col].numerator() == 0) {
                continue;
            }
            const Rational f = aug[r][col];
            for (std::size_t c = 0; c < 2 * n; ++c) {
                aug[r][c] -= f * aug[col][c];
            }
        }
    }
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        std::copy(aug[i].begin() + static_cast<std::ptrdiff_t>(n), aug[i].end(), inv[i].begin());
    }
    return inv;
}

} // namespace

Weight Weight::fundamental(std::size_t rank, std::size_t i) {
    Weight w = zero(rank);
    w.coords.at(i) = 1;
    return w;
}

Root Root::simple(std::size_t rank, std::size_t i) {
    Root r{IntVector(rank, 0)};
    r.coords.at(i) = 1;
    return r;
}

bool Root::is_positive() const {
    bool nonzero = false;
    for (Int c : coords) {
        if (c < 0) {
            return false;
        }
        nonzero = nonzero || c != 0;
    }
    return nonzero;
}

CartanDatum::CartanDatum(IntMatrix cartan, IntVector symmetrizers, std::vector<std::string> labels,
                         std::string type_label)
    : cartan_(std::move(cartan)), symmetrizers_(std::move(symmetrizers)), labels_(std::move(labels)),
      type_label_(std::move(type_label)) {
    const std::size_t n = cartan_.rows();
    if (!cartan_.square() || n == 0) {
        fail_input("invalid-cartan", "Cartan matrix must be square and nonempty");
    }
    if (symmetrizers_.size() != n) {
        fail_input("invalid-cartan", "need one symmetrizer per index");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (symmetrizers_[i] < 1) {
            fail_input("invalid-cartan", "symmetrizers must be positive integers");
        }
        if (cartan_(i, i) != 2) {
            fail_input("invalid-cartan", "diagonal entries must equal 2");
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) {
                continue;
            }
            if (cartan_(i, j) > 0) {
                fail_input("invalid-cartan", "off-diagonal entries must be non-positive");
            }
            if ((cartan_(i, j) == 0) != (cartan_(j, i) == 0)) {
                fail_input("invalid-cartan", "a_ij = 0 must be equivalent to a_ji = 0");
            }
            if (symmetrizers_[i] * cartan_(i, j) != symmetrizers_[j] * cartan_(j, i)) {
                fail_input("invalid-cartan", "d_i a_ij must equal d_j a_ji");
            }
        }
    }
    if (labels_.empty()) {
        for (std::size_t i = 0; i < n; ++i) {
            labels_.push_back(std::to_string(i + 1));
        }
    } else if (labels_.size() != n) {
        fail_input("invalid-cartan", "need one label per index");
    }
    inverse_ = rational_inverse(cartan_);
}

CartanDatum CartanDatum::preset(std::string_view name) {
    if (name == "A1") {
        return CartanDatum(IntMatrix{{2}}, {1}, {}, "A1");
    }
    if (name == "A2") {
        return CartanDatum(IntMatrix{{2, -1}, {-1, 2}}, {1, 1}, {}, "A2");
    }
    if (name == "A3") {
        return CartanDatum(IntMatrix{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}, {1, 1, 1}, {}, "A3");
    }
    if (name == "B2") {
        // alpha_1 long, alpha_2 short
        return CartanDatum(IntMatrix{{2, -1}, {-2, 2}}, {2, 1}, {}, "B2");
    }
    if (name == "B3") {
        return CartanDatum(IntMatrix{{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}}, {2, 2, 1}, {}, "B3");
    }
    if (name == "C3") {
        return CartanDatum(IntMatrix{{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}}, {1, 1, 2}, {}, "C3");
    }
    if (name == "G2") {
        // alpha_1 short, alpha_2 long
        return CartanDatum(IntMatrix{{2, -3}, {-1, 2}}, {1, 3}, {}, "G2");
    }
    fail_input("unknown-type", "no built-in Cartan datum named '" + std::string(name) + "'");
}

std::vector<std::string> CartanDatum::preset_names() { return {"A1", "A2", "A3", "B2", "B3", "C3", "G2"}; }

std::size_t CartanDatum::index_of(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i] == label) {
            return i;
        }
    }
    fail_input("unknown-index", "no index labelled '" + std::string(label) + "'");
}

void CartanDatum::check_index(std::size_t i) const {
    if (i >= rank()) {
        fail_input("unknown-index", "index " + std::to_string(i) + " outside the index set");
    }
}

Weight CartanDatum::simple_root(std::size_t j) const {
    check_index(j);
    return Weight{cartan_.col(j)};
}

Weight CartanDatum::to_weight(const Root& root) const {
    if (root.rank() != rank()) {
        fail_input("dimension-mismatch", "root of wrong rank");
    }
    return Weight{cartan_.apply(root.coords)};
}

std::optional<Root> CartanDatum::root_coords(const Weight& weight) const {
    if (weight.rank() != rank()) {
        fail_input("dimension-mismatch", "weight of wrong rank");
    }
    if (!inverse_) {
        refuse("form-not-computable", "root-lattice coordinates need an invertible Cartan matrix");
    }
    Root out{IntVector(rank(), 0)};
    for (std::size_t i = 0; i < rank(); ++i) {
        Rational c(0);
        for (std::size_t j = 0; j < rank(); ++j) {
            c += (*inverse_)[i][j] * weight.coords[j];
        }
        if (c.denominator() != 1) {
            return std::nullopt;
        }
        out.coords[i] = c.numerator();
    }
    return out;
}

Rational bilinear_form(const CartanDatum& datum, const Weight& lambda, const Weight& mu) {
    if (lambda.rank() != datum.rank() || mu.rank() != datum.rank()) {
        fail_input("dimension-mismatch", "weight of wrong rank");
    }
    const auto& inv = datum.inverse();
    if (!inv) {
        refuse("form-not-computable", "Cartan matrix is singular; pair a root-lattice element instead");
    }
    // lambda = sum_i c_i alpha_i with c = A^{-1} lambda; (alpha_i, varpi_j) = d_i delta_ij.
    Rational sum(0);
    for (std::size_t i = 0; i < datum.rank(); ++i) {
        Rational c(0);
        for (std::size_t j = 0; j < datum.rank(); ++j) {
            c += (*inv)[i][j] * lambda.coords[j];
        }
        sum += c * datum.d(i) * mu.coords[i];
    }
    return sum;
}

Int pair(const CartanDatum& datum, const Root& beta, const Weight& lambda) {
    if (beta.rank() != datum.rank() || lambda.rank() != datum.rank()) {
        fail_input("dimension-mismatch", "argument of wrong rank");
    }
    Int sum = 0;
    for (std::size_t i = 0; i < datum.rank(); ++i) {
        sum = checked_add(sum, checked_mul(checked_mul(beta.coords[i], datum.d(i)), lambda.coords[i]));
    }
    return sum;
}

Int pair(const CartanDatum& datum, const Root& beta, const Root& gamma) {
    return pair(datum, beta, datum.to_weight(gamma));
}

Weight reflect(const CartanDatum& datum, std::size_t i, const Weight& lambda) {
    datum.check_index(i);
    if (lambda.rank() != datum.rank()) {
        fail_input("dimension-mismatch", "weight of wrong rank");
    }
    const Int h = lambda.coords[i];
    Weight out = lambda;
    for (std::size_t j = 0; j < datum.rank(); ++j) {
        out.coords[j] = checked_add(out.coords[j], -checked_mul(h, datum.a(j, i)));
    }
    return out;
}

Root reflect(const CartanDatum& datum, std::size_t i, const Root& beta) {
    datum.check_index(i);
    if (beta.rank() != datum.rank()) {
        fail_input("dimension-mismatch", "root of wrong rank");
    }
    // <h_i, beta> = sum_j a_ij c_j
    Int h = 0;
    for (std::size_t j = 0; j < datum.rank(); ++j) {
        h = checked_add(h, checked_mul(datum.a(i, j), beta.coords[j]));
    }
    Root out = beta;
    out.coords[i] = checked_add(out.coords[i], -h);
    return out;
}

WeylWord::WeylWord(std::shared_ptr<const CartanDatum> datum, std::vector<std::size_t> letters)
    : datum_(std::move(datum)), letters_(std::move(letters)) {
    if (!datum_) {
        fail_input("invalid-word", "word needs a Cartan datum");
    }
    for (std::size_t i : letters_) {
        datum_->check_index(i);
    }
}

Weight WeylWord::act(const Weight& lambda, std::size_t prefix_len) const {
    if (prefix_len > size()) {
        fail_input("out-of-range", "prefix length exceeds word length");
    }
    Weight out = lambda;
    for (std::size_t k = prefix_len; k-- > 0;) {
        out = reflect(*datum_, letters_[k], out);
    }
    return out;
}

Root WeylWord::drop(const Weight& lambda, std::size_t prefix_len) const {
    if (prefix_len > size()) {
        fail_input("out-of-range", "prefix length exceeds word length");
    }
    Root acc{IntVector(datum_->rank(), 0)};
    Weight current = lambda;
    for (std::size_t k = prefix_len; k-- > 0;) {
        const std::size_t i = letters_[k];
        acc.coords[i] = checked_add(acc.coords[i], current.coords[i]);
        current = reflect(*datum_, i, current);
    }
    return acc;
}

Root WeylWord::act(const Root& beta, std::size_t prefix_len) const {
    if (prefix_len > size()) {
        fail_input("out-of-range", "prefix length exceeds word length");
    }
    Root out = beta;
    for (std::size_t k = prefix_len; k-- > 0;) {
        out = reflect(*datum_, letters_[k], out);
    }
    return out;
}

bool WeylWord::is_reduced() const {
    for (std::size_t k = 0; k < size(); ++k) {
        if (!act(Root::simple(datum_->rank(), letters_[k]), k).is_positive()) {
            return false;
        }
    }
    return true;
}

std::vector<Root> WeylWord::beta_roots() const {
    std::vector<Root> out;
    out.reserve(size());
    for (std::size_t k = 0; k < size(); ++k) {
        Root beta = act(Root::simple(datum_->rank(), letters_[k]), k);
        if (!beta.is_positive()) {
            fail_input("not-reduced", "word is not a reduced expression (position " + std::to_string(k + 1) + ")");
        }
        out.push_back(std::move(beta));
    }
    return out;
}

std::vector<Weight> WeylWord::beta_sequence() const {
    std::vector<Weight> out;
    for (const Root& beta : beta_roots()) {
        out.push_back(datum_->to_weight(beta));
    }
    return out;
}

PositionMaps WeylWord::position_maps(std::size_t k) const {
    if (k >= size()) {
        fail_input("out-of-range", "position outside the word");
    }
    const long r = static_cast<long>(size());
    const long pos = static_cast<long>(k);
    PositionMaps m{r, -1, pos, pos};
    for (long u = pos + 1; u < r; ++u) {
        if (letters_[static_cast<std::size_t>(u)] == letters_[k]) {
            if (m.k_plus == r) {
                m.k_plus = u;
            }
            m.k_max = u;
        }
    }
    for (long u = pos - 1; u >= 0; --u) {
        if (letters_[static_cast<std::size_t>(u)] == letters_[k]) {
            if (m.k_minus == -1) {
                m.k_minus = u;
            }
            m.k_min = u;
        }
    }
    return m;
}

long WeylWord::k_plus(std::size_t k) const { return position_maps(k).k_plus; }
long WeylWord::k_minus(std::size_t k) const { return position_maps(k).k_minus; }

std::vector<Root> positive_roots(const CartanDatum& datum) {
    constexpr std::size_t kLimit = 4096;
    const std::size_t n = datum.rank();
    std::set<IntVector> seen;
    std::vector<Root> frontier;
    for (std::size_t i = 0; i < n; ++i) {
        frontier.push_back(Root::simple(n, i));
        seen.insert(frontier.back().coords);
    }
    while (!frontier.empty()) {
        std::vector<Root> next;
        for (const Root& beta : frontier) {
            for (std::size_t i = 0; i < n; ++i) {
                Root image = reflect(datum, i, beta);
                if (image.is_positive() && seen.insert(image.coords).second) {
                    next.push_back(std::move(image));
                }
            }
        }
        if (seen.size() > kLimit) {
            refuse("form-not-computable", "root system appears infinite");
        }
        frontier = std::move(next);
    }
    std::vector<Root> out;
    for (const auto& c : seen) {
        out.push_back(Root{c});
    }
    std::sort(out.begin(), out.end(), [](const Root& a, const Root& b) {
        Int ha = 0;
        Int hb = 0;
        for (Int c : a.coords) ha += c;
        for (Int c : b.coords) hb += c;
        return ha != hb ? ha < hb : a.coords < b.coords;
    });
    return out;
}

std::vector<std::vector<std::size_t>> reduced_words_of_longest(const CartanDatum& datum) {
    const std::size_t length = positive_roots(datum).size();
    const std::size_t n = datum.rank();
    auto shared = std::make_shared<const CartanDatum>(datum);
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> prefix;
    std::function<void()> extend = [&]() {
        if (prefix.size() == length) {
            out.push_back(prefix);
            return;
        }
        const WeylWord w(shared, prefix);
        for (std::size_t i = 0; i < n; ++i) {
            if (w.act(Root::simple(n, i), prefix.size()).is_positive()) {
                prefix.push_back(i);
                extend();
                prefix.pop_back();
            }
        }
    };
    extend();
    return out;
}

} // namespace qcl
