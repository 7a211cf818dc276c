#include "qcl/qtorus.hpp"

#include <sstream>
#include <vector>

namespace qcl {

QLaurent::QLaurent(Int constant) {
    if (constant != 0) {
        terms_.emplace(0, constant);
    }
}

QLaurent QLaurent::monomial(long power, Int coef) {
    QLaurent out;
    out.add_term(power, coef);
    return out;
}

bool QLaurent::is_positive() const noexcept {
    for (const auto& [p, c] : terms_) {
        if (c < 0) {
            return false;
        }
    }
    return true;
}

Int QLaurent::coefficient(long power) const {
    auto it = terms_.find(power);
    return it == terms_.end() ? 0 : it->second;
}

long QLaurent::min_power() const { return terms_.empty() ? 0 : terms_.begin()->first; }
long QLaurent::max_power() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

void QLaurent::add_term(long power, Int coef) {
    if (coef == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(power, coef);
    if (!inserted) {
        it->second = checked_add(it->second, coef);
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

QLaurent QLaurent::shifted(long power) const {
    if (power == 0) {
        return *this;
    }
    QLaurent out;
    for (const auto& [p, c] : terms_) {
        out.terms_.emplace_hint(out.terms_.end(), p + power, c);
    }
    return out;
}

Int QLaurent::at_one() const {
    Int sum = 0;
    for (const auto& [p, c] : terms_) {
        sum = checked_add(sum, c);
    }
    return sum;
}

std::optional<QLaurent> QLaurent::divide_exact(const QLaurent& divisor) const {
    if (divisor.is_zero()) {
        fail_input("division-by-zero", "Laurent polynomial division by zero");
    }
    if (is_zero()) {
        return QLaurent{};
    }
    const long dmax = divisor.max_power();
    const Int dlead = divisor.terms_.rbegin()->second;
    const long lowest = min_power() - divisor.min_power();
    QLaurent quotient;
    QLaurent rem = *this;
    while (!rem.is_zero()) {
        const auto [p, c] = *rem.terms_.rbegin();
        const long shift = p - dmax;
        if (shift < lowest || c % dlead != 0) {
            return std::nullopt;
        }
        const QLaurent term = monomial(shift, c / dlead);
        quotient += term;
        rem -= term * divisor;
    }
    return quotient;
}

QLaurent& QLaurent::operator+=(const QLaurent& other) {
    for (const auto& [p, c] : other.terms_) {
        add_term(p, c);
    }
    return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& other) {
    for (const auto& [p, c] : other.terms_) {
        add_term(p, -c);
    }
    return *this;
}

QLaurent operator-(const QLaurent& a) {
    QLaurent out;
    for (const auto& [p, c] : a.terms_) {
        out.terms_.emplace_hint(out.terms_.end(), p, -c);
    }
    return out;
}

QLaurent operator*(const QLaurent& a, const QLaurent& b) {
    QLaurent out;
    for (const auto& [pa, ca] : a.terms_) {
        for (const auto& [pb, cb] : b.terms_) {
            out.add_term(pa + pb, checked_mul(ca, cb));
        }
    }
    return out;
}

std::string QLaurent::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : terms_) {
        if (!first) {
            os << (c < 0 ? " - " : " + ");
        } else if (c < 0) {
            os << '-';
        }
        first = false;
        const Int mag = c < 0 ? -c : c;
        if (p == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) {
            os << mag << '*';
        }
        os << "v^" << p;
    }
    return os.str();
}

Int torus_form(const IntMatrix& L, const IntVector& a, const IntVector& b) { return L.bilinear(a, b); }

TorusElement::TorusElement(LMatrixPtr L) : L_(std::move(L)) {
    if (!L_ || !L_->is_skew_symmetric()) {
        fail_input("invalid-torus", "quantum torus needs a skew-symmetric integer matrix");
    }
}

TorusElement::TorusElement(LMatrixPtr L, Terms terms) : TorusElement(std::move(L)) {
    for (auto& [a, c] : terms) {
        add_term(a, c);
    }
}

TorusElement TorusElement::unit(LMatrixPtr L) {
    const std::size_t n = L ? L->rows() : 0;
    return x_pow(std::move(L), IntVector(n, 0));
}

TorusElement TorusElement::x_pow(LMatrixPtr L, const IntVector& a) {
    TorusElement out(std::move(L));
    out.add_term(a, QLaurent(1));
    return out;
}

QLaurent TorusElement::coefficient(const IntVector& a) const {
    auto it = terms_.find(a);
    return it == terms_.end() ? QLaurent{} : it->second;
}

void TorusElement::add_term(const IntVector& a, const QLaurent& coef) {
    if (a.size() != rank()) {
        fail_input("dimension-mismatch",
                   "exponent of length " + std::to_string(a.size()) + " in rank " + std::to_string(rank()) + " torus");
    }
    if (coef.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(a, coef);
    if (!inserted) {
        it->second += coef;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

TorusElement TorusElement::scaled(const QLaurent& c) const {
    TorusElement out(L_);
    for (const auto& [a, coef] : terms_) {
        out.add_term(a, coef * c);
    }
    return out;
}

TorusElement TorusElement::shifted(long power) const {
    TorusElement out(L_);
    for (const auto& [a, coef] : terms_) {
        out.terms_.emplace_hint(out.terms_.end(), a, coef.shifted(power));
    }
    return out;
}

void TorusElement::check_same_torus(const TorusElement& other) const {
    if (L_ != other.L_ && *L_ != *other.L_) {
        fail_input("mixed-torus", "elements live in different quantum tori");
    }
}

TorusElement& TorusElement::operator+=(const TorusElement& other) {
    check_same_torus(other);
    for (const auto& [a, c] : other.terms_) {
        add_term(a, c);
    }
    return *this;
}

TorusElement& TorusElement::operator-=(const TorusElement& other) {
    check_same_torus(other);
    for (const auto& [a, c] : other.terms_) {
        add_term(a, -c);
    }
    return *this;
}

TorusElement operator*(const TorusElement& p, const TorusElement& q) {
    p.check_same_torus(q);
    const IntMatrix& L = *p.L_;
    // Precompute L b for every exponent of q so each pair costs one dot product.
    std::vector<std::pair<const TorusElement::Terms::value_type*, IntVector>> right;
    right.reserve(q.terms_.size());
    for (const auto& entry : q.terms_) {
        right.emplace_back(&entry, L.apply(entry.first));
    }
    TorusElement out(p.L_);
    for (const auto& [a, ca] : p.terms_) {
        for (const auto& [entry, Lb] : right) {
            const long shift = static_cast<long>(dot(a, Lb));
            out.add_term(a + entry->first, (ca * entry->second).shifted(shift));
        }
    }
    return out;
}

bool operator==(const TorusElement& a, const TorusElement& b) {
    return (a.L_ == b.L_ || *a.L_ == *b.L_) && a.terms_ == b.terms_;
}

std::string TorusElement::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [a, c] : terms_) {
        os << (first ? "" : " + ") << '(' << c.to_string() << ")*X^(";
        for (std::size_t i = 0; i < a.size(); ++i) {
            os << (i ? "," : "") << a[i];
        }
        os << ')';
        first = false;
    }
    return os.str();
}

TorusElement x_pow(const LMatrixPtr& L, const IntVector& a) { return TorusElement::x_pow(L, a); }

TorusElement mul(const TorusElement& p, const TorusElement& q) { return p * q; }

TorusElement power(const TorusElement& p, Int n) {
    if (n < 0) {
        fail_input("negative-entry", "only non-negative powers of general elements are defined");
    }
    TorusElement out = TorusElement::unit(p.L_ptr());
    for (Int i = 0; i < n; ++i) {
        out = out * p;
    }
    return out;
}

TorusElement exact_div_right(const TorusElement& p, const TorusElement& q) {
    if (q.is_zero()) {
        fail_input("division-by-zero", "right division by the zero element");
    }
    if (p.L_ptr() != q.L_ptr() && p.L() != q.L()) {
        fail_input("mixed-torus", "elements live in different quantum tori");
    }
    TorusElement quotient(p.L_ptr());
    if (p.is_zero()) {
        return quotient;
    }
    const std::size_t n = p.rank();
    // Coordinate-wise degrees are additive in the domain T(L), so every
    // exponent of the quotient lies in this box.
    IntVector lo(n);
    IntVector hi(n);
    for (std::size_t i = 0; i < n; ++i) {
        Int pmin = p.terms().begin()->first[i];
        Int pmax = pmin;
        for (const auto& [a, c] : p.terms()) {
            pmin = std::min(pmin, a[i]);
            pmax = std::max(pmax, a[i]);
        }
        Int qmin = q.terms().begin()->first[i];
        Int qmax = qmin;
        for (const auto& [a, c] : q.terms()) {
            qmin = std::min(qmin, a[i]);
            qmax = std::max(qmax, a[i]);
        }
        lo[i] = pmin - qmin;
        hi[i] = pmax - qmax;
        if (lo[i] > hi[i]) {
            refuse("not-divisible", "exponent ranges are incompatible with exact division");
        }
    }
    const auto& [lead_exp, lead_coef] = *q.terms().rbegin();
    TorusElement rem = p;
    while (!rem.is_zero()) {
        const auto& [rexp, rcoef] = *rem.terms().rbegin();
        const IntVector e = rexp - lead_exp;
        for (std::size_t i = 0; i < n; ++i) {
            if (e[i] < lo[i] || e[i] > hi[i]) {
                refuse("not-divisible", "leading-term elimination left the admissible exponent box");
            }
        }
        auto c = rcoef.divide_exact(lead_coef);
        if (!c) {
            refuse("not-divisible", "leading coefficient does not divide in Z[v^{+-1}]");
        }
        const long shift = static_cast<long>(torus_form(p.L(), e, lead_exp));
        TorusElement term(p.L_ptr());
        term.add_term(e, c->shifted(-shift));
        quotient += term;
        rem -= term * q;
    }
    return quotient;
}

bool is_positive(const TorusElement& p) {
    for (const auto& [a, c] : p.terms()) {
        if (!c.is_positive()) {
            return false;
        }
    }
    return true;
}

} // namespace qcl
