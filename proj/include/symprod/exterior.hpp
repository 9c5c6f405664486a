// Truncated exterior algebra Λ^{≤cut}(a_1..a_s) over Z, Z/2 or Q: the
// cohomology ring of a symmetric product of a punctured surface. Monomials
// are strictly increasing index lists; products of degree above the cut are
// dropped, which is safe because dropped terms can never re-enter lower
// degrees.
#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "symprod/arith.hpp"

namespace symprod {

struct ExtAlgebra {
    int gens = 0;  // number of degree-1 generators, >= 0 (0 = unit-only algebra)
    int cut = 1;   // truncation degree, >= 1

    friend bool operator==(const ExtAlgebra& a, const ExtAlgebra& b) {
        return a.gens == b.gens && a.cut == b.cut;
    }
    friend bool operator!=(const ExtAlgebra& a, const ExtAlgebra& b) { return !(a == b); }
};

/// Public factory: a truncated exterior algebra needs at least one generator
/// and a positive cut.
inline ExtAlgebra make_algebra(int gens, int cut) {
    if (gens < 1) throw std::invalid_argument("exterior algebra needs at least one generator");
    if (cut < 1) throw std::invalid_argument("exterior algebra needs a positive truncation degree");
    return ExtAlgebra{gens, cut};
}

/// Rank of the degree-q component: C(gens, q) below the cut, 0 above.
inline Int ext_dim(const ExtAlgebra& alg, int q) {
    if (q < 0) throw std::invalid_argument("negative degree");
    if (q > alg.cut) return 0;
    return binomial(alg.gens, q);
}

class ExtMonomial {
    std::vector<int> idx_;  // strictly increasing, 1-based

public:
    ExtMonomial() = default;  // the unit monomial

    static ExtMonomial from_indices(std::vector<int> idx) {
        for (std::size_t i = 0; i < idx.size(); ++i) {
            if (idx[i] < 1) throw std::invalid_argument("generator index must be >= 1");
            if (i > 0 && idx[i] <= idx[i - 1])
                throw std::invalid_argument("monomial indices must be strictly increasing");
        }
        ExtMonomial m;
        m.idx_ = std::move(idx);
        return m;
    }

    int degree() const { return static_cast<int>(idx_.size()); }
    const std::vector<int>& indices() const { return idx_; }
    int max_index() const { return idx_.empty() ? 0 : idx_.back(); }

    friend bool operator==(const ExtMonomial& a, const ExtMonomial& b) { return a.idx_ == b.idx_; }
    friend bool operator<(const ExtMonomial& a, const ExtMonomial& b) {
        if (a.idx_.size() != b.idx_.size()) return a.idx_.size() < b.idx_.size();
        return a.idx_ < b.idx_;
    }
};

struct MonoProd {
    bool zero = true;
    int sign = 1;
    ExtMonomial mono;
};

/// Merge product of two monomials. The sign is the parity of the merge
/// inversions; a repeated index gives zero.
inline MonoProd mono_mul(const ExtMonomial& a, const ExtMonomial& b) {
    const auto& u = a.indices();
    const auto& v = b.indices();
    std::vector<int> out;
    out.reserve(u.size() + v.size());
    std::size_t i = 0, j = 0;
    long inversions = 0;
    while (i < u.size() && j < v.size()) {
        if (u[i] == v[j]) return {};
        if (u[i] < v[j]) {
            out.push_back(u[i++]);
        } else {
            inversions += static_cast<long>(u.size() - i);
            out.push_back(v[j++]);
        }
    }
    while (i < u.size()) out.push_back(u[i++]);
    while (j < v.size()) out.push_back(v[j++]);
    MonoProd r;
    r.zero = false;
    r.sign = (inversions % 2 == 0) ? 1 : -1;
    r.mono = ExtMonomial::from_indices(std::move(out));
    return r;
}

template <class C>
class ExtElement {
    ExtAlgebra alg_;
    std::map<ExtMonomial, C> terms_;

public:
    explicit ExtElement(ExtAlgebra alg) : alg_(alg) {}

    static ExtElement zero(ExtAlgebra alg) { return ExtElement(alg); }

    static ExtElement unit(ExtAlgebra alg) {
        ExtElement e(alg);
        e.terms_.emplace(ExtMonomial{}, C(1));
        return e;
    }

    static ExtElement generator(ExtAlgebra alg, int i) {
        if (i < 1 || i > alg.gens) throw std::invalid_argument("generator index out of range");
        ExtElement e(alg);
        if (alg.cut >= 1) e.terms_.emplace(ExtMonomial::from_indices({i}), C(1));
        return e;
    }

    const ExtAlgebra& algebra() const { return alg_; }
    const std::map<ExtMonomial, C>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    C coeff(const ExtMonomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? C(0) : it->second;
    }

    /// Add c * m. Monomials above the cut are zero in this algebra and are
    /// ignored; out-of-range generator indices are rejected.
    void add_term(const ExtMonomial& m, const C& c) {
        if (m.max_index() > alg_.gens) throw std::invalid_argument("monomial index exceeds generator count");
        if (m.degree() > alg_.cut) return;
        if (symprod::is_zero(c)) return;
        auto [it, fresh] = terms_.emplace(m, c);
        if (!fresh) {
            it->second = it->second + c;
            if (symprod::is_zero(it->second)) terms_.erase(it);
        }
    }

    ExtElement operator+(const ExtElement& rhs) const {
        require_same(rhs);
        ExtElement r = *this;
        for (const auto& [m, c] : rhs.terms_) r.add_term(m, c);
        return r;
    }

    ExtElement operator-(const ExtElement& rhs) const {
        require_same(rhs);
        ExtElement r = *this;
        for (const auto& [m, c] : rhs.terms_) r.add_term(m, -c);
        return r;
    }

    ExtElement operator-() const {
        ExtElement r(alg_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    ExtElement operator*(const ExtElement& rhs) const {
        require_same(rhs);
        ExtElement r(alg_);
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : rhs.terms_) {
                if (ma.degree() + mb.degree() > alg_.cut) continue;
                MonoProd p = mono_mul(ma, mb);
                if (p.zero) continue;
                C c = ca * cb;
                if (p.sign < 0) c = -c;
                r.add_term(p.mono, c);
            }
        return r;
    }

    ExtElement scaled(const C& c) const {
        ExtElement r(alg_);
        if (symprod::is_zero(c)) return r;
        for (const auto& [m, x] : terms_) {
            C y = x * c;
            if (!symprod::is_zero(y)) r.terms_.emplace(m, y);
        }
        return r;
    }

    ExtElement degree_component(int q) const {
        ExtElement r(alg_);
        for (const auto& [m, c] : terms_)
            if (m.degree() == q) r.terms_.emplace(m, c);
        return r;
    }

    friend bool operator==(const ExtElement& a, const ExtElement& b) {
        return a.alg_ == b.alg_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const ExtElement& a, const ExtElement& b) { return !(a == b); }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            std::string cs = coeff_str(c);
            bool neg = !cs.empty() && cs[0] == '-';
            if (neg) cs.erase(cs.begin());
            os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
            first = false;
            std::string mono;
            for (std::size_t i = 0; i < m.indices().size(); ++i) {
                if (i) mono += "*";
                mono += "a" + std::to_string(m.indices()[i]);
            }
            if (mono.empty()) {
                os << cs;
            } else if (cs == "1") {
                os << mono;
            } else {
                os << cs << "*" << mono;
            }
        }
        return os.str();
    }

private:
    void require_same(const ExtElement& rhs) const {
        if (alg_ != rhs.alg_) throw std::invalid_argument("exterior algebra mismatch");
    }
};

/// Coefficientwise reduction Z -> Z/2; a ring homomorphism.
inline ExtElement<GF2> reduce_mod2(const ExtElement<Int>& e) {
    ExtElement<GF2> r(e.algebra());
    for (const auto& [m, c] : e.terms()) r.add_term(m, GF2(c));
    return r;
}

/// Exact conversion of a rational exterior element to integer coefficients;
/// throws when any coefficient is non-integral.
inline ExtElement<Int> to_integer(const ExtElement<Rat>& e) {
    ExtElement<Int> r(e.algebra());
    for (const auto& [m, c] : e.terms()) r.add_term(m, to_int(c));
    return r;
}

}  // namespace symprod
