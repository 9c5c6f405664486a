// Graded tensor power H*(M^2_g)^{⊗n} with the Koszul-signed S_n action:
// the brute-force ground truth for every symmetric-product computation.
//
// Sign conventions (fixed here once, verified by the ring-automorphism and
// invariance property tests):
//   * product: (a_1⊗..⊗a_n)(b_1⊗..⊗b_n) picks up (-1)^{Σ_{i>j} deg(a_i)deg(b_j)}
//     before the slotwise products a_i b_i;
//   * permutation: sigma moves slot i to slot sigma(i); the sign is the parity
//     of inversions of sigma restricted to odd-degree slots. This is the unique
//     convention making the action act by ring automorphisms.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "symprod/arith.hpp"
#include "symprod/linalg.hpp"
#include "symprod/surface.hpp"

namespace symprod {

struct TensorMonomial {
    std::vector<SurfaceClass> slot;

    int degree() const {
        int d = 0;
        for (auto c : slot) d += c.degree();
        return d;
    }

    friend bool operator==(const TensorMonomial& a, const TensorMonomial& b) { return a.slot == b.slot; }
    friend bool operator<(const TensorMonomial& a, const TensorMonomial& b) {
        if (a.slot.size() != b.slot.size()) return a.slot.size() < b.slot.size();
        for (std::size_t i = 0; i < a.slot.size(); ++i) {
            if (a.slot[i] != b.slot[i]) return a.slot[i] < b.slot[i];
        }
        return false;
    }

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < slot.size(); ++i) {
            if (i) s += "x";
            s += slot[i].str();
        }
        return s;
    }
};

template <class C>
class TensorElement {
    int genus_ = 0;
    int power_ = 1;
    std::map<TensorMonomial, C> terms_;

    void check_monomial(const TensorMonomial& m) const {
        if (static_cast<int>(m.slot.size()) != power_)
            throw std::invalid_argument("tensor monomial has wrong number of slots");
        for (auto c : m.slot) check_surface_class(c, genus_);
    }

public:
    TensorElement(int g, int n) : genus_(g), power_(n) {
        if (g < 0) throw std::invalid_argument("negative genus");
        if (n < 1) throw std::invalid_argument("tensor power must be >= 1");
    }

    static TensorElement zero(int g, int n) { return TensorElement(g, n); }

    static TensorElement unit(int g, int n) {
        TensorElement e(g, n);
        TensorMonomial m;
        m.slot.assign(static_cast<std::size_t>(n), SurfaceClass::unit());
        e.terms_.emplace(std::move(m), C(1));
        return e;
    }

    int genus() const { return genus_; }
    int power() const { return power_; }
    const std::map<TensorMonomial, C>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    C coeff(const TensorMonomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? C(0) : it->second;
    }

    void add_term(const TensorMonomial& m, const C& c) {
        if (symprod::is_zero(c)) return;
        check_monomial(m);
        auto [it, fresh] = terms_.emplace(m, c);
        if (!fresh) {
            it->second = it->second + c;
            if (symprod::is_zero(it->second)) terms_.erase(it);
        }
    }

    TensorElement operator+(const TensorElement& rhs) const {
        require_same(rhs);
        TensorElement r = *this;
        for (const auto& [m, c] : rhs.terms_) r.add_term(m, c);
        return r;
    }

    TensorElement operator-(const TensorElement& rhs) const {
        require_same(rhs);
        TensorElement r = *this;
        for (const auto& [m, c] : rhs.terms_) r.add_term(m, -c);
        return r;
    }

    TensorElement operator-() const {
        TensorElement r(genus_, power_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    TensorElement operator*(const TensorElement& rhs) const {
        require_same(rhs);
        TensorElement r(genus_, power_);
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : rhs.terms_) {
                // Koszul sign: parity of Σ_i deg(a_i) * #{odd-degree b_j, j < i}.
                int odd_prefix = 0;
                int sign = 1;
                bool dead = false;
                TensorMonomial prod;
                prod.slot.reserve(static_cast<std::size_t>(power_));
                for (int i = 0; i < power_; ++i) {
                    auto ui = static_cast<std::size_t>(i);
                    if ((ma.slot[ui].degree() & 1) && (odd_prefix & 1)) sign = -sign;
                    if (mb.slot[ui].degree() & 1) ++odd_prefix;
                }
                for (int i = 0; i < power_ && !dead; ++i) {
                    auto ui = static_cast<std::size_t>(i);
                    SurfProd p = surface_mul(ma.slot[ui], mb.slot[ui], genus_);
                    if (p.coeff == 0) { dead = true; break; }
                    if (p.coeff < 0) sign = -sign;
                    prod.slot.push_back(p.cls);
                }
                if (dead) continue;
                C c = ca * cb;
                if (sign < 0) c = -c;
                r.add_term(prod, c);
            }
        return r;
    }

    TensorElement scaled(const C& c) const {
        TensorElement r(genus_, power_);
        if (symprod::is_zero(c)) return r;
        for (const auto& [m, x] : terms_) {
            C y = x * c;
            if (!symprod::is_zero(y)) r.terms_.emplace(m, y);
        }
        return r;
    }

    TensorElement degree_component(int q) const {
        TensorElement r(genus_, power_);
        for (const auto& [m, c] : terms_)
            if (m.degree() == q) r.terms_.emplace(m, c);
        return r;
    }

    /// Degree when homogeneous (zero counts as every degree), nullopt otherwise.
    std::optional<int> homogeneous_degree() const {
        std::optional<int> d;
        for (const auto& [m, c] : terms_) {
            int q = m.degree();
            if (!d) d = q;
            else if (*d != q) return std::nullopt;
        }
        return d ? d : std::optional<int>(0);
    }

    friend bool operator==(const TensorElement& a, const TensorElement& b) {
        return a.genus_ == b.genus_ && a.power_ == b.power_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const TensorElement& a, const TensorElement& b) { return !(a == b); }

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
            if (cs != "1") os << cs << "*";
            os << m.str();
        }
        return os.str();
    }

private:
    void require_same(const TensorElement& rhs) const {
        if (genus_ != rhs.genus_ || power_ != rhs.power_)
            throw std::invalid_argument("tensor ambient mismatch");
    }
};

/// Symmetrization: the sum of the n placements of a surface class.
template <class C = Rat>
TensorElement<C> chi(SurfaceClass w, int g, int n) {
    check_surface_class(w, g);
    TensorElement<C> r(g, n);
    if (w.is_unit()) {
        // n copies of the unit monomial collapse to n * 1.
        return TensorElement<C>::unit(g, n).scaled(C(n));
    }
    for (int i = 0; i < n; ++i) {
        TensorMonomial m;
        m.slot.assign(static_cast<std::size_t>(n), SurfaceClass::unit());
        m.slot[static_cast<std::size_t>(i)] = w;
        r.add_term(m, C(1));
    }
    return r;
}

/// Linear extension of chi to sparse surface elements; chi(0) = 0.
template <class C = Rat>
TensorElement<C> chi(const SurfaceElem& w, int g, int n) {
    TensorElement<C> r(g, n);
    for (const auto& [cls, coeff] : w) r = r + chi<C>(cls, g, n).scaled(C(coeff));
    return r;
}

inline void check_permutation(const std::vector<int>& sigma, int n) {
    if (static_cast<int>(sigma.size()) != n) throw std::invalid_argument("permutation size mismatch");
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : sigma) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("not a permutation of 0..n-1");
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

/// Koszul-signed slot permutation: slot i moves to slot sigma[i].
template <class C>
TensorElement<C> permute(const std::vector<int>& sigma, const TensorElement<C>& t) {
    const int n = t.power();
    check_permutation(sigma, n);
    TensorElement<C> r(t.genus(), n);
    for (const auto& [m, c] : t.terms()) {
        TensorMonomial out;
        out.slot.assign(static_cast<std::size_t>(n), SurfaceClass::unit());
        int sign = 1;
        for (int i = 0; i < n; ++i) {
            out.slot[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])] =
                m.slot[static_cast<std::size_t>(i)];
            if ((m.slot[static_cast<std::size_t>(i)].degree() & 1) == 0) continue;
            for (int j = i + 1; j < n; ++j) {
                if ((m.slot[static_cast<std::size_t>(j)].degree() & 1) == 0) continue;
                if (sigma[static_cast<std::size_t>(i)] > sigma[static_cast<std::size_t>(j)]) sign = -sign;
            }
        }
        C cc = c;
        if (sign < 0) cc = -cc;
        r.add_term(out, cc);
    }
    return r;
}

/// All tensor monomials of the given total degree, in map order.
inline std::vector<TensorMonomial> degree_basis(int g, int n, int q) {
    if (g < 0 || n < 1) throw std::invalid_argument("bad tensor ambient");
    std::vector<TensorMonomial> out;
    if (q < 0 || q > 2 * n) return out;
    std::vector<SurfaceClass> classes;
    classes.push_back(SurfaceClass::unit());
    for (int j = 1; j <= 2 * g; ++j) classes.push_back(SurfaceClass::gamma(j));
    classes.push_back(SurfaceClass::delta());
    TensorMonomial cur;
    cur.slot.resize(static_cast<std::size_t>(n), SurfaceClass::unit());
    auto rec = [&](auto&& self, int slot, int rem) -> void {
        if (slot == n) {
            if (rem == 0) out.push_back(cur);
            return;
        }
        for (auto c : classes) {
            if (c.degree() > rem) continue;
            cur.slot[static_cast<std::size_t>(slot)] = c;
            self(self, slot + 1, rem - c.degree());
        }
        cur.slot[static_cast<std::size_t>(slot)] = SurfaceClass::unit();
    };
    rec(rec, 0, q);
    std::sort(out.begin(), out.end());
    return out;
}

/// q-th Betti number of Sym^n M^2_g: the rank over Q of the averaging
/// projector (1/n!) Σ_sigma on the degree-q slice. The 1/n! factor does not
/// change the rank, so the elimination runs fraction-free on n! * P.
inline long invariant_dim(int g, int n, int q) {
    if (n < 2) throw std::invalid_argument("tensor power must be >= 2 here");
    if (q < 0 || q > 2 * n) throw std::invalid_argument("degree out of range");
    const std::vector<TensorMonomial> basis = degree_basis(g, n, q);
    const int d = static_cast<int>(basis.size());
    if (d == 0) return 0;
    std::map<TensorMonomial, int> index;
    for (int i = 0; i < d; ++i) index.emplace(basis[static_cast<std::size_t>(i)], i);
    Mat<Int> proj(d, d);
    for (int col = 0; col < d; ++col) {
        TensorElement<Rat> e(g, n);
        e.add_term(basis[static_cast<std::size_t>(col)], Rat(1));
        for_each_permutation(n, [&](const std::vector<int>& sigma) {
            TensorElement<Rat> img = permute(sigma, e);
            for (const auto& [m, c] : img.terms())
                proj.at(index.at(m), col) += to_int(c);
        });
    }
    return rank_bareiss(std::move(proj));
}

/// Pairing with the fundamental class of Sym^n M^2_g: the coefficient of
/// delta⊗..⊗delta divided by n! (the degree of the branched covering by the
/// n-fold product). Requires a homogeneous top-degree input.
inline Rat eval_top(const TensorElement<Rat>& t) {
    const int n = t.power();
    auto d = t.homogeneous_degree();
    if (!d || (*d != 2 * n && !t.is_zero()))
        throw std::invalid_argument("eval_top needs a homogeneous element of top degree");
    TensorMonomial all_delta;
    all_delta.slot.assign(static_cast<std::size_t>(n), SurfaceClass::delta());
    return t.coeff(all_delta) / Rat(factorial(n));
}

}  // namespace symprod
