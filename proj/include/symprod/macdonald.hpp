// Multiplicative generators of H*(Sym^n M^2_g) inside the tensor power:
// xi_i = chi(gamma_i), xi'_i = chi(gamma_{g+i}), eta = chi(delta), and the
// monomial basis they span per degree (odd generators square to zero, so a
// monomial is a generator subset times a power of eta).
#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "symprod/arith.hpp"
#include "symprod/linalg.hpp"
#include "symprod/tensor.hpp"

namespace symprod {

inline TensorElement<Rat> xi(int i, int g, int n) {
    if (i < 1 || i > g) throw std::invalid_argument("xi index out of range");
    return chi(SurfaceClass::gamma(i), g, n);
}

inline TensorElement<Rat> xi_prime(int i, int g, int n) {
    if (i < 1 || i > g) throw std::invalid_argument("xi' index out of range");
    return chi(SurfaceClass::gamma(g + i), g, n);
}

inline TensorElement<Rat> eta(int g, int n) { return chi(SurfaceClass::delta(), g, n); }

/// Product of distinct odd generators (bit t < g is xi_{t+1}, bit t >= g is
/// xi'_{t-g+1}, multiplied in increasing bit order) times eta^eta_pow.
struct MacMonomial {
    std::uint32_t mask = 0;
    int eta_pow = 0;

    int degree() const { return std::popcount(mask) + 2 * eta_pow; }

    friend bool operator<(const MacMonomial& a, const MacMonomial& b) {
        if (a.eta_pow != b.eta_pow) return a.eta_pow < b.eta_pow;
        return a.mask < b.mask;
    }
    friend bool operator==(const MacMonomial& a, const MacMonomial& b) {
        return a.mask == b.mask && a.eta_pow == b.eta_pow;
    }
};

inline std::vector<MacMonomial> mac_monomials_of_degree(int g, int n, int q) {
    std::vector<MacMonomial> out;
    if (q < 0 || q > 2 * n) return out;
    const std::uint32_t mask_end = static_cast<std::uint32_t>(1) << (2 * g);
    for (int c = 0; 2 * c <= q && c <= n; ++c) {
        const int want = q - 2 * c;
        if (want > 2 * g) continue;
        for (std::uint32_t mask = 0; mask < mask_end; ++mask)
            if (std::popcount(mask) == want) out.push_back(MacMonomial{mask, c});
    }
    return out;
}

inline TensorElement<Rat> expand_mac(const MacMonomial& m, int g, int n) {
    TensorElement<Rat> r = TensorElement<Rat>::unit(g, n);
    for (int t = 0; t < 2 * g; ++t)
        if (m.mask & (static_cast<std::uint32_t>(1) << t))
            r = r * chi(SurfaceClass::gamma(t + 1), g, n);
    TensorElement<Rat> e = eta(g, n);
    for (int c = 0; c < m.eta_pow; ++c) r = r * e;
    return r;
}

/// Per-degree expansion matrices of the Macdonald monomials, cached lazily.
/// Supplies span dimensions (the ranks) and exact coordinates of elements of
/// the generated subring.
class MacdonaldBasis {
public:
    struct Degree {
        std::vector<MacMonomial> monomials;
        std::vector<TensorMonomial> rows;
        std::map<TensorMonomial, int> row_index;
        Mat<Rat> matrix;  // rows x monomials
    };

    MacdonaldBasis(int g, int n) : g_(g), n_(n) {
        if (g < 0 || n < 2) throw std::invalid_argument("bad Macdonald ambient");
    }

    int genus() const { return g_; }
    int power() const { return n_; }

    const Degree& degree(int q) {
        auto it = cache_.find(q);
        if (it != cache_.end()) return it->second;
        Degree d;
        d.monomials = mac_monomials_of_degree(g_, n_, q);
        d.rows = degree_basis(g_, n_, q);
        for (int i = 0; i < static_cast<int>(d.rows.size()); ++i)
            d.row_index.emplace(d.rows[static_cast<std::size_t>(i)], i);
        d.matrix = Mat<Rat>(static_cast<int>(d.rows.size()), static_cast<int>(d.monomials.size()));
        for (int col = 0; col < static_cast<int>(d.monomials.size()); ++col) {
            TensorElement<Rat> e = expand_mac(d.monomials[static_cast<std::size_t>(col)], g_, n_);
            for (const auto& [mono, coeff] : e.terms())
                d.matrix.at(d.row_index.at(mono), col) = coeff;
        }
        return cache_.emplace(q, std::move(d)).first->second;
    }

    /// Dimension of the degree-q span of Macdonald monomials over Q.
    long span_dim(int q) {
        const Degree& d = degree(q);
        Mat<Int> m(d.matrix.rows, d.matrix.cols);
        for (int i = 0; i < m.rows; ++i)
            for (int j = 0; j < m.cols; ++j) m.at(i, j) = to_int(d.matrix.at(i, j));
        return rank_bareiss(std::move(m));
    }

    /// Coordinates of a homogeneous degree-q element in the monomial list,
    /// or nullopt when the element is outside the span. Coordinates need not
    /// be unique (the monomials satisfy relations); callers must only use
    /// them through maps that kill relations.
    std::optional<std::vector<Rat>> coordinates(const TensorElement<Rat>& t, int q) {
        const Degree& d = degree(q);
        std::vector<Rat> b(d.rows.size(), Rat(0));
        for (const auto& [mono, coeff] : t.terms()) {
            if (mono.degree() != q) throw std::invalid_argument("coordinates need a homogeneous element");
            auto it = d.row_index.find(mono);
            if (it == d.row_index.end()) return std::nullopt;
            b[static_cast<std::size_t>(it->second)] = coeff;
        }
        return solve_linear(d.matrix, std::move(b));
    }

private:
    int g_;
    int n_;
    std::map<int, Degree> cache_;
};

}  // namespace symprod
