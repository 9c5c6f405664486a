// Characteristic classes of Sym^n M^2_g and Sym^n M^2_{g,k}: the product
// formula for the total Chern class, restriction to the punctured manifold,
// Stiefel-Whitney classes by mod-2 reduction, Pontrjagin classes, the w2
// alternating form, and the Euler-characteristic cross-check.
#pragma once

#include <stdexcept>
#include <vector>

#include "symprod/arith.hpp"
#include "symprod/exterior.hpp"
#include "symprod/linalg.hpp"
#include "symprod/macdonald.hpp"
#include "symprod/tensor.hpp"

namespace symprod {

struct ChernClosed {
    int g = 0;
    int n = 2;
    TensorElement<Rat> total = TensorElement<Rat>(0, 2);
    std::vector<TensorElement<Rat>> c;  // c[q] = degree-2q part, q = 0..n
};

/// (1 + eta)^e for any integer e, via the generalized binomial series; exact
/// because eta^{n+1} = 0.
inline TensorElement<Rat> one_plus_eta_pow(int e, int g, int n) {
    TensorElement<Rat> r(g, n);
    TensorElement<Rat> eta_j = TensorElement<Rat>::unit(g, n);
    const TensorElement<Rat> et = eta(g, n);
    for (int j = 0; j <= n; ++j) {
        Int b = binomial(e, j);
        if (!is_zero(b)) r = r + eta_j.scaled(Rat(b));
        if (j < n) eta_j = eta_j * et;
    }
    return r;
}

/// Total Chern class of Sym^n M^2_g:
///   (1+eta)^{n-2g+1} (1 + eta - xi_1 xi'_1) ... (1 + eta - xi_g xi'_g).
/// Negative exponents are handled by the truncated geometric series.
inline ChernClosed chern_total_closed(int g, int n) {
    if (g < 0) throw std::invalid_argument("negative genus");
    if (n < 2) throw std::invalid_argument("symmetric power must be >= 2");
    TensorElement<Rat> total = one_plus_eta_pow(n - 2 * g + 1, g, n);
    const TensorElement<Rat> et = eta(g, n);
    for (int i = 1; i <= g; ++i) {
        TensorElement<Rat> factor = TensorElement<Rat>::unit(g, n) + et - xi(i, g, n) * xi_prime(i, g, n);
        total = total * factor;
    }
    ChernClosed out;
    out.g = g;
    out.n = n;
    out.total = total;
    out.c.reserve(static_cast<std::size_t>(n) + 1);
    for (int q = 0; q <= n; ++q) out.c.push_back(total.degree_component(2 * q));
    return out;
}

struct ChernPunctured {
    int g = 0;
    int k = 1;
    int n = 2;
    ExtAlgebra alg;
    ExtElement<Int> total = ExtElement<Int>(ExtAlgebra{});
    std::vector<ExtElement<Int>> c;  // c[q] = degree-2q part, q = 0..n
};

inline void check_punctured_params(int g, int k, int n) {
    if (g < 0) throw std::invalid_argument("negative genus");
    if (k < 1) throw std::invalid_argument("need at least one puncture");
    if (n < 2) throw std::invalid_argument("symmetric power must be >= 2");
}

/// Total Chern class of the punctured symmetric product, directly in the
/// truncated exterior algebra: prod_{i=1..g} (1 - a_{2i-1} a_{2i}).
inline ChernPunctured chern_total_punctured(int g, int k, int n) {
    check_punctured_params(g, k, n);
    const int s = 2 * g + k - 1;
    ExtAlgebra alg{s, n};
    ExtElement<Int> total = ExtElement<Int>::unit(alg);
    for (int i = 1; i <= g; ++i) {
        ExtElement<Int> factor = ExtElement<Int>::unit(alg) -
                                 ExtElement<Int>::generator(alg, 2 * i - 1) * ExtElement<Int>::generator(alg, 2 * i);
        total = total * factor;
    }
    ChernPunctured out;
    out.g = g;
    out.k = k;
    out.n = n;
    out.alg = alg;
    out.total = total;
    out.c.reserve(static_cast<std::size_t>(n) + 1);
    for (int q = 0; q <= n; ++q) out.c.push_back(total.degree_component(2 * q));
    return out;
}

/// 1-based alpha index of Macdonald generator bit t: xi_i -> a_{2i-1},
/// xi'_i -> a_{2i}, re-pairing the symplectic basis into adjacent pairs.
inline int alpha_index_of_bit(int t, int g) { return t < g ? 2 * t + 1 : 2 * (t - g) + 2; }

/// Restriction of a closed-manifold class to Sym^n M^2_{g,k}: solve for the
/// element's coordinates in the Macdonald monomials, then apply the ring map
/// chi(gamma_j) -> alpha-basis image, eta -> 0. Throws when the element is
/// not in the subring generated by the chi-images.
inline ExtElement<Int> restrict_punctured(const TensorElement<Rat>& t, int g, int k, int n,
                                          MacdonaldBasis& basis) {
    check_punctured_params(g, k, n);
    if (t.genus() != g || t.power() != n) throw std::invalid_argument("tensor ambient mismatch");
    if (basis.genus() != g || basis.power() != n) throw std::invalid_argument("basis ambient mismatch");
    const int s = 2 * g + k - 1;
    ExtAlgebra alg{s, n};
    ExtElement<Rat> acc(alg);
    for (int q = 0; q <= 2 * n; ++q) {
        TensorElement<Rat> part = t.degree_component(q);
        if (part.is_zero()) continue;
        auto coords = basis.coordinates(part, q);
        if (!coords) throw std::invalid_argument("element is not in the chi-subring representation");
        const auto& monos = basis.degree(q).monomials;
        for (std::size_t i = 0; i < monos.size(); ++i) {
            const Rat& x = (*coords)[i];
            if (is_zero(x) || monos[i].eta_pow > 0) continue;
            ExtElement<Rat> wedge = ExtElement<Rat>::unit(alg);
            for (int bit = 0; bit < 2 * g; ++bit)
                if (monos[i].mask & (static_cast<std::uint32_t>(1) << bit))
                    wedge = wedge * ExtElement<Rat>::generator(alg, alpha_index_of_bit(bit, g));
            acc = acc + wedge.scaled(x);
        }
    }
    return to_integer(acc);
}

inline ExtElement<Int> restrict_punctured(const TensorElement<Rat>& t, int g, int k, int n) {
    MacdonaldBasis basis(g, n);
    return restrict_punctured(t, g, k, n, basis);
}

/// Restriction of full Chern data; must agree with chern_total_punctured.
inline ChernPunctured restrict_chern(const ChernClosed& cc, int k, MacdonaldBasis& basis) {
    ChernPunctured out;
    out.g = cc.g;
    out.k = k;
    out.n = cc.n;
    out.alg = ExtAlgebra{2 * cc.g + k - 1, cc.n};
    out.total = restrict_punctured(cc.total, cc.g, k, cc.n, basis);
    out.c.reserve(static_cast<std::size_t>(cc.n) + 1);
    for (int q = 0; q <= cc.n; ++q) out.c.push_back(out.total.degree_component(2 * q));
    return out;
}

/// Stiefel-Whitney classes of the realified tangent bundle, indexed by
/// degree: w[2q] = c_q mod 2, all odd classes zero.
inline std::vector<ExtElement<GF2>> stiefel_whitney(const ChernPunctured& cd) {
    std::vector<ExtElement<GF2>> w;
    w.reserve(2 * cd.c.size());
    for (std::size_t q = 0; q < cd.c.size(); ++q) {
        w.push_back(reduce_mod2(cd.c[q]));
        if (q + 1 < cd.c.size()) w.push_back(ExtElement<GF2>::zero(cd.alg));
    }
    return w;
}

/// Mod-2 reduction of an integral tensor class (closed-manifold side).
inline TensorElement<GF2> reduce_mod2(const TensorElement<Rat>& t) {
    TensorElement<GF2> r(t.genus(), t.power());
    for (const auto& [m, c] : t.terms()) r.add_term(m, GF2(to_int(c)));
    return r;
}

/// Pontrjagin classes from Chern classes of the underlying complex bundle:
/// p_q = c_q^2 + 2 Σ_{d=1..q} (-1)^d c_{q-d} c_{q+d}, for q = 1..floor(n/2).
template <class Elem>
std::vector<Elem> pontrjagin_from_chern(const std::vector<Elem>& c) {
    const int m = static_cast<int>(c.size()) - 1;  // classes c_0..c_m
    std::vector<Elem> p;
    for (int q = 1; 2 * q <= m; ++q) {
        Elem pq = c[static_cast<std::size_t>(q)] * c[static_cast<std::size_t>(q)];
        for (int d = 1; d <= q; ++d) {
            Elem cross = c[static_cast<std::size_t>(q - d)] * c[static_cast<std::size_t>(q + d)];
            Elem twice = cross + cross;
            pq = (d % 2 == 1) ? pq - twice : pq + twice;
        }
        p.push_back(std::move(pq));
    }
    return p;
}

inline std::vector<ExtElement<Int>> pontrjagin(const ChernPunctured& cd) {
    return pontrjagin_from_chern(cd.c);
}

inline std::vector<TensorElement<Rat>> pontrjagin(const ChernClosed& cd) {
    return pontrjagin_from_chern(cd.c);
}

/// Alternating bilinear form over Z/2: symmetric with zero diagonal.
struct AltFormZ2 {
    GF2Mat m;

    explicit AltFormZ2(GF2Mat mat) : m(std::move(mat)) {
        if (m.rows != m.cols) throw std::invalid_argument("alternating form must be square");
        for (int i = 0; i < m.rows; ++i) {
            if (m.at(i, i)) throw std::invalid_argument("alternating form needs a zero diagonal");
            for (int j = i + 1; j < m.cols; ++j)
                if (m.at(i, j) != m.at(j, i)) throw std::invalid_argument("alternating form must be symmetric");
        }
    }

    int dim() const { return m.rows; }
};

/// The w2 form of Sym^n M^2_{g,k} on the alpha-basis: symplectic blocks on
/// the first g adjacent pairs, zero on the k-1 remaining generators.
inline AltFormZ2 w2_form(int g, int k, int n) {
    check_punctured_params(g, k, n);
    const int s = 2 * g + k - 1;
    GF2Mat m(s, s);
    for (int i = 1; i <= g; ++i) {
        m.at(2 * i - 2, 2 * i - 1) = 1;
        m.at(2 * i - 1, 2 * i - 2) = 1;
    }
    return AltFormZ2(std::move(m));
}

/// Matrix of a degree-2 mod-2 exterior class as an alternating form.
inline AltFormZ2 form_of_degree2(const ExtElement<GF2>& w2) {
    const int s = w2.algebra().gens;
    GF2Mat m(s, s);
    for (const auto& [mono, c] : w2.terms()) {
        if (mono.degree() != 2) throw std::invalid_argument("form_of_degree2 needs a degree-2 class");
        if (is_zero(c)) continue;
        const int a = mono.indices()[0] - 1;
        const int b = mono.indices()[1] - 1;
        m.at(a, b) = 1;
        m.at(b, a) = 1;
    }
    return AltFormZ2(std::move(m));
}

inline Int euler_char(const ChernClosed& cd) {
    Rat e = eval_top(cd.c[static_cast<std::size_t>(cd.n)]);
    if (!is_integral(e))
        throw std::logic_error("fundamental-class evaluation of c_n is not an integer: " + e.get_str());
    return e.get_num();
}

inline Int euler_char_closed(int g, int n) { return euler_char(chern_total_closed(g, n)); }

}  // namespace symprod
