// Cellular chain complexes of torus skeleta Sk^n T^s (the homotopy model of
// the punctured symmetric product) and integer homology via Smith normal
// form, certifying torsion-freeness independently of the exterior module.
#pragma once

#include <stdexcept>
#include <vector>

#include "symprod/arith.hpp"
#include "symprod/linalg.hpp"

namespace symprod {

struct ChainComplex {
    // ranks[q] = rank of C_q; diffs[q] = matrix of d_q : C_q -> C_{q-1}
    // (diffs[0] is the empty map to zero).
    std::vector<long> ranks;
    std::vector<Mat<Int>> diffs;

    int top_degree() const { return static_cast<int>(ranks.size()) - 1; }

    void check_shape() const {
        if (ranks.empty()) throw std::invalid_argument("empty chain complex");
        if (diffs.size() != ranks.size()) throw std::invalid_argument("differential count mismatch");
        for (std::size_t q = 1; q < ranks.size(); ++q) {
            if (diffs[q].rows != static_cast<int>(ranks[q - 1]) || diffs[q].cols != static_cast<int>(ranks[q]))
                throw std::invalid_argument("differential shape mismatch at degree " + std::to_string(q));
        }
    }
};

/// Minimal CW structure of the s-torus: C_q free of rank C(s,q), all
/// differentials zero.
inline ChainComplex torus_cw(int s) {
    if (s < 1) throw std::invalid_argument("torus dimension must be >= 1");
    ChainComplex c;
    c.ranks.resize(static_cast<std::size_t>(s) + 1);
    c.diffs.resize(static_cast<std::size_t>(s) + 1);
    for (int q = 0; q <= s; ++q) {
        Int r = binomial(s, q);
        c.ranks[static_cast<std::size_t>(q)] = static_cast<long>(to_int64(r));
        if (q > 0)
            c.diffs[static_cast<std::size_t>(q)] =
                Mat<Int>(static_cast<int>(c.ranks[static_cast<std::size_t>(q - 1)]),
                         static_cast<int>(c.ranks[static_cast<std::size_t>(q)]));
    }
    c.diffs[0] = Mat<Int>(0, static_cast<int>(c.ranks[0]));
    return c;
}

/// n-skeleton: drop all cells above degree n. Valid here because the incoming
/// differential from the dropped range (d_{n+1}) is zero for the torus.
inline ChainComplex truncate(const ChainComplex& c, int n) {
    if (n < 1) throw std::invalid_argument("skeleton degree must be >= 1");
    c.check_shape();
    if (n >= c.top_degree()) return c;
    ChainComplex out;
    out.ranks.assign(c.ranks.begin(), c.ranks.begin() + n + 1);
    out.diffs.assign(c.diffs.begin(), c.diffs.begin() + n + 1);
    return out;
}

struct HomologySummary {
    struct Degree {
        long betti = 0;
        std::vector<Int> torsion;  // invariant factors > 1
    };
    std::vector<Degree> h;

    bool torsion_free() const {
        for (const auto& d : h)
            if (!d.torsion.empty()) return false;
        return true;
    }
};

/// Integral homology by Smith normal form. Betti_q = rank C_q - rank d_q -
/// rank d_{q+1}; torsion of H_q comes from the invariant factors of d_{q+1}.
inline HomologySummary homology(const ChainComplex& c) {
    c.check_shape();
    const int top = c.top_degree();
    for (int q = 1; q < top; ++q)
        if (!is_zero_matrix(mat_mul(c.diffs[static_cast<std::size_t>(q)], c.diffs[static_cast<std::size_t>(q + 1)])))
            throw std::invalid_argument("not a chain complex: d_" + std::to_string(q) + " d_" + std::to_string(q + 1) +
                                        " != 0");
    std::vector<std::vector<Int>> snf(static_cast<std::size_t>(top) + 1);
    std::vector<long> drank(static_cast<std::size_t>(top) + 2, 0);
    for (int q = 1; q <= top; ++q) {
        snf[static_cast<std::size_t>(q)] = smith_normal_form(c.diffs[static_cast<std::size_t>(q)]);
        long r = 0;
        for (const auto& d : snf[static_cast<std::size_t>(q)])
            if (!is_zero(d)) ++r;
        drank[static_cast<std::size_t>(q)] = r;
    }
    HomologySummary out;
    out.h.resize(static_cast<std::size_t>(top) + 1);
    for (int q = 0; q <= top; ++q) {
        auto& deg = out.h[static_cast<std::size_t>(q)];
        deg.betti = c.ranks[static_cast<std::size_t>(q)] - drank[static_cast<std::size_t>(q)] -
                    drank[static_cast<std::size_t>(q + 1)];
        if (q < top)
            for (const auto& d : snf[static_cast<std::size_t>(q + 1)])
                if (!is_zero(d) && cmp(d, 1) != 0) deg.torsion.push_back(d);
    }
    return out;
}

}  // namespace symprod
