// Seeded, deterministic self-checks: algebraic property suites over random
// sparse elements plus cross-module consistency checks. Used by the CLI
// selftest command and by the acceptance suite (with higher repetition
// counts). Everything is exact; a failure indicates a real defect.
#pragma once

#include <random>
#include <string>
#include <vector>

#include "symprod/arith.hpp"
#include "symprod/charclass.hpp"
#include "symprod/classifier.hpp"
#include "symprod/exterior.hpp"
#include "symprod/macdonald.hpp"
#include "symprod/skeleton.hpp"
#include "symprod/surface.hpp"
#include "symprod/tensor.hpp"

namespace symprod {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

namespace selfcheck {

using Rng = std::mt19937_64;

inline long rand_below(Rng& rng, long n) { return static_cast<long>(rng() % static_cast<unsigned long>(n)); }

inline Int rand_coeff(Rng& rng) {
    long c = rand_below(rng, 19) - 9;
    return Int(c == 0 ? 1 : c);
}

inline ExtElement<Int> rand_ext(Rng& rng, const ExtAlgebra& alg, int max_terms) {
    ExtElement<Int> e(alg);
    const int terms = 1 + static_cast<int>(rand_below(rng, max_terms));
    for (int t = 0; t < terms; ++t) {
        int deg = static_cast<int>(rand_below(rng, std::min(alg.cut, alg.gens) + 1));
        std::vector<int> idx;
        int next = 1;
        for (int d = 0; d < deg; ++d) {
            int room = alg.gens - next + 1 - (deg - 1 - d);
            if (room <= 0) break;
            next += static_cast<int>(rand_below(rng, room));
            idx.push_back(next);
            ++next;
        }
        if (static_cast<int>(idx.size()) != deg) continue;
        e.add_term(ExtMonomial::from_indices(std::move(idx)), rand_coeff(rng));
    }
    return e;
}

inline ExtElement<Int> rand_ext_homogeneous(Rng& rng, const ExtAlgebra& alg, int deg, int max_terms) {
    ExtElement<Int> e(alg);
    const int terms = 1 + static_cast<int>(rand_below(rng, max_terms));
    for (int t = 0; t < terms; ++t) {
        std::vector<int> idx;
        int next = 1;
        for (int d = 0; d < deg; ++d) {
            int room = alg.gens - next + 1 - (deg - 1 - d);
            if (room <= 0) break;
            next += static_cast<int>(rand_below(rng, room));
            idx.push_back(next);
            ++next;
        }
        if (static_cast<int>(idx.size()) != deg) continue;
        e.add_term(ExtMonomial::from_indices(std::move(idx)), rand_coeff(rng));
    }
    return e;
}

inline SurfaceClass rand_surface_class(Rng& rng, int g) {
    long pick = rand_below(rng, 2 * g + 2);
    if (pick == 0) return SurfaceClass::unit();
    if (pick == 2 * g + 1) return SurfaceClass::delta();
    return SurfaceClass::gamma(static_cast<int>(pick));
}

inline TensorElement<Rat> rand_tensor(Rng& rng, int g, int n, int max_terms) {
    TensorElement<Rat> e(g, n);
    const int terms = 1 + static_cast<int>(rand_below(rng, max_terms));
    for (int t = 0; t < terms; ++t) {
        TensorMonomial m;
        m.slot.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) m.slot.push_back(rand_surface_class(rng, g));
        e.add_term(m, Rat(rand_coeff(rng)));
    }
    return e;
}

inline TensorElement<Rat> rand_tensor_homogeneous(Rng& rng, int g, int n, int deg, int max_terms) {
    std::vector<TensorMonomial> basis = degree_basis(g, n, deg);
    TensorElement<Rat> e(g, n);
    if (basis.empty()) return e;
    const int terms = 1 + static_cast<int>(rand_below(rng, max_terms));
    for (int t = 0; t < terms; ++t)
        e.add_term(basis[static_cast<std::size_t>(rand_below(rng, static_cast<long>(basis.size())))],
                   Rat(rand_coeff(rng)));
    return e;
}

inline CheckResult ext_anticommutativity(Rng& rng, int reps) {
    ExtAlgebra alg{6, 4};
    for (int r = 0; r < reps; ++r) {
        int da = static_cast<int>(rand_below(rng, 4)), db = static_cast<int>(rand_below(rng, 4));
        ExtElement<Int> a = rand_ext_homogeneous(rng, alg, da, 3);
        ExtElement<Int> b = rand_ext_homogeneous(rng, alg, db, 3);
        ExtElement<Int> lhs = a * b;
        ExtElement<Int> rhs = b * a;
        if ((da * db) % 2 == 1) rhs = -rhs;
        if (lhs != rhs)
            return {"ext graded commutativity", false, "failed at rep " + std::to_string(r)};
    }
    return {"ext graded commutativity", true, std::to_string(reps) + " random homogeneous pairs"};
}

inline CheckResult ext_associativity(Rng& rng, int reps) {
    ExtAlgebra alg{6, 4};
    for (int r = 0; r < reps; ++r) {
        ExtElement<Int> a = rand_ext(rng, alg, 4);
        ExtElement<Int> b = rand_ext(rng, alg, 4);
        ExtElement<Int> c = rand_ext(rng, alg, 4);
        if ((a * b) * c != a * (b * c))
            return {"ext associativity", false, "failed at rep " + std::to_string(r)};
    }
    return {"ext associativity", true, std::to_string(reps) + " random triples"};
}

inline CheckResult mod2_ring_hom(Rng& rng, int reps) {
    ExtAlgebra alg{6, 4};
    for (int r = 0; r < reps; ++r) {
        ExtElement<Int> a = rand_ext(rng, alg, 4);
        ExtElement<Int> b = rand_ext(rng, alg, 4);
        if (reduce_mod2(a * b) != reduce_mod2(a) * reduce_mod2(b) ||
            reduce_mod2(a + b) != reduce_mod2(a) + reduce_mod2(b))
            return {"mod-2 reduction is a ring homomorphism", false, "failed at rep " + std::to_string(r)};
    }
    return {"mod-2 reduction is a ring homomorphism", true, std::to_string(reps) + " random pairs"};
}

inline CheckResult tensor_graded_commutativity(Rng& rng, int reps) {
    const int g = 2, n = 3;
    for (int r = 0; r < reps; ++r) {
        int da = static_cast<int>(rand_below(rng, 2 * n + 1));
        int db = static_cast<int>(rand_below(rng, 2 * n + 1));
        TensorElement<Rat> a = rand_tensor_homogeneous(rng, g, n, da, 3);
        TensorElement<Rat> b = rand_tensor_homogeneous(rng, g, n, db, 3);
        TensorElement<Rat> lhs = a * b;
        TensorElement<Rat> rhs = b * a;
        if ((da * db) % 2 == 1) rhs = -rhs;
        if (lhs != rhs)
            return {"tensor graded commutativity", false, "failed at rep " + std::to_string(r)};
    }
    return {"tensor graded commutativity", true, std::to_string(reps) + " random homogeneous pairs"};
}

inline CheckResult tensor_associativity(Rng& rng, int reps) {
    const int g = 2, n = 3;
    for (int r = 0; r < reps; ++r) {
        TensorElement<Rat> a = rand_tensor(rng, g, n, 3);
        TensorElement<Rat> b = rand_tensor(rng, g, n, 3);
        TensorElement<Rat> c = rand_tensor(rng, g, n, 3);
        if ((a * b) * c != a * (b * c))
            return {"tensor associativity", false, "failed at rep " + std::to_string(r)};
    }
    return {"tensor associativity", true, std::to_string(reps) + " random triples"};
}

inline CheckResult permute_ring_automorphism(Rng& rng, int reps) {
    const int g = 1;
    for (int n = 2; n <= 4; ++n) {
        for (int r = 0; r < reps; ++r) {
            TensorElement<Rat> a = rand_tensor(rng, g, n, 3);
            TensorElement<Rat> b = rand_tensor(rng, g, n, 3);
            TensorElement<Rat> ab = a * b;
            bool ok = true;
            for_each_permutation(n, [&](const std::vector<int>& sigma) {
                if (!ok) return;
                if (permute(sigma, ab) != permute(sigma, a) * permute(sigma, b)) ok = false;
            });
            if (!ok)
                return {"permutation acts by ring automorphisms", false,
                        "failed at n=" + std::to_string(n) + " rep " + std::to_string(r)};
        }
    }
    return {"permutation acts by ring automorphisms", true, "all sigma, n <= 4"};
}

inline CheckResult chi_invariance() {
    for (int g = 0; g <= 2; ++g)
        for (int n = 2; n <= 4; ++n) {
            std::vector<SurfaceClass> classes{SurfaceClass::unit(), SurfaceClass::delta()};
            for (int j = 1; j <= 2 * g; ++j) classes.push_back(SurfaceClass::gamma(j));
            for (auto w : classes) {
                TensorElement<Rat> e = chi(w, g, n);
                bool ok = true;
                for_each_permutation(n, [&](const std::vector<int>& sigma) {
                    if (ok && permute(sigma, e) != e) ok = false;
                });
                if (!ok)
                    return {"chi images are S_n-invariant", false,
                            "failed for g=" + std::to_string(g) + " n=" + std::to_string(n) + " w=" + w.str()};
            }
        }
    return {"chi images are S_n-invariant", true, "all basis classes, g <= 2, n <= 4"};
}

inline CheckResult chi_products_invariant(Rng& rng, int reps) {
    const int g = 2;
    for (int n = 2; n <= 3; ++n) {
        for (int r = 0; r < reps; ++r) {
            TensorElement<Rat> e = TensorElement<Rat>::unit(g, n);
            const int factors = 1 + static_cast<int>(rand_below(rng, 3));
            for (int f = 0; f < factors; ++f) e = e * chi(rand_surface_class(rng, g), g, n);
            bool ok = true;
            for_each_permutation(n, [&](const std::vector<int>& sigma) {
                if (ok && permute(sigma, e) != e) ok = false;
            });
            if (!ok)
                return {"products of chi images are S_n-invariant", false,
                        "failed at n=" + std::to_string(n) + " rep " + std::to_string(r)};
        }
    }
    return {"products of chi images are S_n-invariant", true, "random chi products, n <= 3"};
}

inline CheckResult surface_ring_laws() {
    for (int g = 0; g <= 4; ++g) {
        std::vector<SurfaceClass> basis{SurfaceClass::unit(), SurfaceClass::delta()};
        for (int j = 1; j <= 2 * g; ++j) basis.push_back(SurfaceClass::gamma(j));
        for (auto a : basis)
            for (auto b : basis) {
                SurfProd ab = surface_mul(a, b, g);
                SurfProd ba = surface_mul(b, a, g);
                int sign = (a.degree() * b.degree()) % 2 == 1 ? -1 : 1;
                bool ok = (ab.coeff == 0 && ba.coeff == 0) ||
                          (ab.coeff == sign * ba.coeff && ab.cls == ba.cls);
                if (!ok) return {"surface ring graded commutativity", false, a.str() + "*" + b.str()};
                for (auto c : basis) {
                    // associativity via coefficients: ((ab)c) vs (a(bc))
                    SurfProd bc = surface_mul(b, c, g);
                    SurfProd l = ab.coeff ? surface_mul(ab.cls, c, g) : SurfProd{};
                    SurfProd r = bc.coeff ? surface_mul(a, bc.cls, g) : SurfProd{};
                    int lc = ab.coeff * l.coeff, rc = bc.coeff * r.coeff;
                    if (lc != rc || (lc != 0 && !(l.cls == r.cls)))
                        return {"surface ring associativity", false,
                                a.str() + "*" + b.str() + "*" + c.str() + " at g=" + std::to_string(g)};
                }
            }
    }
    return {"surface ring laws", true, "exhaustive on the basis, g <= 4"};
}

inline CheckResult skeleton_matches_exterior() {
    for (int s = 1; s <= 6; ++s)
        for (int n = 1; n <= s; ++n) {
            HomologySummary h = homology(truncate(torus_cw(s), n));
            if (!h.torsion_free()) return {"skeleton homology torsion-free", false, "s=" + std::to_string(s)};
            ExtAlgebra alg = make_algebra(s, n);
            for (int q = 0; q <= n; ++q)
                if (Int(h.h[static_cast<std::size_t>(q)].betti) != ext_dim(alg, q))
                    return {"skeleton betti = exterior dimensions", false,
                            "s=" + std::to_string(s) + " n=" + std::to_string(n) + " q=" + std::to_string(q)};
        }
    return {"skeleton homology matches exterior dimensions", true, "s <= 6"};
}

inline CheckResult restriction_consistency_small() {
    for (int g = 0; g <= 2; ++g)
        for (int n = 2; n <= 3; ++n) {
            ChernClosed cc = chern_total_closed(g, n);
            MacdonaldBasis basis(g, n);
            for (int k = 1; k <= 2; ++k) {
                ChernPunctured direct = chern_total_punctured(g, k, n);
                ChernPunctured restricted = restrict_chern(cc, k, basis);
                if (restricted.total != direct.total)
                    return {"restriction consistency", false,
                            "g=" + std::to_string(g) + " k=" + std::to_string(k) + " n=" + std::to_string(n)};
            }
        }
    return {"restriction of the closed total class matches the direct product", true, "g <= 2, k <= 2, n <= 3"};
}

inline CheckResult w2_matrix_consistency() {
    for (int g = 0; g <= 3; ++g)
        for (int k = 1; k <= 3; ++k)
            for (int n = 2; n <= 3; ++n) {
                ChernPunctured cd = chern_total_punctured(g, k, n);
                auto w = stiefel_whitney(cd);
                if (form_of_degree2(w[2]).m != w2_form(g, k, n).m)
                    return {"w2 matrix consistency", false,
                            "g=" + std::to_string(g) + " k=" + std::to_string(k) + " n=" + std::to_string(n)};
            }
    return {"w2 from the Chern pipeline matches the closed-form matrix", true, "g <= 3, k <= 3, n <= 3"};
}

inline CheckResult oracle_small() {
    MacdonaldBasis basis(1, 2);
    const long expected[] = {1, 2, 2, 2, 1};
    for (int q = 0; q <= 4; ++q) {
        long mac = basis.span_dim(q);
        long proj = invariant_dim(1, 2, q);
        if (mac != proj || mac != expected[q])
            return {"macdonald span vs projector (g=1, n=2)", false, "q=" + std::to_string(q)};
    }
    return {"macdonald span vs projector (g=1, n=2)", true, "betti (1,2,2,2,1)"};
}

inline CheckResult poincare_duality() {
    for (auto [g, n] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 2}}) {
        for (int q = 0; q <= n; ++q)
            if (invariant_dim(g, n, q) != invariant_dim(g, n, 2 * n - q))
                return {"poincare duality of projector ranks", false,
                        "g=" + std::to_string(g) + " n=" + std::to_string(n) + " q=" + std::to_string(q)};
    }
    return {"poincare duality of projector ranks", true, "(1,2), (1,3), (2,2)"};
}

inline CheckResult euler_generating_function() {
    for (int g = 0; g <= 2; ++g)
        for (int n = 2; n <= 3; ++n) {
            Int expected = binomial(2 * g - 2, n);
            if (n % 2 == 1) expected = -expected;
            if (euler_char_closed(g, n) != expected)
                return {"euler characteristic generating function", false,
                        "g=" + std::to_string(g) + " n=" + std::to_string(n)};
        }
    return {"euler characteristic generating function", true, "g <= 2, n <= 3"};
}

}  // namespace selfcheck

/// The full deterministic self-check battery. ext_reps/tensor_reps control
/// the randomized suites; everything else is exhaustive over small grids.
inline std::vector<CheckResult> run_selfchecks(unsigned long seed, int ext_reps, int tensor_reps) {
    selfcheck::Rng rng(seed);
    std::vector<CheckResult> out;
    out.push_back(selfcheck::ext_anticommutativity(rng, ext_reps));
    out.push_back(selfcheck::ext_associativity(rng, ext_reps));
    out.push_back(selfcheck::mod2_ring_hom(rng, ext_reps));
    out.push_back(selfcheck::tensor_graded_commutativity(rng, tensor_reps));
    out.push_back(selfcheck::tensor_associativity(rng, tensor_reps));
    out.push_back(selfcheck::permute_ring_automorphism(rng, std::max(1, tensor_reps / 20)));
    out.push_back(selfcheck::chi_invariance());
    out.push_back(selfcheck::chi_products_invariant(rng, std::max(1, tensor_reps / 20)));
    out.push_back(selfcheck::surface_ring_laws());
    out.push_back(selfcheck::skeleton_matches_exterior());
    out.push_back(selfcheck::restriction_consistency_small());
    out.push_back(selfcheck::w2_matrix_consistency());
    out.push_back(selfcheck::oracle_small());
    out.push_back(selfcheck::poincare_duality());
    out.push_back(selfcheck::euler_generating_function());
    return out;
}

}  // namespace symprod
