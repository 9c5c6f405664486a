// Invariant extraction for a parameterized symmetric product and the pairwise
// verdict: same-s pairs of different genus are homotopy equivalent but never
// homeomorphic (detected by the rank of the w2 form), different-s pairs are
// not homotopy equivalent, and everything else the invariants cannot settle
// is reported as undetermined rather than guessed.
#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "symprod/arith.hpp"
#include "symprod/charclass.hpp"
#include "symprod/exterior.hpp"

namespace symprod {

struct SpaceSpec {
    long g = 0;  // genus >= 0
    long k = 1;  // punctures >= 1
    long n = 2;  // symmetric power >= 2
    long N = 0;  // euclidean stabilization >= 0

    void validate() const {
        if (g < 0) throw std::invalid_argument("genus must be >= 0");
        if (k < 1) throw std::invalid_argument("puncture count must be >= 1");
        if (n < 2) throw std::invalid_argument("symmetric power must be >= 2");
        if (N < 0) throw std::invalid_argument("stabilization factor must be >= 0");
    }

    long s() const { return 2 * g + k - 1; }
    long dimension() const { return 2 * n + N; }

    friend bool operator==(const SpaceSpec& a, const SpaceSpec& b) {
        return a.g == b.g && a.k == b.k && a.n == b.n && a.N == b.N;
    }
    friend bool operator!=(const SpaceSpec& a, const SpaceSpec& b) { return !(a == b); }
};

/// Betti numbers of Sym^n of a wedge of s circles: C(s,q) for q <= n, else 0.
inline std::vector<Int> betti_vector(long s, long n, long upto) {
    std::vector<Int> out;
    out.reserve(static_cast<std::size_t>(upto) + 1);
    for (long q = 0; q <= upto; ++q) out.push_back(q <= n ? binomial(s, q) : Int(0));
    return out;
}

/// Rank of an alternating form over Z/2; always even.
inline long skew_rank(const AltFormZ2& f) {
    long r = rank_gf2(f.m);
    if (r % 2 != 0) throw std::logic_error("alternating form has odd rank");
    return r;
}

struct InvariantReport {
    SpaceSpec spec;
    long dimension = 0;
    long s = 0;
    std::vector<Int> betti;  // degrees 0..n
    ExtElement<Int> c1 = ExtElement<Int>(ExtAlgebra{});
    std::vector<ExtElement<Int>> pontrjagin_list;
    bool pontrjagin_zero = true;
    long w2_rank = 0;
};

inline InvariantReport build_report(const SpaceSpec& spec) {
    spec.validate();
    InvariantReport rep;
    rep.spec = spec;
    rep.dimension = spec.dimension();
    rep.s = spec.s();
    rep.betti = betti_vector(rep.s, spec.n, spec.n);
    ChernPunctured cd = chern_total_punctured(static_cast<int>(spec.g), static_cast<int>(spec.k),
                                              static_cast<int>(spec.n));
    rep.c1 = cd.c[1];
    rep.pontrjagin_list = pontrjagin(cd);
    rep.pontrjagin_zero = std::all_of(rep.pontrjagin_list.begin(), rep.pontrjagin_list.end(),
                                      [](const ExtElement<Int>& p) { return p.is_zero(); });
    rep.w2_rank = skew_rank(w2_form(static_cast<int>(spec.g), static_cast<int>(spec.k), static_cast<int>(spec.n)));
    return rep;
}

enum class Verdict {
    homeomorphic,
    homotopy_equivalent_not_homeomorphic,
    not_homotopy_equivalent,
    undetermined,
};

inline std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::homeomorphic: return "homeomorphic";
        case Verdict::homotopy_equivalent_not_homeomorphic: return "homotopy_equivalent_not_homeomorphic";
        case Verdict::not_homotopy_equivalent: return "not_homotopy_equivalent";
        case Verdict::undetermined: return "undetermined";
    }
    throw std::logic_error("unknown verdict");
}

struct CompareResult {
    Verdict verdict = Verdict::undetermined;
    std::string witness;
};

namespace detail {
inline std::string vs(const Int& a, const Int& b) {
    const Int& lo = a <= b ? a : b;
    const Int& hi = a <= b ? b : a;
    return lo.get_str() + " vs " + hi.get_str();
}
inline std::string vs(long a, long b) { return vs(Int(a), Int(b)); }
}  // namespace detail

/// Pairwise verdict. Only proved statements are asserted: "homeomorphic" is
/// claimed for identical parameters only, and cross-power pairs whose
/// homotopy invariants agree stay undetermined. The witness is symmetric in
/// the two inputs.
inline CompareResult compare_specs(const SpaceSpec& a, const SpaceSpec& b) {
    a.validate();
    b.validate();
    if (a == b) return {Verdict::homeomorphic, "identical parameters"};
    if (a.s() != b.s() || a.n != b.n) {
        const long upto = std::max(a.n, b.n);
        std::vector<Int> ba = betti_vector(a.s(), a.n, upto);
        std::vector<Int> bb = betti_vector(b.s(), b.n, upto);
        for (long q = 0; q <= upto; ++q) {
            if (ba[static_cast<std::size_t>(q)] != bb[static_cast<std::size_t>(q)])
                return {Verdict::not_homotopy_equivalent,
                        "betti[" + std::to_string(q) + "]: " +
                            detail::vs(ba[static_cast<std::size_t>(q)], bb[static_cast<std::size_t>(q)])};
        }
        return {Verdict::undetermined, "betti vectors agree across different powers"};
    }
    if (a.g != b.g) {
        if (a.dimension() == b.dimension()) {
            long ra = skew_rank(w2_form(static_cast<int>(a.g), static_cast<int>(a.k), static_cast<int>(a.n)));
            long rb = skew_rank(w2_form(static_cast<int>(b.g), static_cast<int>(b.k), static_cast<int>(b.n)));
            return {Verdict::homotopy_equivalent_not_homeomorphic, "w2_rank: " + detail::vs(ra, rb)};
        }
        return {Verdict::undetermined, "dimensions differ but homotopy invariants agree"};
    }
    return {Verdict::undetermined, "parameters differ only in the euclidean factor"};
}

}  // namespace symprod
