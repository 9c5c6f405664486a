// Cohomology of a closed genus-g surface in the symplectic basis
// 1, gamma_1..gamma_2g, delta with gamma_i gamma_{i+g} = -gamma_{i+g} gamma_i = delta,
// and the restriction to the punctured surface (a wedge of s = 2g+k-1 circles).
#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "symprod/arith.hpp"
#include "symprod/exterior.hpp"

namespace symprod {

struct SurfaceClass {
    // 0 = unit, 1..2g = gamma_j, -1 = delta
    int code = 0;

    static SurfaceClass unit() { return SurfaceClass{0}; }
    static SurfaceClass gamma(int j) {
        if (j < 1) throw std::invalid_argument("gamma index must be >= 1");
        return SurfaceClass{j};
    }
    static SurfaceClass delta() { return SurfaceClass{-1}; }

    bool is_unit() const { return code == 0; }
    bool is_gamma() const { return code > 0; }
    bool is_delta() const { return code == -1; }
    int gamma_index() const { return code; }

    int degree() const { return is_unit() ? 0 : is_gamma() ? 1 : 2; }

    // unit < gamma_1 < ... < gamma_2g < delta
    int order_key() const { return is_delta() ? 0x7fffffff : code; }

    friend bool operator==(SurfaceClass a, SurfaceClass b) { return a.code == b.code; }
    friend bool operator!=(SurfaceClass a, SurfaceClass b) { return a.code != b.code; }
    friend bool operator<(SurfaceClass a, SurfaceClass b) { return a.order_key() < b.order_key(); }

    std::string str() const {
        if (is_unit()) return "1";
        if (is_delta()) return "d";
        return "g" + std::to_string(code);
    }
};

struct SurfProd {
    int coeff = 0;  // 0 means the product vanishes
    SurfaceClass cls = SurfaceClass::unit();
};

inline void check_surface_class(SurfaceClass a, int g) {
    if (g < 0) throw std::invalid_argument("negative genus");
    if (a.is_gamma() && a.gamma_index() > 2 * g)
        throw std::invalid_argument("gamma index out of range for genus " + std::to_string(g));
}

/// Product in H*(M^2_g;Z). Nonzero degree-1 products are exactly the
/// symplectic pairs: gamma_i gamma_{i+g} = delta, gamma_{i+g} gamma_i = -delta.
inline SurfProd surface_mul(SurfaceClass a, SurfaceClass b, int g) {
    check_surface_class(a, g);
    check_surface_class(b, g);
    if (a.is_unit()) return {1, b};
    if (b.is_unit()) return {1, a};
    if (a.is_gamma() && b.is_gamma()) {
        int i = a.gamma_index(), j = b.gamma_index();
        if (j - i == g && i <= g) return {1, SurfaceClass::delta()};
        if (i - j == g && j <= g) return {-1, SurfaceClass::delta()};
        return {};
    }
    return {};  // anything involving delta lands above degree 2
}

/// Sparse linear combination of surface basis classes.
using SurfaceElem = std::map<SurfaceClass, Int>;

/// Restriction along the inclusion of the punctured surface: unit -> unit,
/// gamma_j -> e_j, delta -> 0, landing in Λ^{≤1}(e_1..e_s), s = 2g+k-1.
inline ExtElement<Int> punctured_restrict(SurfaceClass a, int g, int k) {
    check_surface_class(a, g);
    if (k < 1) throw std::invalid_argument("need at least one puncture");
    const int s = 2 * g + k - 1;
    ExtAlgebra alg{s, 1};
    if (a.is_unit()) return ExtElement<Int>::unit(alg);
    if (a.is_delta()) return ExtElement<Int>::zero(alg);
    return ExtElement<Int>::generator(alg, a.gamma_index());
}

}  // namespace symprod
