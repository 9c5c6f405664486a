// Exact coefficient arithmetic: arbitrary-precision integers and rationals
// (GMP-backed) and the two-element field.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace symprod {

using Int = mpz_class;
using Rat = mpq_class;

/// Residue class mod 2. Addition is XOR, negation is the identity.
struct GF2 {
    unsigned char v = 0;

    GF2() = default;
    explicit GF2(int x) : v(static_cast<unsigned char>(((x % 2) + 2) % 2)) {}
    explicit GF2(const Int& x) : v(mpz_odd_p(x.get_mpz_t()) ? 1 : 0) {}

    friend GF2 operator+(GF2 a, GF2 b) { return GF2(a.v ^ b.v); }
    friend GF2 operator-(GF2 a, GF2 b) { return GF2(a.v ^ b.v); }
    friend GF2 operator*(GF2 a, GF2 b) { return GF2(a.v & b.v); }
    GF2 operator-() const { return *this; }
    GF2& operator+=(GF2 b) { v ^= b.v; return *this; }
    friend bool operator==(GF2 a, GF2 b) { return a.v == b.v; }
    friend bool operator!=(GF2 a, GF2 b) { return a.v != b.v; }
};

inline bool is_zero(const Int& x) { return sgn(x) == 0; }
inline bool is_zero(const Rat& x) { return sgn(x) == 0; }
inline bool is_zero(GF2 x) { return x.v == 0; }

inline std::string coeff_str(const Int& x) { return x.get_str(); }
inline std::string coeff_str(const Rat& x) { return x.get_str(); }
inline std::string coeff_str(GF2 x) { return x.v ? "1" : "0"; }

/// Binomial coefficient with signed upper index:
/// binomial(-m, j) = (-1)^j binomial(m+j-1, j).
inline Int binomial(long n, long k) {
    if (k < 0) return 0;
    Int r;
    Int nn(n);
    mpz_bin_ui(r.get_mpz_t(), nn.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

inline Int factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial of negative argument");
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

/// True iff the rational is an integer (denominator 1 after canonicalization).
inline bool is_integral(const Rat& x) {
    return mpz_cmp_ui(x.get_den().get_mpz_t(), 1) == 0;
}

/// Integer value of an integral rational; throws otherwise.
inline Int to_int(const Rat& x) {
    if (!is_integral(x)) throw std::logic_error("rational is not an integer: " + x.get_str());
    return x.get_num();
}

inline std::int64_t to_int64(const Int& x) {
    if (!x.fits_slong_p())
        throw std::invalid_argument("integer out of int64 range: " + x.get_str());
    return static_cast<std::int64_t>(x.get_si());
}

/// Visit all permutations of {0..n-1} by Heap's minimal-change scheme.
/// The callback receives each permutation as an index vector.
template <class F>
void for_each_permutation(int n, F&& visit) {
    if (n < 0) throw std::invalid_argument("negative permutation size");
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
    visit(const_cast<const std::vector<int>&>(p));
    if (n < 2) return;
    std::vector<int> c(static_cast<std::size_t>(n), 0);
    int i = 0;
    while (i < n) {
        auto ui = static_cast<std::size_t>(i);
        if (c[ui] < i) {
            if (i % 2 == 0)
                std::swap(p[0], p[ui]);
            else
                std::swap(p[static_cast<std::size_t>(c[ui])], p[ui]);
            visit(const_cast<const std::vector<int>&>(p));
            ++c[ui];
            i = 0;
        } else {
            c[ui] = 0;
            ++i;
        }
    }
}

}  // namespace symprod
