// Exact dense linear algebra: fraction-free integer rank, rational solving,
// GF(2) rank, and integer Smith normal form.
#pragma once

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "symprod/arith.hpp"

namespace symprod {

template <class T>
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<T> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * static_cast<std::size_t>(c)) {
        if (r < 0 || c < 0) throw std::invalid_argument("negative matrix dimension");
    }

    T& at(int r, int c) { return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c)]; }
    const T& at(int r, int c) const { return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c)]; }

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < cols; ++c) std::swap(at(i, c), at(j, c));
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < rows; ++r) std::swap(at(r, i), at(r, j));
    }

    friend bool operator==(const Mat& x, const Mat& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
};

inline Mat<Int> mat_mul(const Mat<Int>& x, const Mat<Int>& y) {
    if (x.cols != y.rows) throw std::invalid_argument("matrix product shape mismatch");
    Mat<Int> z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            if (is_zero(x.at(i, k))) continue;
            for (int j = 0; j < y.cols; ++j) z.at(i, j) += x.at(i, k) * y.at(k, j);
        }
    return z;
}

inline bool is_zero_matrix(const Mat<Int>& m) {
    for (const auto& x : m.a)
        if (!is_zero(x)) return false;
    return true;
}

/// Rank over Q of an integer matrix by fraction-free (Bareiss) elimination
/// with full pivoting.
inline long rank_bareiss(Mat<Int> m) {
    const int lim = std::min(m.rows, m.cols);
    long r = 0;
    Int prev = 1;
    while (r < lim) {
        int pi = -1, pj = -1;
        for (int i = static_cast<int>(r); i < m.rows && pi < 0; ++i)
            for (int j = static_cast<int>(r); j < m.cols; ++j)
                if (!is_zero(m.at(i, j))) { pi = i; pj = j; break; }
        if (pi < 0) break;
        m.swap_rows(static_cast<int>(r), pi);
        m.swap_cols(static_cast<int>(r), pj);
        const int t = static_cast<int>(r);
        for (int i = t + 1; i < m.rows; ++i) {
            for (int j = t + 1; j < m.cols; ++j) {
                Int num = m.at(i, j) * m.at(t, t) - m.at(i, t) * m.at(t, j);
                mpz_divexact(m.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            m.at(i, t) = 0;
        }
        prev = m.at(t, t);
        ++r;
    }
    return r;
}

/// Solve A x = b over Q by Gauss-Jordan elimination. Returns one solution
/// (free variables set to zero) or nullopt when the system is inconsistent.
inline std::optional<std::vector<Rat>> solve_linear(Mat<Rat> A, std::vector<Rat> b) {
    if (static_cast<int>(b.size()) != A.rows) throw std::invalid_argument("rhs size mismatch");
    int row = 0;
    std::vector<std::pair<int, int>> pivots;  // (row, col)
    for (int col = 0; col < A.cols && row < A.rows; ++col) {
        int sel = -1;
        for (int i = row; i < A.rows; ++i)
            if (!is_zero(A.at(i, col))) { sel = i; break; }
        if (sel < 0) continue;
        A.swap_rows(row, sel);
        std::swap(b[static_cast<std::size_t>(row)], b[static_cast<std::size_t>(sel)]);
        Rat inv = 1 / A.at(row, col);
        for (int j = col; j < A.cols; ++j) A.at(row, j) *= inv;
        b[static_cast<std::size_t>(row)] *= inv;
        for (int i = 0; i < A.rows; ++i) {
            if (i == row || is_zero(A.at(i, col))) continue;
            Rat f = A.at(i, col);
            for (int j = col; j < A.cols; ++j) A.at(i, j) -= f * A.at(row, j);
            b[static_cast<std::size_t>(i)] -= f * b[static_cast<std::size_t>(row)];
        }
        pivots.emplace_back(row, col);
        ++row;
    }
    for (int i = row; i < A.rows; ++i)
        if (!is_zero(b[static_cast<std::size_t>(i)])) return std::nullopt;
    std::vector<Rat> x(static_cast<std::size_t>(A.cols), Rat(0));
    for (auto [r, c] : pivots) x[static_cast<std::size_t>(c)] = b[static_cast<std::size_t>(r)];
    return x;
}

struct GF2Mat {
    int rows = 0;
    int cols = 0;
    std::vector<unsigned char> a;

    GF2Mat() = default;
    GF2Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), 0) {
        if (r < 0 || c < 0) throw std::invalid_argument("negative matrix dimension");
    }
    unsigned char& at(int r, int c) { return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c)]; }
    unsigned char at(int r, int c) const { return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c)]; }
    friend bool operator==(const GF2Mat& x, const GF2Mat& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
};

inline long rank_gf2(GF2Mat m) {
    long r = 0;
    for (int col = 0; col < m.cols && r < m.rows; ++col) {
        int sel = -1;
        for (int i = static_cast<int>(r); i < m.rows; ++i)
            if (m.at(i, col)) { sel = i; break; }
        if (sel < 0) continue;
        if (sel != static_cast<int>(r))
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(static_cast<int>(r), j), m.at(sel, j));
        for (int i = 0; i < m.rows; ++i) {
            if (i == static_cast<int>(r) || !m.at(i, col)) continue;
            for (int j = col; j < m.cols; ++j) m.at(i, j) ^= m.at(static_cast<int>(r), j);
        }
        ++r;
    }
    return r;
}

/// Smith normal form diagonal of an integer matrix: nonnegative entries with
/// d1 | d2 | ... , padded with zeros to min(rows, cols). Pivot selection is by
/// minimal absolute value, which keeps intermediate entries small.
inline std::vector<Int> smith_normal_form(Mat<Int> m) {
    const int lim = std::min(m.rows, m.cols);
    std::vector<Int> diag;
    int t = 0;
    while (t < lim) {
        int pi = -1, pj = -1;
        Int best = 0;
        for (int i = t; i < m.rows; ++i)
            for (int j = t; j < m.cols; ++j) {
                if (is_zero(m.at(i, j))) continue;
                Int mag = abs(m.at(i, j));
                if (pi < 0 || mag < best) { best = mag; pi = i; pj = j; }
            }
        if (pi < 0) break;
        m.swap_rows(t, pi);
        m.swap_cols(t, pj);
        bool stable = false;
        while (!stable) {
            stable = true;
            // Clear column t by division with remainder; a nonzero remainder
            // becomes the new (smaller) pivot.
            for (int i = t + 1; i < m.rows; ++i) {
                if (is_zero(m.at(i, t))) continue;
                Int q = m.at(i, t) / m.at(t, t);
                if (!is_zero(q))
                    for (int j = t; j < m.cols; ++j) m.at(i, j) -= q * m.at(t, j);
                if (!is_zero(m.at(i, t))) {
                    m.swap_rows(t, i);
                    stable = false;
                }
            }
            for (int j = t + 1; j < m.cols; ++j) {
                if (is_zero(m.at(t, j))) continue;
                Int q = m.at(t, j) / m.at(t, t);
                if (!is_zero(q))
                    for (int i = t; i < m.rows; ++i) m.at(i, j) -= q * m.at(i, t);
                if (!is_zero(m.at(t, j))) {
                    m.swap_cols(t, j);
                    stable = false;
                }
            }
            if (!stable) continue;
            // Enforce divisibility of the remaining block by the pivot.
            for (int i = t + 1; i < m.rows && stable; ++i)
                for (int j = t + 1; j < m.cols; ++j) {
                    Int rem = m.at(i, j) % m.at(t, t);
                    if (is_zero(rem)) continue;
                    for (int c = t; c < m.cols; ++c) m.at(t, c) += m.at(i, c);
                    stable = false;
                    break;
                }
        }
        diag.push_back(abs(m.at(t, t)));
        ++t;
    }
    diag.resize(static_cast<std::size_t>(lim), Int(0));
    return diag;
}

}  // namespace symprod
