#pragma once

// Field linear algebra for boundary-matrix work: bit-packed F_2, word-sized
// F_p, and exact rationals.  Everything here is rank / kernel / span
// computation on dense matrices; boundary matrices are assembled sparse and
// densified per field.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace skk {

// ---------------------------------------------------------------------------
// F2: rows packed 64 bits per word.
// ---------------------------------------------------------------------------

struct F2Vector {
    int n = 0;
    std::vector<uint64_t> w;

    F2Vector() = default;
    explicit F2Vector(int n_) : n(n_), w(static_cast<size_t>((n_ + 63) / 64)) {}
    bool get(int i) const { return (w[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1; }
    void set(int i, bool v) {
        uint64_t m = uint64_t(1) << (i & 63);
        if (v) w[static_cast<size_t>(i) >> 6] |= m;
        else w[static_cast<size_t>(i) >> 6] &= ~m;
    }
    void flip(int i) { w[static_cast<size_t>(i) >> 6] ^= uint64_t(1) << (i & 63); }
    void operator^=(const F2Vector& o) {
        for (size_t k = 0; k < w.size(); ++k) w[k] ^= o.w[k];
    }
    bool zero() const {
        for (uint64_t x : w)
            if (x) return false;
        return true;
    }
    bool parity() const {
        uint64_t acc = 0;
        for (uint64_t x : w) acc ^= x;
        return __builtin_parityll(acc);
    }
    // parity of the AND with another vector (dot product over F2)
    bool dot(const F2Vector& o) const {
        uint64_t acc = 0;
        for (size_t k = 0; k < w.size(); ++k) acc ^= w[k] & o.w[k];
        return __builtin_parityll(acc);
    }
    bool operator==(const F2Vector& o) const { return n == o.n && w == o.w; }
};

struct F2Matrix {
    int rows = 0, cols = 0;
    std::vector<F2Vector> r;

    F2Matrix() = default;
    F2Matrix(int rr, int cc) : rows(rr), cols(cc), r(static_cast<size_t>(rr), F2Vector(cc)) {}
    bool get(int i, int j) const { return r[static_cast<size_t>(i)].get(j); }
    void set(int i, int j, bool v) { r[static_cast<size_t>(i)].set(j, v); }
    void flip(int i, int j) { r[static_cast<size_t>(i)].flip(j); }
};

// reduced row echelon; pivots[k] = column of k-th pivot row
struct F2Echelon {
    F2Matrix m;
    std::vector<int> pivots;
    int rank() const { return static_cast<int>(pivots.size()); }
};

inline F2Echelon f2_echelon(F2Matrix a) {
    F2Echelon e;
    int row = 0;
    for (int col = 0; col < a.cols && row < a.rows; ++col) {
        int p = -1;
        for (int i = row; i < a.rows; ++i)
            if (a.get(i, col)) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(a.r[static_cast<size_t>(p)], a.r[static_cast<size_t>(row)]);
        for (int i = 0; i < a.rows; ++i)
            if (i != row && a.get(i, col)) a.r[static_cast<size_t>(i)] ^= a.r[static_cast<size_t>(row)];
        e.pivots.push_back(col);
        ++row;
    }
    e.m = std::move(a);
    return e;
}

inline int f2_rank(const F2Matrix& a) { return f2_echelon(a).rank(); }

// basis of { x : a x = 0 }, one F2Vector (length a.cols) per basis element
inline std::vector<F2Vector> f2_kernel_basis(const F2Matrix& a) {
    F2Echelon e = f2_echelon(a);
    std::vector<int> pivot_of_col(static_cast<size_t>(a.cols), -1);
    for (size_t k = 0; k < e.pivots.size(); ++k) pivot_of_col[static_cast<size_t>(e.pivots[k])] = static_cast<int>(k);
    std::vector<F2Vector> basis;
    for (int j = 0; j < a.cols; ++j) {
        if (pivot_of_col[static_cast<size_t>(j)] >= 0) continue;
        F2Vector x(a.cols);
        x.set(j, true);
        for (size_t k = 0; k < e.pivots.size(); ++k)
            if (e.m.get(static_cast<int>(k), j)) x.set(e.pivots[k], true);
        basis.push_back(std::move(x));
    }
    return basis;
}

// solve a x = b; returns false if inconsistent
inline bool f2_solve(const F2Matrix& a, const F2Vector& b, F2Vector* x) {
    F2Matrix aug(a.rows, a.cols + 1);
    for (int i = 0; i < a.rows; ++i) {
        aug.r[static_cast<size_t>(i)] = F2Vector(a.cols + 1);
        for (int j = 0; j < a.cols; ++j) aug.set(i, j, a.get(i, j));
        aug.set(i, a.cols, b.get(i));
    }
    F2Echelon e = f2_echelon(std::move(aug));
    *x = F2Vector(a.cols);
    for (size_t k = 0; k < e.pivots.size(); ++k) {
        if (e.pivots[k] == a.cols) return false;  // pivot in the augmented column
        x->set(e.pivots[k], e.m.get(static_cast<int>(k), a.cols));
    }
    return true;
}

// ---------------------------------------------------------------------------
// F_p with word-sized entries (p far below 2^31).
// ---------------------------------------------------------------------------

struct FpMatrix {
    long p = 0;
    int rows = 0, cols = 0;
    std::vector<long> e;

    FpMatrix() = default;
    FpMatrix(long p_, int r, int c) : p(p_), rows(r), cols(c), e(static_cast<size_t>(r) * c) {}
    long& at(int i, int j) { return e[static_cast<size_t>(i) * cols + j]; }
    long at(int i, int j) const { return e[static_cast<size_t>(i) * cols + j]; }
};

inline long fp_inv(long a, long p) {
    long t = 0, nt = 1, r = p, nr = a % p;
    if (nr < 0) nr += p;
    while (nr != 0) {
        long q = r / nr;
        long tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) throw std::invalid_argument("fp_inv: not invertible");
    return t < 0 ? t + p : t;
}

struct FpEchelon {
    FpMatrix m;
    std::vector<int> pivots;
    int rank() const { return static_cast<int>(pivots.size()); }
};

inline FpEchelon fp_echelon(FpMatrix a) {
    const long p = a.p;
    FpEchelon e;
    for (long& x : a.e) {
        x %= p;
        if (x < 0) x += p;
    }
    int row = 0;
    for (int col = 0; col < a.cols && row < a.rows; ++col) {
        int piv = -1;
        for (int i = row; i < a.rows; ++i)
            if (a.at(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        for (int j = 0; j < a.cols; ++j) std::swap(a.at(piv, j), a.at(row, j));
        long inv = fp_inv(a.at(row, col), p);
        for (int j = col; j < a.cols; ++j) a.at(row, j) = (a.at(row, j) * inv) % p;
        for (int i = 0; i < a.rows; ++i) {
            if (i == row || a.at(i, col) == 0) continue;
            long f = a.at(i, col);
            for (int j = col; j < a.cols; ++j) {
                a.at(i, j) = (a.at(i, j) - f * a.at(row, j)) % p;
                if (a.at(i, j) < 0) a.at(i, j) += p;
            }
        }
        e.pivots.push_back(col);
        ++row;
    }
    e.m = std::move(a);
    return e;
}

inline int fp_rank(const FpMatrix& a) { return fp_echelon(a).rank(); }

inline std::vector<std::vector<long>> fp_kernel_basis(const FpMatrix& a) {
    FpEchelon e = fp_echelon(a);
    std::vector<int> pivot_of_col(static_cast<size_t>(a.cols), -1);
    for (size_t k = 0; k < e.pivots.size(); ++k) pivot_of_col[static_cast<size_t>(e.pivots[k])] = static_cast<int>(k);
    std::vector<std::vector<long>> basis;
    for (int j = 0; j < a.cols; ++j) {
        if (pivot_of_col[static_cast<size_t>(j)] >= 0) continue;
        std::vector<long> x(static_cast<size_t>(a.cols), 0);
        x[static_cast<size_t>(j)] = 1;
        for (size_t k = 0; k < e.pivots.size(); ++k) {
            long c = e.m.at(static_cast<int>(k), j);
            if (c) x[static_cast<size_t>(e.pivots[k])] = a.p - c;
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

// ---------------------------------------------------------------------------
// Exact rationals (used where matrices are small enough to stay exact).
// ---------------------------------------------------------------------------

struct QMatrix {
    int rows = 0, cols = 0;
    std::vector<mpq_class> e;

    QMatrix() = default;
    QMatrix(int r, int c) : rows(r), cols(c), e(static_cast<size_t>(r) * c) {}
    mpq_class& at(int i, int j) { return e[static_cast<size_t>(i) * cols + j]; }
    const mpq_class& at(int i, int j) const { return e[static_cast<size_t>(i) * cols + j]; }
};

struct QEchelon {
    QMatrix m;
    std::vector<int> pivots;
    int rank() const { return static_cast<int>(pivots.size()); }
};

inline QEchelon q_echelon(QMatrix a) {
    QEchelon e;
    int row = 0;
    for (int col = 0; col < a.cols && row < a.rows; ++col) {
        int piv = -1;
        for (int i = row; i < a.rows; ++i)
            if (a.at(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        for (int j = 0; j < a.cols; ++j) swap(a.at(piv, j), a.at(row, j));
        mpq_class inv = 1 / a.at(row, col);
        for (int j = col; j < a.cols; ++j) {
            a.at(row, j) *= inv;
            a.at(row, j).canonicalize();
        }
        for (int i = 0; i < a.rows; ++i) {
            if (i == row || a.at(i, col) == 0) continue;
            mpq_class f = a.at(i, col);
            for (int j = col; j < a.cols; ++j) {
                a.at(i, j) -= f * a.at(row, j);
                a.at(i, j).canonicalize();
            }
        }
        e.pivots.push_back(col);
        ++row;
    }
    e.m = std::move(a);
    return e;
}

inline int q_rank(const QMatrix& a) { return q_echelon(a).rank(); }

inline std::vector<std::vector<mpq_class>> q_kernel_basis(const QMatrix& a) {
    QEchelon e = q_echelon(a);
    std::vector<int> pivot_of_col(static_cast<size_t>(a.cols), -1);
    for (size_t k = 0; k < e.pivots.size(); ++k) pivot_of_col[static_cast<size_t>(e.pivots[k])] = static_cast<int>(k);
    std::vector<std::vector<mpq_class>> basis;
    for (int j = 0; j < a.cols; ++j) {
        if (pivot_of_col[static_cast<size_t>(j)] >= 0) continue;
        std::vector<mpq_class> x(static_cast<size_t>(a.cols));
        x[static_cast<size_t>(j)] = 1;
        for (size_t k = 0; k < e.pivots.size(); ++k)
            if (e.m.at(static_cast<int>(k), j) != 0) x[static_cast<size_t>(e.pivots[k])] = -e.m.at(static_cast<int>(k), j);
        basis.push_back(std::move(x));
    }
    return basis;
}

}  // namespace skk
