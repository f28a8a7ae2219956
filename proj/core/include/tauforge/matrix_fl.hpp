#ifndef TAUFORGE_MATRIX_FL_HPP
#define TAUFORGE_MATRIX_FL_HPP

#include <vector>

#include "tauforge/fp_field.hpp"
#include "tauforge/poly.hpp"

namespace tauforge {

// Dense matrices over F_l (small prime l).
struct MatrixFl {
    u64 l = 0;
    u32 rows = 0, cols = 0;
    std::vector<u64> a; // row-major, entries reduced mod l

    MatrixFl() = default;
    MatrixFl(u64 l_, u32 r, u32 c) : l(l_), rows(r), cols(c), a(r * c, 0) {}

    static MatrixFl identity(u64 l, u32 n) {
        MatrixFl m(l, n, n);
        for (u32 i = 0; i < n; i++) m.at(i, i) = 1;
        return m;
    }

    u64& at(u32 i, u32 j) { return a[i * cols + j]; }
    u64 at(u32 i, u32 j) const { return a[i * cols + j]; }

    bool operator==(const MatrixFl& o) const {
        return l == o.l && rows == o.rows && cols == o.cols && a == o.a;
    }

    MatrixFl mul(const MatrixFl& o) const {
        check(cols == o.rows && l == o.l, ErrCat::internal, "MatrixFl::mul shape");
        MatrixFl r(l, rows, o.cols);
        for (u32 i = 0; i < rows; i++)
            for (u32 k = 0; k < cols; k++) {
                u64 v = at(i, k);
                if (!v) continue;
                for (u32 j = 0; j < o.cols; j++)
                    r.at(i, j) = addmod(r.at(i, j), mulmod(v, o.at(k, j), l), l);
            }
        return r;
    }

    bool is_identity() const {
        if (rows != cols) return false;
        for (u32 i = 0; i < rows; i++)
            for (u32 j = 0; j < cols; j++)
                if (at(i, j) != (i == j ? 1u : 0u)) return false;
        return true;
    }

    u64 trace() const {
        check(rows == cols, ErrCat::internal, "trace of non-square");
        u64 t = 0;
        for (u32 i = 0; i < rows; i++) t = addmod(t, at(i, i), l);
        return t;
    }

    u64 det() const {
        check(rows == cols, ErrCat::internal, "det of non-square");
        MatrixFl m = *this;
        u64 d = 1;
        for (u32 c = 0; c < cols; c++) {
            u32 piv = rows;
            for (u32 r = c; r < rows; r++)
                if (m.at(r, c)) { piv = r; break; }
            if (piv == rows) return 0;
            if (piv != c) {
                for (u32 j = 0; j < cols; j++) std::swap(m.at(piv, j), m.at(c, j));
                d = l - d;
                if (d == l) d = 0;
            }
            d = mulmod(d, m.at(c, c), l);
            u64 inv = invmod(m.at(c, c), l);
            for (u32 r = c + 1; r < rows; r++) {
                u64 f = mulmod(m.at(r, c), inv, l);
                if (!f) continue;
                for (u32 j = c; j < cols; j++)
                    m.at(r, j) = submod(m.at(r, j), mulmod(f, m.at(c, j), l), l);
            }
        }
        return d % l;
    }
};

// least t >= 1 with M^t = I; budget-guarded
inline u64 matrix_order(const MatrixFl& M, u64 budget = 1u << 22) {
    check(M.rows == M.cols, ErrCat::config, "matrix_order: non-square");
    check(M.det() != 0, ErrCat::config, "matrix_order: singular matrix");
    MatrixFl a = M;
    for (u64 t = 1; t <= budget; t++) {
        if (a.is_identity()) return t;
        a = a.mul(M);
    }
    fail(ErrCat::budget, "matrix_order: budget exhausted");
}

// minimal polynomial over F_l via Krylov spans of all basis vectors
std::vector<u64> matrix_min_poly(const MatrixFl& M);

// characteristic polynomial x^2 - tr x + det for 2x2; general via Leverrier
std::vector<u64> matrix_char_poly(const MatrixFl& M);

} // namespace tauforge

#endif
