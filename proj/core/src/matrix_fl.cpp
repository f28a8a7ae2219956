#include "tauforge/matrix_fl.hpp"

namespace tauforge {

namespace {

// lcm of two monic polynomials over F_l
std::vector<u64> poly_lcm(const FpCtx& k, const std::vector<u64>& a, const std::vector<u64>& b) {
    using PF = polys<FpCtx>;
    if (PF::is_zero(a)) return b;
    if (PF::is_zero(b)) return a;
    auto g = PF::gcd(k, a, b);
    return PF::monic(k, PF::mul(k, PF::quo(k, a, g), b));
}

} // namespace

std::vector<u64> matrix_min_poly(const MatrixFl& M) {
    check(M.rows == M.cols, ErrCat::config, "matrix_min_poly: non-square");
    FpCtx k(M.l);
    using PF = polys<FpCtx>;
    u32 n = M.rows;
    std::vector<u64> mp = PF::one(k); // running lcm
    for (u32 s = 0; s < n; s++) {
        // Krylov sequence of e_s
        std::vector<std::vector<u64>> seq;
        std::vector<u64> v(n, 0);
        v[s] = 1;
        seq.push_back(v);
        // collect until linear dependence
        while (true) {
            // w = M^T? we act row-vector * M (consistent with v M)
            std::vector<u64> w(n, 0);
            const auto& cur = seq.back();
            for (u32 i = 0; i < n; i++) {
                if (!cur[i]) continue;
                for (u32 j = 0; j < n; j++)
                    w[j] = addmod(w[j], mulmod(cur[i], M.at(i, j), M.l), M.l);
            }
            // try to express w in span(seq): Gaussian elimination each time (n small)
            std::vector<std::vector<u64>> rowsm = seq;
            std::vector<std::vector<u64>> combo(seq.size());
            for (size_t i = 0; i < seq.size(); i++) {
                combo[i].assign(seq.size(), 0);
                combo[i][i] = 1;
            }
            std::vector<u64> target = w;
            std::vector<u64> coef(seq.size(), 0);
            // eliminate
            std::vector<int> pivcol(rowsm.size(), -1);
            for (size_t r = 0; r < rowsm.size(); r++) {
                int pc = -1;
                for (u32 j = 0; j < n; j++) if (rowsm[r][j]) { pc = (int)j; break; }
                pivcol[r] = pc;
                if (pc < 0) continue;
                u64 inv = invmod(rowsm[r][pc], M.l);
                for (u32 j = 0; j < n; j++) rowsm[r][j] = mulmod(rowsm[r][j], inv, M.l);
                for (auto& cc : combo[r]) cc = mulmod(cc, inv, M.l);
                for (size_t r2 = 0; r2 < rowsm.size(); r2++) {
                    if (r2 == r || !rowsm[r2][pc]) continue;
                    u64 f = rowsm[r2][pc];
                    for (u32 j = 0; j < n; j++)
                        rowsm[r2][j] = submod(rowsm[r2][j], mulmod(f, rowsm[r][j], M.l), M.l);
                    for (size_t i = 0; i < combo[r2].size(); i++)
                        combo[r2][i] = submod(combo[r2][i], mulmod(f, combo[r][i], M.l), M.l);
                }
            }
            bool ok = true;
            for (size_t r = 0; r < rowsm.size(); r++) {
                int pc = pivcol[r];
                if (pc < 0) continue;
                u64 v2 = target[pc];
                if (!v2) continue;
                for (u32 j = 0; j < n; j++)
                    target[j] = submod(target[j], mulmod(v2, rowsm[r][j], M.l), M.l);
                for (size_t i = 0; i < coef.size(); i++)
                    coef[i] = addmod(coef[i], mulmod(v2, combo[r][i], M.l), M.l);
            }
            for (u32 j = 0; j < n; j++) if (target[j]) { ok = false; break; }
            if (ok) {
                // minimal poly of this vector: x^k - sum coef_i x^i
                std::vector<u64> p(seq.size() + 1, 0);
                p[seq.size()] = 1;
                for (size_t i = 0; i < seq.size(); i++) p[i] = submod(0, coef[i], M.l);
                PF::trim(k, p);
                mp = poly_lcm(k, mp, p);
                break;
            }
            seq.push_back(w);
        }
        if ((int)PF::deg(mp) == (int)n) break; // cannot grow further
    }
    return mp;
}

std::vector<u64> matrix_char_poly(const MatrixFl& M) {
    check(M.rows == M.cols, ErrCat::config, "matrix_char_poly: non-square");
    u32 n = M.rows;
    u64 l = M.l;
    if (n == 2) {
        u64 tr = M.trace(), dt = M.det();
        return {dt, submod(0, tr, l), 1};
    }
    // Faddeev–LeVerrier (l > n required so small inverses exist)
    check(l > n, ErrCat::internal, "char_poly: modulus too small for LeVerrier");
    MatrixFl Mk = M;
    std::vector<u64> c(n + 1, 0);
    c[n] = 1;
    MatrixFl N = M;
    for (u32 k = 1; k <= n; k++) {
        if (k > 1) N = M.mul(Mk);
        u64 ck = mulmod(N.trace(), invmod(k % l, l), l);
        ck = submod(0, ck, l);
        c[n - k] = ck;
        Mk = N;
        for (u32 i = 0; i < n; i++) Mk.at(i, i) = addmod(Mk.at(i, i), ck, l);
    }
    return c;
}

} // namespace tauforge
