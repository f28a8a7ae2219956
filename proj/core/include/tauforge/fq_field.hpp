#ifndef TAUFORGE_FQ_FIELD_HPP
#define TAUFORGE_FQ_FIELD_HPP

#include <vector>
#include <memory>
#include <optional>
#include <algorithm>

#include "tauforge/fp_field.hpp"
#include "tauforge/poly.hpp"

namespace tauforge {

// Extension field F_{p^d} = F_p[z]/(m), m monic irreducible generated
// deterministically from (p, d, seed 0).  Flat single-step extensions only;
// towers are handled by re-irreducibilization plus explicit embeddings.
struct FqCtx {
    struct Elem {
        std::vector<u64> c; // length d, coords over z-powers
        bool operator==(const Elem& o) const { return c == o.c; }
        // lexicographic order on coordinate vectors (degree 0 first)
        bool operator<(const Elem& o) const { return c < o.c; }
    };

    FpCtx base;
    u32 d;
    std::vector<u64> m; // monic modulus, length d+1 (over F_p, ascending)

    FqCtx(u64 p, u32 d_) : base(p), d(d_) {
        check(d >= 1, ErrCat::config, "FqCtx: degree must be >= 1");
        if (d == 1) {
            m = {0, 1};
            return;
        }
        using PF = polys<FpCtx>;
        Rng rng(0x7461756673ull ^ (u64)p * 0x10001ull ^ (u64)d);
        while (true) {
            auto cand = PF::random_monic(base, rng, (int)d);
            if (PF::irreducible(base, cand)) {
                m = cand;
                return;
            }
        }
    }

    Elem zero() const { return Elem{std::vector<u64>(d, 0)}; }
    Elem one() const {
        Elem e = zero();
        e.c[0] = base.one();
        return e;
    }
    Elem gen() const {
        Elem e = zero();
        if (d == 1) {
            e.c[0] = 0; // generator of F_p as an extension is 0 (z = root of x)
        } else {
            e.c[1] = 1;
        }
        return e;
    }
    Elem from_int(i64 v) const {
        Elem e = zero();
        e.c[0] = base.from_int(v);
        return e;
    }
    Elem from_base(u64 v) const {
        Elem e = zero();
        e.c[0] = v % base.p;
        return e;
    }
    Elem from_coords(std::vector<u64> v) const {
        check(v.size() == d, ErrCat::internal, "FqCtx: bad coord length");
        return Elem{std::move(v)};
    }
    bool is_zero(const Elem& a) const {
        for (u64 v : a.c) if (v) return false;
        return true;
    }
    bool equal(const Elem& a, const Elem& b) const { return a.c == b.c; }
    // is the element in the prime field?
    bool in_base(const Elem& a) const {
        for (u32 i = 1; i < d; i++) if (a.c[i]) return false;
        return true;
    }

    Elem add(const Elem& a, const Elem& b) const {
        Elem r = a;
        for (u32 i = 0; i < d; i++) r.c[i] = base.add(r.c[i], b.c[i]);
        return r;
    }
    Elem sub(const Elem& a, const Elem& b) const {
        Elem r = a;
        for (u32 i = 0; i < d; i++) r.c[i] = base.sub(r.c[i], b.c[i]);
        return r;
    }
    Elem neg(const Elem& a) const {
        Elem r = a;
        for (u32 i = 0; i < d; i++) r.c[i] = base.neg(r.c[i]);
        return r;
    }
    Elem mul(const Elem& a, const Elem& b) const {
        u64 p = base.p;
        std::vector<u64> conv(2 * d - 1, 0);
        for (u32 i = 0; i < d; i++) {
            if (!a.c[i]) continue;
            for (u32 j = 0; j < d; j++) {
                if (!b.c[j]) continue;
                conv[i + j] = addmod(conv[i + j], mulmod(a.c[i], b.c[j], p), p);
            }
        }
        // reduce by monic m
        for (u32 k = 2 * d - 2; k + 1 > d; k--) {
            u64 c = conv[k];
            if (!c) continue;
            conv[k] = 0;
            u32 off = k - d;
            for (u32 j = 0; j < d; j++) {
                if (!m[j]) continue;
                conv[off + j] = submod(conv[off + j], mulmod(c, m[j], p), p);
            }
        }
        conv.resize(d);
        return Elem{std::move(conv)};
    }
    Elem mul_base(const Elem& a, u64 s) const {
        Elem r = a;
        for (u32 i = 0; i < d; i++) r.c[i] = base.mul(r.c[i], s);
        return r;
    }
    Elem inv(const Elem& a) const {
        check(!is_zero(a), ErrCat::internal, "FqCtx: inverse of zero");
        using PF = polys<FpCtx>;
        std::vector<u64> av = a.c;
        PF::trim(base, av);
        auto r = PF::invmod(base, av, m);
        r.resize(d, 0);
        return Elem{std::move(r)};
    }
    Elem pow(Elem a, const BigInt& e) const {
        Elem r = one();
        if (e == 0) return r;
        size_t nbits = mpz_sizeinbase(e.get_mpz_t(), 2);
        for (size_t i = nbits; i-- > 0;) {
            r = mul(r, r);
            if (mpz_tstbit(e.get_mpz_t(), i)) r = mul(r, a);
        }
        return r;
    }
    Elem pow_u64(const Elem& a, u64 e) const { return pow(a, BigInt((unsigned long)e)); }
    Elem random(Rng& rng) const {
        Elem e = zero();
        for (u32 i = 0; i < d; i++) e.c[i] = rng.below(base.p);
        return e;
    }

    // p-power Frobenius (cached d x d matrix over F_p)
    Elem frob(const Elem& a) const {
        build_frob();
        Elem r = zero();
        u64 p = base.p;
        for (u32 i = 0; i < d; i++) {
            if (!a.c[i]) continue;
            const auto& row = frob_rows_[i];
            for (u32 j = 0; j < d; j++) {
                if (row[j]) r.c[j] = addmod(r.c[j], mulmod(a.c[i], row[j], p), p);
            }
        }
        return r;
    }
    Elem frob_k(Elem a, u32 k) const {
        for (u32 i = 0; i < k % d; i++) a = frob(a);
        return a;
    }
    Elem pth_root(const Elem& a) const {
        // a^{p^{d-1}}
        Elem r = a;
        for (u32 i = 0; i + 1 < d; i++) r = frob(r);
        return r;
    }

    BigInt size() const {
        return bpow(BigInt((unsigned long)base.p), d);
    }
    BigInt characteristic() const { return base.characteristic(); }
    u64 char_u64() const { return base.p; }

    // absolute trace/norm to F_p
    u64 trace_abs(const Elem& a) const {
        Elem s = a, f = a;
        for (u32 i = 1; i < d; i++) {
            f = frob(f);
            s = add(s, f);
        }
        return s.c[0];
    }
    u64 norm_abs(const Elem& a) const {
        Elem s = a, f = a;
        for (u32 i = 1; i < d; i++) {
            f = frob(f);
            s = mul(s, f);
        }
        return s.c[0];
    }

private:
    mutable std::vector<std::vector<u64>> frob_rows_;
    void build_frob() const {
        if (!frob_rows_.empty()) return;
        using PF = polys<FpCtx>;
        std::vector<u64> zp = PF::powmod(base, PF::x(base), base.characteristic(), m);
        zp.resize(d, 0);
        frob_rows_.resize(d);
        // row i = coords of z^{p*i}
        std::vector<u64> cur(d, 0);
        cur[0] = 1;
        frob_rows_[0] = cur;
        Elem zpe{zp};
        Elem c{cur};
        for (u32 i = 1; i < d; i++) {
            c = mul(c, zpe);
            frob_rows_[i] = c.c;
        }
    }
};

// Embedding F_{p^a} -> F_{p^b} for a | b, determined by mapping the generator
// of the small field to the lexicographically least root of its modulus in
// the big field (deterministic, replayable).
struct FqEmbedding {
    const FqCtx* from;
    const FqCtx* to;
    std::vector<FqCtx::Elem> gen_pows; // images of z_from^i, i < from->d

    FqEmbedding(const FqCtx& small, const FqCtx& big, Rng& rng)
        : from(&small), to(&big) {
        check(small.base.p == big.base.p && big.d % small.d == 0,
              ErrCat::internal, "FqEmbedding: incompatible fields");
        using PQ = polys<FqCtx>;
        // lift m_small coefficientwise into the big field
        std::vector<FqCtx::Elem> mm(small.m.size());
        for (size_t i = 0; i < small.m.size(); i++) mm[i] = big.from_base(small.m[i]);
        PQ::trim(big, mm);
        auto rts = PQ::roots(big, mm, rng);
        check(rts.size() == small.d || (small.d == 1 && rts.size() == 1),
              ErrCat::internal, "FqEmbedding: wrong root count");
        auto least = *std::min_element(rts.begin(), rts.end());
        gen_pows.resize(small.d);
        gen_pows[0] = big.one();
        for (u32 i = 1; i < small.d; i++) gen_pows[i] = big.mul(gen_pows[i - 1], least);
        build_pullback();
    }

    FqCtx::Elem apply(const FqCtx::Elem& a) const {
        FqCtx::Elem r = to->zero();
        for (u32 i = 0; i < from->d; i++) {
            if (!a.c[i]) continue;
            r = to->add(r, to->mul_base(gen_pows[i], a.c[i]));
        }
        return r;
    }

    // inverse on the image; nullopt if the element is not in the subfield
    std::optional<FqCtx::Elem> pullback(const FqCtx::Elem& a) const {
        // solve sum_i x_i * gen_pows[i] = a over F_p
        u64 p = to->base.p;
        u32 rows = from->d, cols = to->d;
        // use precomputed row-reduced system
        std::vector<u64> rhs = a.c;
        std::vector<u64> sol(rows, 0);
        // forward eliminate rhs against echelon
        for (u32 r = 0; r < rows; r++) {
            u32 pc = piv_col_[r];
            u64 v = rhs[pc];
            if (!v) continue;
            // subtract v * reduced row r
            sol[r] = v;
            for (u32 j = 0; j < cols; j++) {
                rhs[j] = submod(rhs[j], mulmod(v, red_rows_[r][j], p), p);
            }
        }
        for (u64 v : rhs) if (v) return std::nullopt;
        // sol is in terms of reduced rows; map back through the recorded ops
        std::vector<u64> out(rows, 0);
        for (u32 r = 0; r < rows; r++) {
            for (u32 i = 0; i < rows; i++) {
                out[i] = addmod(out[i], mulmod(sol[r], back_[r][i], p), p);
            }
        }
        return FqCtx::Elem{std::move(out)};
    }

private:
    std::vector<std::vector<u64>> red_rows_, back_;
    std::vector<u32> piv_col_;
    void build_pullback() {
        u64 p = to->base.p;
        u32 rows = from->d, cols = to->d;
        std::vector<std::vector<u64>> M(rows), Bk(rows);
        for (u32 i = 0; i < rows; i++) {
            M[i] = gen_pows[i].c;
            Bk[i].assign(rows, 0);
            Bk[i][i] = 1;
        }
        piv_col_.assign(rows, 0);
        for (u32 r = 0; r < rows; r++) {
            // find pivot col
            u32 pc = cols;
            for (u32 j = 0; j < cols && pc == cols; j++) {
                if (M[r][j]) pc = j;
            }
            check(pc != cols, ErrCat::internal, "FqEmbedding: dependent powers");
            u64 inv = invmod(M[r][pc], p);
            for (u32 j = 0; j < cols; j++) M[r][j] = mulmod(M[r][j], inv, p);
            for (u32 i = 0; i < rows; i++) Bk[r][i] = mulmod(Bk[r][i], inv, p);
            for (u32 r2 = 0; r2 < rows; r2++) {
                if (r2 == r || !M[r2][pc]) continue;
                u64 f = M[r2][pc];
                for (u32 j = 0; j < cols; j++) M[r2][j] = submod(M[r2][j], mulmod(f, M[r][j], p), p);
                for (u32 i = 0; i < rows; i++) Bk[r2][i] = submod(Bk[r2][i], mulmod(f, Bk[r][i], p), p);
            }
            piv_col_[r] = pc;
        }
        red_rows_ = std::move(M);
        back_ = std::move(Bk);
    }
};

// relative trace from big field down the embedding: Tr_{big/small}(a)
inline FqCtx::Elem relative_trace(const FqEmbedding& emb, const FqCtx::Elem& a) {
    const FqCtx& big = *emb.to;
    u32 steps = emb.to->d / emb.from->d;
    FqCtx::Elem s = a, f = a;
    for (u32 i = 1; i < steps; i++) {
        f = big.frob_k(f, emb.from->d);
        s = big.add(s, f);
    }
    return s;
}

} // namespace tauforge

#endif
