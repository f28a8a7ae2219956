#ifndef TAUFORGE_POLY_HPP
#define TAUFORGE_POLY_HPP

#include <vector>
#include <utility>

#include "tauforge/util.hpp"
#include "tauforge/rng.hpp"
#include "tauforge/bigint.hpp"

namespace tauforge {

// Dense univariate polynomials over a runtime field context F.
// Coefficients ascending; invariant: no trailing zeros (zero poly = empty).
template <class F>
struct polys {
    using E = typename F::Elem;
    using P = std::vector<E>;

    static void trim(const F& k, P& a) {
        while (!a.empty() && k.is_zero(a.back())) a.pop_back();
    }
    static int deg(const P& a) { return (int)a.size() - 1; }
    static bool is_zero(const P& a) { return a.empty(); }
    static P zero(const F&) { return {}; }
    static P one(const F& k) { return {k.one()}; }
    static P constant(const F& k, E c) {
        P r{c}; trim(k, r); return r;
    }
    static P x(const F& k) { return {k.zero(), k.one()}; }

    static bool equal(const F& k, const P& a, const P& b) {
        if (a.size() != b.size()) return false;
        for (size_t i = 0; i < a.size(); i++)
            if (!k.equal(a[i], b[i])) return false;
        return true;
    }

    static P add(const F& k, const P& a, const P& b) {
        P r(std::max(a.size(), b.size()), k.zero());
        for (size_t i = 0; i < a.size(); i++) r[i] = a[i];
        for (size_t i = 0; i < b.size(); i++) r[i] = k.add(r[i], b[i]);
        trim(k, r);
        return r;
    }
    static P sub(const F& k, const P& a, const P& b) {
        P r(std::max(a.size(), b.size()), k.zero());
        for (size_t i = 0; i < a.size(); i++) r[i] = a[i];
        for (size_t i = 0; i < b.size(); i++) r[i] = k.sub(r[i], b[i]);
        trim(k, r);
        return r;
    }
    static P neg(const F& k, const P& a) {
        P r(a);
        for (auto& c : r) c = k.neg(c);
        return r;
    }
    static P scal(const F& k, const P& a, const E& c) {
        if (k.is_zero(c)) return {};
        P r(a);
        for (auto& v : r) v = k.mul(v, c);
        trim(k, r);
        return r;
    }
    static P mul(const F& k, const P& a, const P& b) {
        if (a.empty() || b.empty()) return {};
        P r(a.size() + b.size() - 1, k.zero());
        for (size_t i = 0; i < a.size(); i++) {
            if (k.is_zero(a[i])) continue;
            for (size_t j = 0; j < b.size(); j++) {
                if (k.is_zero(b[j])) continue;
                r[i + j] = k.add(r[i + j], k.mul(a[i], b[j]));
            }
        }
        trim(k, r);
        return r;
    }
    static P shift(const F& k, const P& a, int e) {
        if (a.empty()) return {};
        P r(a.size() + e, k.zero());
        for (size_t i = 0; i < a.size(); i++) r[i + e] = a[i];
        return r;
    }

    // division with remainder; b nonzero
    static std::pair<P, P> divrem(const F& k, const P& a, const P& b) {
        check(!b.empty(), ErrCat::internal, "poly divrem by zero");
        P r(a), q;
        if (a.size() < b.size()) return {q, r};
        q.assign(a.size() - b.size() + 1, k.zero());
        E linv = k.inv(b.back());
        for (int i = (int)a.size() - (int)b.size(); i >= 0; i--) {
            if ((size_t)(i + (int)b.size() - 1) >= r.size()) continue;
            E c = r[i + b.size() - 1];
            if (k.is_zero(c)) continue;
            E f = k.mul(c, linv);
            q[i] = f;
            for (size_t j = 0; j < b.size(); j++) {
                r[i + j] = k.sub(r[i + j], k.mul(f, b[j]));
            }
        }
        trim(k, r);
        trim(k, q);
        return {q, r};
    }
    static P rem(const F& k, const P& a, const P& b) { return divrem(k, a, b).second; }
    static P quo(const F& k, const P& a, const P& b) { return divrem(k, a, b).first; }

    static P monic(const F& k, const P& a) {
        if (a.empty()) return a;
        return scal(k, a, k.inv(a.back()));
    }

    static P gcd(const F& k, P a, P b) {
        while (!b.empty()) {
            P r = rem(k, a, b);
            a = std::move(b);
            b = std::move(r);
        }
        return monic(k, a);
    }

    // s*a + t*b = g (monic)
    static void gcdext(const F& k, P a, P b, P& g, P& s, P& t) {
        P s0 = one(k), s1 = zero(k), t0 = zero(k), t1 = one(k);
        while (!b.empty()) {
            auto [q, r] = divrem(k, a, b);
            a = std::move(b); b = std::move(r);
            P s2 = sub(k, s0, mul(k, q, s1));
            s0 = std::move(s1); s1 = std::move(s2);
            P t2 = sub(k, t0, mul(k, q, t1));
            t0 = std::move(t1); t1 = std::move(t2);
        }
        if (!a.empty()) {
            E linv = k.inv(a.back());
            a = scal(k, a, linv);
            s0 = scal(k, s0, linv);
            t0 = scal(k, t0, linv);
        }
        g = std::move(a); s = std::move(s0); t = std::move(t0);
    }

    static P invmod(const F& k, const P& a, const P& m) {
        P g, s, t;
        gcdext(k, rem(k, a, m), m, g, s, t);
        check(deg(g) == 0, ErrCat::internal, "poly invmod: not invertible");
        return rem(k, s, m);
    }

    static P mulmod(const F& k, const P& a, const P& b, const P& m) {
        return rem(k, mul(k, a, b), m);
    }

    static P powmod(const F& k, P a, const BigInt& e, const P& m) {
        P r = one(k);
        a = rem(k, a, m);
        size_t nbits = mpz_sizeinbase(e.get_mpz_t(), 2);
        if (e == 0) return r;
        for (size_t i = nbits; i-- > 0;) {
            r = mulmod(k, r, r, m);
            if (mpz_tstbit(e.get_mpz_t(), i)) r = mulmod(k, r, a, m);
        }
        return r;
    }

    static E eval(const F& k, const P& a, const E& v) {
        E r = k.zero();
        for (size_t i = a.size(); i-- > 0;) {
            r = k.add(k.mul(r, v), a[i]);
        }
        return r;
    }

    static P derivative(const F& k, const P& a) {
        if (a.size() <= 1) return {};
        P r(a.size() - 1, k.zero());
        for (size_t i = 1; i < a.size(); i++) {
            E c = k.zero();
            // i mod p scalar
            u64 im = i % (u64)k.char_u64();
            for (u64 t = 0; t < im; t++) c = k.add(c, a[i]);
            r[i - 1] = c;
        }
        trim(k, r);
        return r;
    }

    static P random_monic(const F& k, Rng& rng, int d) {
        P r(d + 1, k.zero());
        for (int i = 0; i < d; i++) r[i] = k.random(rng);
        r[d] = k.one();
        return r;
    }

    static E resultant(const F& k, P a, P b) {
        // Euclidean PRS over a field
        if (a.empty() || b.empty()) return k.zero();
        E res = k.one();
        bool swapped = false;
        while (true) {
            if (deg(a) < deg(b)) {
                std::swap(a, b);
                if ((deg(a) % 2) && (deg(b) % 2)) res = k.neg(res);
            }
            if (b.empty()) return k.zero();
            if (deg(b) == 0) {
                E c = b[0];
                E out = res;
                for (int i = 0; i < deg(a); i++) out = k.mul(out, c);
                return out;
            }
            P r = rem(k, a, b);
            // res(a,b) = lc(b)^{deg a - deg r} * (-1)^{deg a * deg b} * res(b, r)
            E lb = b.back();
            int e = deg(a) - (r.empty() ? 0 : deg(r));
            if (r.empty()) e = deg(a);
            for (int i = 0; i < e; i++) res = k.mul(res, lb);
            if ((deg(a) % 2) && (deg(b) % 2)) res = k.neg(res);
            a = std::move(b);
            b = std::move(r);
        }
    }

    // ---------------------------------------------------------- factorization

    // p-th root of f when f'(x) = 0, i.e. f = g(x^p) with p = char
    static P pth_root_poly(const F& k, const P& a) {
        u64 p = k.char_u64();
        P g;
        for (size_t i = 0; i < a.size(); i += (size_t)p) {
            g.push_back(k.pth_root(a[i]));
        }
        trim(k, g);
        return g;
    }

    // squarefree decomposition: list of (g_i, i) with prod g_i^i = monic(a)
    static std::vector<std::pair<P, int>> squarefree(const F& k, P a) {
        std::vector<std::pair<P, int>> out;
        a = monic(k, a);
        sqf_rec(k, a, 1, out);
        return out;
    }
    static void sqf_rec(const F& k, const P& a, int mult, std::vector<std::pair<P, int>>& out) {
        if (deg(a) <= 0) return;
        P ap = derivative(k, a);
        if (is_zero(ap)) {
            // a = b(x^p)
            P b = pth_root_poly(k, a);
            sqf_rec(k, b, mult * (int)k.char_u64(), out);
            return;
        }
        P c = gcd(k, a, ap);
        P w = quo(k, a, c);
        int i = 1;
        while (deg(w) > 0) {
            P y = gcd(k, w, c);
            P z = quo(k, w, y);
            if (deg(z) > 0) out.push_back({z, mult * i});
            c = quo(k, c, y);
            w = std::move(y);
            i++;
        }
        if (deg(c) > 0) sqf_rec(k, c, mult * (int)k.char_u64(), out);
    }

    // distinct-degree on squarefree monic input: list of (product, degree)
    static std::vector<std::pair<P, int>> ddf(const F& k, P f) {
        std::vector<std::pair<P, int>> out;
        BigInt q = k.size();
        P h = x(k);
        P xp = x(k);
        int d = 0;
        while (deg(f) >= 2 * (d + 1)) {
            d++;
            h = powmod(k, h, q, f);
            P g = gcd(k, sub(k, h, xp), f);
            if (deg(g) > 0) {
                out.push_back({g, d});
                f = quo(k, f, g);
                h = rem(k, h, f);
            }
        }
        if (deg(f) > 0) out.push_back({f, deg(f)});
        return out;
    }

    // equal-degree splitting (Cantor–Zassenhaus, odd q)
    static void edf(const F& k, const P& f, int d, Rng& rng, std::vector<P>& out) {
        if (deg(f) == d) {
            out.push_back(monic(k, f));
            return;
        }
        BigInt q = k.size();
        check(mpz_odd_p(BigInt(q % 2).get_mpz_t()) || q % 2 == 1, ErrCat::internal, "edf: even q unsupported");
        BigInt e = (bpow(q, (unsigned long)d) - 1) / 2;
        while (true) {
            P a(deg(f), k.zero());
            for (int i = 0; i < deg(f); i++) a[i] = k.random(rng);
            trim(k, a);
            if (deg(a) < 1) continue;
            P b = powmod(k, a, e, f);
            P g = gcd(k, sub(k, b, one(k)), f);
            if (deg(g) > 0 && deg(g) < deg(f)) {
                edf(k, g, d, rng, out);
                edf(k, quo(k, f, g), d, rng, out);
                return;
            }
        }
    }

    // full factorization: [(monic irreducible, multiplicity)], plus leading coeff
    static std::vector<std::pair<P, int>> factor(const F& k, const P& a, Rng& rng) {
        check(!is_zero(a), ErrCat::internal, "factor of zero polynomial");
        std::vector<std::pair<P, int>> out;
        if (deg(a) == 0) return out;
        for (auto& [g, m] : squarefree(k, a)) {
            for (auto& [h, d] : ddf(k, g)) {
                std::vector<P> irr;
                edf(k, h, d, rng, irr);
                for (auto& f : irr) out.push_back({f, m});
            }
        }
        return out;
    }

    // all roots in F (with multiplicity collapsed; returns distinct roots)
    static std::vector<E> roots(const F& k, const P& a, Rng& rng) {
        std::vector<E> out;
        if (deg(a) <= 0) return out;
        // x^q - x gcd
        P f = monic(k, a);
        // strip repeated factors for root finding
        for (auto& [g, m] : squarefree(k, f)) {
            P h = powmod(k, x(k), k.size(), g);
            P lin = gcd(k, sub(k, h, x(k)), g);
            if (deg(lin) <= 0) continue;
            std::vector<P> irr;
            edf(k, lin, 1, rng, irr);
            for (auto& l : irr) out.push_back(k.neg(l[0]));
        }
        return out;
    }

    // count of roots in F (distinct)
    static int count_roots(const F& k, const P& a) {
        if (deg(a) <= 0) return 0;
        P f = monic(k, a);
        P h = powmod(k, x(k), k.size(), f);
        P lin = gcd(k, sub(k, h, x(k)), f);
        return deg(lin) < 0 ? 0 : deg(lin);
    }

    static bool irreducible(const F& k, const P& f) {
        if (deg(f) <= 0) return false;
        if (deg(f) == 1) return true;
        // Rabin test
        BigInt q = k.size();
        int n = deg(f);
        P h = powmod(k, x(k), bpow(q, (unsigned long)n), f);
        if (!equal(k, h, rem(k, x(k), f))) return false;
        // for each prime divisor r of n: gcd(x^{q^{n/r}} - x, f) = 1
        int m = n;
        for (int r = 2; r * r <= m; r++) {
            if (m % r) continue;
            while (m % r == 0) m /= r;
            P hh = powmod(k, x(k), bpow(q, (unsigned long)(n / r)), f);
            if (deg(gcd(k, sub(k, hh, x(k)), f)) > 0) return false;
        }
        if (m > 1) {
            P hh = powmod(k, x(k), bpow(q, (unsigned long)(n / m)), f);
            if (deg(gcd(k, sub(k, hh, x(k)), f)) > 0) return false;
        }
        return true;
    }
};

} // namespace tauforge

#endif
