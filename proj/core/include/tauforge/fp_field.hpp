#ifndef TAUFORGE_FP_FIELD_HPP
#define TAUFORGE_FP_FIELD_HPP

#include <vector>

#include "tauforge/util.hpp"
#include "tauforge/rng.hpp"
#include "tauforge/bigint.hpp"

namespace tauforge {

// Prime field F_p for machine primes p < 2^62.
struct FpCtx {
    using Elem = u64;
    u64 p;

    explicit FpCtx(u64 p_) : p(p_) {
        check(p >= 2 && is_prime_u64(p), ErrCat::config, "FpCtx: modulus not prime");
        check(p < (u64(1) << 62), ErrCat::config, "FpCtx: modulus too large");
    }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p; }
    Elem from_int(i64 v) const {
        i64 r = v % (i64)p;
        if (r < 0) r += (i64)p;
        return (u64)r;
    }
    Elem from_bigint(const BigInt& v) const {
        BigInt r = bmod(v, BigInt((unsigned long)p));
        return (u64)r.get_ui();
    }
    bool is_zero(Elem a) const { return a == 0; }
    bool equal(Elem a, Elem b) const { return a == b; }
    Elem add(Elem a, Elem b) const { return addmod(a, b, p); }
    Elem sub(Elem a, Elem b) const { return submod(a, b, p); }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem mul(Elem a, Elem b) const { return mulmod(a, b, p); }
    Elem inv(Elem a) const {
        check(a != 0, ErrCat::internal, "FpCtx: inverse of zero");
        return invmod(a, p);
    }
    Elem pow(Elem a, u64 e) const { return powmod(a, e, p); }
    Elem random(Rng& rng) const { return rng.below(p); }
    // Frobenius is the identity on the prime field.
    Elem frob(Elem a) const { return a; }
    Elem pth_root(Elem a) const { return a; }
    u64 size_u64() const { return p; }
    BigInt size() const { return BigInt((unsigned long)p); }
    BigInt characteristic() const { return BigInt((unsigned long)p); }
    u64 char_u64() const { return p; }
};

} // namespace tauforge

#endif
