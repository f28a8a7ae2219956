#include "tauforge/bigint.hpp"

#include <numeric>

namespace tauforge {

std::pair<BigInt, BigInt> crt_combine(const std::vector<std::pair<BigInt, BigInt>>& residues) {
    check(!residues.empty(), ErrCat::config, "crt_combine: empty residue list");
    BigInt r = bmod(residues[0].first, residues[0].second);
    BigInt M = residues[0].second;
    for (size_t i = 1; i < residues.size(); i++) {
        const BigInt& ri = residues[i].first;
        const BigInt& mi = residues[i].second;
        BigInt g = bgcd(M, mi);
        if (g != 1) {
            fail(ErrCat::config, "crt_combine: moduli not coprime: gcd(" + M.get_str() +
                                 ", " + mi.get_str() + ") = " + g.get_str());
        }
        // r' = r + M * ((ri - r) * M^{-1} mod mi)
        auto inv = binvmod(M, mi);
        BigInt t = bmod((ri - r) * (*inv), mi);
        r += M * t;
        M *= mi;
        r = bmod(r, M);
    }
    return {r, M};
}

std::optional<Rational> rational_reconstruct(const BigInt& r, const BigInt& M) {
    check(r >= 0 && r < M, ErrCat::config, "rational_reconstruct: need 0 <= r < M");
    // bound B with 2*B^2 <= M  (|n|, d <= B)
    BigInt B;
    mpz_sqrt(B.get_mpz_t(), BigInt(M / 2).get_mpz_t());
    if (B == 0) return std::nullopt;
    // half-extended Euclid on (M, r)
    BigInt r0 = M, r1 = r;
    BigInt t0 = 0, t1 = 1;
    while (r1 > B) {
        BigInt q = r0 / r1;
        BigInt r2 = r0 - q * r1;
        BigInt t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    // candidate n/d = r1 / t1
    BigInt n = r1, d = t1;
    if (d < 0) { n = -n; d = -d; }
    if (d == 0 || d > B) return std::nullopt;
    if (bgcd(d, M) != 1) return std::nullopt;
    if (bgcd(n < 0 ? BigInt(-n) : n, d) != 1) return std::nullopt;
    // verify n * d^{-1} ≡ r (mod M)
    auto dinv = binvmod(d, M);
    if (!dinv) return std::nullopt;
    if (bmod(n * (*dinv), M) != bmod(r, M)) return std::nullopt;
    Rational out(n, d);
    out.canonicalize();
    return out;
}

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    // deterministic Miller-Rabin for 64-bit
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; s++; }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; i++) {
            x = mulmod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

std::vector<u64> primes_upto(u64 hi) {
    std::vector<bool> sieve(hi, true);
    std::vector<u64> out;
    for (u64 i = 2; i < hi; i++) {
        if (sieve[i]) {
            out.push_back(i);
            for (u64 j = i * i; j < hi; j += i) sieve[j] = false;
        }
    }
    return out;
}

} // namespace tauforge
