#ifndef TAUFORGE_BIGINT_HPP
#define TAUFORGE_BIGINT_HPP

#include <gmpxx.h>
#include <optional>
#include <utility>
#include <vector>
#include <string>

#include "tauforge/util.hpp"
#include "tauforge/rng.hpp"

namespace tauforge {

// Exact arbitrary-precision integers and rationals, backed by GMP.
using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt bi(long v) { return BigInt(v); }
inline BigInt bi(const std::string& s) { return BigInt(s, 10); }

inline BigInt bmod(const BigInt& a, const BigInt& m) {
    BigInt r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r; // in [0, m)
}

inline BigInt bpow(const BigInt& a, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
    return r;
}

inline BigInt bpowmod(const BigInt& a, const BigInt& e, const BigInt& m) {
    BigInt r;
    mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline BigInt bgcd(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline std::optional<BigInt> binvmod(const BigInt& a, const BigInt& m) {
    BigInt r;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t())) return std::nullopt;
    return r;
}

inline bool bprime(const BigInt& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

inline BigInt bnextprime(const BigInt& n) {
    BigInt r;
    mpz_nextprime(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline long bsize_digits(const BigInt& n) {
    return (long)mpz_sizeinbase(n.get_mpz_t(), 10);
}

// ---------------------------------------------------------------- CRT

// Combine residues (value_i, modulus_i) into (r, M), 0 <= r < M = prod modulus_i.
// Moduli must be pairwise coprime; the offending pair is named otherwise.
std::pair<BigInt, BigInt> crt_combine(const std::vector<std::pair<BigInt, BigInt>>& residues);

// Rational reconstruction of r mod M with the symmetric bound |n|, d <= sqrt(M/2).
// Returns nullopt when no candidate exists (caller should collect more primes).
std::optional<Rational> rational_reconstruct(const BigInt& r, const BigInt& M);

// ---------------------------------------------------------------- misc

// primes in [lo, hi)
std::vector<u64> primes_upto(u64 hi);

} // namespace tauforge

#endif
