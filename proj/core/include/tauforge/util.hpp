#ifndef TAUFORGE_UTIL_HPP
#define TAUFORGE_UTIL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tauforge {

// Error categories map to CLI exit codes (config=2, budget=3, data=4, internal=5).
enum class ErrCat { config = 2, budget = 3, data = 4, internal = 5 };

class Error : public std::runtime_error {
public:
    Error(ErrCat cat, const std::string& msg) : std::runtime_error(msg), cat_(cat) {}
    ErrCat category() const { return cat_; }
private:
    ErrCat cat_;
};

[[noreturn]] inline void fail(ErrCat cat, const std::string& msg) {
    throw Error(cat, msg);
}

inline void check(bool cond, ErrCat cat, const std::string& msg) {
    if (!cond) fail(cat, msg);
}

// ---------------------------------------------------------------- u64 modular arithmetic

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using i64 = std::int64_t;

inline u64 addmod(u64 a, u64 b, u64 p) {
    u64 s = a + b;
    if (s >= p || s < a) s -= p;
    return s;
}

inline u64 submod(u64 a, u64 b, u64 p) {
    return a >= b ? a - b : a + p - b;
}

inline u64 mulmod(u64 a, u64 b, u64 p) {
    return (u64)((u128)a * b % p);
}

inline u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

inline u64 invmod(u64 a, u64 p) {
    // extended Euclid; p need not be prime but gcd(a,p)=1 required
    i64 t = 0, newt = 1;
    i64 r = (i64)p, newr = (i64)(a % p);
    while (newr != 0) {
        i64 q = r / newr;
        i64 tmp = t - q * newt; t = newt; newt = tmp;
        tmp = r - q * newr; r = newr; newr = tmp;
    }
    if (r != 1) fail(ErrCat::internal, "invmod: not invertible");
    if (t < 0) t += (i64)p;
    return (u64)t;
}

bool is_prime_u64(u64 n);

} // namespace tauforge

#endif
